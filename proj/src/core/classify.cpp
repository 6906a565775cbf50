#include "pbclass/classify.hpp"

#include "pbclass/error.hpp"

#include <algorithm>

namespace pbclass {

namespace {

Integer key_to_value(const Integer& key) {
  if (key == 0) return 0;
  if (key % 2 == 1) return (key + 1) / 2;
  return -(key / 2);
}

// Mixed-radix odometer, last digit fastest. Returns false once exhausted.
bool advance(std::vector<Integer>& digits, const std::vector<Integer>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

} // namespace

void for_each_in_shells(const FgAbGroup& g,
                        const std::function<bool(const AbElement&)>& visit) {
  const std::size_t s = g.torsion_rank();
  const std::size_t r = g.free_rank();
  for (Integer h = 0;; ++h) {
    std::vector<Integer> radix(g.torsion());
    radix.resize(s + r, h + 1);
    std::vector<Integer> digits(s + r, 0);
    do {
      Integer top = 0;
      for (std::size_t i = s; i < s + r; ++i) top = std::max(top, digits[i]);
      if (top != h) continue;
      AbElement x{Vector(s + r)};
      for (std::size_t i = 0; i < s; ++i) x.coords[i] = digits[i];
      for (std::size_t i = s; i < s + r; ++i) x.coords[i] = key_to_value(digits[i]);
      if (!visit(x)) return;
    } while (advance(digits, radix));
    if (r == 0) return;
  }
}

std::vector<Mu1Class> enumerate_mu1(const TwoComplex& x, const GroupDescriptor& d) {
  const Presentation hx = h1(x);
  std::vector<Mu1Class> out;
  for (auto& hom : enumerate_homs(hx.group, d.pi0)) {
    Mu1Class c{std::move(hom), out.size(), {}};
    for (std::size_t i = 0; i < x.num_gens(); ++i)
      c.generator_images.push_back(c.hom.apply(hx.generator_image(i)));
    out.push_back(std::move(c));
  }
  return out;
}

Mu1Class mu1_from_generator_images(const TwoComplex& x, const GroupDescriptor& d,
                                   std::span<const AbElement> images) {
  const AbHom hom = hom_from_generator_images(h1(x), d.pi0, images);
  for (auto& c : enumerate_mu1(x, d))
    if (c.hom == hom) return c;
  throw Error("mu1 not found among enumerated classes (internal)");
}

AbHom induced_action(const LocalSystem& l, const GroupDescriptor& d,
                     const AbElement& a, const CohomologyGroup& h) {
  const std::size_t n = l.complex().relators().size();
  const IntMatrix blocks = zlinalg::block_diagonal(psi(d, a).matrix(), n);
  if (blocks.cols() != h.ambient_dim)
    throw MismatchError("cohomology group does not belong to this local system");

  for (std::size_t j = 0; j < h.lattice.cols(); ++j) {
    const AbElement v = h.project(blocks * h.lattice.column(j));
    if (!h.group.is_zero(v))
      throw Error("action of " + a.to_string() +
                  " does not preserve the coboundary lattice; the descriptor "
                  "is corrupted");
  }

  const std::size_t g = h.group.num_gens();
  IntMatrix m(g, g);
  for (std::size_t c = 0; c < g; ++c) {
    const AbElement img = h.project(blocks * h.lift.column(c));
    for (std::size_t i = 0; i < g; ++i) m(i, c) = img.coords[i];
  }
  return {h.group, h.group, std::move(m)};
}

std::vector<AbHom> induced_actions(const LocalSystem& l, const GroupDescriptor& d,
                                   const CohomologyGroup& h) {
  std::vector<AbHom> out;
  for_each_element(d.pi0, [&](const AbElement& a) {
    out.push_back(induced_action(l, d, a, h));
  });
  return out;
}

AbElement orbit_rep(const FgAbGroup& h, const std::vector<AbHom>& actions,
                    const AbElement& x) {
  AbElement best = x;
  for (const auto& g : actions) {
    AbElement y = g.apply(x);
    if (h.compare(y, best) < 0) best = std::move(y);
  }
  return best;
}

namespace {

Integer orbit_size(const std::vector<AbHom>& actions, const AbElement& x) {
  std::vector<AbElement> seen;
  for (const auto& g : actions) {
    AbElement y = g.apply(x);
    if (std::find(seen.begin(), seen.end(), y) == seen.end())
      seen.push_back(std::move(y));
  }
  return seen.empty() ? Integer(1) : Integer(seen.size());
}

} // namespace

ClassificationResult classify(const TwoComplex& x, const GroupDescriptor& d,
                              const Mu1Class& mu1, const ClassifyOptions& opts) {
  const LocalSystem l = local_system(x, d, mu1.hom);
  ClassificationResult res{mu1, h2(l), {}, std::nullopt, {}, {}, {}};
  res.actions = induced_actions(l, d, res.h2);
  const FgAbGroup& h = res.h2.group;

  if (h.is_finite()) {
    Integer count = 0;
    for_each_element(h, [&](const AbElement& e) {
      if (!(orbit_rep(h, res.actions, e) == e)) return;
      ++count;
      res.orbit_reps.push_back(e);
      res.orbit_sizes.push_back(orbit_size(res.actions, e));
    });
    res.orbit_count = count;
  } else if (opts.max_reps > 0) {
    for_each_in_shells(h, [&](const AbElement& e) {
      if (orbit_rep(h, res.actions, e) == e) {
        res.orbit_reps.push_back(e);
        res.orbit_sizes.push_back(orbit_size(res.actions, e));
      }
      return res.orbit_reps.size() < opts.max_reps;
    });
    // Shell order may visit a smaller element late; list reps canonically.
    std::vector<std::size_t> idx(res.orbit_reps.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return h.compare(res.orbit_reps[a], res.orbit_reps[b]) < 0;
    });
    std::vector<AbElement> reps;
    std::vector<Integer> sizes;
    for (std::size_t i : idx) {
      reps.push_back(res.orbit_reps[i]);
      sizes.push_back(res.orbit_sizes[i]);
    }
    res.orbit_reps = std::move(reps);
    res.orbit_sizes = std::move(sizes);
  }
  return res;
}

Classification classify_all(const TwoComplex& x, const GroupDescriptor& d,
                            const ClassifyOptions& opts) {
  require_valid(d);
  Classification out;
  out.total = Integer(0);
  for (const auto& mu1 : enumerate_mu1(x, d)) {
    out.results.push_back(classify(x, d, mu1, opts));
    const auto& c = out.results.back().orbit_count;
    if (c && out.total)
      *out.total += *c;
    else
      out.total.reset();
  }
  return out;
}

} // namespace pbclass
