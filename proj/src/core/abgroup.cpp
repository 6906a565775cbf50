#include "pbclass/abgroup.hpp"

#include "pbclass/error.hpp"

#include <algorithm>
#include <sstream>

namespace pbclass {

using zlinalg::mod;

std::string AbElement::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i)
    out << (i ? "," : "") << coords[i].get_str();
  out << ')';
  return out.str();
}

FgAbGroup::FgAbGroup(Vector torsion, std::size_t free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw ValidationError("invariant factor " + torsion_[i].get_str() +
                            " is not >= 2");
    if (i > 0 &&
        !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw ValidationError("invariant factors " + torsion_[i - 1].get_str() +
                            ", " + torsion_[i].get_str() +
                            " do not form a divisibility chain");
  }
}

FgAbGroup FgAbGroup::cyclic(long n) {
  if (n < 0) n = -n;
  if (n == 0) return free(1);
  if (n == 1) return trivial();
  return {{Integer(n)}, 0};
}

std::optional<Integer> FgAbGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& f : torsion_) n *= f;
  return n;
}

Integer FgAbGroup::generator_order(std::size_t i) const {
  return i < torsion_.size() ? torsion_[i] : Integer(0);
}

Vector FgAbGroup::invariant_factors() const {
  Vector v = torsion_;
  v.resize(num_gens(), 0);
  return v;
}

IntMatrix FgAbGroup::relation_matrix() const {
  IntMatrix m(num_gens(), torsion_.size());
  for (std::size_t i = 0; i < torsion_.size(); ++i) m(i, i) = torsion_[i];
  return m;
}

AbElement FgAbGroup::zero() const { return {Vector(num_gens())}; }

AbElement FgAbGroup::generator(std::size_t i) const {
  if (i >= num_gens()) throw MismatchError("generator index out of range");
  AbElement e = zero();
  e.coords[i] = 1;
  return e;
}

AbElement FgAbGroup::reduce(const Vector& coords) const {
  if (coords.size() != num_gens())
    throw MismatchError("coordinate count " + std::to_string(coords.size()) +
                        " does not match group " + to_string());
  AbElement e{coords};
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    e.coords[i] = mod(e.coords[i], torsion_[i]);
  return e;
}

bool FgAbGroup::contains(const AbElement& x) const {
  if (x.coords.size() != num_gens()) return false;
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    if (x.coords[i] < 0 || x.coords[i] >= torsion_[i]) return false;
  return true;
}

void FgAbGroup::require(const AbElement& x) const {
  if (!contains(x))
    throw MismatchError("element " + x.to_string() + " is not in group " +
                        to_string());
}

AbElement FgAbGroup::add(const AbElement& a, const AbElement& b) const {
  require(a);
  require(b);
  Vector v(num_gens());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coords[i] + b.coords[i];
  return reduce(v);
}

AbElement FgAbGroup::negate(const AbElement& a) const {
  require(a);
  Vector v(num_gens());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.coords[i];
  return reduce(v);
}

AbElement FgAbGroup::subtract(const AbElement& a, const AbElement& b) const {
  return add(a, negate(b));
}

AbElement FgAbGroup::scale(const Integer& k, const AbElement& a) const {
  require(a);
  Vector v(num_gens());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = k * a.coords[i];
  return reduce(v);
}

bool FgAbGroup::equals(const AbElement& a, const AbElement& b) const {
  require(a);
  require(b);
  return a == b;
}

bool FgAbGroup::is_zero(const AbElement& a) const {
  require(a);
  return std::all_of(a.coords.begin(), a.coords.end(),
                     [](const Integer& x) { return x == 0; });
}

Integer FgAbGroup::element_order(const AbElement& a) const {
  require(a);
  for (std::size_t i = torsion_.size(); i < num_gens(); ++i)
    if (a.coords[i] != 0) return 0;
  Integer n = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Integer g = gcd(a.coords[i], torsion_[i]);
    n = lcm(n, torsion_[i] / g);
  }
  return n;
}

Integer free_coordinate_key(const Integer& n) {
  Integer k = 2 * abs(n);
  if (n > 0) k -= 1;
  return k;
}

std::strong_ordering FgAbGroup::compare(const AbElement& a,
                                        const AbElement& b) const {
  require(a);
  require(b);
  for (std::size_t i = 0; i < num_gens(); ++i) {
    int c = 0;
    if (i < torsion_.size())
      c = cmp(a.coords[i], b.coords[i]);
    else
      c = cmp(free_coordinate_key(a.coords[i]),
              free_coordinate_key(b.coords[i]));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& f : torsion_) {
    out << (first ? "" : " + ") << "Z/" << f.get_str();
    first = false;
  }
  if (free_rank_ > 0) {
    out << (first ? "" : " + ") << "Z";
    if (free_rank_ > 1) out << '^' << free_rank_;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

IntMatrix reduce_columns(const FgAbGroup& target, IntMatrix m) {
  for (std::size_t i = 0; i < target.torsion_rank(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = mod(m(i, j), target.torsion()[i]);
  return m;
}

} // namespace

bool AbHom::is_well_defined(const FgAbGroup& source, const FgAbGroup& target,
                            const IntMatrix& matrix) {
  if (matrix.rows() != target.num_gens() || matrix.cols() != source.num_gens())
    return false;
  for (std::size_t j = 0; j < source.torsion_rank(); ++j) {
    Vector col = matrix.column(j);
    for (auto& x : col) x *= source.torsion()[j];
    if (!target.is_zero(target.reduce(col))) return false;
  }
  return true;
}

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)) {
  if (matrix.rows() != target_.num_gens() || matrix.cols() != source_.num_gens())
    throw MismatchError("hom matrix is " + std::to_string(matrix.rows()) + "x" +
                        std::to_string(matrix.cols()) + ", expected " +
                        std::to_string(target_.num_gens()) + "x" +
                        std::to_string(source_.num_gens()));
  if (!is_well_defined(source_, target_, matrix))
    throw ValidationError("matrix " + matrix.to_string() +
                          " is not a homomorphism " + source_.to_string() +
                          " -> " + target_.to_string());
  matrix_ = reduce_columns(target_, std::move(matrix));
}

AbHom AbHom::identity(const FgAbGroup& g) {
  return {g, g, IntMatrix::identity(g.num_gens())};
}

AbHom AbHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
  return {source, target, IntMatrix(target.num_gens(), source.num_gens())};
}

AbElement AbHom::apply(const AbElement& x) const {
  if (!source_.contains(x))
    throw MismatchError("element " + x.to_string() + " is not in " +
                        source_.to_string());
  return target_.reduce(matrix_ * x.coords);
}

AbElement AbHom::image_of_generator(std::size_t j) const {
  return target_.reduce(matrix_.column(j));
}

AbHom AbHom::compose(const AbHom& inner) const {
  if (!(inner.target_ == source_))
    throw MismatchError("composition: " + inner.target_.to_string() +
                        " is not " + source_.to_string());
  return {inner.source_, target_, matrix_ * inner.matrix_};
}

bool AbHom::is_zero() const { return matrix_.is_zero(); }

bool is_automorphism(const FgAbGroup& g, const IntMatrix& matrix) {
  if (!AbHom::is_well_defined(g, g, matrix)) return false;
  // A surjective endomorphism of a finitely generated Z-module is bijective.
  const auto c = zlinalg::cokernel(zlinalg::hconcat(matrix, g.relation_matrix()));
  return c.torsion.empty() && c.free_rank == 0;
}

bool is_automorphism(const AbHom& h) {
  if (!(h.source() == h.target())) return false;
  return is_automorphism(h.source(), h.matrix());
}

AbHom inverse(const AbHom& h) {
  if (!is_automorphism(h))
    throw ValidationError("not an automorphism: " + h.matrix().to_string());
  const FgAbGroup& g = h.source();
  const std::size_t n = g.num_gens();
  const IntMatrix system = zlinalg::hconcat(h.matrix(), g.relation_matrix());
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1;
    const auto x = zlinalg::solve(system, e);
    if (!x) throw Error("inverse: surjective map has no preimage (internal)");
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i];
  }
  return {g, g, inv};
}

AbHom power(const AbHom& h, const Integer& n) {
  if (n < 0) throw MismatchError("negative power");
  AbHom result = AbHom::identity(h.source());
  for (Integer i = 0; i < n; ++i) result = h.compose(result);
  return result;
}

// ---------------------------------------------------------------------------

AbElement Presentation::project(const Vector& ambient) const {
  return group.reduce(projection * ambient);
}

Vector Presentation::lift_element(const AbElement& x) const {
  return lift * x.coords;
}

AbElement Presentation::generator_image(std::size_t i) const {
  return group.reduce(projection.column(i));
}

Presentation from_presentation(std::size_t num_gens, const IntMatrix& relations) {
  if (relations.rows() != num_gens)
    throw MismatchError("relation matrix has " + std::to_string(relations.rows()) +
                        " rows for " + std::to_string(num_gens) + " generators");
  auto c = zlinalg::cokernel(relations);
  return {FgAbGroup(std::move(c.torsion), c.free_rank), std::move(c.projection),
          std::move(c.lift), relations};
}

AbHom hom_from_generator_images(const Presentation& p, const FgAbGroup& target,
                                std::span<const AbElement> images) {
  const std::size_t m = p.relations.rows();
  if (images.size() != m)
    throw MismatchError("expected " + std::to_string(m) + " generator images, got " +
                        std::to_string(images.size()));
  IntMatrix ambient(target.num_gens(), m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!target.contains(images[i]))
      throw MismatchError("image " + images[i].to_string() + " is not in " +
                          target.to_string());
    for (std::size_t r = 0; r < target.num_gens(); ++r)
      ambient(r, i) = images[i].coords[r];
  }
  for (std::size_t j = 0; j < p.relations.cols(); ++j) {
    const AbElement v = target.reduce(ambient * p.relations.column(j));
    if (!target.is_zero(v))
      throw ValidationError("generator images do not kill relation " +
                            std::to_string(j + 1) + " (image " + v.to_string() +
                            ")");
  }
  return {p.group, target, ambient * p.lift};
}

void for_each_element(const FgAbGroup& g,
                      const std::function<void(const AbElement&)>& visit) {
  if (!g.is_finite())
    throw UnsupportedError("cannot enumerate infinite group " + g.to_string());
  AbElement x = g.zero();
  const std::size_t s = g.torsion_rank();
  for (;;) {
    visit(x);
    std::size_t i = s;
    while (i > 0) {
      --i;
      x.coords[i] += 1;
      if (x.coords[i] < g.torsion()[i]) break;
      x.coords[i] = 0;
      if (i == 0) return;
    }
    if (s == 0) return;
  }
}

std::vector<AbElement> enumerate_elements(const FgAbGroup& g) {
  std::vector<AbElement> out;
  for_each_element(g, [&](const AbElement& x) { out.push_back(x); });
  return out;
}

std::vector<AbHom> enumerate_homs(const FgAbGroup& a, const FgAbGroup& b) {
  if (!b.is_finite())
    throw UnsupportedError("Hom into infinite group " + b.to_string() +
                           " is not enumerable");
  const auto all = enumerate_elements(b);
  std::vector<std::vector<AbElement>> choices(a.num_gens());
  for (std::size_t i = 0; i < a.num_gens(); ++i) {
    const Integer f = a.generator_order(i);
    for (const auto& x : all)
      if (f == 0 || b.is_zero(b.scale(f, x))) choices[i].push_back(x);
  }

  std::vector<AbHom> homs;
  std::vector<std::size_t> pick(a.num_gens(), 0);
  for (;;) {
    IntMatrix m(b.num_gens(), a.num_gens());
    for (std::size_t j = 0; j < a.num_gens(); ++j)
      for (std::size_t r = 0; r < b.num_gens(); ++r)
        m(r, j) = choices[j][pick[j]].coords[r];
    homs.emplace_back(a, b, std::move(m));

    std::size_t j = a.num_gens();
    for (;;) {
      if (j == 0) return homs;
      --j;
      if (++pick[j] < choices[j].size()) break;
      pick[j] = 0;
    }
  }
}

} // namespace pbclass
