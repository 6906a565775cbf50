#include "pbclass/cli/reference.hpp"

#include "pbclass/cli/report.hpp"

namespace pbclass::cli {

namespace {

FgAbGroup mod_twice(const FgAbGroup& a) {
  IntMatrix twice = IntMatrix::identity(a.num_gens());
  for (std::size_t i = 0; i < a.num_gens(); ++i) twice(i, i) = 2;
  auto c = zlinalg::cokernel(zlinalg::hconcat(twice, a.relation_matrix()));
  return {std::move(c.torsion), c.free_rank};
}

std::optional<Integer> cardinality(const FgAbGroup& a) { return a.order(); }

std::string describe_count(const std::optional<Integer>& c) {
  return c ? c->get_str() : std::string("INFINITE");
}

} // namespace

std::optional<ReferenceEntry> reference_entry(const TwoComplex& x,
                                              const GroupDescriptor& d,
                                              const Mu1Class& mu1) {
  if (!x.is_surface() || !d.builtin) return std::nullopt;
  const BuiltinId id = *d.builtin;
  const SurfaceKind kind = x.surface_kind();
  const bool zero = mu1.is_zero();
  const FgAbGroup z2 = FgAbGroup::cyclic(2);

  if (kind == SurfaceKind::Sphere) {
    // pi1 G / pi0 G
    std::optional<Integer> orbits;
    if (d.pi1.is_finite())
      orbits = id.family == BuiltinFamily::PO ? Integer(3) : *d.pi1.order();
    return ReferenceEntry{d.pi1, orbits, "pi1G/pi0G", ""};
  }

  const bool orientable = kind == SurfaceKind::Orientable;
  const bool trivial_action = id.family == BuiltinFamily::SO ||
                              id.family == BuiltinFamily::U ||
                              (id.family == BuiltinFamily::O && id.n >= 3);
  if (trivial_action) {
    const FgAbGroup h = orientable ? d.pi1 : mod_twice(d.pi1);
    const std::string form = orientable ? "pi0G^{2g} x pi1G"
                                        : "(pi0G)_2 x pi0G^{k-1} x pi1G/2pi1G";
    return ReferenceEntry{h, cardinality(h), form,
                          id.family == BuiltinFamily::O ? "w2" : ""};
  }

  if (id.family == BuiltinFamily::O) {  // O(2)
    if (orientable) {
      if (zero) return ReferenceEntry{d.pi1, std::nullopt, "{0} x Z_{>=0}", "degree"};
      return ReferenceEntry{z2, Integer(2), "((Z_2)^{2g} \\ {0}) x Z_2", "w2"};
    }
    return ReferenceEntry{z2, Integer(2), "Z_2^k x Z_2", "w2"};
  }

  // PO(n), n even.
  const bool n_mod4_zero = id.n % 4 == 0;
  if (orientable) {
    const std::string form = "({0} x {0,1,[w_n]}) u ((Z_2^{2g} \\ {0}) x Z_2)";
    if (zero) return ReferenceEntry{d.pi1, Integer(3), form, ""};
    return ReferenceEntry{z2, Integer(2), form, ""};
  }
  if (n_mod4_zero) {
    const std::string form = "({0} x {0,1,[w_n]}) u ((Z_2^k \\ {0}) x Z_2)";
    if (zero) return ReferenceEntry{d.pi1, Integer(3), form, ""};
    return ReferenceEntry{z2, Integer(2), form, ""};
  }
  return ReferenceEntry{z2, Integer(2), "Z_2^k x Z_2", ""};
}

std::vector<std::string> reference_warnings(const TwoComplex& x,
                                            const GroupDescriptor& d,
                                            const ClassificationResult& r) {
  const auto ref = reference_entry(x, d, r.mu1);
  if (!ref) return {};
  if (ref->h2 == r.h2.group && ref->orbit_count == r.orbit_count) return {};
  return {"WARN mu1 = " + format_mu1(x, r.mu1) + ": computed H^2 = " +
          r.h2.group.to_string() + " with " + describe_count(r.orbit_count) +
          " classes; reference closed form " + ref->closed_form + " for " + d.name +
          " over " + x.name() + " predicts H^2 = " + ref->h2.to_string() + " with " +
          describe_count(ref->orbit_count) + " classes"};
}

std::vector<std::string> reference_h2_warnings(const TwoComplex& x,
                                               const GroupDescriptor& d,
                                               const Mu1Class& mu1,
                                               const FgAbGroup& computed) {
  const auto ref = reference_entry(x, d, mu1);
  if (!ref || ref->h2 == computed) return {};
  return {"WARN mu1 = " + format_mu1(x, mu1) + ": computed H^2 = " +
          computed.to_string() + "; reference closed form " + ref->closed_form +
          " for " + d.name + " over " + x.name() + " predicts H^2 = " +
          ref->h2.to_string()};
}

} // namespace pbclass::cli
