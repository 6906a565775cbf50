#include "pbclass/cli/check.hpp"

#include "pbclass/cli/report.hpp"
#include "pbclass/error.hpp"
#include "pbclass/oracle.hpp"

namespace pbclass::cli {

std::vector<TwoComplex> small_surfaces() {
  return {sphere(), nonorientable_surface(1), orientable_surface(1),
          nonorientable_surface(2), nonorientable_surface(3)};
}

std::vector<TwoComplex> sweep_surfaces() {
  auto v = small_surfaces();
  v.push_back(orientable_surface(2));
  return v;
}

CheckSummary run_checks(const std::vector<TwoComplex>& complexes,
                        const std::vector<GroupDescriptor>& groups) {
  for (const auto& d : groups) require_valid(d);

  CheckSummary s;
  ClassifyOptions opts;
  opts.max_reps = 3;
  for (const auto& x : complexes)
    for (const auto& d : groups)
      for (const auto& mu1 : enumerate_mu1(x, d)) {
        ++s.instances;
        const std::string where = x.name() + " / " + d.name + " / mu1 " + format_mu1(x, mu1);
        const LocalSystem l = local_system(x, d, mu1.hom);
        const ClassificationResult r = classify(x, d, mu1, opts);
        const FgAbGroup& h = r.h2.group;

        if (l.coeff().is_finite()) {
          if (oracle::brute_h2_feasible(l)) {
            const auto b = oracle::brute_h2(l);
            ++s.oracle_h2_checked;
            if (b.cardinality != h.order()->get_ui() ||
                b.element_orders != oracle::element_orders(h))
              s.mismatches.push_back(where + ": brute force H^2 has " +
                                     std::to_string(b.cardinality) +
                                     " elements, SNF gives " + h.to_string());
          } else {
            ++s.skipped;
            s.notices.push_back("skipped oracle for " + where + ": instance too large");
          }
          if (h.order() && *h.order() <= oracle::kMaxOrbitElements) {
            const auto o = oracle::brute_orbits(h, r.actions);
            ++s.oracle_orbits_checked;
            if (!r.orbit_count || Integer(o.count) != *r.orbit_count)
              s.mismatches.push_back(where + ": brute force finds " +
                                     std::to_string(o.count) + " orbits, classify " +
                                     (r.orbit_count ? r.orbit_count->get_str()
                                                    : std::string("INFINITE")));
          }
        }

        if (x.is_surface()) {
          const DualityCheck dc = duality_check(l);
          ++s.duality_checked;
          if (!dc.agree)
            s.mismatches.push_back(where + ": H^2 = " + dc.lhs.to_string() +
                                   " but coinvariants = " + dc.rhs.to_string());
        }
      }
  return s;
}

} // namespace pbclass::cli
