#pragma once

// Cross-checks the SNF pipeline against the brute-force oracle and the
// duality coinvariants over a sweep of (complex, group, mu1) instances.

#include "pbclass/classify.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace pbclass::cli {

struct CheckSummary {
  std::size_t instances = 0;
  std::size_t oracle_h2_checked = 0;
  std::size_t oracle_orbits_checked = 0;
  std::size_t duality_checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> notices;

  bool ok() const { return mismatches.empty(); }
};

/// Built-in surfaces with at most three generators: sphere, rp2, torus,
/// klein, nonorientable:3.
std::vector<TwoComplex> small_surfaces();
/// small_surfaces() plus orientable:2.
std::vector<TwoComplex> sweep_surfaces();

/// Throws ValidationError for an invalid descriptor before checking anything.
CheckSummary run_checks(const std::vector<TwoComplex>& complexes,
                        const std::vector<GroupDescriptor>& groups);

} // namespace pbclass::cli
