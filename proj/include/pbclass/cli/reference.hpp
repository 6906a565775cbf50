#pragma once

// Closed-form answers known for catalog groups over built-in surfaces. The
// tool compares every computed slot against this table and reports a WARN
// line on disagreement; the computed value is always the one reported.

#include "pbclass/classify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbclass::cli {

struct ReferenceEntry {
  FgAbGroup h2;
  /// nullopt: infinitely many classes.
  std::optional<Integer> orbit_count;
  /// The closed form the entry comes from, e.g. "Z_2^k x Z_2".
  std::string closed_form;
  /// What the representative means for this slot, when it has a name.
  std::string mu2_meaning;
};

/// Nullopt unless x is a built-in surface and d a catalog group.
std::optional<ReferenceEntry> reference_entry(const TwoComplex& x,
                                              const GroupDescriptor& d,
                                              const Mu1Class& mu1);

/// WARN lines for a classified slot that disagrees with its reference entry.
std::vector<std::string> reference_warnings(const TwoComplex& x,
                                            const GroupDescriptor& d,
                                            const ClassificationResult& r);

/// WARN lines comparing only H^2.
std::vector<std::string> reference_h2_warnings(const TwoComplex& x,
                                               const GroupDescriptor& d,
                                               const Mu1Class& mu1,
                                               const FgAbGroup& computed);

} // namespace pbclass::cli
