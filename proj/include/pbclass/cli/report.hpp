#pragma once

#include "pbclass/classify.hpp"
#include "pbclass/cli/jobspec.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pbclass::cli {

/// "3" for one-coordinate elements, "(1,0)" otherwise, "0" for the empty tuple.
std::string format_element(const AbElement& e);

/// "a1->1 a2->0"; "trivial" when the complex has no generators.
std::string format_mu1(const TwoComplex& x, const Mu1Class& mu1);

struct ClassifyReport {
  std::vector<ClassificationResult> results;
  /// nullopt: infinitely many classes in total.
  std::optional<Integer> total;
  /// Report one slot only (explicit mu1); no total line.
  bool single = false;
};

void render_classification(std::ostream& out, OutputFormat format,
                           const TwoComplex& x, const GroupDescriptor& d,
                           const ClassifyReport& report);

struct H2Report {
  Mu1Class mu1;
  FgAbGroup h0;
  FgAbGroup h1;
  FgAbGroup h2;
  std::optional<DualityCheck> duality;
  std::vector<std::string> warnings;
};

void render_h2(std::ostream& out, OutputFormat format, const TwoComplex& x,
               const GroupDescriptor& d, const H2Report& report);

} // namespace pbclass::cli
