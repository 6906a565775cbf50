#pragma once

// Bundle classification: for each mu1 in Hom(H_1 X, pi0 G), the orbit set of
// pi0 G acting on H^2(X; pi1 G twisted by mu1).

#include "pbclass/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbclass {

struct Mu1Class {
  AbHom hom;
  /// Position in enumerate_mu1 order.
  std::size_t index = 0;
  /// mu1 evaluated on each presenting generator x_i of pi_1 X.
  std::vector<AbElement> generator_images;

  bool is_zero() const { return hom.is_zero(); }
};

/// All of Hom(H_1 X, pi0), zero first, in enumerate_homs order.
std::vector<Mu1Class> enumerate_mu1(const TwoComplex& x, const GroupDescriptor& d);

/// The mu1 class with the given images of the presenting generators.
/// Throws ValidationError if the images do not kill the relators.
Mu1Class mu1_from_generator_images(const TwoComplex& x, const GroupDescriptor& d,
                                   std::span<const AbElement> images);

/// The automorphism of H^2 induced by a in pi0 acting blockwise through
/// Psi(a) on cochains. Throws Error if the lattice is not preserved, which
/// only happens for a corrupted descriptor.
AbHom induced_action(const LocalSystem& l, const GroupDescriptor& d,
                     const AbElement& a, const CohomologyGroup& h);

/// induced_action for every element of pi0, in enumeration order.
std::vector<AbHom> induced_actions(const LocalSystem& l, const GroupDescriptor& d,
                                   const CohomologyGroup& h);

/// Minimum of {g(x) : g in actions} under the group's canonical order.
AbElement orbit_rep(const FgAbGroup& h, const std::vector<AbHom>& actions,
                    const AbElement& x);

struct ClassifyOptions {
  /// Number of representatives listed when the orbit set is infinite.
  std::size_t max_reps = 10;
};

struct ClassificationResult {
  Mu1Class mu1;
  CohomologyGroup h2;
  /// Induced actions indexed like enumerate_elements(pi0).
  std::vector<AbHom> actions;
  /// nullopt means infinitely many orbits.
  std::optional<Integer> orbit_count;
  /// Canonical representatives in increasing order; a prefix of length
  /// max_reps when infinite.
  std::vector<AbElement> orbit_reps;
  /// Orbit size for each listed representative.
  std::vector<Integer> orbit_sizes;
  std::vector<std::string> warnings;

  bool infinite() const { return !orbit_count.has_value(); }
};

ClassificationResult classify(const TwoComplex& x, const GroupDescriptor& d,
                              const Mu1Class& mu1, const ClassifyOptions& opts = {});

struct Classification {
  std::vector<ClassificationResult> results;
  /// Sum of orbit counts; nullopt when some slot is infinite.
  std::optional<Integer> total;
};

Classification classify_all(const TwoComplex& x, const GroupDescriptor& d,
                            const ClassifyOptions& opts = {});

/// Visits elements of g in order of the largest free-coordinate key, then
/// canonically within each shell, until `visit` returns false. For finite g
/// this is the plain lexicographic enumeration.
void for_each_in_shells(const FgAbGroup& g,
                        const std::function<bool(const AbElement&)>& visit);

} // namespace pbclass
