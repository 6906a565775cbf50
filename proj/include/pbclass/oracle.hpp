#pragma once

// Brute-force cross-checks for small finite instances. Nothing here goes
// through Smith normal form: cochains are enumerated explicitly with
// machine-integer arithmetic.

#include "pbclass/cohomology.hpp"

#include <cstdint>
#include <vector>

namespace pbclass::oracle {

inline constexpr std::uint64_t kMaxCochains = 1'000'000;
inline constexpr std::uint64_t kMaxOrbitElements = 100'000;

struct BruteH2 {
  std::uint64_t cardinality = 0;
  /// Order of every element of H^2, sorted ascending.
  std::vector<std::uint64_t> element_orders;
};

/// Enumerates A^m, collects the image of delta1 in A^n by evaluating the Fox
/// derivatives term by term, and counts cosets and their orders.
/// Throws UnsupportedError if A is infinite or |A|^m or |A|^n exceeds
/// kMaxCochains.
BruteH2 brute_h2(const LocalSystem& l);

/// Whether brute_h2 accepts this local system.
bool brute_h2_feasible(const LocalSystem& l);

struct BruteOrbits {
  std::uint64_t count = 0;
  /// Orbit sizes, sorted ascending.
  std::vector<std::uint64_t> sizes;
};

/// Union-find over explicit application of every action to every element.
/// Throws UnsupportedError for infinite h or |h| > kMaxOrbitElements.
BruteOrbits brute_orbits(const FgAbGroup& h, const std::vector<AbHom>& actions);

/// Sorted element orders of a finite group, read off its invariant factors.
std::vector<std::uint64_t> element_orders(const FgAbGroup& g);

} // namespace pbclass::oracle
