#pragma once

// Cellular cohomology of a presentation complex with local coefficients.
//
// Cochains C^0 = A, C^1 = A^m, C^2 = A^n for m generators and n relators.
// Each copy of A = Z^k / (torsion relations) is lifted to Z^k, so every
// group below is the cokernel of one integer matrix that carries the
// coboundary columns together with the coefficient relation columns.

#include "pbclass/abgroup.hpp"
#include "pbclass/complex.hpp"
#include "pbclass/groupdata.hpp"

#include <vector>

namespace pbclass {

/// Coefficients A with monodromy rho(x_i) for each generator of pi_1 X.
class LocalSystem {
public:
  /// Throws ValidationError if some rho_i is not an automorphism of coeff or
  /// rho does not compose to the identity along some relator.
  LocalSystem(TwoComplex complex, FgAbGroup coeff, std::vector<AbHom> rho);

  const TwoComplex& complex() const { return complex_; }
  const FgAbGroup& coeff() const { return coeff_; }
  const std::vector<AbHom>& rho() const { return rho_; }
  const std::vector<AbHom>& rho_inverse() const { return rho_inv_; }

  /// rho(w), multiplying matrices left to right along the word.
  IntMatrix evaluate(const Word& w) const;
  /// The Z-linear extension of evaluate to the group ring.
  IntMatrix evaluate(const GroupRingElement& e) const;

private:
  TwoComplex complex_;
  FgAbGroup coeff_;
  std::vector<AbHom> rho_;
  std::vector<AbHom> rho_inv_;
};

/// rho(x_i) = psi(d, mu1(x_i)). `mu1` must be a hom H_1(X) -> pi0 with
/// source exactly h1(X).group.
LocalSystem local_system(const TwoComplex& x, const GroupDescriptor& d,
                         const AbHom& mu1);

/// Local system with every rho_i the identity.
LocalSystem trivial_local_system(const TwoComplex& x, const FgAbGroup& coeff);

struct Coboundaries {
  /// (k m) x k; block i is rho(x_i) - I.
  IntMatrix delta0;
  /// (k n) x (k m); block (j, i) is rho(d r_j / d x_i).
  IntMatrix delta1;
};

Coboundaries coboundaries(const LocalSystem& l);

/// A quotient of the lifted cochain space Z^ambient_dim.
struct CohomologyGroup {
  FgAbGroup group;
  std::size_t ambient_dim = 0;
  /// group.num_gens() x ambient_dim.
  IntMatrix projection;
  /// ambient_dim x group.num_gens(); a section of projection.
  IntMatrix lift;
  /// Columns span exactly the kernel of projection (coboundaries plus
  /// coefficient relations).
  IntMatrix lattice;

  AbElement project(const Vector& ambient) const;
  Vector lift_element(const AbElement& x) const;
};

/// H^2 = A^n / (im delta1 + relations). Every 2-cochain is a cocycle.
CohomologyGroup h2(const LocalSystem& l);
/// ker delta0 inside A.
FgAbGroup h0(const LocalSystem& l);
/// ker delta1 / im delta0.
FgAbGroup h1(const LocalSystem& l);

/// A / <x - g x : g in autos>. Throws ValidationError for non-automorphisms.
FgAbGroup coinvariants(const FgAbGroup& a, const std::vector<AbHom>& autos);

struct DualityCheck {
  FgAbGroup lhs;
  FgAbGroup rhs;
  bool agree = false;
};

/// Compares H^2(X; A_rho) with the coinvariants of A under
/// g -> w_X(g) rho(g). Throws MismatchError unless X is a built-in surface.
DualityCheck duality_check(const LocalSystem& l);

} // namespace pbclass
