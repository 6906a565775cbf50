#pragma once

// Finitely generated abelian groups in invariant-factor form.

#include "pbclass/zlinalg.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pbclass {

using zlinalg::Integer;
using zlinalg::IntMatrix;
using zlinalg::Vector;

/// An element in canonical coordinates: torsion coordinates first (each
/// reduced into [0, f_i)), then free coordinates.
struct AbElement {
  Vector coords;

  bool operator==(const AbElement&) const = default;
  std::string to_string() const;
};

/// Z/f_1 + ... + Z/f_s + Z^r with f_i >= 2 and f_i | f_{i+1}.
///
/// Generator i < s is the torsion generator of order f_i; generators s..s+r-1
/// are free. Two groups with equal invariant data compare equal.
class FgAbGroup {
public:
  FgAbGroup() = default;
  /// Throws ValidationError if `torsion` is not a divisibility chain of
  /// factors >= 2.
  FgAbGroup(Vector torsion, std::size_t free_rank);

  static FgAbGroup trivial() { return {}; }
  /// Z/n; n = 0 gives Z and n = 1 the trivial group.
  static FgAbGroup cyclic(long n);
  static FgAbGroup free(std::size_t rank) { return {{}, rank}; }

  const Vector& torsion() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t torsion_rank() const { return torsion_.size(); }
  std::size_t num_gens() const { return torsion_.size() + free_rank_; }

  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return num_gens() == 0; }
  /// Cardinality; nullopt for infinite groups.
  std::optional<Integer> order() const;

  /// Order of generator i: f_i for torsion generators, 0 for free ones.
  Integer generator_order(std::size_t i) const;
  /// Invariant factors with a trailing 0 per free summand.
  Vector invariant_factors() const;
  /// num_gens x s matrix whose columns are f_i e_i.
  IntMatrix relation_matrix() const;

  AbElement zero() const;
  AbElement generator(std::size_t i) const;
  /// Reduces torsion coordinates of an ambient coordinate vector.
  AbElement reduce(const Vector& coords) const;
  /// Whether `x` has the right shape and reduced torsion coordinates.
  bool contains(const AbElement& x) const;

  AbElement add(const AbElement& a, const AbElement& b) const;
  AbElement negate(const AbElement& a) const;
  AbElement subtract(const AbElement& a, const AbElement& b) const;
  AbElement scale(const Integer& k, const AbElement& a) const;
  bool equals(const AbElement& a, const AbElement& b) const;
  bool is_zero(const AbElement& a) const;
  /// Additive order of `a`; 0 when `a` has infinite order.
  Integer element_order(const AbElement& a) const;

  /// Canonical total order: torsion coordinates by value, free coordinates by
  /// 0 < 1 < -1 < 2 < -2 < ..., compared lexicographically.
  std::strong_ordering compare(const AbElement& a, const AbElement& b) const;

  /// e.g. "Z/2 + Z/4 + Z", or "0" for the trivial group.
  std::string to_string() const;

  bool operator==(const FgAbGroup&) const = default;

private:
  void require(const AbElement& x) const;

  Vector torsion_;
  std::size_t free_rank_ = 0;
};

/// Rank of a free coordinate under the order 0 < 1 < -1 < 2 < -2 < ...
Integer free_coordinate_key(const Integer& n);

/// A homomorphism stored on canonical generators: column j is the image of
/// source generator j, in target coordinates.
class AbHom {
public:
  /// Throws ValidationError unless f_j * (column j) = 0 in the target for
  /// every torsion generator j of the source.
  AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  static AbHom identity(const FgAbGroup& g);
  static AbHom zero(const FgAbGroup& source, const FgAbGroup& target);
  /// Whether `matrix` defines a homomorphism source -> target.
  static bool is_well_defined(const FgAbGroup& source, const FgAbGroup& target,
                              const IntMatrix& matrix);

  const FgAbGroup& source() const { return source_; }
  const FgAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  AbElement apply(const AbElement& x) const;
  AbElement image_of_generator(std::size_t j) const;
  /// this ∘ inner
  AbHom compose(const AbHom& inner) const;
  bool is_zero() const;

  bool operator==(const AbHom&) const = default;

private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// Well-defined and bijective.
bool is_automorphism(const AbHom& h);
/// The same test on a raw matrix over g.
bool is_automorphism(const FgAbGroup& g, const IntMatrix& matrix);
/// Throws ValidationError if `h` is not an automorphism.
AbHom inverse(const AbHom& h);
/// h composed with itself `n` times (n >= 0).
AbHom power(const AbHom& h, const Integer& n);

/// A canonical group together with the coordinate maps from the presenting
/// generators.
struct Presentation {
  FgAbGroup group;
  /// group.num_gens() x num_gens; apply then reduce.
  IntMatrix projection;
  /// num_gens x group.num_gens(); projection * lift = identity.
  IntMatrix lift;
  /// The relation columns this presentation was built from.
  IntMatrix relations;

  AbElement project(const Vector& ambient) const;
  Vector lift_element(const AbElement& x) const;
  AbElement generator_image(std::size_t i) const;
};

/// Z^num_gens / column-span(relations).
Presentation from_presentation(std::size_t num_gens, const IntMatrix& relations);

/// Builds the hom on canonical generators of `p.group` sending presenting
/// generator i to images[i]. Throws ValidationError unless the images kill
/// every relation.
AbHom hom_from_generator_images(const Presentation& p, const FgAbGroup& target,
                                std::span<const AbElement> images);

/// Calls `visit` on every element of a finite group in lexicographic order.
/// Throws UnsupportedError for infinite groups.
void for_each_element(const FgAbGroup& g,
                      const std::function<void(const AbElement&)>& visit);
std::vector<AbElement> enumerate_elements(const FgAbGroup& g);

/// All of Hom(a, b) for finite b, zero hom first, ordered lexicographically
/// by generator images (generator 0 most significant).
std::vector<AbHom> enumerate_homs(const FgAbGroup& a, const FgAbGroup& b);

} // namespace pbclass
