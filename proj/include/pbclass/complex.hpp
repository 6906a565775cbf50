#pragma once

// One-vertex presentation 2-complexes and free differential calculus.

#include "pbclass/abgroup.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pbclass {

/// Letters are signed 1-based generator indices: +i is x_i, -i is x_i^-1.
/// Words are kept exactly as given; only GroupRingElement normalizes them.
struct Word {
  std::vector<int> letters;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  Word inverse() const;
  Word concat(const Word& other) const;
  Word freely_reduced() const;
  bool empty() const { return letters.empty(); }
};

/// A finite Z-linear combination of freely reduced words, i.e. an element of
/// the integral group ring of the free group.
class GroupRingElement {
public:
  GroupRingElement() = default;
  static GroupRingElement one();
  static GroupRingElement of(const Word& w, const Integer& coeff = 1);

  const std::map<Word, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Sum of coefficients.
  Integer augmentation() const;

  void add_term(const Word& w, const Integer& coeff);

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  bool operator==(const GroupRingElement&) const = default;

private:
  std::map<Word, Integer> terms_;
};

enum class SurfaceKind { None, Sphere, Orientable, Nonorientable };

/// Generators are 1-cells, relators attaching words of 2-cells.
class TwoComplex {
public:
  /// Throws MismatchError for letters out of range or a name count mismatch.
  TwoComplex(std::size_t num_gens, std::vector<Word> relators, std::string name,
             std::vector<std::string> gen_names = {});

  std::size_t num_gens() const { return num_gens_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& gen_names() const { return gen_names_; }

  SurfaceKind surface_kind() const { return kind_; }
  /// Genus for orientable surfaces, crosscap count for nonorientable ones.
  std::size_t surface_parameter() const { return surface_param_; }
  bool is_surface() const { return kind_ != SurfaceKind::None; }

  /// 1 - (#1-cells) + (#2-cells).
  long euler_characteristic() const;

  /// Entry (i, j) is the exponent sum of generator i in relator j.
  IntMatrix abelianized_relators() const;

  std::string format_word(const Word& w) const;

  bool operator==(const TwoComplex& o) const {
    return num_gens_ == o.num_gens_ && relators_ == o.relators_;
  }

private:
  friend TwoComplex sphere();
  friend TwoComplex orientable_surface(std::size_t g);
  friend TwoComplex nonorientable_surface(std::size_t k);

  std::size_t num_gens_;
  std::vector<Word> relators_;
  std::string name_;
  std::vector<std::string> gen_names_;
  SurfaceKind kind_ = SurfaceKind::None;
  std::size_t surface_param_ = 0;
};

/// No generators, one empty relator.
TwoComplex sphere();
/// Generators a1, b1, ..., ag, bg; one relator [a1,b1]...[ag,bg]. g = 0 is the
/// sphere.
TwoComplex orientable_surface(std::size_t g);
/// Generators a1..ak; one relator a1^2 ... ak^2. Throws MismatchError for k = 0.
TwoComplex nonorientable_surface(std::size_t k);

/// Parses whitespace-separated tokens `name` or `name^-1` (also `name^1`).
/// Throws SchemaError on unknown names or malformed tokens.
Word parse_word(std::string_view text, const std::vector<std::string>& gen_names);

/// d w / d x_i for a 1-based generator index. The product rule is
/// d(uv) = du + u dv.
GroupRingElement fox_derivative(const Word& w, int generator);
/// As above; throws MismatchError unless 1 <= generator <= x.num_gens().
GroupRingElement fox_derivative(const TwoComplex& x, const Word& w, int generator);

/// H_1(X) = Z^m / (exponent-sum matrix).
Presentation h1(const TwoComplex& x);

/// The orientation character H_1(X) -> Z/2 of a built-in surface; nullopt
/// for complexes that are not built-in surfaces.
std::optional<AbHom> orientation_character(const TwoComplex& x);

/// Value of the orientation character on each presenting generator (0 or 1),
/// for built-in surfaces.
std::optional<std::vector<int>> orientation_signs(const TwoComplex& x);

} // namespace pbclass
