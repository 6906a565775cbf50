#pragma once

// Homotopy data (pi0 G, pi1 G, Psi) of a Lie group with abelian pi0 G.

#include "pbclass/abgroup.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pbclass {

/// Images of every element of a finite pi1, listed in enumeration order.
struct ElementTable {
  std::vector<AbElement> images;
  bool operator==(const ElementTable&) const = default;
};

/// The action of one pi0 generator on pi1: a matrix on canonical generators
/// or an explicit element table (finite pi1 only).
using ActionMap = std::variant<IntMatrix, ElementTable>;

enum class BuiltinFamily { O, SO, U, PO };

struct BuiltinId {
  BuiltinFamily family;
  int n;
  bool operator==(const BuiltinId&) const = default;
};

struct GroupDescriptor {
  std::string name;
  FgAbGroup pi0;
  FgAbGroup pi1;
  /// One entry per canonical generator of pi0.
  std::vector<ActionMap> action;
  /// Set for catalog groups only.
  std::optional<BuiltinId> builtin;
};

/// Every violated invariant, human-readable; empty means valid.
std::vector<std::string> validate(const GroupDescriptor& d);
/// Throws ValidationError listing all violations.
void require_valid(const GroupDescriptor& d);

/// Matrix of the action of pi0 generator i (tables are converted).
/// Throws ValidationError if a table is not a homomorphism.
IntMatrix action_matrix(const GroupDescriptor& d, std::size_t i);

/// Psi(a)_*: the automorphism of pi1 induced by a in pi0.
AbHom psi(const GroupDescriptor& d, const AbElement& a);

/// Catalog: O(n) n >= 2, SO(n) n >= 3, U(n) n >= 1, PO(n) n even >= 4.
/// Throws SchemaError for unknown names and ValidationError for parameters
/// outside the supported range.
GroupDescriptor builtin(std::string_view name);

/// One catalog line per family with its parameter note.
std::vector<std::string> builtin_catalog();

/// O(2), O(3), SO(3), U(1), PO(4), PO(6).
std::vector<GroupDescriptor> representative_builtins();

/// Whether every action generator is the identity.
bool has_trivial_action(const GroupDescriptor& d);

} // namespace pbclass
