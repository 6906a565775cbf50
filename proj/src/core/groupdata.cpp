#include "pbclass/groupdata.hpp"

#include "pbclass/error.hpp"

#include <regex>

namespace pbclass {

namespace {

// Position of x in enumerate_elements(g) (mixed radix, last coordinate fastest).
std::size_t element_index(const FgAbGroup& g, const AbElement& x) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.torsion_rank(); ++i)
    idx = idx * g.torsion()[i].get_ui() + x.coords[i].get_ui();
  return idx;
}

std::optional<std::string> table_violation(const FgAbGroup& pi1,
                                           const ElementTable& t) {
  if (!pi1.is_finite()) return "element tables need a finite pi1";
  const auto elems = enumerate_elements(pi1);
  if (t.images.size() != elems.size())
    return "table has " + std::to_string(t.images.size()) + " entries, pi1 has " +
           std::to_string(elems.size()) + " elements";
  for (const auto& y : t.images)
    if (!pi1.contains(y)) return "table entry " + y.to_string() + " is not in pi1";
  for (const auto& x : elems)
    for (const auto& y : elems) {
      const auto& lhs = t.images[element_index(pi1, pi1.add(x, y))];
      const auto rhs = pi1.add(t.images[element_index(pi1, x)],
                               t.images[element_index(pi1, y)]);
      if (!(lhs == rhs))
        return "table is not a homomorphism: f(" + x.to_string() + " + " +
               y.to_string() + ") != f(" + x.to_string() + ") + f(" +
               y.to_string() + ")";
    }
  return std::nullopt;
}

IntMatrix table_matrix(const FgAbGroup& pi1, const ElementTable& t) {
  IntMatrix m(pi1.num_gens(), pi1.num_gens());
  for (std::size_t j = 0; j < pi1.num_gens(); ++j) {
    const auto& img = t.images[element_index(pi1, pi1.generator(j))];
    for (std::size_t i = 0; i < pi1.num_gens(); ++i) m(i, j) = img.coords[i];
  }
  return m;
}

} // namespace

IntMatrix action_matrix(const GroupDescriptor& d, std::size_t i) {
  if (i >= d.action.size())
    throw MismatchError("no action given for pi0 generator " + std::to_string(i));
  if (const auto* m = std::get_if<IntMatrix>(&d.action[i])) return *m;
  const auto& t = std::get<ElementTable>(d.action[i]);
  if (auto v = table_violation(d.pi1, t)) throw ValidationError(*v);
  return table_matrix(d.pi1, t);
}

std::vector<std::string> validate(const GroupDescriptor& d) {
  std::vector<std::string> out;
  if (!d.pi0.is_finite())
    out.push_back("pi0 = " + d.pi0.to_string() + " is not finite");
  if (d.action.size() != d.pi0.num_gens()) {
    out.push_back("pi0 has " + std::to_string(d.pi0.num_gens()) +
                  " generators but " + std::to_string(d.action.size()) +
                  " action maps were given");
    return out;
  }

  const std::size_t k = d.pi1.num_gens();
  std::vector<std::optional<AbHom>> homs;
  for (std::size_t i = 0; i < d.action.size(); ++i) {
    const std::string who = "action of pi0 generator g" + std::to_string(i);
    if (const auto* t = std::get_if<ElementTable>(&d.action[i])) {
      if (auto v = table_violation(d.pi1, *t)) {
        out.push_back(who + ": " + *v);
        homs.emplace_back();
        continue;
      }
    }
    const IntMatrix m = action_matrix(d, i);
    if (m.rows() != k || m.cols() != k) {
      out.push_back(who + ": matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected " + std::to_string(k) +
                    "x" + std::to_string(k));
      homs.emplace_back();
      continue;
    }
    if (!AbHom::is_well_defined(d.pi1, d.pi1, m)) {
      out.push_back(who + ": " + m.to_string() + " is not a homomorphism of " +
                    d.pi1.to_string());
      homs.emplace_back();
      continue;
    }
    if (!is_automorphism(d.pi1, m)) {
      out.push_back(who + ": " + m.to_string() + " is not an automorphism of " +
                    d.pi1.to_string());
      homs.emplace_back();
      continue;
    }
    homs.emplace_back(AbHom(d.pi1, d.pi1, m));
  }

  const AbHom id = AbHom::identity(d.pi1);
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (!homs[i]) continue;
    const Integer f = d.pi0.generator_order(i);
    if (f != 0 && !(power(*homs[i], f) == id))
      out.push_back("action of g" + std::to_string(i) + " raised to its order " +
                    f.get_str() + " is not the identity");
    for (std::size_t j = i + 1; j < homs.size(); ++j)
      if (homs[j] && !(homs[i]->compose(*homs[j]) == homs[j]->compose(*homs[i])))
        out.push_back("actions of g" + std::to_string(i) + " and g" +
                      std::to_string(j) + " do not commute");
  }
  return out;
}

void require_valid(const GroupDescriptor& d) {
  const auto v = validate(d);
  if (v.empty()) return;
  std::string msg = "invalid group descriptor '" + d.name + "':";
  for (const auto& s : v) msg += "\n  - " + s;
  throw ValidationError(msg);
}

AbHom psi(const GroupDescriptor& d, const AbElement& a) {
  if (!d.pi0.contains(a))
    throw MismatchError("element " + a.to_string() + " is not in pi0 = " +
                        d.pi0.to_string());
  AbHom result = AbHom::identity(d.pi1);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    const AbHom g(d.pi1, d.pi1, action_matrix(d, i));
    result = power(g, a.coords[i]).compose(result);
  }
  return result;
}

bool has_trivial_action(const GroupDescriptor& d) {
  const IntMatrix id = IntMatrix::identity(d.pi1.num_gens());
  for (std::size_t i = 0; i < d.action.size(); ++i)
    if (!(AbHom(d.pi1, d.pi1, action_matrix(d, i)) == AbHom(d.pi1, d.pi1, id)))
      return false;
  return true;
}

GroupDescriptor builtin(std::string_view name) {
  static const std::regex pattern(R"(^\s*(O|SO|U|PO)\s*\(\s*(\d+)\s*\)\s*$)");
  std::cmatch m;
  if (!std::regex_match(name.begin(), name.end(), m, pattern))
    throw SchemaError("unknown group '" + std::string(name) +
                      "' (expected O(n), SO(n), U(n) or PO(n))");
  const std::string fam = m[1].str();
  const int n = std::stoi(m[2].str());
  const std::string label = fam + "(" + std::to_string(n) + ")";
  const FgAbGroup z2 = FgAbGroup::cyclic(2);

  GroupDescriptor d;
  d.name = label;
  if (fam == "O") {
    if (n < 2) throw ValidationError(label + ": O(n) needs n >= 2");
    d.builtin = BuiltinId{BuiltinFamily::O, n};
    d.pi0 = z2;
    if (n == 2) {
      d.pi1 = FgAbGroup::cyclic(0);
      d.action = {IntMatrix{{-1}}};
    } else {
      d.pi1 = z2;
      d.action = {IntMatrix{{1}}};
    }
  } else if (fam == "SO") {
    if (n < 3) throw ValidationError(label + ": SO(n) needs n >= 3");
    d.builtin = BuiltinId{BuiltinFamily::SO, n};
    d.pi1 = z2;
  } else if (fam == "U") {
    if (n < 1) throw ValidationError(label + ": U(n) needs n >= 1");
    d.builtin = BuiltinId{BuiltinFamily::U, n};
    d.pi1 = FgAbGroup::cyclic(0);
  } else {
    if (n < 4 || n % 2 != 0)
      throw ValidationError(label + ": PO(n) needs n even and n >= 4");
    d.builtin = BuiltinId{BuiltinFamily::PO, n};
    d.pi0 = z2;
    if (n % 4 == 2) {
      d.pi1 = FgAbGroup::cyclic(4);
      d.action = {IntMatrix{{-1}}};
    } else {
      // Basis (e, w): e the class of -1 in Spin(n), w the volume element.
      // The non-identity component sends w to -w = w + e and fixes e.
      d.pi1 = FgAbGroup({2, 2}, 0);
      d.action = {IntMatrix{{1, 1}, {0, 1}}};
    }
  }
  require_valid(d);
  return d;
}

std::vector<std::string> builtin_catalog() {
  return {
      "O(2)      pi0 = Z/2, pi1 = Z, action x -> -x",
      "O(n)      n >= 3: pi0 = Z/2, pi1 = Z/2, trivial action",
      "SO(n)     n >= 3: pi0 = 0, pi1 = Z/2",
      "U(n)      n >= 1: pi0 = 0, pi1 = Z",
      "PO(n)     n even >= 4: pi0 = Z/2; n = 2 mod 4: pi1 = Z/4, action x -> -x;"
      " n = 0 mod 4: pi1 = Z/2 + Z/2 on (e, w), action fixes e, w -> w + e",
  };
}

std::vector<GroupDescriptor> representative_builtins() {
  return {builtin("O(2)"), builtin("O(3)"), builtin("SO(3)"),
          builtin("U(1)"), builtin("PO(4)"), builtin("PO(6)")};
}

} // namespace pbclass
