#include "pbclass/error.hpp"
#include "pbclass/groupdata.hpp"

#include <doctest.h>

using namespace pbclass;

namespace {

AbElement el(std::initializer_list<long> c) {
  AbElement e;
  for (long x : c) e.coords.emplace_back(x);
  return e;
}

GroupDescriptor custom(FgAbGroup pi0, FgAbGroup pi1, std::vector<ActionMap> action) {
  return GroupDescriptor{"custom", std::move(pi0), std::move(pi1), std::move(action),
                         std::nullopt};
}

std::vector<AbElement> fixed_points(const AbHom& h) {
  std::vector<AbElement> out;
  for (const auto& x : enumerate_elements(h.source()))
    if (h.apply(x) == x) out.push_back(x);
  return out;
}

} // namespace

TEST_CASE("catalog descriptors") {
  const auto o2 = builtin("O(2)");
  CHECK(o2.pi0 == FgAbGroup::cyclic(2));
  CHECK(o2.pi1 == FgAbGroup::free(1));
  CHECK(psi(o2, el({1})).matrix() == IntMatrix{{-1}});

  const auto o3 = builtin("O(3)");
  CHECK(o3.pi1 == FgAbGroup::cyclic(2));
  CHECK(has_trivial_action(o3));
  CHECK(builtin("O(7)").pi1 == FgAbGroup::cyclic(2));

  const auto so = builtin("SO(3)");
  CHECK(so.pi0.is_trivial());
  CHECK(so.pi1 == FgAbGroup::cyclic(2));

  const auto u = builtin("U(2)");
  CHECK(u.pi0.is_trivial());
  CHECK(u.pi1 == FgAbGroup::free(1));

  const auto po6 = builtin("PO(6)");
  CHECK(po6.pi1 == FgAbGroup::cyclic(4));
  CHECK(psi(po6, el({1})) == AbHom(po6.pi1, po6.pi1, IntMatrix{{-1}}));

  const auto po4 = builtin("PO(4)");
  CHECK(po4.pi1 == FgAbGroup({2, 2}, 0));
  // fixes e = (1,0), sends w = (0,1) to w + e = (1,1)
  const AbHom a = psi(po4, el({1}));
  CHECK(a.apply(el({1, 0})) == el({1, 0}));
  CHECK(a.apply(el({0, 1})) == el({1, 1}));
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(builtin("PO(5)"), ValidationError);
  CHECK_THROWS_AS(builtin("PO(2)"), ValidationError);
  CHECK_THROWS_AS(builtin("SO(2)"), ValidationError);
  CHECK_THROWS_AS(builtin("O(1)"), ValidationError);
  CHECK_THROWS_AS(builtin("Sp(2)"), SchemaError);
  CHECK_THROWS_AS(builtin("O2"), SchemaError);
}

TEST_CASE("property: every catalog descriptor validates and psi is a homomorphism") {
  std::vector<GroupDescriptor> all;
  for (const char* n : {"O(2)", "O(3)", "O(4)", "SO(3)", "SO(5)", "U(1)", "U(3)",
                        "PO(4)", "PO(6)", "PO(8)", "PO(10)"})
    all.push_back(builtin(n));
  for (const auto& d : all) {
    CAPTURE(d.name);
    REQUIRE(validate(d).empty());
    const auto elems = enumerate_elements(d.pi0);
    REQUIRE(psi(d, d.pi0.zero()) == AbHom::identity(d.pi1));
    for (const auto& a : elems)
      for (const auto& b : elems)
        REQUIRE(psi(d, d.pi0.add(a, b)) == psi(d, a).compose(psi(d, b)));
  }
}

TEST_CASE("property: PO actions have order 2 with the expected fixed points") {
  for (const char* n : {"PO(4)", "PO(8)", "PO(12)"}) {
    const auto d = builtin(n);
    const AbHom a = psi(d, el({1}));
    CHECK_FALSE(a == AbHom::identity(d.pi1));
    CHECK(a.compose(a) == AbHom::identity(d.pi1));
    CHECK(fixed_points(a) == std::vector<AbElement>{el({0, 0}), el({1, 0})});
  }
  for (const char* n : {"PO(6)", "PO(10)", "PO(14)"}) {
    const auto d = builtin(n);
    const AbHom a = psi(d, el({1}));
    CHECK_FALSE(a == AbHom::identity(d.pi1));
    CHECK(a.compose(a) == AbHom::identity(d.pi1));
    CHECK(fixed_points(a) == std::vector<AbElement>{el({0}), el({2})});
  }
}

TEST_CASE("validation rejects broken descriptors") {
  SUBCASE("non-automorphism") {
    const auto d = custom(FgAbGroup::cyclic(2), FgAbGroup::free(1), {IntMatrix{{2}}});
    CHECK_FALSE(validate(d).empty());
    CHECK_THROWS_AS(require_valid(d), ValidationError);
  }
  SUBCASE("translation x -> x+1 on Z/4 is not a homomorphism") {
    const auto d = custom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4),
                          {ElementTable{{el({1}), el({2}), el({3}), el({0})}}});
    const auto v = validate(d);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("not a homomorphism") != std::string::npos);
  }
  SUBCASE("negation table on Z/4 is accepted") {
    const auto d = custom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4),
                          {ElementTable{{el({0}), el({3}), el({2}), el({1})}}});
    CHECK(validate(d).empty());
    CHECK(action_matrix(d, 0) == IntMatrix{{3}});
  }
  SUBCASE("relation of pi0 not respected") {
    const auto d = custom(FgAbGroup::cyclic(3), FgAbGroup::free(1), {IntMatrix{{-1}}});
    CHECK_FALSE(validate(d).empty());
  }
  SUBCASE("non-commuting generator actions") {
    const auto d = custom(FgAbGroup({2, 2}, 0), FgAbGroup::free(2),
                          {IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{-1, 0}, {0, 1}}});
    const auto v = validate(d);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("commute") != std::string::npos);
  }
  SUBCASE("infinite pi0") {
    const auto d = custom(FgAbGroup::free(1), FgAbGroup::free(1), {IntMatrix{{1}}});
    CHECK_FALSE(validate(d).empty());
  }
  SUBCASE("wrong number of action maps") {
    const auto d = custom(FgAbGroup::cyclic(2), FgAbGroup::free(1), {});
    CHECK_FALSE(validate(d).empty());
  }
  SUBCASE("wrong matrix shape") {
    const auto d = custom(FgAbGroup::cyclic(2), FgAbGroup::free(1), {IntMatrix{{1, 0}}});
    CHECK_FALSE(validate(d).empty());
  }
}

TEST_CASE("catalog listing mentions every family") {
  std::string all;
  for (const auto& line : builtin_catalog()) all += line + "\n";
  for (const char* s : {"O(2)", "O(n)", "SO(n)", "U(n)", "PO(n)"})
    CHECK(all.find(s) != std::string::npos);
  CHECK(representative_builtins().size() == 6);
}
