#include "pbclass/classify.hpp"
#include "pbclass/error.hpp"
#include "pbclass/oracle.hpp"

#include <doctest.h>

using namespace pbclass;

namespace {

AbHom aut(const FgAbGroup& a, IntMatrix m) { return AbHom(a, a, std::move(m)); }

std::vector<AbHom> automorphisms(const FgAbGroup& a) {
  std::vector<AbHom> out;
  for (const auto& h : enumerate_homs(a, a))
    if (is_automorphism(h)) out.push_back(h);
  return out;
}

std::vector<TwoComplex> small_complexes() {
  return {sphere(),
          nonorientable_surface(1),
          orientable_surface(1),
          nonorientable_surface(2),
          nonorientable_surface(3),
          TwoComplex(2, {Word{{1, 2, -1, -2}}, Word{{1, 1}}}, "two relators"),
          TwoComplex(1, {Word{{1, 1, 1}}}, "z3"),
          TwoComplex(3, {Word{{1, 2, 3, -1}}, Word{{2, 2}}}, "three gens")};
}

} // namespace

TEST_CASE("brute_h2 examples") {
  const auto z2 = FgAbGroup::cyclic(2);
  const auto z4 = FgAbGroup::cyclic(4);
  CHECK(oracle::brute_h2(trivial_local_system(nonorientable_surface(1), z2)).cardinality == 2);
  const LocalSystem t(orientable_surface(1), z4,
                      {aut(z4, IntMatrix{{-1}}), AbHom::identity(z4)});
  CHECK(oracle::brute_h2(t).cardinality == 2);
  const auto s = oracle::brute_h2(trivial_local_system(sphere(), z4));
  CHECK(s.cardinality == 4);
  CHECK(s.element_orders == std::vector<std::uint64_t>{1, 2, 4, 4});
}

TEST_CASE("brute_h2 refuses what it cannot enumerate") {
  CHECK_THROWS_AS(oracle::brute_h2(trivial_local_system(orientable_surface(1),
                                                        FgAbGroup::free(1))),
                  UnsupportedError);
  const auto big = trivial_local_system(orientable_surface(5), FgAbGroup::cyclic(4));
  CHECK_FALSE(oracle::brute_h2_feasible(big));
  CHECK_THROWS_AS(oracle::brute_h2(big), UnsupportedError);
  CHECK(oracle::brute_h2_feasible(trivial_local_system(orientable_surface(4),
                                                       FgAbGroup::cyclic(4))));
}

TEST_CASE("brute_orbits examples") {
  const auto z4 = FgAbGroup::cyclic(4);
  auto o = oracle::brute_orbits(z4, {AbHom::identity(z4), aut(z4, IntMatrix{{-1}})});
  CHECK(o.count == 3);
  CHECK(o.sizes == std::vector<std::uint64_t>{1, 1, 2});

  const FgAbGroup v({2, 2}, 0);
  o = oracle::brute_orbits(v, {AbHom::identity(v), aut(v, IntMatrix{{1, 1}, {0, 1}})});
  CHECK(o.count == 3);
  CHECK(o.sizes == std::vector<std::uint64_t>{1, 1, 2});

  const auto z2 = FgAbGroup::cyclic(2);
  CHECK(oracle::brute_orbits(z2, {AbHom::identity(z2)}).count == 2);
  CHECK_THROWS_AS(oracle::brute_orbits(FgAbGroup::free(1), {}), UnsupportedError);
  CHECK_THROWS_AS(oracle::brute_orbits(FgAbGroup({2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}, 0), {}),
                  UnsupportedError);
}

TEST_CASE("element orders from invariant factors") {
  CHECK(oracle::element_orders(FgAbGroup({2, 2}, 0)) ==
        std::vector<std::uint64_t>{1, 2, 2, 2});
  CHECK(oracle::element_orders(FgAbGroup::trivial()) == std::vector<std::uint64_t>{1});
}

TEST_CASE("property: brute force H^2 matches SNF over every admissible twist") {
  const std::vector<FgAbGroup> coeffs{FgAbGroup::cyclic(2), FgAbGroup::cyclic(3),
                                      FgAbGroup::cyclic(4), FgAbGroup({2, 2}, 0),
                                      FgAbGroup::cyclic(6), FgAbGroup::cyclic(8),
                                      FgAbGroup({2, 4}, 0)};
  std::size_t checked = 0;
  for (const auto& a : coeffs) {
    const auto autos = automorphisms(a);
    for (const auto& x : small_complexes()) {
      std::vector<std::size_t> pick(x.num_gens(), 0);
      for (;;) {
        std::vector<AbHom> rho;
        for (std::size_t i : pick) rho.push_back(autos[i]);
        try {
          const LocalSystem l(x, a, rho);
          const auto b = oracle::brute_h2(l);
          const auto h = h2(l).group;
          CAPTURE(x.name());
          CAPTURE(a.to_string());
          REQUIRE(Integer(b.cardinality) == *h.order());
          REQUIRE(b.element_orders == oracle::element_orders(h));
          ++checked;
        } catch (const ValidationError&) {
          // rho does not kill some relator
        }
        std::size_t j = pick.size();
        while (j > 0 && ++pick[j - 1] == autos.size()) pick[--j] = 0;
        if (j == 0) break;
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("property: brute force orbits match classify") {
  std::vector<GroupDescriptor> ds = representative_builtins();
  ds.push_back(builtin("PO(8)"));
  ds.push_back({"Z/4 on (Z/3)^2", FgAbGroup::cyclic(4), FgAbGroup({3, 3}, 0),
                {IntMatrix{{0, 2}, {1, 0}}}, std::nullopt});
  for (const auto& x : small_complexes())
    for (const auto& d : ds)
      for (const auto& mu : enumerate_mu1(x, d)) {
        const auto r = classify(x, d, mu);
        if (!r.h2.group.is_finite()) continue;
        const auto o = oracle::brute_orbits(r.h2.group, r.actions);
        REQUIRE(Integer(o.count) == *r.orbit_count);
        std::vector<std::uint64_t> sizes;
        for (const auto& s : r.orbit_sizes) sizes.push_back(s.get_ui());
        std::sort(sizes.begin(), sizes.end());
        REQUIRE(sizes == o.sizes);
      }
}
