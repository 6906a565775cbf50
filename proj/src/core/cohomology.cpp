#include "pbclass/cohomology.hpp"

#include "pbclass/error.hpp"

#include <cstdlib>

namespace pbclass {

using zlinalg::block_diagonal;
using zlinalg::hconcat;
using zlinalg::mod;

namespace {

IntMatrix reduce_rows(const FgAbGroup& a, IntMatrix m) {
  for (std::size_t i = 0; i < a.torsion_rank(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod(m(i, j), a.torsion()[i]);
  return m;
}

void put_block(IntMatrix& dst, std::size_t r0, std::size_t c0, const IntMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) dst(r0 + i, c0 + j) = b(i, j);
}

// First `n` coordinates of each column.
IntMatrix head_rows(const IntMatrix& m, std::size_t n) {
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  return zlinalg::select_rows(m, rows);
}

FgAbGroup group_of(zlinalg::Cokernel c) {
  return {std::move(c.torsion), c.free_rank};
}

} // namespace

LocalSystem::LocalSystem(TwoComplex complex, FgAbGroup coeff, std::vector<AbHom> rho)
    : complex_(std::move(complex)), coeff_(std::move(coeff)), rho_(std::move(rho)) {
  if (rho_.size() != complex_.num_gens())
    throw MismatchError("local system needs " + std::to_string(complex_.num_gens()) +
                        " monodromy maps, got " + std::to_string(rho_.size()));
  for (std::size_t i = 0; i < rho_.size(); ++i) {
    if (!(rho_[i].source() == coeff_) || !is_automorphism(rho_[i]))
      throw ValidationError("monodromy of generator " + std::to_string(i + 1) +
                            " is not an automorphism of " + coeff_.to_string());
    rho_inv_.push_back(inverse(rho_[i]));
  }
  const AbHom id = AbHom::identity(coeff_);
  for (std::size_t j = 0; j < complex_.relators().size(); ++j)
    if (!(AbHom(coeff_, coeff_, evaluate(complex_.relators()[j])) == id))
      throw ValidationError("monodromy is not trivial along relator " +
                            std::to_string(j + 1));
}

IntMatrix LocalSystem::evaluate(const Word& w) const {
  IntMatrix m = IntMatrix::identity(coeff_.num_gens());
  for (int l : w.letters) {
    const auto& g = l > 0 ? rho_[l - 1] : rho_inv_[-l - 1];
    m = reduce_rows(coeff_, m * g.matrix());
  }
  return m;
}

IntMatrix LocalSystem::evaluate(const GroupRingElement& e) const {
  const std::size_t k = coeff_.num_gens();
  IntMatrix sum(k, k);
  for (const auto& [w, c] : e.terms()) {
    IntMatrix t = evaluate(w);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sum(i, j) += c * t(i, j);
  }
  return reduce_rows(coeff_, std::move(sum));
}

LocalSystem local_system(const TwoComplex& x, const GroupDescriptor& d,
                         const AbHom& mu1) {
  require_valid(d);
  const Presentation hx = h1(x);
  if (!(mu1.source() == hx.group) || !(mu1.target() == d.pi0))
    throw MismatchError("mu1 must be a hom " + hx.group.to_string() + " -> " +
                        d.pi0.to_string());
  std::vector<AbHom> rho;
  for (std::size_t i = 0; i < x.num_gens(); ++i)
    rho.push_back(psi(d, mu1.apply(hx.generator_image(i))));
  return {x, d.pi1, std::move(rho)};
}

LocalSystem trivial_local_system(const TwoComplex& x, const FgAbGroup& coeff) {
  return {x, coeff, std::vector<AbHom>(x.num_gens(), AbHom::identity(coeff))};
}

Coboundaries coboundaries(const LocalSystem& l) {
  const std::size_t k = l.coeff().num_gens();
  const std::size_t m = l.complex().num_gens();
  const auto& rels = l.complex().relators();
  const std::size_t n = rels.size();
  const IntMatrix id = IntMatrix::identity(k);

  Coboundaries c{IntMatrix(k * m, k), IntMatrix(k * n, k * m)};
  for (std::size_t i = 0; i < m; ++i)
    put_block(c.delta0, i * k, 0, l.rho()[i].matrix() - id);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      put_block(c.delta1, j * k, i * k,
                l.evaluate(fox_derivative(rels[j], static_cast<int>(i + 1))));
  return c;
}

AbElement CohomologyGroup::project(const Vector& ambient) const {
  if (ambient.size() != ambient_dim)
    throw MismatchError("cochain has " + std::to_string(ambient.size()) +
                        " coordinates, expected " + std::to_string(ambient_dim));
  return group.reduce(projection * ambient);
}

Vector CohomologyGroup::lift_element(const AbElement& x) const {
  if (!group.contains(x))
    throw MismatchError("element " + x.to_string() + " is not in " + group.to_string());
  return lift * x.coords;
}

CohomologyGroup h2(const LocalSystem& l) {
  const std::size_t n = l.complex().relators().size();
  const Coboundaries c = coboundaries(l);
  IntMatrix lattice = hconcat(c.delta1, block_diagonal(l.coeff().relation_matrix(), n));
  auto cok = zlinalg::cokernel(lattice);
  CohomologyGroup h;
  h.group = FgAbGroup(std::move(cok.torsion), cok.free_rank);
  h.ambient_dim = lattice.rows();
  h.projection = std::move(cok.projection);
  h.lift = std::move(cok.lift);
  h.lattice = std::move(lattice);
  return h;
}

FgAbGroup h0(const LocalSystem& l) {
  const std::size_t k = l.coeff().num_gens();
  const std::size_t m = l.complex().num_gens();
  const IntMatrix rel = l.coeff().relation_matrix();
  const Coboundaries c = coboundaries(l);
  const IntMatrix cocycles =
      head_rows(zlinalg::kernel_basis(hconcat(c.delta0, block_diagonal(rel, m))), k);
  return group_of(zlinalg::subquotient(cocycles, rel));
}

FgAbGroup h1(const LocalSystem& l) {
  const std::size_t k = l.coeff().num_gens();
  const std::size_t m = l.complex().num_gens();
  const std::size_t n = l.complex().relators().size();
  const IntMatrix rel = l.coeff().relation_matrix();
  const Coboundaries c = coboundaries(l);
  const IntMatrix cocycles = head_rows(
      zlinalg::kernel_basis(hconcat(c.delta1, block_diagonal(rel, n))), k * m);
  const IntMatrix boundaries = hconcat(c.delta0, block_diagonal(rel, m));
  return group_of(zlinalg::subquotient(cocycles, boundaries));
}

FgAbGroup coinvariants(const FgAbGroup& a, const std::vector<AbHom>& autos) {
  const IntMatrix id = IntMatrix::identity(a.num_gens());
  IntMatrix gens(a.num_gens(), 0);
  for (const auto& g : autos) {
    if (!(g.source() == a) || !is_automorphism(g))
      throw ValidationError("coinvariants: " + g.matrix().to_string() +
                            " is not an automorphism of " + a.to_string());
    gens = hconcat(gens, g.matrix() - id);
  }
  return group_of(zlinalg::cokernel(hconcat(gens, a.relation_matrix())));
}

DualityCheck duality_check(const LocalSystem& l) {
  const auto signs = orientation_signs(l.complex());
  if (!signs)
    throw MismatchError("duality check needs a built-in closed surface, got '" +
                        l.complex().name() + "'");
  const FgAbGroup& a = l.coeff();
  const IntMatrix minus = -IntMatrix::identity(a.num_gens());
  std::vector<AbHom> diagonal;
  for (std::size_t i = 0; i < l.rho().size(); ++i)
    diagonal.push_back((*signs)[i] ? AbHom(a, a, minus).compose(l.rho()[i])
                                   : l.rho()[i]);
  DualityCheck out{h2(l).group, coinvariants(a, diagonal), false};
  out.agree = out.lhs == out.rhs;
  return out;
}

} // namespace pbclass
