#include "pbclass/oracle.hpp"

#include "pbclass/error.hpp"

#include <algorithm>
#include <numeric>

namespace pbclass::oracle {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Finite abelian group with elements encoded as mixed-radix indices.
struct Codec {
  std::vector<i64> radix;
  u64 size = 1;

  explicit Codec(const FgAbGroup& g) {
    if (!g.is_finite())
      throw UnsupportedError("oracle needs finite coefficients, got " + g.to_string());
    for (const auto& f : g.torsion()) {
      radix.push_back(f.get_si());
      size *= static_cast<u64>(f.get_si());
    }
  }

  std::vector<i64> decode(u64 idx) const {
    std::vector<i64> c(radix.size());
    for (std::size_t i = radix.size(); i-- > 0;) {
      c[i] = static_cast<i64>(idx % radix[i]);
      idx /= radix[i];
    }
    return c;
  }

  u64 encode(const std::vector<i64>& c) const {
    u64 idx = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) {
      i64 v = c[i] % radix[i];
      if (v < 0) v += radix[i];
      idx = idx * radix[i] + static_cast<u64>(v);
    }
    return idx;
  }

  u64 add(u64 a, u64 b) const {
    auto x = decode(a);
    const auto y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return encode(x);
  }

  u64 scale(i64 k, u64 a) const {
    auto x = decode(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (k % radix[i]) * x[i] % radix[i];
    return encode(x);
  }
};

// The endomorphism given by `m` as a lookup table over element indices.
std::vector<u64> table_of(const Codec& c, const IntMatrix& m) {
  std::vector<u64> t(c.size);
  for (u64 idx = 0; idx < c.size; ++idx) {
    const auto x = c.decode(idx);
    std::vector<i64> y(x.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        y[i] = (y[i] + (m(i, j).get_si() % c.radix[i]) * x[j]) % c.radix[i];
    t[idx] = c.encode(y);
  }
  return t;
}

std::vector<u64> invert(const std::vector<u64>& perm) {
  std::vector<u64> inv(perm.size());
  for (u64 i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

u64 checked_power(u64 base, std::size_t exp) {
  u64 r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMaxCochains / base + 1) return kMaxCochains + 1;
    r *= base;
  }
  return r;
}

struct DisjointSets {
  std::vector<u64> parent;
  explicit DisjointSets(u64 n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  u64 find(u64 x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(u64 a, u64 b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace

bool brute_h2_feasible(const LocalSystem& l) {
  if (!l.coeff().is_finite()) return false;
  const u64 a = Codec(l.coeff()).size;
  return checked_power(a, l.complex().num_gens()) <= kMaxCochains &&
         checked_power(a, l.complex().relators().size()) <= kMaxCochains;
}

BruteH2 brute_h2(const LocalSystem& l) {
  const Codec a(l.coeff());
  const std::size_t m = l.complex().num_gens();
  const auto& rels = l.complex().relators();
  const std::size_t n = rels.size();
  if (!brute_h2_feasible(l))
    throw UnsupportedError("instance too large for brute force: |A| = " +
                           std::to_string(a.size) + ", m = " + std::to_string(m) +
                           ", n = " + std::to_string(n));

  std::vector<std::vector<u64>> fwd, bwd;
  for (const auto& r : l.rho()) {
    fwd.push_back(table_of(a, r.matrix()));
    bwd.push_back(invert(fwd.back()));
  }

  // term[j][i][x] = (d r_j / d x_i) acting on x.
  std::vector<std::vector<std::vector<u64>>> term(n, std::vector<std::vector<u64>>(m));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const auto d = fox_derivative(rels[j], static_cast<int>(i + 1));
      auto& t = term[j][i];
      t.assign(a.size, 0);
      for (u64 x = 0; x < a.size; ++x) {
        u64 acc = 0;
        for (const auto& [w, coeff] : d.terms()) {
          u64 y = x;
          for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            y = *it > 0 ? fwd[*it - 1][y] : bwd[-*it - 1][y];
          acc = a.add(acc, a.scale(coeff.get_si(), y));
        }
        t[x] = acc;
      }
    }

  const u64 cochains1 = checked_power(a.size, m);
  const u64 cochains2 = checked_power(a.size, n);
  std::vector<char> in_image(cochains2, 0);
  std::vector<u64> tau(m, 0);
  for (u64 code = 0; code < cochains1; ++code) {
    u64 rest = code;
    for (std::size_t i = m; i-- > 0;) {
      tau[i] = rest % a.size;
      rest /= a.size;
    }
    u64 out = 0;
    for (std::size_t j = 0; j < n; ++j) {
      u64 v = 0;
      for (std::size_t i = 0; i < m; ++i) v = a.add(v, term[j][i][tau[i]]);
      out = out * a.size + v;
    }
    in_image[out] = 1;
  }

  // Componentwise arithmetic on A^n.
  auto split = [&](u64 code) {
    std::vector<u64> parts(n);
    for (std::size_t j = n; j-- > 0;) {
      parts[j] = code % a.size;
      code /= a.size;
    }
    return parts;
  };
  auto join = [&](const std::vector<u64>& parts) {
    u64 code = 0;
    for (u64 p : parts) code = code * a.size + p;
    return code;
  };
  auto add2 = [&](u64 x, u64 y) {
    auto px = split(x);
    const auto py = split(y);
    for (std::size_t j = 0; j < n; ++j) px[j] = a.add(px[j], py[j]);
    return join(px);
  };

  std::vector<u64> image;
  for (u64 c = 0; c < cochains2; ++c)
    if (in_image[c]) image.push_back(c);

  BruteH2 out;
  std::vector<char> assigned(cochains2, 0);
  for (u64 x = 0; x < cochains2; ++x) {
    if (assigned[x]) continue;
    for (u64 y : image) assigned[add2(x, y)] = 1;
    u64 order = 1;
    u64 multiple = x;
    while (!in_image[multiple]) {
      multiple = add2(multiple, x);
      ++order;
    }
    ++out.cardinality;
    out.element_orders.push_back(order);
  }
  std::sort(out.element_orders.begin(), out.element_orders.end());
  return out;
}

BruteOrbits brute_orbits(const FgAbGroup& h, const std::vector<AbHom>& actions) {
  const Codec c(h);
  if (c.size > kMaxOrbitElements)
    throw UnsupportedError("orbit enumeration limited to " +
                           std::to_string(kMaxOrbitElements) + " elements");
  DisjointSets sets(c.size);
  for (const auto& g : actions) {
    if (!(g.source() == h) || !(g.target() == h))
      throw MismatchError("action is not an endomorphism of " + h.to_string());
    const auto t = table_of(c, g.matrix());
    for (u64 x = 0; x < c.size; ++x) sets.unite(x, t[x]);
  }
  std::vector<u64> size(c.size, 0);
  for (u64 x = 0; x < c.size; ++x) ++size[sets.find(x)];
  BruteOrbits out;
  for (u64 s : size)
    if (s > 0) out.sizes.push_back(s);
  out.count = out.sizes.size();
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

std::vector<std::uint64_t> element_orders(const FgAbGroup& g) {
  std::vector<std::uint64_t> out;
  for_each_element(g, [&](const AbElement& x) {
    out.push_back(g.element_order(x).get_ui());
  });
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace pbclass::oracle
