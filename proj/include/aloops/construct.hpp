#ifndef ALOOPS_CONSTRUCT_HPP
#define ALOOPS_CONSTRUCT_HPP

// The explicit loop constructions: the index-2 middle nucleus doubling G(f),
// the Q_n family, central extensions by cocycles, trilinear-form cocycles,
// the order-n^3 family Terg(Z_n,a,b) and its ring generalization.

#include <cstdint>
#include <optional>
#include <vector>

#include "aloops/analysis.hpp"
#include "aloops/group_tables.hpp"
#include "aloops/iso.hpp"
#include "aloops/loop.hpp"
#include "aloops/perm.hpp"

namespace aloops {

// ---------------------------------------------------------------------------
// G(f): doubling of an abelian group G along a bijection f.
// Elements 0..m-1 are G, m..2m-1 the disjoint copy; x-bar = m + x.
//   x*y = xy,  x*(y-bar) = (xy)-bar,  (x-bar)*y = (xy)-bar,  (x-bar)*(y-bar) = f(xy).

struct GfSpec {
  LoopTable G;
  Permutation f;
  // Present when f(x) = g(x)*t with g an automorphism fixing t.
  std::optional<std::pair<Permutation, Elem>> decomposition;

  void validate() const {
    if (!is_abelian_group(G)) throw Error(Errc::NotAbelianGroup, "G(f) requires an abelian group");
    if (f.degree() != G.order() || !f.is_bijection()) throw Error(Errc::NotBijection, "f must be a bijection of G");
    if (decomposition) {
      const auto& [g, t] = *decomposition;
      if (!is_automorphism(G, g)) throw Error(Errc::NotBijection, "decomposition g is not an automorphism");
      for (Elem x = 0; x < G.order(); ++x)
        if (f.img[x] != G.mul(g.img[x], t)) throw Error(Errc::NotBijection, "decomposition does not match f");
    }
  }
};

inline LoopTable build_gf(const GfSpec& spec) {
  spec.validate();
  const int m = spec.G.order();
  const int n = 2 * m;
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      const Elem xy = spec.G.mul(x, y);
      t[static_cast<size_t>(x) * n + y] = xy;
      t[static_cast<size_t>(x) * n + (m + y)] = static_cast<Elem>(m + xy);
      t[static_cast<size_t>(m + x) * n + y] = static_cast<Elem>(m + xy);
      t[static_cast<size_t>(m + x) * n + (m + y)] = spec.f.img[xy];
    }
  return LoopTable::from_valid(n, std::move(t));
}

struct GfConditions {
  bool p1 = false;  // f(xy) = f(x) f(y) f(1)^{-1}
  bool p2 = false;  // f(x^2) = x^2 f(1)
  bool p3 = false;  // f^2(x)^2 f(x)^{-2} = f^2(1)
  std::optional<std::pair<Permutation, Elem>> decomposition;  // g, t with f(x) = g(x) t
  bool all() const { return p1 && p2 && p3; }
};

inline GfConditions gf_conditions(const GfSpec& spec) {
  spec.validate();
  const LoopTable& G = spec.G;
  const auto& f = spec.f.img;
  const int m = G.order();
  GfConditions c;
  const Elem f0 = f[0];
  const Elem f0inv = G.ldiv(f0, 0);

  c.p1 = true;
  for (Elem x = 0; x < m && c.p1; ++x)
    for (Elem y = x; y < m && c.p1; ++y) c.p1 = f[G.mul(x, y)] == G.mul(G.mul(f[x], f[y]), f0inv);
  c.p2 = true;
  for (Elem x = 0; x < m && c.p2; ++x) c.p2 = f[G.mul(x, x)] == G.mul(G.mul(x, x), f0);
  c.p3 = true;
  const Elem ff0 = f[f0];
  for (Elem x = 0; x < m && c.p3; ++x) {
    const Elem ffx = f[f[x]];
    const Elem fxinv = G.ldiv(f[x], 0);
    c.p3 = G.mul(G.mul(ffx, ffx), G.mul(fxinv, fxinv)) == ff0;
  }

  if (c.p1 && c.p2 && ff0 == G.mul(f0, f0)) {
    Permutation g;
    g.img.resize(m);
    for (Elem x = 0; x < m; ++x) g.img[x] = G.mul(f[x], f0inv);
    if (!is_automorphism(G, g)) throw Error(Errc::HypothesisViolated, "internal: g = f*f(1)^{-1} is not an automorphism");
    for (Elem x = 0; x < m; ++x)
      if (g.img[G.mul(x, x)] != G.mul(x, x)) throw Error(Errc::HypothesisViolated, "internal: g moves a square");
    if (g.img[f0] != f0) throw Error(Errc::HypothesisViolated, "internal: t is not a fixed point of g");
    c.decomposition = std::make_pair(std::move(g), f0);
  }
  return c;
}

// All (g,t) with 1 != g in Aut(G) fixing every square and t a fixed point of
// g; these are exactly the parameters producing nonassociative commutative
// A-loops with middle nucleus G.
inline std::vector<std::pair<Permutation, Elem>> gf_aloop_parameters(const LoopTable& G) {
  if (!is_abelian_group(G)) throw Error(Errc::NotAbelianGroup, "expected an abelian group");
  std::vector<std::pair<Permutation, Elem>> out;
  const PermutationGroup aut = automorphism_group(G);
  for (const Permutation& g : aut.elements()) {
    if (g.is_identity()) continue;
    bool fixes_squares = true;
    for (Elem x = 0; x < G.order() && fixes_squares; ++x) fixes_squares = g.img[G.mul(x, x)] == G.mul(x, x);
    if (!fixes_squares) continue;
    for (Elem t = 0; t < G.order(); ++t)
      if (g.img[t] == t) out.emplace_back(g, t);
  }
  return out;
}

struct GfClass {
  LoopTable loop;
  Permutation g;
  Elem t;
};

// Pairwise non-isomorphic nonassociative commutative A-loops G(g*t) over G,
// deduplicated with the general isomorphism search.
inline std::vector<GfClass> enumerate_gf_aloops(const LoopTable& G) {
  std::vector<GfClass> classes;
  std::vector<std::string> keys;
  for (const auto& [g, t] : gf_aloop_parameters(G)) {
    Permutation f;
    f.img.resize(G.order());
    for (Elem x = 0; x < G.order(); ++x) f.img[x] = G.mul(g.img[x], t);
    LoopTable L = build_gf({G, f, std::make_pair(g, t)});
    if (is_associative(L)) continue;  // cannot happen for g != 1, kept as a guard
    const std::string key = fingerprint(L).key();
    bool dup = false;
    for (size_t i = 0; i < classes.size() && !dup; ++i)
      dup = keys[i] == key && find_isomorphism(classes[i].loop, L).has_value();
    if (!dup) {
      classes.push_back({std::move(L), g, t});
      keys.push_back(key);
    }
  }
  std::vector<size_t> idx(classes.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return classes[a].loop.table() < classes[b].loop.table();
  });
  std::vector<GfClass> sorted;
  for (size_t i : idx) sorted.push_back(std::move(classes[i]));
  return sorted;
}

// Q_n = G(g) over GF(2)^n with g(e_i) = e_{i+1} (i < n), g(e_n) = e_1 + e_n.
// Vectors are encoded with e_1 as the most significant bit.
inline LoopTable build_qn(int n) {
  if (n < 2) throw Error(Errc::InvalidParameters, "Q_n requires n >= 2");
  const int m = 1 << n;
  const LoopTable G = elementary_abelian(2, n);
  Permutation g;
  g.img.resize(m);
  for (int x = 0; x < m; ++x) {
    int y = 0;
    for (int i = 1; i <= n; ++i) {
      if (!((x >> (n - i)) & 1)) continue;
      if (i < n)
        y ^= 1 << (n - (i + 1));      // e_i -> e_{i+1}
      else
        y ^= (1 << (n - 1)) | 1;      // e_n -> e_1 + e_n
    }
    g.img[x] = static_cast<Elem>(y);
  }
  return build_gf({G, g, std::make_pair(g, static_cast<Elem>(0))});
}

// ---------------------------------------------------------------------------
// Trilinear forms over GF(2)^n and the cocycle theta(x,y) = g(x, x+y, y).

struct TrilinearForm {
  int n = 0;
  std::vector<std::uint8_t> vals;  // n^3 basis values g(e_i,e_j,e_k), e_i encoded as bit n-i

  std::uint8_t basis(int i, int j, int k) const { return vals[(static_cast<size_t>(i) * n + j) * n + k]; }

  // Multilinear expansion over the set bits of the arguments.
  std::uint8_t eval(int x, int y, int z) const {
    std::uint8_t r = 0;
    for (int i = 0; i < n; ++i) {
      if (!((x >> (n - 1 - i)) & 1)) continue;
      for (int j = 0; j < n; ++j) {
        if (!((y >> (n - 1 - j)) & 1)) continue;
        for (int k = 0; k < n; ++k) {
          if (!((z >> (n - 1 - k)) & 1)) continue;
          r ^= basis(i, j, k);
        }
      }
    }
    return r;
  }

  bool is_13_symmetric() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (basis(i, j, k) != basis(k, j, i)) return false;
    return true;
  }
};

// The cyclic form g(e_i, e_i, e_{i+1}) = 1 (indices mod n) whose induced
// bilinear forms g(x,-,-) are non-symmetric for every x != 0.
inline TrilinearForm newforms_form(int n) {
  if (n < 3) throw Error(Errc::DimensionTooSmall, "dimension must be at least 3");
  TrilinearForm f;
  f.n = n;
  f.vals.assign(static_cast<size_t>(n) * n * n, 0);
  for (int i = 0; i < n; ++i) f.vals[(static_cast<size_t>(i) * n + i) * n + (i + 1) % n] = 1;
  return f;
}

// g'(x,y,z) = g(x,y,z) + g(z,y,x); the result is (1,3)-symmetric.
inline TrilinearForm symmetrize_13(const TrilinearForm& f) {
  TrilinearForm g;
  g.n = f.n;
  g.vals.resize(f.vals.size());
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j)
      for (int k = 0; k < f.n; ++k)
        g.vals[(static_cast<size_t>(i) * f.n + j) * f.n + k] = f.basis(i, j, k) ^ f.basis(k, j, i);
  return g;
}

// ---------------------------------------------------------------------------
// Loop cocycles as vectors over Z_m, normalized theta(x,1) = theta(1,x) = 0.

struct CocycleVec {
  int k_order = 0;
  int modulus = 0;
  std::vector<std::uint8_t> vals;  // (k_order-1)^2 entries over non-neutral pairs

  static CocycleVec zero(int k_order, int modulus) {
    CocycleVec v;
    v.k_order = k_order;
    v.modulus = modulus;
    v.vals.assign(static_cast<size_t>(k_order - 1) * (k_order - 1), 0);
    return v;
  }

  std::uint8_t get(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    return vals[static_cast<size_t>(x - 1) * (k_order - 1) + (y - 1)];
  }
  void set(Elem x, Elem y, std::uint8_t v) {
    if (x == 0 || y == 0) {
      if (v != 0) throw Error(Errc::InvalidParameters, "cocycle normalization requires theta(x,1)=theta(1,x)=0");
      return;
    }
    vals[static_cast<size_t>(x - 1) * (k_order - 1) + (y - 1)] = v;
  }

  bool is_symmetric() const {
    const int m = k_order - 1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (vals[static_cast<size_t>(i) * m + j] != vals[static_cast<size_t>(j) * m + i]) return false;
    return true;
  }
};

template <typename Fn>
CocycleVec cocycle_from_function(int k_order, int modulus, Fn&& theta) {
  CocycleVec v = CocycleVec::zero(k_order, modulus);
  for (Elem x = 1; x < k_order; ++x)
    for (Elem y = 1; y < k_order; ++y) {
      const int t = static_cast<int>(theta(x, y)) % modulus;
      v.set(x, y, static_cast<std::uint8_t>((t + modulus) % modulus));
    }
  return v;
}

struct ExtensionSpec {
  LoopTable K;
  int modulus = 2;
  CocycleVec theta;

  void validate() const {
    if (modulus < 2) throw Error(Errc::InvalidParameters, "central factor must have order at least 2");
    if (theta.k_order != K.order() || theta.modulus != modulus)
      throw Error(Errc::InvalidParameters, "cocycle shape does not match the extension");
    for (std::uint8_t v : theta.vals)
      if (v >= modulus) throw Error(Errc::InvalidParameters, "cocycle entry out of range");
  }
};

// K x Z_m with (x,a)(y,b) = (xy, a+b+theta(x,y)); pair (x,a) encoded as x*m+a.
inline LoopTable build_central_extension(const ExtensionSpec& spec) {
  spec.validate();
  const int k = spec.K.order(), m = spec.modulus, n = k * m;
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) {
      const Elem xy = spec.K.mul(x, y);
      const int th = spec.theta.get(x, y);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          t[static_cast<size_t>(x * m + a) * n + (y * m + b)] = static_cast<Elem>(xy * m + (a + b + th) % m);
    }
  return LoopTable::from_valid(n, std::move(t));
}

// theta(x,y) = g(x, x+y, y) for a trilinear form with g(x,x+y,y) = g(y,x+y,x);
// the extension GF(2)^n x GF(2) is then a commutative A-loop of exponent 2.
inline LoopTable build_trilinear_extension(const TrilinearForm& f) {
  const int m = 1 << f.n;
  if (!f.is_13_symmetric()) {  // (1,3)-symmetry already gives the hypothesis
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        if (f.eval(x, x ^ y, y) != f.eval(y, x ^ y, x))
          throw Error(Errc::HypothesisViolated, "form violates g(x,x+y,y) = g(y,x+y,x)");
  }
  const LoopTable K = elementary_abelian(2, f.n);
  const CocycleVec theta = cocycle_from_function(m, 2, [&](Elem x, Elem y) { return f.eval(x, x ^ y, y); });
  return build_central_extension({K, 2, theta});
}

inline bool is_group_cocycle(const LoopTable& K, const CocycleVec& c) {
  if (c.k_order != K.order()) throw Error(Errc::InvalidParameters, "cocycle shape does not match K");
  const int m = c.modulus;
  for (Elem x = 1; x < K.order(); ++x)
    for (Elem y = 1; y < K.order(); ++y)
      for (Elem z = 1; z < K.order(); ++z)
        if ((c.get(x, y) + c.get(K.mul(x, y), z)) % m != (c.get(y, z) + c.get(x, K.mul(y, z))) % m) return false;
  return true;
}

// Pointwise sum theta+mu for a symmetric group cocycle mu over a group K; the
// two extensions have identical left inner mappings, which is verified here.
inline CocycleVec add_group_cocycle(const LoopTable& K, const CocycleVec& theta, const CocycleVec& mu) {
  if (!is_associative(K)) throw Error(Errc::InvalidParameters, "adding a group cocycle requires K to be a group");
  if (theta.k_order != K.order() || mu.k_order != K.order() || theta.modulus != mu.modulus)
    throw Error(Errc::InvalidParameters, "cocycle shapes do not match");
  if (!mu.is_symmetric() || !is_group_cocycle(K, mu))
    throw Error(Errc::NotGroupCocycle, "mu must be a symmetric group cocycle");
  CocycleVec sum = theta;
  const int m = theta.modulus;
  for (size_t i = 0; i < sum.vals.size(); ++i) sum.vals[i] = static_cast<std::uint8_t>((theta.vals[i] + mu.vals[i]) % m);

  const LoopTable q1 = build_central_extension({K, m, theta});
  const LoopTable q2 = build_central_extension({K, m, sum});
  for (Elem x = 0; x < q1.order(); ++x)
    for (Elem y = 0; y < q1.order(); ++y)
      if (!(inner_generator(q1, InnerKind::Lxy, x, y) == inner_generator(q2, InnerKind::Lxy, x, y)))
        throw Error(Errc::HypothesisViolated, "internal: left inner mappings changed under a group cocycle");
  return sum;
}

// ---------------------------------------------------------------------------
// Overflow cocycles and Terg(Z_n, a, b).

inline int overflow_indicator(int x, int y, int n) {
  if (n < 1 || x < 0 || y < 0 || x >= n || y >= n) throw Error(Errc::OutOfRange, "overflow indicator arguments out of range");
  return x + y >= n ? 1 : 0;
}

struct TergParams {
  int n = 2;
  int a = 0;
  int b = 0;

  void validate() const {
    if (n < 2) throw Error(Errc::InvalidParameters, "Terg requires n >= 2");
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error(Errc::InvalidParameters, "Terg parameters must be residues mod n");
  }
};

struct Triple {
  int x1 = 0, x2 = 0, x3 = 0;
  bool operator==(const Triple& o) const { return x1 == o.x1 && x2 == o.x2 && x3 == o.x3; }
};

inline Elem terg_index(int n, const Triple& t) { return static_cast<Elem>((t.x1 * n + t.x2) * n + t.x3); }
inline Triple terg_triple(int n, Elem i) { return Triple{i / (n * n), (i / n) % n, i % n}; }

inline Triple terg_multiply(const TergParams& p, const Triple& x, const Triple& y) {
  const int n = p.n;
  const int first = x.x1 + y.x1 + (x.x2 + y.x2) % n * ((x.x3 * y.x3) % n) + p.a * overflow_indicator(x.x2, y.x2, n) +
                    p.b * overflow_indicator(x.x3, y.x3, n);
  return Triple{((first % n) + n) % n, (x.x2 + y.x2) % n, (x.x3 + y.x3) % n};
}

// (x1,x2,x3)(y1,y2,y3) = (x1+y1+(x2+y2)x3y3 + a(x2,y2)_n + b(x3,y3)_n, x2+y2, x3+y3)
inline LoopTable build_terg(const TergParams& p) {
  p.validate();
  const int n = p.n, N = n * n * n;
  std::vector<Elem> t(static_cast<size_t>(N) * N);
  for (Elem xi = 0; xi < N; ++xi) {
    const Triple x = terg_triple(n, xi);
    for (Elem yi = 0; yi < N; ++yi)
      t[static_cast<size_t>(xi) * N + yi] = terg_index(n, terg_multiply(p, x, terg_triple(n, yi)));
  }
  return LoopTable::from_valid(N, std::move(t));
}

// Closed form x^m = (m x1 + 2 binom(m+1,3) x2 x3^2 + a t2 + b t3, m x2, m x3)
// with t_i = sum_{k=1}^{m-1} (x_i, k x_i)_n.
inline Triple terg_power(const TergParams& p, const Triple& x, long long m) {
  p.validate();
  if (m < 0) throw Error(Errc::InvalidParameters, "exponent must be nonnegative");
  const int n = p.n;
  const unsigned __int128 mm = static_cast<unsigned __int128>(m);
  const unsigned __int128 twice_binom = m >= 2 ? (mm + 1) * mm * (mm - 1) / 3 : 0;
  long long t2 = 0, t3 = 0;
  for (long long k = 1; k < m; ++k) {
    t2 += overflow_indicator(x.x2, static_cast<int>(k % n * x.x2 % n), n);
    t3 += overflow_indicator(x.x3, static_cast<int>(k % n * x.x3 % n), n);
  }
  long long first = (m % n) * x.x1 + static_cast<long long>(twice_binom % n) * x.x2 % n * (x.x3 * x.x3 % n) +
                    p.a * (t2 % n) + p.b * (t3 % n);
  return Triple{static_cast<int>(((first % n) + n) % n), static_cast<int>(m % n * x.x2 % n),
                static_cast<int>(m % n * x.x3 % n)};
}

// Ter(R) for R a direct product of Z_m factors: the a=b=0 formula over R^3.
inline LoopTable build_ter_ring(const std::vector<int>& moduli) {
  long long prod = 1;
  for (int m : moduli) {
    if (m < 1) throw Error(Errc::InvalidParameters, "moduli must be positive");
    prod *= m;
  }
  if (prod < 2) throw Error(Errc::InvalidParameters, "the ring must have at least 2 elements");
  const int r = static_cast<int>(prod), N = r * r * r;
  const int k = static_cast<int>(moduli.size());
  std::vector<std::vector<int>> coords(r, std::vector<int>(k));
  for (int i = 0; i < r; ++i) {
    int rest = i;
    for (int j = k - 1; j >= 0; --j) {
      coords[i][j] = rest % moduli[j];
      rest /= moduli[j];
    }
  }
  auto enc = [&](const std::vector<int>& c) {
    int i = 0;
    for (int j = 0; j < k; ++j) i = i * moduli[j] + c[j];
    return i;
  };
  std::vector<int> radd(static_cast<size_t>(r) * r), rmul(static_cast<size_t>(r) * r);
  std::vector<int> tmp(k);
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < r; ++v) {
      for (int j = 0; j < k; ++j) tmp[j] = (coords[u][j] + coords[v][j]) % moduli[j];
      radd[static_cast<size_t>(u) * r + v] = enc(tmp);
      for (int j = 0; j < k; ++j) tmp[j] = coords[u][j] * coords[v][j] % moduli[j];
      rmul[static_cast<size_t>(u) * r + v] = enc(tmp);
    }

  std::vector<Elem> t(static_cast<size_t>(N) * N);
  auto idx = [&](int a, int b, int c) { return (a * r + b) * r + c; };
  for (int x1 = 0; x1 < r; ++x1)
    for (int x2 = 0; x2 < r; ++x2)
      for (int x3 = 0; x3 < r; ++x3)
        for (int y1 = 0; y1 < r; ++y1)
          for (int y2 = 0; y2 < r; ++y2)
            for (int y3 = 0; y3 < r; ++y3) {
              const int s = radd[static_cast<size_t>(x2) * r + y2];
              const int f = radd[static_cast<size_t>(radd[static_cast<size_t>(x1) * r + y1]) * r +
                                 rmul[static_cast<size_t>(s) * r + rmul[static_cast<size_t>(x3) * r + y3]]];
              t[static_cast<size_t>(idx(x1, x2, x3)) * N +
                idx(y1, y2, y3)] = static_cast<Elem>(idx(f, s, radd[static_cast<size_t>(x3) * r + y3]));
            }
  return LoopTable::from_valid(N, std::move(t));
}

// ---------------------------------------------------------------------------
// Realization of middle-nucleus parameters (|Q|, |N_mu|) = (2^k, 2^l).

inline std::optional<LoopTable> achieve_parameters(int k, int l, const std::vector<LoopTable>* order16_catalog = nullptr) {
  if (l <= 0 || k < l) throw Error(Errc::InvalidParameters, "need k >= l > 0");
  const int d = k - l;
  if (!(d >= 3 || (d >= 1 && l >= 2))) return std::nullopt;

  LoopTable result = [&] {
    if (d >= 3) {
      LoopTable q = build_trilinear_extension(symmetrize_13(newforms_form(d)));
      if (k - (d + 1) > 0) q = direct_product(q, elementary_abelian(2, k - d - 1));
      return q;
    }
    if (d == 1) return build_qn(k - 1);
    // d == 2: an order-16 loop with middle nucleus of order 4 from the catalog
    if (!order16_catalog) throw Error(Errc::CatalogRequired, "the (d=2) case needs the order-16 catalog; none was supplied");
    for (const LoopTable& L : *order16_catalog) {
      if (L.order() != 16 || is_associative(L)) continue;
      if (nucleus(L, NucleusKind::middle).size() == 4)
        return k > 4 ? direct_product(L, elementary_abelian(2, k - 4)) : L;
    }
    throw Error(Errc::CatalogRequired, "no order-16 loop with middle nucleus of order 4 in the supplied catalog");
  }();

  if (result.order() != (1 << k) || is_associative(result) ||
      nucleus(result, NucleusKind::middle).size() != (1 << l))
    throw Error(Errc::HypothesisViolated, "internal: realized loop has wrong parameters");
  return result;
}

}  // namespace aloops

#endif  // ALOOPS_CONSTRUCT_HPP
