#ifndef ALOOPS_FAMILY_ISO_HPP
#define ALOOPS_FAMILY_ISO_HPP

// Specialized isomorphism/isotopism criteria for the G(f) and Terg families.

#include <optional>
#include <vector>

#include "aloops/construct.hpp"
#include "aloops/iso.hpp"

namespace aloops {

// Pr-IsoGf criterion: G(f1) ~ G(f2) iff some psi in Aut(G) satisfies
// f2^{-1} psi f1(x) = f2^{-1} psi f1(1) * psi(x) with f2^{-1} psi f1(1) a
// square in G. Only meaningful when neither loop is a group.
inline bool gf_isomorphic(const LoopTable& G, const Permutation& f1, const Permutation& f2) {
  GfSpec s1{G, f1, std::nullopt}, s2{G, f2, std::nullopt};
  const LoopTable L1 = build_gf(s1), L2 = build_gf(s2);
  if (is_associative(L1) || is_associative(L2))
    throw Error(Errc::IsGroup, "the G(f) isomorphism criterion applies only to nonassociative loops");

  const int m = G.order();
  std::vector<char> square(m, 0);
  for (Elem x = 0; x < m; ++x) square[G.mul(x, x)] = 1;
  const Permutation f2inv = f2.inverse();
  for (const Permutation& psi : automorphism_group(G).elements()) {
    const Elem h0 = f2inv.img[psi.img[f1.img[0]]];
    if (!square[h0]) continue;
    bool ok = true;
    for (Elem x = 0; x < m && ok; ++x) ok = f2inv.img[psi.img[f1.img[x]]] == G.mul(h0, psi.img[x]);
    if (ok) return true;
  }
  return false;
}

// Lemma-style isotopism between G(f1) and G(f2) for f_i = g * t_i, from a
// witness z with g(z) = z^{-1} t1^{-1} t2:
//   alpha(x) = x, alpha(x-bar) = (x z^{-1})-bar,
//   beta(x) = gamma(x) = zx, beta(x-bar) = gamma(x-bar) = x-bar.
inline IsotopismTriple gf_isotopy_witness(const LoopTable& G, const Permutation& g, Elem t1, Elem t2) {
  if (!is_automorphism(G, g)) throw Error(Errc::InvalidParameters, "g must be an automorphism of G");
  if (g.img[t1] != t1 || g.img[t2] != t2) throw Error(Errc::InvalidParameters, "t1, t2 must be fixed points of g");
  const int m = G.order();
  int z = -1;
  const Elem t1inv = G.ldiv(t1, 0);
  for (Elem c = 0; c < m; ++c)
    if (g.img[c] == G.mul(G.mul(G.ldiv(c, 0), t1inv), t2)) {
      z = c;
      break;
    }
  if (z < 0) throw Error(Errc::NoWitness, "no z with g(z) = z^{-1} t1^{-1} t2");

  auto with_t = [&](Elem t) {
    Permutation f;
    f.img.resize(m);
    for (Elem x = 0; x < m; ++x) f.img[x] = G.mul(g.img[x], t);
    return f;
  };
  const LoopTable L1 = build_gf({G, with_t(t1), std::make_pair(g, t1)});
  const LoopTable L2 = build_gf({G, with_t(t2), std::make_pair(g, t2)});

  IsotopismTriple tr;
  tr.alpha.img.resize(2 * m);
  tr.beta.img.resize(2 * m);
  tr.gamma.img.resize(2 * m);
  const Elem zinv = G.ldiv(static_cast<Elem>(z), 0);
  for (Elem x = 0; x < m; ++x) {
    tr.alpha.img[x] = x;
    tr.alpha.img[m + x] = static_cast<Elem>(m + G.mul(x, zinv));
    tr.beta.img[x] = G.mul(static_cast<Elem>(z), x);
    tr.beta.img[m + x] = static_cast<Elem>(m + x);
    tr.gamma.img[x] = G.mul(static_cast<Elem>(z), x);
    tr.gamma.img[m + x] = static_cast<Elem>(m + x);
  }
  if (!certify_isotopism(L1, L2, tr)) throw Error(Errc::HypothesisViolated, "internal: isotopism witness failed certification");
  return tr;
}

namespace detail {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

// The middle-nucleus-fixing bijection f(x1,x2,x3) = (x1,x2,0) * (A,B,C)^{x3}
// from Terg(p,a,b) to Terg(p,a',c); certified against the tables, or rejected
// when it is not a homomorphism.
inline std::optional<Permutation> terg_iso_map(const TergParams& p1, const TergParams& p2, int A, int B, int C) {
  p1.validate();
  p2.validate();
  if (p1.n != p2.n || !detail::is_prime(p1.n)) throw Error(Errc::InvalidParameters, "both loops must share a prime modulus");
  const int n = p1.n;
  if (((C % n) + n) % n == 0) throw Error(Errc::CNotInvertible, "C must be nonzero mod p");
  const Triple abc{((A % n) + n) % n, ((B % n) + n) % n, ((C % n) + n) % n};

  const LoopTable Q1 = build_terg(p1), Q2 = build_terg(p2);
  Permutation f;
  f.img.resize(Q1.order());
  for (Elem i = 0; i < Q1.order(); ++i) {
    const Triple x = terg_triple(n, i);
    const Triple pw = terg_power(p2, abc, x.x3);
    f.img[i] = Q2.mul(terg_index(n, Triple{x.x1, x.x2, 0}), terg_index(n, pw));
  }
  if (!f.is_bijection()) throw Error(Errc::HypothesisViolated, "internal: the induced map is not a bijection");
  for (Elem x = 0; x < Q1.order(); ++x)
    for (Elem y = x; y < Q1.order(); ++y)
      if (f.img[Q1.mul(x, y)] != Q2.mul(f.img[x], f.img[y])) return std::nullopt;
  return f;
}

inline std::vector<int> quadratic_residues(int p) {
  std::vector<char> is_qr(p, 0);
  for (int x = 1; x < p; ++x) is_qr[x * x % p] = 1;
  std::vector<int> out;
  for (int x = 1; x < p; ++x)
    if (is_qr[x]) out.push_back(x);
  return out;
}

struct TergIso {
  TergParams from, to;
  Permutation map;
};

// The two scaling families:
//   (x1,x2,x3) -> ((c/b)x1, (c/b)x2, x3)   : Terg(p,0,b) -> Terg(p,0,c), b,c invertible
//   (x1,x2,x3) -> (u^2 x1, x2, u x3)       : Terg(p,a1,0) -> Terg(p,a2,0), a2 = a1 u^2
// All maps are certified against the built tables.
inline std::vector<TergIso> terg_scaling_isos(int p) {
  if (!detail::is_prime(p)) throw Error(Errc::UnsupportedPrime, "p must be prime");
  std::vector<TergIso> out;
  auto inv_mod = [&](int a) {
    for (int x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    throw Error(Errc::CNotInvertible, "not invertible");
  };
  auto certify = [&](const TergParams& from, const TergParams& to, const Permutation& f) {
    const LoopTable Q1 = build_terg(from), Q2 = build_terg(to);
    for (Elem x = 0; x < Q1.order(); ++x)
      for (Elem y = x; y < Q1.order(); ++y)
        if (f.img[Q1.mul(x, y)] != Q2.mul(f.img[x], f.img[y]))
          throw Error(Errc::HypothesisViolated, "internal: scaling map failed certification");
  };

  for (int b = 1; b < p; ++b)
    for (int c = 1; c < p; ++c) {
      if (b == c) continue;
      const int s = c * inv_mod(b) % p;
      Permutation f;
      f.img.resize(p * p * p);
      for (Elem i = 0; i < f.degree(); ++i) {
        const Triple x = terg_triple(p, i);
        f.img[i] = terg_index(p, Triple{s * x.x1 % p, s * x.x2 % p, x.x3});
      }
      TergIso iso{{p, 0, b}, {p, 0, c}, std::move(f)};
      certify(iso.from, iso.to, iso.map);
      out.push_back(std::move(iso));
    }

  if (p > 2) {
    std::vector<char> qr(p, 0);
    for (int q : quadratic_residues(p)) qr[q] = 1;
    for (int a1 = 1; a1 < p; ++a1)
      for (int a2 = 1; a2 < p; ++a2) {
        if (a1 == a2 || qr[a1] != qr[a2]) continue;
        int u = 0;
        for (int c = 1; c < p; ++c)
          if (a1 * c % p * c % p == a2) {
            u = c;
            break;
          }
        Permutation f;
        f.img.resize(p * p * p);
        for (Elem i = 0; i < f.degree(); ++i) {
          const Triple x = terg_triple(p, i);
          f.img[i] = terg_index(p, Triple{u * u % p * x.x1 % p, x.x2, u * x.x3 % p});
        }
        TergIso iso{{p, a1, 0}, {p, a2, 0}, std::move(f)};
        certify(iso.from, iso.to, iso.map);
        out.push_back(std::move(iso));
      }
  }
  return out;
}

}  // namespace aloops

#endif  // ALOOPS_FAMILY_ISO_HPP
