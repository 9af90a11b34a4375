#ifndef ALOOPS_ANALYSIS_HPP
#define ALOOPS_ANALYSIS_HPP

// Inner mappings, automorphism tests, nuclei, center, subloops, normality,
// quotients, and the Bruck associate of an odd-order loop.

#include <algorithm>
#include <vector>

#include "aloops/loop.hpp"
#include "aloops/perm.hpp"

namespace aloops {

inline Permutation left_translation(const LoopTable& L, Elem x) {
  Permutation p;
  p.img.resize(L.order());
  for (Elem y = 0; y < L.order(); ++y) p.img[y] = L.mul(x, y);
  return p;
}

inline Permutation right_translation(const LoopTable& L, Elem x) {
  Permutation p;
  p.img.resize(L.order());
  for (Elem y = 0; y < L.order(); ++y) p.img[y] = L.mul(y, x);
  return p;
}

enum class InnerKind { Lxy, Rxy, Tx };

// L_{x,y} = L_{yx}^{-1} L_y L_x,  R_{x,y} = R_{xy}^{-1} R_y R_x,  T_x = L_x^{-1} R_x.
inline Permutation inner_generator(const LoopTable& L, InnerKind kind, Elem x, Elem y = 0) {
  L.check_elem(x);
  if (kind != InnerKind::Tx) L.check_elem(y);
  Permutation p;
  p.img.resize(L.order());
  switch (kind) {
    case InnerKind::Lxy: {
      const Elem yx = L.mul(y, x);
      for (Elem z = 0; z < L.order(); ++z) p.img[z] = L.ldiv(yx, L.mul(y, L.mul(x, z)));
      break;
    }
    case InnerKind::Rxy: {
      const Elem xy = L.mul(x, y);
      for (Elem z = 0; z < L.order(); ++z) p.img[z] = L.rdiv(L.mul(L.mul(z, x), y), xy);
      break;
    }
    case InnerKind::Tx:
      for (Elem z = 0; z < L.order(); ++z) p.img[z] = L.ldiv(x, L.mul(z, x));
      break;
  }
  return p;
}

inline bool is_automorphism(const LoopTable& L, const Permutation& p) {
  if (p.degree() != L.order()) throw Error(Errc::DegreeMismatch, "permutation degree does not match loop order");
  if (!p.is_bijection()) return false;
  for (Elem x = 0; x < L.order(); ++x)
    for (Elem y = 0; y < L.order(); ++y)
      if (p.img[L.mul(x, y)] != L.mul(p.img[x], p.img[y])) return false;
  return true;
}

namespace detail {

// Are all L_{x,y} automorphisms? Only called on commutative loops, where this
// is exactly the identity (A): T_x = 1 and R_{x,y} = L_{x,y} there.
inline bool all_left_inner_automorphisms(const LoopTable& L) {
  const int n = L.order();
  std::vector<Elem> w(n);
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      const Elem yx = L.mul(y, x);
      for (Elem z = 0; z < n; ++z) w[z] = L.ldiv(yx, L.mul(y, L.mul(x, z)));
      for (Elem u = 1; u < n; ++u)
        for (Elem v = u; v < n; ++v)
          if (w[L.mul(u, v)] != L.mul(w[u], w[v])) return false;
    }
  return true;
}

}  // namespace detail

// The identity  xy \ x(yu) * xy \ x(yv) = xy \ x(y*uv)  for all x,y,u,v.
inline bool check_A_identity(const LoopTable& L) {
  if (!is_commutative(L)) throw Error(Errc::NotCommutative, "the (A) identity scan expects a commutative loop");
  return detail::all_left_inner_automorphisms(L);
}

inline bool is_A_loop(const LoopTable& L) {
  if (is_commutative(L)) return detail::all_left_inner_automorphisms(L);
  const int n = L.order();
  for (Elem x = 1; x < n; ++x)
    if (!is_automorphism(L, inner_generator(L, InnerKind::Tx, x))) return false;
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      if (!is_automorphism(L, inner_generator(L, InnerKind::Lxy, x, y))) return false;
      if (!is_automorphism(L, inner_generator(L, InnerKind::Rxy, x, y))) return false;
    }
  return true;
}

struct SubloopHandle {
  std::vector<Elem> members;  // sorted, contains 0

  int size() const noexcept { return static_cast<int>(members.size()); }
  bool contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }
};

inline bool is_subloop(const LoopTable& L, const SubloopHandle& S) {
  if (S.members.empty() || S.members[0] != 0) return false;
  std::vector<char> in(L.order(), 0);
  for (Elem m : S.members) {
    if (m >= L.order()) return false;
    in[m] = 1;
  }
  for (Elem a : S.members)
    for (Elem b : S.members)
      if (!in[L.mul(a, b)]) return false;
  return true;
}

inline SubloopHandle subloop_generated(const LoopTable& L, const std::vector<Elem>& seed) {
  return SubloopHandle{mult_closure(L, seed)};
}

enum class NucleusKind { left, middle, right, center };

inline SubloopHandle nucleus(const LoopTable& L, NucleusKind kind) {
  const int n = L.order();
  std::vector<Elem> members;
  for (Elem a = 0; a < n; ++a) {
    bool ok = true;
    switch (kind) {
      case NucleusKind::left:
        for (Elem x = 1; x < n && ok; ++x)
          for (Elem y = 1; y < n && ok; ++y) ok = L.mul(a, L.mul(x, y)) == L.mul(L.mul(a, x), y);
        break;
      case NucleusKind::middle:
        for (Elem x = 1; x < n && ok; ++x)
          for (Elem y = 1; y < n && ok; ++y) ok = L.mul(x, L.mul(a, y)) == L.mul(L.mul(x, a), y);
        break;
      case NucleusKind::right:
        for (Elem x = 1; x < n && ok; ++x)
          for (Elem y = 1; y < n && ok; ++y) ok = L.mul(x, L.mul(y, a)) == L.mul(L.mul(x, y), a);
        break;
      case NucleusKind::center:
        for (Elem x = 1; x < n && ok; ++x) ok = L.mul(a, x) == L.mul(x, a);
        for (Elem x = 1; x < n && ok; ++x)
          for (Elem y = 1; y < n && ok; ++y)
            ok = L.mul(a, L.mul(x, y)) == L.mul(L.mul(a, x), y) &&
                 L.mul(x, L.mul(a, y)) == L.mul(L.mul(x, a), y) &&
                 L.mul(x, L.mul(y, a)) == L.mul(L.mul(x, y), a);
        break;
    }
    if (ok) members.push_back(a);
  }
  return SubloopHandle{std::move(members)};
}

inline SubloopHandle center(const LoopTable& L) { return nucleus(L, NucleusKind::center); }

// Distinct inner-mapping generators (all three kinds).
inline std::vector<Permutation> inner_generators(const LoopTable& L) {
  std::vector<Permutation> gens;
  std::unordered_set<std::vector<Elem>, detail::PermHash> seen;
  auto push = [&](Permutation p) {
    if (seen.insert(p.img).second) gens.push_back(std::move(p));
  };
  const bool comm = is_commutative(L);
  for (Elem x = 1; x < L.order(); ++x) {
    if (!comm) push(inner_generator(L, InnerKind::Tx, x));
    for (Elem y = 1; y < L.order(); ++y) {
      push(inner_generator(L, InnerKind::Lxy, x, y));
      if (!comm) push(inner_generator(L, InnerKind::Rxy, x, y));
    }
  }
  if (gens.empty()) gens.push_back(Permutation::identity(L.order()));
  return gens;
}

inline PermutationGroup inner_mapping_group(const LoopTable& L) {
  return PermutationGroup::generate(inner_generators(L));
}

inline PermutationGroup multiplication_group(const LoopTable& L) {
  std::vector<Permutation> gens;
  for (Elem x = 0; x < L.order(); ++x) {
    gens.push_back(left_translation(L, x));
    gens.push_back(right_translation(L, x));
  }
  return PermutationGroup::generate(gens);
}

inline bool is_normal(const LoopTable& L, const SubloopHandle& S) {
  if (!is_subloop(L, S)) throw Error(Errc::NotSubloop, "the given set is not a subloop");
  std::vector<char> in(L.order(), 0);
  for (Elem m : S.members) in[m] = 1;
  for (Elem x = 1; x < L.order(); ++x) {
    const Permutation t = inner_generator(L, InnerKind::Tx, x);
    for (Elem m : S.members)
      if (!in[t.img[m]]) return false;
  }
  for (Elem x = 1; x < L.order(); ++x)
    for (Elem y = 1; y < L.order(); ++y) {
      const Permutation l = inner_generator(L, InnerKind::Lxy, x, y);
      for (Elem m : S.members)
        if (!in[l.img[m]]) return false;
      const Permutation r = inner_generator(L, InnerKind::Rxy, x, y);
      for (Elem m : S.members)
        if (!in[r.img[m]]) return false;
    }
  return true;
}

// Coset loop of a normal subloop; cosets are relabeled by smallest member
// index, which puts the coset of 0 first.
inline LoopTable quotient(const LoopTable& L, const SubloopHandle& S) {
  if (!is_normal(L, S)) throw Error(Errc::NotNormal, "quotient requires a normal subloop");
  const int n = L.order();
  std::vector<int> coset_of(n, -1);
  std::vector<Elem> coset_min;
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    const int c = static_cast<int>(coset_min.size());
    Elem mn = x;
    for (Elem s : S.members) {
      const Elem xs = L.mul(x, s);
      coset_of[xs] = c;
      mn = std::min(mn, xs);
    }
    coset_min.push_back(mn);
  }
  const int q = static_cast<int>(coset_min.size());
  std::vector<int> rank(q);
  std::vector<int> by_min(q);
  for (int i = 0; i < q; ++i) by_min[i] = i;
  std::sort(by_min.begin(), by_min.end(), [&](int a, int b) { return coset_min[a] < coset_min[b]; });
  for (int r = 0; r < q; ++r) rank[by_min[r]] = r;

  std::vector<Elem> t(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const Elem prod = L.mul(coset_min[by_min[a]], coset_min[by_min[b]]);
      t[static_cast<size_t>(a) * q + b] = static_cast<Elem>(rank[coset_of[prod]]);
    }
  return LoopTable::from_valid(q, std::move(t));
}

// x o y = (x^{-1} \ xy^2)^{1/2} on an odd-order commutative A-loop; the result
// satisfies the left Bol identity (verified on every call).
inline LoopTable bruck_associate(const LoopTable& L) {
  if (!is_commutative(L)) throw Error(Errc::NotCommutative, "Bruck associate expects a commutative loop");
  if (!is_A_loop(L)) throw Error(Errc::NotALoop, "Bruck associate expects an A-loop");
  const int n = L.order();
  std::vector<int> sqrt_of(n, -1);
  for (Elem x = 0; x < n; ++x) {
    const Elem s = L.mul(x, x);
    if (sqrt_of[s] >= 0) throw Error(Errc::SquaringNotBijective, "squaring is not a bijection");
    sqrt_of[s] = x;
  }
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xinv = L.ldiv(x, 0);
    for (Elem y = 0; y < n; ++y) {
      const Elem z = L.ldiv(xinv, L.mul(x, L.mul(y, y)));
      t[static_cast<size_t>(x) * n + y] = static_cast<Elem>(sqrt_of[z]);
    }
  }
  LoopTable B = LoopTable::from_valid(n, std::move(t));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xyx = B.mul(x, B.mul(y, x));
      for (Elem z = 0; z < n; ++z)
        if (B.mul(x, B.mul(y, B.mul(x, z))) != B.mul(xyx, z))
          throw Error(Errc::HypothesisViolated, "Bruck associate failed the left Bol identity");
    }
  return B;
}

}  // namespace aloops

#endif  // ALOOPS_ANALYSIS_HPP
