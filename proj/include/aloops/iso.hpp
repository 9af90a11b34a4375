#ifndef ALOOPS_ISO_HPP
#define ALOOPS_ISO_HPP

// Isomorphism and isotopism testing with invariant-based pruning, plus the
// invariant fingerprint used for catalog bucketing.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "aloops/analysis.hpp"
#include "aloops/loop.hpp"
#include "aloops/perm.hpp"

namespace aloops {

// Per-element isomorphism invariants used to restrict candidate images.
struct ElemInv {
  std::uint32_t monogenic;    // |<x>|; equals the element order when the loop is power-associative
  std::uint8_t nucleus_bits;  // left | middle<<1 | right<<2 | center<<3
  std::uint16_t sqrt_count;   // |{y : y*y = x}|
  std::uint32_t assoc_count;  // |{(y,z) : x(yz) = (xy)z}|

  auto tie() const { return std::tie(monogenic, nucleus_bits, sqrt_count, assoc_count); }
  bool operator==(const ElemInv& o) const { return tie() == o.tie(); }
  bool operator<(const ElemInv& o) const { return tie() < o.tie(); }
};

inline std::vector<ElemInv> element_invariants(const LoopTable& L) {
  const int n = L.order();
  std::vector<ElemInv> inv(n);
  for (Elem x = 0; x < n; ++x) inv[x].monogenic = static_cast<std::uint32_t>(mult_closure(L, {x}).size());
  const SubloopHandle nl = nucleus(L, NucleusKind::left);
  const SubloopHandle nm = nucleus(L, NucleusKind::middle);
  const SubloopHandle nr = nucleus(L, NucleusKind::right);
  const SubloopHandle z = nucleus(L, NucleusKind::center);
  for (Elem m : nl.members) inv[m].nucleus_bits |= 1;
  for (Elem m : nm.members) inv[m].nucleus_bits |= 2;
  for (Elem m : nr.members) inv[m].nucleus_bits |= 4;
  for (Elem m : z.members) inv[m].nucleus_bits |= 8;
  for (Elem y = 0; y < n; ++y) ++inv[L.mul(y, y)].sqrt_count;
  for (Elem x = 0; x < n; ++x) {
    std::uint32_t c = 0;
    for (Elem y = 0; y < n; ++y)
      for (Elem z2 = 0; z2 < n; ++z2)
        if (L.mul(x, L.mul(y, z2)) == L.mul(L.mul(x, y), z2)) ++c;
    inv[x].assoc_count = c;
  }
  return inv;
}

namespace detail {

// Backtracking over images of a greedy generating sequence; partial maps are
// extended by closing under products, which also verifies the homomorphism
// property on every pair it maps.
class IsoSearch {
 public:
  IsoSearch(const LoopTable& a, const LoopTable& b) : A(a), B(b), n(a.order()) {
    invA = element_invariants(A);
    invB = &a == &b ? invA : element_invariants(B);
    for (const auto& i : invA) ++classA[i];
    for (const auto& i : invB) ++classB[i];
    img.assign(n, -1);
    used.assign(n, 0);
    choose_generators();
  }

  bool compatible() const { return A.order() == B.order() && classA == classB; }

  // First isomorphism in the deterministic search order, if any.
  std::optional<Permutation> find_one() {
    if (!compatible()) return std::nullopt;
    found.clear();
    stop_after_first = true;
    seed_and_run();
    if (found.empty()) return std::nullopt;
    return found.front();
  }

  // All isomorphisms A -> B (for A = B: the automorphism group).
  std::vector<Permutation> find_all() {
    found.clear();
    stop_after_first = false;
    if (compatible()) seed_and_run();
    return found;
  }

 private:
  const LoopTable& A;
  const LoopTable& B;
  int n;
  std::vector<ElemInv> invA, invB;
  std::map<ElemInv, int> classA, classB;
  std::vector<Elem> gens;
  std::vector<int> img;
  std::vector<char> used;
  std::vector<Elem> mapped;
  std::vector<Permutation> found;
  bool stop_after_first = false;

  void choose_generators() {
    std::vector<char> in_closure(n, 0);
    std::vector<Elem> closure{0};
    in_closure[0] = 1;
    while (static_cast<int>(closure.size()) < n) {
      Elem best = 0;
      int best_rarity = -1;
      for (Elem a = 1; a < n; ++a) {
        if (in_closure[a]) continue;
        const int r = classA[invA[a]];
        if (best_rarity < 0 || r < best_rarity) {
          best_rarity = r;
          best = a;
        }
      }
      gens.push_back(best);
      closure = mult_closure(A, gens);
      std::fill(in_closure.begin(), in_closure.end(), 0);
      for (Elem c : closure) in_closure[c] = 1;
    }
  }

  void seed_and_run() {
    mapped.clear();
    assign(0, 0);
    recurse(0);
    unassign_to(0);
  }

  void assign(Elem a, Elem b) {
    img[a] = b;
    used[b] = 1;
    mapped.push_back(a);
  }

  void unassign_to(size_t size) {
    while (mapped.size() > size) {
      const Elem a = mapped.back();
      mapped.pop_back();
      used[img[a]] = 0;
      img[a] = -1;
    }
  }

  // Close the partial map under products starting from queue position qi.
  bool propagate(size_t qi) {
    while (qi < mapped.size()) {
      const Elem m = mapped[qi++];
      for (size_t j = 0; j < mapped.size(); ++j) {
        const Elem p = mapped[j];
        if (!close_pair(p, m)) return false;
        if (!close_pair(m, p)) return false;
      }
    }
    return true;
  }

  bool close_pair(Elem x, Elem y) {
    const Elem c = A.mul(x, y);
    const Elem d = B.mul(static_cast<Elem>(img[x]), static_cast<Elem>(img[y]));
    if (img[c] >= 0) return img[c] == d;
    if (used[d] || !(invA[c] == invB[d])) return false;
    assign(c, d);
    return true;
  }

  bool recurse(size_t k) {
    while (k < gens.size() && img[gens[k]] >= 0) ++k;
    if (mapped.size() == static_cast<size_t>(n)) {
      Permutation p;
      p.img.resize(n);
      for (int i = 0; i < n; ++i) p.img[i] = static_cast<Elem>(img[i]);
      found.push_back(std::move(p));
      return stop_after_first;
    }
    if (k >= gens.size()) return false;  // generators exhausted but map incomplete
    const Elem a = gens[k];
    for (Elem b = 0; b < n; ++b) {
      if (used[b] || !(invA[a] == invB[b])) continue;
      const size_t mark = mapped.size();
      const size_t qi = mapped.size();
      assign(a, b);
      if (propagate(qi) && recurse(k + 1)) return true;
      unassign_to(mark);
    }
    return false;
  }
};

}  // namespace detail

inline std::optional<Permutation> find_isomorphism(const LoopTable& L1, const LoopTable& L2) {
  if (L1.order() != L2.order()) return std::nullopt;
  detail::IsoSearch s(L1, L2);
  return s.find_one();
}

inline PermutationGroup automorphism_group(const LoopTable& L) {
  detail::IsoSearch s(L, L);
  return PermutationGroup::generate(s.find_all());
}

// ---------------------------------------------------------------------------
// Invariant fingerprint

struct Fingerprint {
  int order = 0;
  bool power_associative = false;
  std::vector<std::pair<int, int>> element_orders;  // (order, count); monogenic sizes if not PA
  int nucleus_left = 0, nucleus_middle = 0, nucleus_right = 0, center_size = 0;
  std::uint64_t inn_order = 0;
  std::uint64_t mlt_order = 0;  // |Q| * |Inn(Q)|: the neutral-element stabilizer in Mlt is Inn
  int squares_count = 0;
  std::optional<std::uint64_t> aut_order;

  std::string key() const {
    std::ostringstream os;
    os << order << '|' << power_associative;
    for (auto [o, c] : element_orders) os << '|' << o << ':' << c;
    os << '|' << nucleus_left << ',' << nucleus_middle << ',' << nucleus_right << ',' << center_size;
    os << '|' << inn_order << '|' << mlt_order << '|' << squares_count;
    return os.str();
  }
  bool operator==(const Fingerprint& o) const { return key() == o.key(); }
};

inline Fingerprint fingerprint(const LoopTable& L, bool with_aut = false) {
  Fingerprint f;
  f.order = L.order();
  f.power_associative = is_power_associative(L);
  std::map<int, int> hist;
  if (f.power_associative) {
    for (int o : element_orders(L)) ++hist[o];
  } else {
    for (Elem x = 0; x < L.order(); ++x) ++hist[static_cast<int>(mult_closure(L, {x}).size())];
  }
  f.element_orders.assign(hist.begin(), hist.end());
  f.nucleus_left = nucleus(L, NucleusKind::left).size();
  f.nucleus_middle = nucleus(L, NucleusKind::middle).size();
  f.nucleus_right = nucleus(L, NucleusKind::right).size();
  f.center_size = nucleus(L, NucleusKind::center).size();
  f.inn_order = inner_mapping_group(L).order();
  f.mlt_order = static_cast<std::uint64_t>(L.order()) * f.inn_order;
  std::vector<char> sq(L.order(), 0);
  for (Elem x = 0; x < L.order(); ++x) sq[L.mul(x, x)] = 1;
  for (char c : sq) f.squares_count += c;
  if (with_aut) f.aut_order = automorphism_group(L).order();
  return f;
}

// ---------------------------------------------------------------------------
// Isotopy via principal isotopes

struct IsotopismTriple {
  Permutation alpha, beta, gamma;
};

// gamma(x*y) = alpha(x) o beta(y), multiplication on the left in L1, on the
// right in L2.
inline bool certify_isotopism(const LoopTable& L1, const LoopTable& L2, const IsotopismTriple& t) {
  if (t.alpha.degree() != L1.order() || t.beta.degree() != L1.order() || t.gamma.degree() != L1.order() ||
      L1.order() != L2.order())
    return false;
  if (!t.alpha.is_bijection() || !t.beta.is_bijection() || !t.gamma.is_bijection()) return false;
  for (Elem x = 0; x < L1.order(); ++x)
    for (Elem y = 0; y < L1.order(); ++y)
      if (t.gamma.img[L1.mul(x, y)] != L2.mul(t.alpha.img[x], t.beta.img[y])) return false;
  return true;
}

// Principal isotope at (a,b): x o y = (x/b) * (a\y), with the neutral element
// a*b relabeled to 0.
inline LoopTable principal_isotope(const LoopTable& L, Elem a, Elem b, Permutation* relabel = nullptr) {
  const int n = L.order();
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < n; ++x) {
    const Elem xb = L.rdiv(x, b);
    for (Elem y = 0; y < n; ++y) t[static_cast<size_t>(x) * n + y] = L.mul(xb, L.ldiv(a, y));
  }
  const Elem e = L.mul(a, b);
  Permutation pi = Permutation::identity(n);
  std::swap(pi.img[0], pi.img[e]);
  std::vector<Elem> t2(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t2[static_cast<size_t>(pi.img[i]) * n + pi.img[j]] = pi.img[t[static_cast<size_t>(i) * n + j]];
  if (relabel) *relabel = pi;
  return LoopTable::from_valid(n, std::move(t2));
}

// Every isotope of a loop is isomorphic to a principal isotope, so scanning
// the n^2 principal isotopes of L1 decides isotopy.
inline std::optional<IsotopismTriple> find_isotopism(const LoopTable& L1, const LoopTable& L2) {
  if (L1.order() != L2.order()) return std::nullopt;
  const int n = L1.order();
  std::unordered_set<std::vector<Elem>, detail::PermHash> seen_tables;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Permutation rho;
      const LoopTable iso = principal_isotope(L1, a, b, &rho);
      if (!seen_tables.insert(iso.table()).second) continue;
      const auto psi = find_isomorphism(iso, L2);
      if (!psi) continue;
      // L2(psi rho x, psi rho y) = psi rho(T(x,y)) with T(x,y) = (x/b)(a\y);
      // substituting x -> x*b, y -> a*y turns T into the L1 product.
      IsotopismTriple t;
      const Permutation psirho = compose(*psi, rho);
      t.gamma = psirho;
      t.alpha = compose(psirho, right_translation(L1, b));
      t.beta = compose(psirho, left_translation(L1, a));
      if (!certify_isotopism(L1, L2, t))
        throw Error(Errc::HypothesisViolated, "internal: isotopism certificate failed");
      return t;
    }
  return std::nullopt;
}

inline bool are_isotopic(const LoopTable& L1, const LoopTable& L2) { return find_isotopism(L1, L2).has_value(); }

}  // namespace aloops

#endif  // ALOOPS_ISO_HPP
