#ifndef ALOOPS_LOOP_HPP
#define ALOOPS_LOOP_HPP

// Finite loops as dense Cayley tables over {0,...,n-1}, neutral element 0.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace aloops {

enum class Errc {
  NotLatin,
  NoNeutral,
  InvalidElement,
  NotPowerAssociative,
  DegreeMismatch,
  NotCommutative,
  NotSubloop,
  NotNormal,
  SquaringNotBijective,
  NotAbelianGroup,
  NotBijection,
  DimensionTooSmall,
  HypothesisViolated,
  OutOfRange,
  NotGroupCocycle,
  InvalidParameters,
  IsGroup,
  CNotInvertible,
  NoWitness,
  NotALoop,
  OrbitSpaceTooLarge,
  UnsupportedOrder,
  UnsupportedPrime,
  ParseError,
  CatalogRequired,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

using Elem = std::uint16_t;

// Immutable once constructed; all operations are pure lookups, so values can
// be shared freely between threads.
class LoopTable {
 public:
  // The trivial loop; mostly useful as a placeholder to assign over.
  LoopTable() : n_(1), t_{0}, ld_{0}, rd_{0} {}

  // Validates the Latin property and relabels so the two-sided neutral
  // element sits at index 0.
  static LoopTable from_rows(int n, const std::vector<std::vector<int>>& rows);

  // For construction paths that already place the neutral element at 0.
  // Latin and neutral invariants are revalidated on every build path.
  static LoopTable from_valid(int n, std::vector<Elem> table);

  int order() const noexcept { return n_; }

  Elem mul(Elem x, Elem y) const { return t_[static_cast<size_t>(x) * n_ + y]; }
  // x \ y : unique z with x*z = y
  Elem ldiv(Elem x, Elem y) const { return ld_[static_cast<size_t>(x) * n_ + y]; }
  // y / x : unique z with z*x = y
  Elem rdiv(Elem y, Elem x) const { return rd_[static_cast<size_t>(x) * n_ + y]; }

  Elem checked_mul(Elem x, Elem y) const {
    check_elem(x);
    check_elem(y);
    return mul(x, y);
  }

  void check_elem(Elem x) const {
    if (x >= n_) throw Error(Errc::InvalidElement, "element index " + std::to_string(x) + " out of range for order " + std::to_string(n_));
  }

  const std::vector<Elem>& table() const noexcept { return t_; }

  bool operator==(const LoopTable& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const LoopTable& o) const { return !(*this == o); }

 private:
  LoopTable(int n, std::vector<Elem> t);

  int n_ = 0;
  std::vector<Elem> t_;   // row-major multiplication
  std::vector<Elem> ld_;  // ld_[x*n+y] = x \ y
  std::vector<Elem> rd_;  // rd_[x*n+y] = y / x
};

enum class Side { left, right };

inline Elem multiply(const LoopTable& L, Elem x, Elem y) { return L.checked_mul(x, y); }

inline Elem divide(const LoopTable& L, Side side, Elem x, Elem y) {
  L.check_elem(x);
  L.check_elem(y);
  return side == Side::left ? L.ldiv(x, y) : L.rdiv(y, x);
}

inline bool is_commutative(const LoopTable& L) {
  const int n = L.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (L.mul(x, y) != L.mul(y, x)) return false;
  return true;
}

inline bool is_associative(const LoopTable& L) {
  const int n = L.order();
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      const Elem xy = L.mul(x, y);
      for (Elem z = 1; z < n; ++z)
        if (L.mul(xy, z) != L.mul(x, L.mul(y, z))) return false;
    }
  return true;
}

// Multiplication-closure of seed plus the neutral element. In a finite loop a
// multiplicatively closed set containing 1 is a subloop.
inline std::vector<Elem> mult_closure(const LoopTable& L, const std::vector<Elem>& seed) {
  std::vector<char> in(L.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (Elem s : seed) {
    L.check_elem(s);
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      for (Elem p : {L.mul(members[i], members[j]), L.mul(members[j], members[i])})
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
    }
  std::sort(members.begin(), members.end());
  return members;
}

namespace detail {

inline bool set_is_associative(const LoopTable& L, const std::vector<Elem>& s) {
  for (Elem x : s)
    for (Elem y : s) {
      const Elem xy = L.mul(x, y);
      for (Elem z : s)
        if (L.mul(xy, z) != L.mul(x, L.mul(y, z))) return false;
    }
  return true;
}

}  // namespace detail

inline bool is_power_associative(const LoopTable& L) {
  for (Elem x = 1; x < L.order(); ++x) {
    const std::vector<Elem> cyc = mult_closure(L, {x});
    if (!detail::set_is_associative(L, cyc)) return false;
  }
  return true;
}

namespace detail {

// Order under left powers x^{k+1} = x * x^k, no power-associativity check.
inline int left_power_order(const LoopTable& L, Elem x) {
  Elem p = x;
  int m = 1;
  while (p != 0) {
    p = L.mul(x, p);
    ++m;
    if (m > L.order()) throw Error(Errc::NotPowerAssociative, "left powers of element do not reach the neutral element");
  }
  return m;
}

}  // namespace detail

inline int element_order(const LoopTable& L, Elem x) {
  L.check_elem(x);
  if (!is_power_associative(L)) throw Error(Errc::NotPowerAssociative, "element_order requires a power-associative loop");
  return x == 0 ? 1 : detail::left_power_order(L, x);
}

// Orders of all elements with a single power-associativity check.
inline std::vector<int> element_orders(const LoopTable& L) {
  if (!is_power_associative(L)) throw Error(Errc::NotPowerAssociative, "element orders require a power-associative loop");
  std::vector<int> ord(L.order());
  ord[0] = 1;
  for (Elem x = 1; x < L.order(); ++x) ord[x] = detail::left_power_order(L, x);
  return ord;
}

inline long long exponent(const LoopTable& L) {
  long long e = 1;
  for (int m : element_orders(L)) e = std::lcm(e, static_cast<long long>(m));
  return e;
}

// Componentwise product; pair (x1,x2) is encoded as x1*|L2|+x2.
inline LoopTable direct_product(const LoopTable& L1, const LoopTable& L2) {
  const int n1 = L1.order(), n2 = L2.order(), n = n1 * n2;
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2)
      for (int y1 = 0; y1 < n1; ++y1)
        for (int y2 = 0; y2 < n2; ++y2)
          t[static_cast<size_t>(x1 * n2 + x2) * n + (y1 * n2 + y2)] =
              static_cast<Elem>(L1.mul(x1, y1) * n2 + L2.mul(x2, y2));
  return LoopTable::from_valid(n, std::move(t));
}

inline LoopTable::LoopTable(int n, std::vector<Elem> t) : n_(n), t_(std::move(t)) {
  ld_.resize(t_.size());
  rd_.resize(t_.size());
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      const Elem p = mul(x, y);
      ld_[static_cast<size_t>(x) * n_ + p] = y;  // x \ p = y
      rd_[static_cast<size_t>(y) * n_ + p] = x;  // p / y = x
    }
}

inline LoopTable LoopTable::from_valid(int n, std::vector<Elem> table) {
  if (n <= 0 || table.size() != static_cast<size_t>(n) * n)
    throw Error(Errc::InvalidParameters, "bad table shape");
  std::vector<char> row_seen(n), col_seen(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    std::fill(row_seen.begin(), row_seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const Elem v = table[static_cast<size_t>(i) * n + j];
      if (v >= n) throw Error(Errc::OutOfRange, "table entry out of range");
      if (row_seen[v]) throw Error(Errc::NotLatin, "row " + std::to_string(i) + " repeats value " + std::to_string(v));
      row_seen[v] = 1;
      if (col_seen[static_cast<size_t>(j) * n + v]) throw Error(Errc::NotLatin, "column " + std::to_string(j) + " repeats value " + std::to_string(v));
      col_seen[static_cast<size_t>(j) * n + v] = 1;
    }
  }
  for (Elem j = 0; j < n; ++j)
    if (table[j] != j || table[static_cast<size_t>(j) * n] != j)
      throw Error(Errc::NoNeutral, "element 0 is not neutral");
  return LoopTable(n, std::move(table));
}

inline LoopTable LoopTable::from_rows(int n, const std::vector<std::vector<int>>& rows) {
  if (n <= 0 || rows.size() != static_cast<size_t>(n))
    throw Error(Errc::InvalidParameters, "expected " + std::to_string(n) + " rows");
  for (const auto& r : rows)
    if (r.size() != static_cast<size_t>(n)) throw Error(Errc::InvalidParameters, "ragged rows");

  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v < 0 || v >= n) throw Error(Errc::OutOfRange, "entry " + std::to_string(v) + " at row " + std::to_string(i) + ", col " + std::to_string(j) + " out of range");
      if (seen[v]) throw Error(Errc::NotLatin, "row " + std::to_string(i) + " repeats value " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      const int v = rows[i][j];
      if (seen[v]) throw Error(Errc::NotLatin, "column " + std::to_string(j) + " repeats value " + std::to_string(v));
      seen[v] = 1;
    }
  }

  int neutral = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = rows[e][j] == j && rows[j][e] == j;
    if (ok) {
      neutral = e;
      break;
    }
  }
  if (neutral < 0) throw Error(Errc::NoNeutral, "no two-sided neutral element");

  // Relabel by the transposition (0 neutral).
  std::vector<Elem> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = static_cast<Elem>(i);
  std::swap(pi[0], pi[neutral]);

  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<size_t>(pi[i]) * n + pi[j]] = pi[rows[i][j]];
  return LoopTable(n, std::move(t));
}

}  // namespace aloops

#endif  // ALOOPS_LOOP_HPP
