#ifndef ALOOPS_COCYCLE_HPP
#define ALOOPS_COCYCLE_HPP

// Linear-algebraic classification of central extensions: solve the
// commutative-A-loop cocycle identity over GF(p), quotient by coboundaries,
// reduce by the automorphism action on the complement, and classify the
// resulting loops up to isomorphism.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aloops/catalog.hpp"
#include "aloops/construct.hpp"
#include "aloops/iso.hpp"

namespace aloops {

namespace gf {

inline int inv_mod(int a, int p) {
  a %= p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw Error(Errc::CNotInvertible, "no inverse mod p");
}

// Incremental reduced row echelon form over GF(p), byte entries.
class GfpEchelon {
 public:
  GfpEchelon(int width, int p) : width_(width), p_(p), row_of_pivot_(width, -1) {}

  // Reduce r in place against the current rows; the remainder is left in r.
  void reduce(std::vector<std::uint8_t>& r) const {
    for (int c = 0; c < width_; ++c) {
      if (r[c] == 0 || row_of_pivot_[c] < 0) continue;
      const int f = r[c];
      const auto& row = rows_[row_of_pivot_[c]];
      for (int j = c; j < width_; ++j) r[j] = static_cast<std::uint8_t>((r[j] + (p_ - f) * row[j]) % p_);
    }
  }

  // Returns true when r was independent (rank grew).
  bool add_row(std::vector<std::uint8_t> r) {
    reduce(r);
    int pc = -1;
    for (int c = 0; c < width_; ++c)
      if (r[c]) {
        pc = c;
        break;
      }
    if (pc < 0) return false;
    const int inv = inv_mod(r[pc], p_);
    for (int j = pc; j < width_; ++j) r[j] = static_cast<std::uint8_t>(r[j] * inv % p_);
    for (auto& row : rows_) {
      const int f = row[pc];
      if (!f)
        continue;
      for (int j = pc; j < width_; ++j) row[j] = static_cast<std::uint8_t>((row[j] + (p_ - f) * r[j]) % p_);
    }
    row_of_pivot_[pc] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    pivots_.push_back(pc);
    return true;
  }

  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  int width() const noexcept { return width_; }

  // Canonical nullspace basis (RREF is unique, so this does not depend on the
  // order rows were added in); one vector per free column, ascending.
  std::vector<std::vector<std::uint8_t>> nullspace() const {
    std::vector<std::vector<std::uint8_t>> out;
    for (int fc = 0; fc < width_; ++fc) {
      if (row_of_pivot_[fc] >= 0) continue;
      std::vector<std::uint8_t> v(width_, 0);
      v[fc] = 1;
      for (int pc = 0; pc < width_; ++pc)
        if (row_of_pivot_[pc] >= 0) v[pc] = static_cast<std::uint8_t>((p_ - rows_[row_of_pivot_[pc]][fc]) % p_);
      out.push_back(std::move(v));
    }
    return out;
  }

  bool in_rowspace(std::vector<std::uint8_t> r) const {
    reduce(r);
    for (std::uint8_t v : r)
      if (v) return false;
    return true;
  }

  // The RREF rows ordered by pivot column (canonical for the row space).
  std::vector<std::vector<std::uint8_t>> reduced_rows() const {
    std::vector<std::vector<std::uint8_t>> out;
    for (int c = 0; c < width_; ++c)
      if (row_of_pivot_[c] >= 0) out.push_back(rows_[row_of_pivot_[c]]);
    return out;
  }

 private:
  int width_, p_;
  std::vector<std::vector<std::uint8_t>> rows_;
  std::vector<int> pivots_;
  std::vector<int> row_of_pivot_;
};

// Same interface over GF(2) with packed bit rows, for the large systems.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(int width) : width_(width), words_((width + 63) / 64), row_of_pivot_(width, -1) {}

  void reduce(std::vector<std::uint64_t>& r) const {
    for (int c = 0; c < width_; ++c) {
      if (row_of_pivot_[c] < 0 || !get(r, c)) continue;
      const auto& row = rows_[row_of_pivot_[c]];
      for (int w = 0; w < words_; ++w) r[w] ^= row[w];
    }
  }

  bool add_row(std::vector<std::uint64_t> r) {
    reduce(r);
    int pc = -1;
    for (int c = 0; c < width_ && pc < 0; ++c)
      if (get(r, c)) pc = c;
    if (pc < 0) return false;
    for (auto& row : rows_)
      if (get(row, pc))
        for (int w = 0; w < words_; ++w) row[w] ^= r[w];
    row_of_pivot_[pc] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool add_row_bytes(const std::vector<std::uint8_t>& dense) {
    std::vector<std::uint64_t> r(words_, 0);
    for (int c = 0; c < width_; ++c)
      if (dense[c] & 1) r[c / 64] |= 1ull << (c % 64);
    return add_row(std::move(r));
  }

  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  int words() const noexcept { return words_; }

  std::vector<std::vector<std::uint8_t>> nullspace() const {
    std::vector<std::vector<std::uint8_t>> out;
    for (int fc = 0; fc < width_; ++fc) {
      if (row_of_pivot_[fc] >= 0) continue;
      std::vector<std::uint8_t> v(width_, 0);
      v[fc] = 1;
      for (int pc = 0; pc < width_; ++pc)
        if (row_of_pivot_[pc] >= 0 && get(rows_[row_of_pivot_[pc]], fc)) v[pc] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static bool get(const std::vector<std::uint64_t>& r, int c) { return (r[c / 64] >> (c % 64)) & 1; }

  int width_, words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<int> row_of_pivot_;
};

// Expresses vectors as combinations of a fixed ordered independent family.
class Decomposer {
 public:
  Decomposer(int width, int p) : width_(width), p_(p) {}

  void add(const std::vector<std::uint8_t>& v) {
    Row r{v, std::vector<std::uint8_t>(count_ + 1, 0)};
    r.coeffs[count_] = 1;
    ++count_;
    for (auto& row : rows_) row.coeffs.resize(count_, 0);
    if (!reduce_row(r)) throw Error(Errc::InvalidParameters, "family is not independent");
    rows_.push_back(std::move(r));
  }

  // Coefficients in add order, or nullopt if v is outside the span.
  std::optional<std::vector<std::uint8_t>> decompose(const std::vector<std::uint8_t>& v) const {
    Row r{v, std::vector<std::uint8_t>(count_, 0)};
    std::vector<std::uint8_t> acc(count_, 0);
    for (int c = 0; c < width_; ++c) {
      if (r.vec[c] == 0) continue;
      int hit = -1;
      for (size_t i = 0; i < rows_.size() && hit < 0; ++i)
        if (pivot_[i] == c) hit = static_cast<int>(i);
      if (hit < 0) return std::nullopt;
      const int f = r.vec[c];
      for (int j = c; j < width_; ++j)
        r.vec[j] = static_cast<std::uint8_t>((r.vec[j] + (p_ - f) * rows_[hit].vec[j]) % p_);
      for (int j = 0; j < count_; ++j)
        acc[j] = static_cast<std::uint8_t>((acc[j] + f * rows_[hit].coeffs[j]) % p_);
    }
    return acc;
  }

 private:
  struct Row {
    std::vector<std::uint8_t> vec;
    std::vector<std::uint8_t> coeffs;
  };

  bool reduce_row(Row& r) {
    for (int c = 0; c < width_; ++c) {
      if (r.vec[c] == 0) continue;
      int hit = -1;
      for (size_t i = 0; i < rows_.size() && hit < 0; ++i)
        if (pivot_[i] == c) hit = static_cast<int>(i);
      if (hit < 0) {
        const int inv = inv_mod(r.vec[c], p_);
        for (int j = 0; j < width_; ++j) r.vec[j] = static_cast<std::uint8_t>(r.vec[j] * inv % p_);
        for (auto& cf : r.coeffs) cf = static_cast<std::uint8_t>(cf * inv % p_);
        pivot_.push_back(c);
        return true;
      }
      const int f = r.vec[c];
      for (int j = 0; j < width_; ++j)
        r.vec[j] = static_cast<std::uint8_t>((r.vec[j] + (p_ - f) * rows_[hit].vec[j]) % p_);
      for (int j = 0; j < count_; ++j)
        r.coeffs[j] = static_cast<std::uint8_t>((r.coeffs[j] + (p_ - f) * rows_[hit].coeffs[j]) % p_);
    }
    return false;
  }

  int width_, p_;
  int count_ = 0;
  std::vector<Row> rows_;
  std::vector<int> pivot_;
};

}  // namespace gf

// ---------------------------------------------------------------------------

struct CocycleFlags {
  bool symmetric = true;
  bool zero_diagonal = false;
};

struct CocycleSpace {
  int k_order = 0;
  int modulus = 2;
  CocycleFlags flags;
  std::vector<CocycleVec> basis;

  int dim() const noexcept { return static_cast<int>(basis.size()); }
};

namespace detail {

inline int cocycle_var(int n, Elem u, Elem v) { return static_cast<int>(u - 1) * (n - 1) + (v - 1); }

// Streams one Eq-Cocycle constraint row: the additive form of
//   F(x,y,z) F(x',y,z) theta(R(x),R(x')) = F(xx',y,z) theta(x,x')
// with F(x,y,z) = theta(R(x),yz)^{-1} theta(y,z)^{-1} theta(xy,z) theta(x,y).
template <typename Add>
void cocycle_constraint(const LoopTable& K, const std::vector<Elem>& r_yz, Elem yz, Elem x, Elem y, Elem z, Elem xp,
                        Add&& add) {
  auto f_terms = [&](Elem a, int sign) {
    add(a, y, sign);                       // theta(a,y)
    add(K.mul(a, y), z, sign);             // theta(ay,z)
    add(y, z, -sign);                      // theta(y,z)^{-1}
    add(r_yz[a], yz, -sign);               // theta(R(a),yz)^{-1}
  };
  f_terms(x, 1);
  f_terms(xp, 1);
  add(r_yz[x], r_yz[xp], 1);
  f_terms(K.mul(x, xp), -1);
  add(x, xp, -1);
}

}  // namespace detail

// Basis of the space C of loop cocycles theta : K x K -> Z_p making
// K x_theta Z_p a commutative A-loop (plus the exponent-2 diagonal condition
// when requested).
inline CocycleSpace cocycle_space(const LoopTable& K, int p, CocycleFlags flags = {}) {
  if (p < 2 || p > 127) throw Error(Errc::InvalidParameters, "modulus out of supported range");
  if (!is_commutative(K) || !is_A_loop(K)) throw Error(Errc::NotALoop, "the base loop must be a commutative A-loop");
  const int n = K.order();
  const int width = (n - 1) * (n - 1);

  // R_{y,z}(x) = ((x y) z) / (y z), per (y,z)
  std::vector<std::vector<Elem>> r_tab(static_cast<size_t>(n) * n);
  for (Elem y = 0; y < n; ++y)
    for (Elem z = 0; z < n; ++z) {
      auto& r = r_tab[static_cast<size_t>(y) * n + z];
      r.resize(n);
      const Elem yz = K.mul(y, z);
      for (Elem x = 0; x < n; ++x) r[x] = K.rdiv(K.mul(K.mul(x, y), z), yz);
    }

  std::vector<std::uint8_t> row(width);
  auto assemble = [&](auto&& sink) {
    if (flags.symmetric)
      for (Elem u = 1; u < n; ++u)
        for (Elem v = u + 1; v < n; ++v) {
          std::fill(row.begin(), row.end(), 0);
          row[detail::cocycle_var(n, u, v)] = 1;
          row[detail::cocycle_var(n, v, u)] = static_cast<std::uint8_t>(p - 1);
          sink(row);
        }
    if (flags.zero_diagonal)
      for (Elem u = 1; u < n; ++u) {
        std::fill(row.begin(), row.end(), 0);
        row[detail::cocycle_var(n, u, u)] = 1;
        sink(row);
      }
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const auto& r_yz = r_tab[static_cast<size_t>(y) * n + z];
        const Elem yz = K.mul(y, z);
        for (Elem x = 0; x < n; ++x)
          for (Elem xp = 0; xp < n; ++xp) {
            std::fill(row.begin(), row.end(), 0);
            bool touched = false;
            detail::cocycle_constraint(K, r_yz, yz, x, y, z, xp, [&](Elem u, Elem v, int sign) {
              if (u == 0 || v == 0) return;
              auto& slot = row[detail::cocycle_var(n, u, v)];
              slot = static_cast<std::uint8_t>(((slot + sign) % p + p) % p);
              touched = true;
            });
            if (touched) sink(row);
          }
      }
  };

  CocycleSpace out;
  out.k_order = n;
  out.modulus = p;
  out.flags = flags;
  std::vector<std::vector<std::uint8_t>> basis;
  if (p == 2) {
    gf::Gf2Echelon ech(width);
    assemble([&](const std::vector<std::uint8_t>& r) { ech.add_row_bytes(r); });
    basis = ech.nullspace();
  } else {
    gf::GfpEchelon ech(width, p);
    assemble([&](const std::vector<std::uint8_t>& r) { ech.add_row(r); });
    basis = ech.nullspace();
  }
  for (auto& v : basis) {
    CocycleVec c = CocycleVec::zero(n, p);
    c.vals = std::move(v);
    out.basis.push_back(std::move(c));
  }
  return out;
}

// Basis of the coboundary space B spanned by dtau(x,y) = tau(xy)-tau(x)-tau(y)
// over maps tau with tau(1) = 0.
inline CocycleSpace coboundary_space(const LoopTable& K, int p) {
  if (p < 2 || p > 127) throw Error(Errc::InvalidParameters, "modulus out of supported range");
  if (!is_commutative(K)) throw Error(Errc::NotCommutative, "coboundaries are taken over a commutative base");
  const int n = K.order();
  const int width = (n - 1) * (n - 1);
  gf::GfpEchelon ech(width, p);
  std::vector<std::uint8_t> row(width);
  for (Elem u = 1; u < n; ++u) {  // tau = indicator of u, delta-tau spans B
    std::fill(row.begin(), row.end(), 0);
    for (Elem x = 1; x < n; ++x)
      for (Elem y = 1; y < n; ++y) {
        int v = 0;
        if (K.mul(x, y) == u) ++v;
        if (x == u) --v;
        if (y == u) --v;
        row[detail::cocycle_var(n, x, y)] = static_cast<std::uint8_t>((v % p + p) % p);
      }
    ech.add_row(row);
  }
  CocycleSpace out;
  out.k_order = n;
  out.modulus = p;
  for (auto& v : ech.reduced_rows()) {
    CocycleVec c = CocycleVec::zero(n, p);
    c.vals = std::move(v);
    out.basis.push_back(std::move(c));
  }
  return out;
}

struct OrbitData {
  int dim_c = 0, dim_b = 0, dim_d = 0;
  std::vector<CocycleVec> d_basis;
  std::vector<CocycleVec> representatives;  // one cocycle per orbit of Aut(K) on D
  std::uint64_t orbit_count = 0;
};

// Deterministic complement D with C = B + D, and one representative per orbit
// of the induced Aut(K)-action theta -> proj_D(theta_phi) on D.
inline OrbitData complement_and_orbits(const CocycleSpace& C, const CocycleSpace& B, const PermutationGroup& aut_k) {
  if (C.k_order != B.k_order || C.modulus != B.modulus)
    throw Error(Errc::InvalidParameters, "spaces have mismatched shapes");
  const int n = C.k_order, p = C.modulus;
  const int width = (n - 1) * (n - 1);
  if (aut_k.degree() != n) throw Error(Errc::DegreeMismatch, "Aut(K) degree does not match K");

  gf::GfpEchelon c_span(width, p);
  for (const auto& v : C.basis) c_span.add_row(v.vals);
  for (const auto& v : B.basis)
    if (!c_span.in_rowspace(v.vals)) throw Error(Errc::InvalidParameters, "B is not contained in the span of C");

  OrbitData out;
  out.dim_c = static_cast<int>(C.basis.size());
  out.dim_b = static_cast<int>(B.basis.size());

  // Greedy extension of B's echelon basis to C, in C's basis order.
  gf::GfpEchelon work(width, p);
  for (const auto& v : B.basis) work.add_row(v.vals);
  for (const auto& v : C.basis) {
    std::vector<std::uint8_t> r = v.vals;
    work.reduce(r);
    bool zero = true;
    for (auto x : r) zero &= x == 0;
    if (zero) continue;
    int pc = 0;
    while (!r[pc]) ++pc;
    const int inv = gf::inv_mod(r[pc], p);
    for (auto& x : r) x = static_cast<std::uint8_t>(x * inv % p);
    CocycleVec d = CocycleVec::zero(n, p);
    d.vals = r;
    out.d_basis.push_back(std::move(d));
    work.add_row(r);
  }
  out.dim_d = static_cast<int>(out.d_basis.size());

  // Orbit space size p^d, walked explicitly with a visited map.
  double size_check = 1;
  for (int i = 0; i < out.dim_d; ++i) size_check *= p;
  if (size_check > double(1 << 24)) throw Error(Errc::OrbitSpaceTooLarge, "|D| exceeds 2^24");
  std::uint64_t space = 1;
  for (int i = 0; i < out.dim_d; ++i) space *= p;

  gf::Decomposer dec(width, p);
  for (const auto& v : B.basis) dec.add(v.vals);
  for (const auto& v : out.d_basis) dec.add(v.vals);

  // theta_phi(x,y) = theta(phi x, phi y); matrix of the induced map on D per
  // generator of Aut(K).
  const std::vector<Permutation> gens = aut_k.small_generating_set();
  const int d = out.dim_d;
  std::vector<std::vector<std::uint8_t>> mats;  // d x d, column-major per generator
  for (const auto& phi : gens) {
    std::vector<std::uint8_t> m(static_cast<size_t>(d) * d, 0);
    for (int j = 0; j < d; ++j) {
      std::vector<std::uint8_t> acted(width, 0);
      for (Elem x = 1; x < n; ++x)
        for (Elem y = 1; y < n; ++y)
          acted[detail::cocycle_var(n, x, y)] = out.d_basis[j].get(phi.img[x], phi.img[y]);
      const auto coeffs = dec.decompose(acted);
      if (!coeffs) throw Error(Errc::HypothesisViolated, "internal: Aut(K) does not preserve C");
      for (int i = 0; i < d; ++i) m[static_cast<size_t>(j) * d + i] = (*coeffs)[out.dim_b + i];
    }
    mats.push_back(std::move(m));
  }

  auto decode = [&](std::uint64_t idx, std::vector<std::uint8_t>& digits) {
    for (int i = 0; i < d; ++i) {
      digits[i] = static_cast<std::uint8_t>(idx % p);
      idx /= p;
    }
  };
  auto encode = [&](const std::vector<std::uint8_t>& digits) {
    std::uint64_t idx = 0;
    for (int i = d - 1; i >= 0; --i) idx = idx * p + digits[i];
    return idx;
  };

  std::vector<bool> visited(space, false);
  std::vector<std::uint8_t> digits(d), image(d);
  std::vector<std::uint64_t> reps;
  std::vector<std::uint64_t> queue;
  for (std::uint64_t s = 0; s < space; ++s) {
    if (visited[s]) continue;
    queue.clear();
    queue.push_back(s);
    visited[s] = true;
    std::uint64_t mn = s;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      decode(queue[qi], digits);
      for (const auto& m : mats) {
        for (int i = 0; i < d; ++i) {
          int acc = 0;
          for (int j = 0; j < d; ++j) acc += m[static_cast<size_t>(j) * d + i] * digits[j];
          image[i] = static_cast<std::uint8_t>(acc % p);
        }
        const std::uint64_t t = encode(image);
        if (!visited[t]) {
          visited[t] = true;
          queue.push_back(t);
          mn = std::min(mn, t);
        }
      }
    }
    reps.push_back(mn);
  }
  out.orbit_count = reps.size();
  std::sort(reps.begin(), reps.end());
  for (std::uint64_t r : reps) {
    decode(r, digits);
    CocycleVec theta = CocycleVec::zero(n, p);
    for (int j = 0; j < d; ++j) {
      if (!digits[j]) continue;
      for (int i = 0; i < width; ++i)
        theta.vals[i] = static_cast<std::uint8_t>((theta.vals[i] + digits[j] * out.d_basis[j].vals[i]) % p);
    }
    out.representatives.push_back(std::move(theta));
  }
  return out;
}

struct BaseReport {
  std::string base_name;
  int dim_c = 0, dim_b = 0, dim_d = 0;
  std::uint64_t orbit_count = 0;
  int extensions_built = 0;
  int extensions_nonassociative = 0;
};

struct ClassificationResult {
  std::vector<BaseReport> per_base;
  Catalog catalog;  // nonassociative extensions up to isomorphism, across all bases
};

inline ClassificationResult classify_extensions(const std::vector<std::pair<std::string, LoopTable>>& bases, int p,
                                                CocycleFlags flags = {}, int jobs = 1) {
  ClassificationResult result;
  for (const auto& [name, K] : bases) {
    const CocycleSpace C = cocycle_space(K, p, flags);
    const CocycleSpace B = coboundary_space(K, p);
    const PermutationGroup aut = automorphism_group(K);
    const OrbitData od = complement_and_orbits(C, B, aut);

    BaseReport rep;
    rep.base_name = name;
    rep.dim_c = od.dim_c;
    rep.dim_b = od.dim_b;
    rep.dim_d = od.dim_d;
    rep.orbit_count = od.orbit_count;
    rep.extensions_built = static_cast<int>(od.representatives.size());

    std::vector<std::optional<CatalogRecord>> built(od.representatives.size());
    parallel_for(od.representatives.size(), jobs, [&](size_t i) {
      const LoopTable ext = build_central_extension({K, p, od.representatives[i]});
      if (is_associative(ext)) return;
      built[i] = make_record(ext, name + " theta-orbit " + std::to_string(i));
    });
    for (auto& r : built) {
      if (!r) continue;
      ++rep.extensions_nonassociative;
      result.catalog.add_class(std::move(*r));
    }
    result.per_base.push_back(rep);
  }
  result.catalog.sort_deterministic();
  return result;
}

}  // namespace aloops

#endif  // ALOOPS_COCYCLE_HPP
