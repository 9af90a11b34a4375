#ifndef ALOOPS_GROUP_TABLES_HPP
#define ALOOPS_GROUP_TABLES_HPP

// Cayley tables of small abelian groups, and their enumeration up to
// isomorphism via partitions of prime exponents.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "aloops/loop.hpp"

namespace aloops {

inline LoopTable cyclic_group(int n) {
  if (n <= 0) throw Error(Errc::InvalidParameters, "cyclic group order must be positive");
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * n + j] = static_cast<Elem>((i + j) % n);
  return LoopTable::from_valid(n, std::move(t));
}

// Z_{m1} x Z_{m2} x ... with the leftmost factor most significant in the
// element encoding.
inline LoopTable abelian_group(const std::vector<int>& moduli) {
  if (moduli.empty()) return cyclic_group(1);
  LoopTable g = cyclic_group(moduli[0]);
  for (size_t i = 1; i < moduli.size(); ++i) g = direct_product(g, cyclic_group(moduli[i]));
  return g;
}

inline LoopTable elementary_abelian(int p, int k) {
  return abelian_group(std::vector<int>(k, p));
}

inline bool is_abelian_group(const LoopTable& L) { return is_commutative(L) && is_associative(L); }

struct AbelianGroupEntry {
  std::string name;       // e.g. "Z4xZ2"
  std::vector<int> moduli;
  LoopTable table;
};

namespace detail {

inline void partitions_desc(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_desc(n - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_desc(n, n, cur, out);
  return out;
}

inline std::map<int, int> factorize(int n) {
  std::map<int, int> f;
  for (int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

}  // namespace detail

inline std::uint64_t abelian_group_count(int n) {
  std::uint64_t c = 1;
  for (auto [p, e] : detail::factorize(n)) c *= detail::partitions(e).size();
  return c;
}

// All abelian groups of order n up to isomorphism, deterministically ordered
// (per prime, partitions in descending lexicographic order).
inline std::vector<AbelianGroupEntry> abelian_groups_of_order(int n) {
  if (n <= 0) throw Error(Errc::InvalidParameters, "order must be positive");
  std::vector<std::vector<int>> factor_lists{{}};
  for (auto [p, e] : detail::factorize(n)) {
    std::vector<std::vector<int>> next;
    for (const auto& part : detail::partitions(e))
      for (const auto& prefix : factor_lists) {
        std::vector<int> moduli = prefix;
        for (int k : part) {
          int q = 1;
          for (int i = 0; i < k; ++i) q *= p;
          moduli.push_back(q);
        }
        next.push_back(std::move(moduli));
      }
    factor_lists = std::move(next);
  }
  std::vector<AbelianGroupEntry> out;
  for (const auto& moduli : factor_lists) {
    std::string name;
    for (int m : moduli) name += (name.empty() ? "Z" : "xZ") + std::to_string(m);
    if (name.empty()) name = "Z1";
    out.push_back({name, moduli, abelian_group(moduli)});
  }
  return out;
}

}  // namespace aloops

#endif  // ALOOPS_GROUP_TABLES_HPP
