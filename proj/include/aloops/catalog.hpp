#ifndef ALOOPS_CATALOG_HPP
#define ALOOPS_CATALOG_HPP

// Catalog records: classified loops with invariant fingerprints and
// provenance, deduplicated up to isomorphism.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "aloops/iso.hpp"
#include "aloops/loop.hpp"

namespace aloops {

namespace detail {

inline std::uint64_t fnv64(const std::vector<Elem>& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (Elem e : data) {
    h ^= static_cast<std::uint64_t>(e & 0xff);
    h *= 1099511628211ull;
    h ^= static_cast<std::uint64_t>(e >> 8);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail

struct CatalogRecord {
  std::string id;
  int order = 0;
  LoopTable table;
  Fingerprint fp;
  std::string provenance;
  bool nonassociative = false;
  long long exp = 1;
  int center_size = 1;
};

inline CatalogRecord make_record(LoopTable L, std::string provenance) {
  CatalogRecord r;
  r.order = L.order();
  r.fp = fingerprint(L);
  r.nonassociative = !is_associative(L);
  r.exp = exponent(L);
  r.center_size = r.fp.center_size;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(detail::fnv64(L.table())));
  r.id = "o" + std::to_string(r.order) + "-" + buf;
  r.provenance = std::move(provenance);
  r.table = std::move(L);
  return r;
}

// Isomorphism-class collection with fingerprint bucketing.
class Catalog {
 public:
  // Returns the index of the class and whether the record was new.
  std::pair<size_t, bool> add_class(CatalogRecord rec) {
    const std::string key = rec.fp.key();
    auto [lo, hi] = buckets_.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (find_isomorphism(records_[it->second].table, rec.table)) return {it->second, false};
    records_.push_back(std::move(rec));
    buckets_.emplace(key, records_.size() - 1);
    return {records_.size() - 1, true};
  }

  // Sort by (order, fingerprint, table bytes) and renumber ids stably.
  void sort_deterministic() {
    std::sort(records_.begin(), records_.end(), [](const CatalogRecord& a, const CatalogRecord& b) {
      if (a.order != b.order) return a.order < b.order;
      const std::string ka = a.fp.key(), kb = b.fp.key();
      if (ka != kb) return ka < kb;
      return a.table.table() < b.table.table();
    });
    buckets_.clear();
    for (size_t i = 0; i < records_.size(); ++i) buckets_.emplace(records_[i].fp.key(), i);
  }

  const std::vector<CatalogRecord>& records() const noexcept { return records_; }
  std::vector<CatalogRecord>& records() noexcept { return records_; }
  size_t size() const noexcept { return records_.size(); }

 private:
  std::vector<CatalogRecord> records_;
  std::multimap<std::string, size_t> buckets_;
};

// Partition into isotopy classes: |Mlt| is an isotopy invariant, so only
// same-|Mlt| pairs are searched. Returns the class index per loop.
inline std::vector<int> isotopy_partition(const std::vector<const LoopTable*>& loops,
                                          const std::vector<const Fingerprint*>& fps) {
  const size_t n = loops.size();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next++;
    for (size_t j = i + 1; j < n; ++j) {
      if (cls[j] >= 0 || fps[i]->mlt_order != fps[j]->mlt_order) continue;
      if (are_isotopic(*loops[i], *loops[j])) cls[j] = cls[i];
    }
  }
  return cls;
}

inline int isotopy_class_count(const std::vector<CatalogRecord>& recs) {
  std::vector<const LoopTable*> loops;
  std::vector<const Fingerprint*> fps;
  for (const auto& r : recs) {
    loops.push_back(&r.table);
    fps.push_back(&r.fp);
  }
  const std::vector<int> cls = isotopy_partition(loops, fps);
  int mx = -1;
  for (int c : cls) mx = std::max(mx, c);
  return mx + 1;
}

// Minimal fork-join helper; jobs <= 1 degenerates to a serial loop and the
// output ordering never depends on the worker count.
template <typename Fn>
void parallel_for(size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  std::atomic<size_t> next{0};
  const int nw = std::min<size_t>(jobs, count);
  for (int w = 0; w < nw; ++w)
    workers.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : workers) t.join();
}

}  // namespace aloops

#endif  // ALOOPS_CATALOG_HPP
