#ifndef ALOOPS_PIPELINES_HPP
#define ALOOPS_PIPELINES_HPP

// End-to-end enumeration pipelines reproducing the desk-scale classification
// table, and the p^3 (Terg family) classifier.

#include <sstream>
#include <string>
#include <vector>

#include "aloops/catalog.hpp"
#include "aloops/cocycle.hpp"
#include "aloops/construct.hpp"
#include "aloops/family_iso.hpp"
#include "aloops/group_tables.hpp"
#include "aloops/io.hpp"

namespace aloops {

namespace detail {

inline std::string perm_to_string(const Permutation& p) {
  std::string s = "[";
  for (int i = 0; i < p.degree(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.img[i]);
  }
  return s + "]";
}

}  // namespace detail

struct EnumerationCounts {
  int classes = 0;
  int isotopy_classes = 0;
  int nontrivial_center = 0;
  int nontrivial_center_isotopy = 0;
  int exponent_p = 0;         // exponent 2 at 2-power orders, 3 at order 27
  int exponent_p_center = 0;  // ... and nontrivial center
};

struct EnumerationResult {
  int order = 0;
  std::vector<CatalogRecord> records;
  EnumerationCounts counts;
  std::vector<BaseReport> base_reports;
  int pre_classification = 0;   // extensions before isomorphism sorting (informational)
  bool cross_check_ok = true;   // order 27: the two routes agree
};

namespace detail {

inline EnumerationCounts summarize(const std::vector<CatalogRecord>& recs, int small_p) {
  EnumerationCounts c;
  c.classes = static_cast<int>(recs.size());
  c.isotopy_classes = isotopy_class_count(recs);
  std::vector<CatalogRecord> centered, expp, expp_centered;
  for (const auto& r : recs) {
    if (r.center_size > 1) centered.push_back(r);
    if (r.exp == small_p) {
      expp.push_back(r);
      if (r.center_size > 1) expp_centered.push_back(r);
    }
  }
  c.nontrivial_center = static_cast<int>(centered.size());
  c.nontrivial_center_isotopy = isotopy_class_count(centered);
  c.exponent_p = static_cast<int>(expp.size());
  c.exponent_p_center = static_cast<int>(expp_centered.size());
  return c;
}

}  // namespace detail

// All nonassociative commutative A-loops of order 8: the G(f) doubling over
// the two groups of order 4 is exhaustive here (every such loop has middle
// nucleus of index 2).
inline EnumerationResult enumerate_order8() {
  EnumerationResult out;
  out.order = 8;
  Catalog cat;
  for (const auto& g : abelian_groups_of_order(4))
    for (const auto& cls : enumerate_gf_aloops(g.table)) {
      std::ostringstream prov;
      prov << "gf G=" << g.name << " g=" << detail::perm_to_string(cls.g) << " t=" << cls.t;
      cat.add_class(make_record(cls.loop, prov.str()));
    }
  cat.sort_deterministic();
  out.records = cat.records();
  out.counts = detail::summarize(out.records, 2);
  return out;
}

// Nonassociative commutative A-loops of order 16 with nontrivial center, as
// central extensions of Z_2 by the seven commutative A-loops of order 8.
inline EnumerationResult enumerate_order16_center(int jobs = 1) {
  std::vector<std::pair<std::string, LoopTable>> bases;
  for (const auto& g : abelian_groups_of_order(8)) bases.emplace_back("K=" + g.name, g.table);
  const EnumerationResult o8 = enumerate_order8();
  for (size_t i = 0; i < o8.records.size(); ++i)
    bases.emplace_back("K=" + o8.records[i].id, o8.records[i].table);

  ClassificationResult cls = classify_extensions(bases, 2, {/*symmetric=*/true, /*zero_diagonal=*/false}, jobs);
  EnumerationResult out;
  out.order = 16;
  out.records = cls.catalog.records();
  out.base_reports = std::move(cls.per_base);
  for (const auto& r : out.base_reports) out.pre_classification += r.extensions_nonassociative;
  out.counts = detail::summarize(out.records, 2);
  return out;
}

// Z_3 x (order-8 catalog): the nonassociative commutative A-loops of order 24.
inline EnumerationResult enumerate_order24() {
  const EnumerationResult o8 = enumerate_order8();
  EnumerationResult out;
  out.order = 24;
  Catalog cat;
  const LoopTable z3 = cyclic_group(3);
  for (const auto& r : o8.records) cat.add_class(make_record(direct_product(z3, r.table), "Z3 x " + r.id));
  cat.sort_deterministic();
  out.records = cat.records();
  out.counts = detail::summarize(out.records, 2);
  return out;
}

// Order 27 twice over: the nine Terg(Z_3,a,b) loops up to isomorphism, and the
// cocycle classification over {Z_9, Z_3 x Z_3}; the two routes must agree.
inline EnumerationResult enumerate_order27(int jobs = 1) {
  EnumerationResult out;
  out.order = 27;
  Catalog terg_cat;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::ostringstream prov;
      prov << "terg n=3 a=" << a << " b=" << b;
      terg_cat.add_class(make_record(build_terg({3, a, b}), prov.str()));
    }
  terg_cat.sort_deterministic();

  std::vector<std::pair<std::string, LoopTable>> bases;
  for (const auto& g : abelian_groups_of_order(9)) bases.emplace_back("K=" + g.name, g.table);
  ClassificationResult cls = classify_extensions(bases, 3, {/*symmetric=*/true, /*zero_diagonal=*/false}, jobs);
  out.base_reports = std::move(cls.per_base);
  for (const auto& r : out.base_reports) out.pre_classification += r.extensions_nonassociative;

  // Each cocycle class must be isomorphic to exactly one Terg class and vice versa.
  out.cross_check_ok = cls.catalog.size() == terg_cat.size();
  std::vector<int> hit(terg_cat.size(), 0);
  for (const auto& r : cls.catalog.records()) {
    int matches = 0;
    for (size_t i = 0; i < terg_cat.size(); ++i)
      if (find_isomorphism(r.table, terg_cat.records()[i].table)) {
        ++hit[i];
        ++matches;
      }
    if (matches != 1) out.cross_check_ok = false;
  }
  for (int h : hit)
    if (h != 1) out.cross_check_ok = false;

  out.records = terg_cat.records();
  out.counts = detail::summarize(out.records, 3);
  return out;
}

// The thirteen base loops for the order-32 run: the twelve nonassociative
// commutative A-loops of order 16 and exponent 2, plus GF(2)^4. The two
// trivial-center ones arise from G(f) over GF(2)^3 (they are not central
// extensions of Z_2 by anything smaller).
inline std::vector<std::pair<std::string, LoopTable>> order32_base_loops(int jobs = 1) {
  Catalog exp2;
  const EnumerationResult o16 = enumerate_order16_center(jobs);
  for (const auto& r : o16.records)
    if (r.exp == 2) exp2.add_class(CatalogRecord(r));
  for (const auto& cls : enumerate_gf_aloops(elementary_abelian(2, 3))) {
    if (exponent(cls.loop) != 2) continue;
    std::ostringstream prov;
    prov << "gf G=Z2xZ2xZ2 g=" << detail::perm_to_string(cls.g) << " t=" << cls.t;
    exp2.add_class(make_record(cls.loop, prov.str()));
  }
  exp2.sort_deterministic();

  std::vector<std::pair<std::string, LoopTable>> bases;
  bases.emplace_back("K=Z2^4", elementary_abelian(2, 4));
  for (const auto& r : exp2.records()) bases.emplace_back("K=" + r.id, r.table);
  return bases;
}

// Opt-in: commutative A-loops of order 32, exponent 2, nontrivial center.
inline EnumerationResult enumerate_order32(int jobs = 1) {
  EnumerationResult out;
  out.order = 32;
  const auto bases = order32_base_loops(jobs);
  ClassificationResult cls = classify_extensions(bases, 2, {/*symmetric=*/true, /*zero_diagonal=*/true}, jobs);
  out.base_reports = std::move(cls.per_base);
  for (const auto& r : out.base_reports) out.pre_classification += r.extensions_nonassociative;
  out.records = cls.catalog.records();
  out.counts = detail::summarize(out.records, 2);
  return out;
}

inline EnumerationResult run_enumeration(int order, bool center_nontrivial, bool exponent2, int jobs) {
  switch (order) {
    case 8:
      return enumerate_order8();
    case 16:
      if (!center_nontrivial)
        throw Error(Errc::UnsupportedOrder,
                    "order-16 enumeration covers loops with nontrivial center; pass --center nontrivial");
      return enumerate_order16_center(jobs);
    case 24:
      return enumerate_order24();
    case 27:
      return enumerate_order27(jobs);
    case 32:
      if (!center_nontrivial || !exponent2)
        throw Error(Errc::UnsupportedOrder,
                    "order-32 enumeration covers exponent-2 loops with nontrivial center; pass --center nontrivial --exponent 2");
      return enumerate_order32(jobs);
    default:
      throw Error(Errc::UnsupportedOrder, "supported orders: 8, 16, 24, 27, 32");
  }
}

// ---------------------------------------------------------------------------
// Isomorphism classes of Terg(Z_p,a,b) for p in {2,3,5,7}

struct TergClassification {
  int p = 0;
  // class id per (a,b), indexed a*p+b
  std::vector<int> class_of;
  std::vector<std::vector<std::pair<int, int>>> classes;  // members per class
  std::vector<CatalogRecord> representatives;
  // how many isomorphisms were certified via explicit maps vs full search
  int certified_maps = 0;
  int refuted_pairs = 0;
  bool all_pairs_verified = false;  // p <= 3: the partition was re-checked pairwise
};

inline TergClassification classify_p3(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw Error(Errc::UnsupportedPrime, "classify-p3 supports p in {2,3,5,7}");
  TergClassification out;
  out.p = p;
  const int m = p * p;
  std::vector<LoopTable> loops(m);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) loops[a * p + b] = build_terg({p, a, b});

  // Union-find seeded by the certified family maps.
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
  auto unite = [&](int i, int j) { parent[find(i)] = find(j); };

  for (const auto& iso : terg_scaling_isos(p)) {
    unite(iso.from.a * p + iso.from.b, iso.to.a * p + iso.to.b);
    ++out.certified_maps;
  }
  if (p != 3) {
    // f_{(0,1,1)} : Terg(p,a,b) -> Terg(p,a,c) whenever a+c = b (mod p)
    for (int a = 1; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        const int c = ((b - a) % p + p) % p;
        if (terg_iso_map({p, a, b}, {p, a, c}, 0, 1, 1)) {
          unite(a * p + b, a * p + c);
          ++out.certified_maps;
        }
      }
  } else {
    // the exceptional p=3 isomorphisms
    const std::tuple<int, int, int, int, int, int, int> maps[] = {
        {0, 0, 0, 1, 0, 1, 1},  // f_{(0,1,1)} : (0,0) -> (0,1)
        {1, 1, 1, 2, 0, 0, 2},  // f_{(0,0,2)} : (1,1) -> (1,2)
        {2, 0, 2, 1, 0, 1, 2},  // f_{(0,1,2)} : (2,0) -> (2,1)
        {2, 0, 2, 2, 0, 1, 1},  // f_{(0,1,1)} : (2,0) -> (2,2)
    };
    for (const auto& [a1, b1, a2, b2, A, B, C] : maps) {
      if (!terg_iso_map({3, a1, b1}, {3, a2, b2}, A, B, C))
        throw Error(Errc::HypothesisViolated, "internal: exceptional p=3 map failed");
      unite(a1 * 3 + b1, a2 * 3 + b2);
      ++out.certified_maps;
    }
  }

  // Representatives refute across classes; for p <= 3 re-verify every pair.
  std::vector<int> reps;
  for (int i = 0; i < m; ++i)
    if (find(i) == i) reps.push_back(i);
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j) {
      if (find_isomorphism(loops[reps[i]], loops[reps[j]]))
        throw Error(Errc::HypothesisViolated, "internal: class representatives turned out isomorphic");
      ++out.refuted_pairs;
    }
  if (p <= 3) {
    out.all_pairs_verified = true;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const bool same = find(i) == find(j);
        const bool iso = find_isomorphism(loops[i], loops[j]).has_value();
        if (same != iso) throw Error(Errc::HypothesisViolated, "internal: partition disagrees with the full search");
      }
  }

  // Deterministic class ids ordered by smallest member (a,b).
  out.class_of.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    const int r = find(i);
    bool known = false;
    for (size_t c = 0; c < out.classes.size() && !known; ++c)
      if (find(out.classes[c][0].first * p + out.classes[c][0].second) == r) {
        out.class_of[i] = static_cast<int>(c);
        out.classes[c].emplace_back(i / p, i % p);
        known = true;
      }
    if (!known) {
      out.class_of[i] = static_cast<int>(out.classes.size());
      out.classes.push_back({{i / p, i % p}});
    }
  }
  for (const auto& cls : out.classes) {
    std::ostringstream prov;
    prov << "terg n=" << p << " a=" << cls[0].first << " b=" << cls[0].second;
    out.representatives.push_back(make_record(loops[cls[0].first * p + cls[0].second], prov.str()));
  }
  return out;
}

}  // namespace aloops

#endif  // ALOOPS_PIPELINES_HPP
