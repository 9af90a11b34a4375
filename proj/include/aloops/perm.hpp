#ifndef ALOOPS_PERM_HPP
#define ALOOPS_PERM_HPP

// Permutations of {0,...,n-1} and generated permutation groups. Groups at the
// scales handled here (a few tens of thousands of elements at most) are stored
// as fully enumerated closures.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "aloops/loop.hpp"

namespace aloops {

struct Permutation {
  std::vector<Elem> img;

  Permutation() = default;
  explicit Permutation(std::vector<Elem> images) : img(std::move(images)) {}

  static Permutation identity(int n) {
    Permutation p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = static_cast<Elem>(i);
    return p;
  }

  int degree() const noexcept { return static_cast<int>(img.size()); }
  Elem operator()(Elem x) const { return img[x]; }

  bool is_bijection() const {
    std::vector<char> seen(img.size(), 0);
    for (Elem v : img) {
      if (v >= img.size() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  bool is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<Elem>(i);
    return r;
  }

  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator!=(const Permutation& o) const { return img != o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }
};

// Function composition: (a*b)(x) = a(b(x)), b applied first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(Errc::DegreeMismatch, "composing permutations of different degree");
  Permutation r;
  r.img.resize(a.img.size());
  for (size_t i = 0; i < b.img.size(); ++i) r.img[i] = a.img[b.img[i]];
  return r;
}

namespace detail {

struct PermHash {
  size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem e : v) {
      h ^= static_cast<std::uint64_t>(e) + 1;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace detail

class PermutationGroup {
 public:
  PermutationGroup() = default;

  // Closure of the generators under composition (finite, so inverses come for
  // free). Elements end up sorted lexicographically.
  static PermutationGroup generate(const std::vector<Permutation>& gens) {
    PermutationGroup g;
    if (gens.empty()) return g;
    const int deg = gens[0].degree();
    for (const auto& p : gens) {
      if (p.degree() != deg) throw Error(Errc::DegreeMismatch, "generators of different degree");
      if (!p.is_bijection()) throw Error(Errc::NotBijection, "generator is not a bijection");
    }
    g.degree_ = deg;
    g.gens_ = gens;

    std::unordered_set<std::vector<Elem>, detail::PermHash> seen;
    std::vector<Permutation> queue{Permutation::identity(deg)};
    seen.insert(queue[0].img);
    for (size_t i = 0; i < queue.size(); ++i) {
      const Permutation cur = queue[i];
      for (const auto& gen : gens) {
        Permutation nxt = compose(gen, cur);
        if (seen.insert(nxt.img).second) queue.push_back(std::move(nxt));
      }
    }
    g.elems_ = std::move(queue);
    std::sort(g.elems_.begin(), g.elems_.end());
    g.index_.reserve(g.elems_.size());
    for (const auto& p : g.elems_) g.index_.insert(p.img);
    return g;
  }

  static PermutationGroup trivial(int degree) { return generate({Permutation::identity(degree)}); }

  int degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return elems_.size(); }
  bool contains(const Permutation& p) const { return p.degree() == degree_ && index_.count(p.img) > 0; }
  const std::vector<Permutation>& elements() const noexcept { return elems_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }

  // A small generating subset (greedy over the sorted element list): each
  // accepted candidate at least doubles the generated subgroup, so closures
  // are recomputed only O(log |G|) times.
  std::vector<Permutation> small_generating_set() const {
    std::vector<Permutation> out;
    if (elems_.empty()) return out;
    std::unordered_set<std::vector<Elem>, detail::PermHash> sub;
    sub.insert(Permutation::identity(degree_).img);
    for (const auto& cand : elems_) {
      if (sub.size() == order()) break;
      if (sub.count(cand.img)) continue;
      out.push_back(cand);
      std::vector<Permutation> queue{Permutation::identity(degree_)};
      sub.clear();
      sub.insert(queue[0].img);
      for (size_t i = 0; i < queue.size(); ++i) {
        const Permutation cur = queue[i];
        for (const auto& gen : out) {
          Permutation nxt = compose(gen, cur);
          if (sub.insert(nxt.img).second) queue.push_back(std::move(nxt));
        }
      }
    }
    if (out.empty()) out.push_back(Permutation::identity(degree_));
    return out;
  }

 private:
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::unordered_set<std::vector<Elem>, detail::PermHash> index_;
};

inline PermutationGroup generated_group(const std::vector<Permutation>& gens) {
  return PermutationGroup::generate(gens);
}

// Conjugacy classes by brute force, each class sorted, classes ordered by
// (size, lexicographically smallest member).
inline std::vector<std::vector<Permutation>> conjugacy_classes(const PermutationGroup& g) {
  std::unordered_set<std::vector<Elem>, detail::PermHash> assigned;
  std::vector<std::vector<Permutation>> classes;
  for (const auto& a : g.elements()) {
    if (assigned.count(a.img)) continue;
    std::vector<Permutation> cls;
    for (const auto& h : g.elements()) {
      Permutation c = compose(h, compose(a, h.inverse()));
      if (assigned.insert(c.img).second) cls.push_back(std::move(c));
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return classes;
}

}  // namespace aloops

#endif  // ALOOPS_PERM_HPP
