#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catmod/natural.hpp"

namespace catmod::enumerate {

// Enumeration sizes grow exponentially; exceeding a bound is a refusal,
// not an attempt.
struct Bounds {
  std::uint64_t binary_trees = 12;
  std::uint64_t trees012 = 12;
  std::uint64_t motzkin_paths = 16;
  std::uint64_t hex_trees = 10;
  std::uint64_t partitions = 7;
};

struct bound_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Binary tree with distinguished left/right children; the empty tree is
// nullptr. Nodes live in an arena and are shared across the memoized
// per-size lists.
struct BinaryNode {
  const BinaryNode* left = nullptr;
  const BinaryNode* right = nullptr;
};

class BinaryTreeArena {
 public:
  explicit BinaryTreeArena(Bounds bounds = {}) : bounds_(bounds) {
    by_size_.push_back({nullptr});  // the empty tree
  }

  // All binary trees on n vertices, each exactly once, in a fixed order.
  const std::vector<const BinaryNode*>& trees(std::uint64_t n) {
    if (n > bounds_.binary_trees)
      throw bound_error("binary_trees: n exceeds enumeration bound");
    while (by_size_.size() <= n) {
      std::uint64_t m = by_size_.size();
      std::vector<const BinaryNode*> list;
      for (std::uint64_t i = 0; i < m; ++i) {
        for (const BinaryNode* l : by_size_[i]) {
          for (const BinaryNode* r : by_size_[m - 1 - i]) {
            pool_.push_back(BinaryNode{l, r});
            list.push_back(&pool_.back());
          }
        }
      }
      by_size_.push_back(std::move(list));
    }
    return by_size_[n];
  }

  // Canonical form as an unordered rooted tree: children codes sorted.
  const std::string& canon(const BinaryNode* t) {
    static const std::string empty;
    if (t == nullptr) return empty;
    auto it = canon_.find(t);
    if (it != canon_.end()) return it->second;
    const std::string& a = canon(t->left);
    const std::string& b = canon(t->right);
    std::string code = "(";
    if (a <= b) {
      code += a;
      code += b;
    } else {
      code += b;
      code += a;
    }
    code += ")";
    return canon_.emplace(t, std::move(code)).first->second;
  }

  // Orbit size of t under the ambient automorphism action:
  // |O| = |O(T')|^2 when the subtrees are isomorphic, 2|O(T')||O(T'')|
  // otherwise; the empty tree is a fixed point.
  std::uint64_t orbit_size(const BinaryNode* t) {
    if (t == nullptr) return 1;
    auto it = orbit_.find(t);
    if (it != orbit_.end()) return it->second;
    std::uint64_t l = orbit_size(t->left);
    std::uint64_t r = orbit_size(t->right);
    std::uint64_t size = (canon(t->left) == canon(t->right)) ? l * l : 2 * l * r;
    orbit_.emplace(t, size);
    return size;
  }

 private:
  Bounds bounds_;
  std::deque<BinaryNode> pool_;
  std::vector<std::vector<const BinaryNode*>> by_size_;
  std::unordered_map<const BinaryNode*, std::string> canon_;
  std::unordered_map<const BinaryNode*, std::uint64_t> orbit_;
};

struct OrbitCensus {
  std::map<std::uint32_t, std::uint64_t> orbits_by_omega;  // omega(|O|) -> #orbits
  std::uint64_t orbit_count = 0;
  std::uint64_t fixed_points = 0;
  Natural total_size = 0;  // must equal C_n
};

// Partition the n-vertex binary trees into orbits keyed by canonical
// unordered form. Every class multiplicity must match the recursive
// orbit size, which ties the recursion to the ground-truth enumeration.
inline OrbitCensus orbit_census(BinaryTreeArena& arena, std::uint64_t n) {
  std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>> classes;
  for (const BinaryNode* t : arena.trees(n)) {
    auto& entry = classes[arena.canon(t)];
    entry.first += 1;
    if (entry.first == 1) entry.second = arena.orbit_size(t);
  }
  OrbitCensus census;
  for (const auto& [code, entry] : classes) {
    auto [multiplicity, size] = entry;
    if (multiplicity != size)
      throw internal_error("orbit census: class multiplicity differs from orbit size");
    std::uint32_t omega = 0;
    for (std::uint64_t s = size; (s & 1) == 0; s >>= 1) ++omega;
    census.orbits_by_omega[omega] += 1;
    census.orbit_count += 1;
    if (size == 1) census.fixed_points += 1;
    census.total_size += size;
  }
  return census;
}

inline OrbitCensus orbit_census(std::uint64_t n, Bounds bounds = {}) {
  BinaryTreeArena arena(bounds);
  return orbit_census(arena, n);
}

// Ordered trees where every vertex has at most two children and a single
// child is not left/right distinguished. Entries carry the plane code and
// the code of the mirror image so the symmetry filter is a comparison.
class Trees012 {
 public:
  explicit Trees012(Bounds bounds = {}) : bounds_(bounds) {}

  struct Entry {
    std::string code;
    std::string mirror;
  };

  const std::vector<Entry>& list(std::uint64_t edges) {
    if (edges > bounds_.trees012)
      throw bound_error("trees012: n exceeds enumeration bound");
    while (lists_.size() <= edges) {
      std::uint64_t m = lists_.size();
      std::vector<Entry> out;
      if (m == 0) {
        out.push_back({".", "."});
      } else {
        for (const Entry& child : lists_[m - 1])
          out.push_back({"(" + child.code + ")", "(" + child.mirror + ")"});
        if (m >= 2) {
          for (std::uint64_t i = 0; i + 2 <= m; ++i) {
            for (const Entry& a : lists_[i]) {
              for (const Entry& b : lists_[m - 2 - i]) {
                out.push_back({"(" + a.code + b.code + ")",
                               "(" + b.mirror + a.mirror + ")"});
              }
            }
          }
        }
      }
      lists_.push_back(std::move(out));
    }
    return lists_[edges];
  }

  std::uint64_t count(std::uint64_t edges, bool symmetric_only) {
    const auto& l = list(edges);
    if (!symmetric_only) return l.size();
    std::uint64_t c = 0;
    for (const Entry& e : l)
      if (e.code == e.mirror) ++c;
    return c;
  }

 private:
  Bounds bounds_;
  std::vector<std::vector<Entry>> lists_;
};

inline std::uint64_t trees012(std::uint64_t edges, bool symmetric_only,
                              Bounds bounds = {}) {
  return Trees012(bounds).count(edges, symmetric_only);
}

enum class PathVariant { path, prefix, symmetric };

namespace detail {

// Literal walk over step sequences (up, level, down) with height >= 0.
// For the symmetric variant the second half is forced to mirror the
// first, so each symmetric path is still walked exactly once.
inline void motzkin_dfs(std::vector<int>& steps, std::size_t i, std::int64_t height,
                        std::size_t length, PathVariant variant, std::uint64_t& count) {
  if (i == length) {
    if (variant == PathVariant::prefix || height == 0) ++count;
    return;
  }
  bool forced = variant == PathVariant::symmetric && 2 * i >= length;
  for (int s : {1, 0, -1}) {
    if (forced && s != -steps[length - 1 - i]) continue;
    std::int64_t h = height + s;
    if (h < 0) continue;
    if (variant != PathVariant::prefix &&
        h > static_cast<std::int64_t>(length - i - 1))
      continue;  // cannot return to the axis
    steps[i] = s;
    motzkin_dfs(steps, i + 1, h, length, variant, count);
  }
}

}  // namespace detail

inline std::uint64_t motzkin_paths(std::uint64_t length, PathVariant variant,
                                   Bounds bounds = {}) {
  if (length > bounds.motzkin_paths)
    throw bound_error("motzkin_paths: n exceeds enumeration bound");
  std::vector<int> steps(length, 0);
  std::uint64_t count = 0;
  detail::motzkin_dfs(steps, 0, 0, length, variant, count);
  return count;
}

namespace detail {

using Continuation = std::function<void()>;

// Hex trees in continuation style: each completed tree reaches `done`
// exactly once. Child sets are {}, {L}, {M}, {R}, {L,R}.
inline void hex_walk(std::uint64_t edges, const Continuation& done) {
  if (edges == 0) {
    done();
    return;
  }
  for (int position = 0; position < 3; ++position) hex_walk(edges - 1, done);
  if (edges >= 2) {
    for (std::uint64_t i = 0; i + 2 <= edges; ++i)
      hex_walk(i, [&] { hex_walk(edges - 2 - i, done); });
  }
}

inline void partition_walk(std::uint32_t mask, const Continuation& done) {
  if ((mask & (mask - 1)) == 0) {  // singleton label: a leaf
    done();
    return;
  }
  std::uint32_t low = mask & (~mask + 1);
  std::uint32_t rest = mask ^ low;
  // Enumerate unordered root splits once by keeping the lowest element
  // in the first part.
  for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
    std::uint32_t first = low | sub;
    std::uint32_t second = mask ^ first;
    if (second != 0)
      partition_walk(first, [&] { partition_walk(second, done); });
    if (sub == 0) break;
  }
}

}  // namespace detail

inline std::uint64_t hex_trees(std::uint64_t edges, Bounds bounds = {}) {
  if (edges > bounds.hex_trees)
    throw bound_error("hex_trees: n exceeds enumeration bound");
  std::uint64_t count = 0;
  detail::hex_walk(edges, [&] { ++count; });
  return count;
}

// Binary total partitions of a d-element set: unordered labeled trees
// splitting the root label into two disjoint nonempty parts all the way
// down to singletons.
inline std::uint64_t total_binary_partitions(std::uint64_t d, Bounds bounds = {}) {
  if (d > bounds.partitions)
    throw bound_error("total_binary_partitions: d exceeds enumeration bound");
  if (d == 0) throw std::invalid_argument("total_binary_partitions: empty set");
  std::uint64_t count = 0;
  std::uint32_t mask = static_cast<std::uint32_t>((1u << d) - 1);
  detail::partition_walk(mask, [&] { ++count; });
  return count;
}

}  // namespace catmod::enumerate
