#pragma once

// Test-side reference models. Nothing here calls the library's walks.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dehnfill/farey.hpp"
#include "dehnfill/serialize.hpp"

namespace testing {

using Pair = std::pair<std::int64_t, std::int64_t>;  // (p, q) in normal form
using Tri = std::array<Pair, 3>;                   // sorted

inline Pair norm_pair(std::int64_t p, std::int64_t q) {
  if (q < 0 || (q == 0 && p < 0)) return {-p, -q};
  return {p, q};
}

inline Tri sorted(Tri t) {
  std::sort(t.begin(), t.end());
  return t;
}

inline std::int64_t det(const Pair& a, const Pair& b) { return a.first * b.second - b.first * a.second; }

// The three triangles sharing an edge with t.
inline std::vector<Tri> adjacent(const Tri& t) {
  std::vector<Tri> out;
  for (int i = 0; i < 3; ++i) {
    const Pair& a = t[(i + 1) % 3];
    const Pair& b = t[(i + 2) % 3];
    Pair c = norm_pair(a.first + b.first, a.second + b.second);
    if (c == t[i]) c = norm_pair(a.first - b.first, a.second - b.second);
    out.push_back(sorted({a, b, c}));
  }
  return out;
}

// Plain BFS over the Farey graph from a root, to a fixed depth.
struct Bfs {
  std::map<Tri, int> depth;
  std::map<Tri, Tri> parent;
  std::vector<Tri> order;

  Bfs(const Tri& root, int max_depth) {
    depth[root] = 0;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Tri t = order[i];
      if (depth[t] == max_depth) continue;
      for (const auto& n : adjacent(t)) {
        if (depth.count(n)) continue;
        depth[n] = depth[t] + 1;
        parent[n] = t;
        order.push_back(n);
      }
    }
  }

  // Path from the root to t, both ends included.
  std::vector<Tri> path_to(Tri t) const {
    std::vector<Tri> out{t};
    while (depth.at(t) > 0) {
      t = parent.at(t);
      out.push_back(t);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  // Through the lowest common ancestor in this BFS tree.
  int distance(Tri a, Tri b) const {
    int d = 0;
    while (a != b) {
      if (depth.at(a) >= depth.at(b)) {
        a = parent.at(a);
      } else {
        b = parent.at(b);
      }
      ++d;
    }
    return d;
  }
};

inline bool contains(const Tri& t, const Pair& s) { return std::find(t.begin(), t.end(), s) != t.end(); }

inline Pair even_vertex(const Tri& t, int rp, int rq) {
  for (const auto& v : t) {
    if (((v.first % 2) + 2) % 2 == rp && ((v.second % 2) + 2) % 2 == rq) return v;
  }
  return {0, 0};
}

inline dehnfill::Slope slope(const Pair& p) { return dehnfill::Slope(p.first, p.second); }

inline Pair pair(const dehnfill::Slope& s) { return {*s.p().to_int64(), *s.q().to_int64()}; }

inline Tri tri(const dehnfill::FareyTriangle& t) {
  return sorted({pair(t.vertices()[0]), pair(t.vertices()[1]), pair(t.vertices()[2])});
}

inline dehnfill::FareyTriangle triangle(const Tri& t) {
  return dehnfill::FareyTriangle(slope(t[0]), slope(t[1]), slope(t[2]));
}

inline std::string data_path(const std::string& name) { return std::string(DEHNFILL_DATA_DIR) + "/" + name; }

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

}  // namespace testing
