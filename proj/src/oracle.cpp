#include "dehnfill/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dehnfill {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++check_.cases;
    if (ok) return;
    if (check_.failures++ == 0) check_.first_failure = what;
  }
  // Lazily formatted variant for hot loops.
  template <class F>
  void expect_lazy(bool ok, F&& what) {
    ++check_.cases;
    if (ok) return;
    if (check_.failures++ == 0) check_.first_failure = what();
  }

  OracleCheck done() { return std::move(check_); }

 private:
  OracleCheck check_;
};

std::uint64_t expected_ball_size(unsigned depth) { return 1 + 3 * ((std::uint64_t{1} << depth) - 1); }

}  // namespace

TreeOracle::TreeOracle(const FareyTriangle& root, unsigned depth) : ball_(ball(root, depth)) {
  adjacent_.resize(ball_.nodes.size());
  for (std::size_t i = 0; i < ball_.nodes.size(); ++i) {
    const auto parent = ball_.nodes[i].parent;
    if (parent >= 0) {
      adjacent_[i].push_back(static_cast<std::size_t>(parent));
      adjacent_[static_cast<std::size_t>(parent)].push_back(i);
    }
    for (const auto& v : ball_.nodes[i].triangle.vertices()) fans_[v].push_back(i);
  }
}

std::uint64_t TreeOracle::distance(std::size_t i, std::size_t j) const {
  std::uint64_t d = 0;
  while (i != j) {
    if (ball_.nodes[i].depth >= ball_.nodes[j].depth) {
      i = static_cast<std::size_t>(ball_.nodes[i].parent);
    } else {
      j = static_cast<std::size_t>(ball_.nodes[j].parent);
    }
    ++d;
  }
  return d;
}

std::vector<Slope> TreeOracle::slopes() const {
  std::vector<Slope> out;
  out.reserve(fans_.size());
  for (const auto& [s, members] : fans_) out.push_back(s);
  return out;
}

const std::vector<std::size_t>& TreeOracle::fan(const Slope& s) const {
  static const std::vector<std::size_t> kEmpty;
  auto it = fans_.find(s);
  return it == fans_.end() ? kEmpty : it->second;
}

TreeOracle::FanField TreeOracle::fan_field(const Slope& s) const {
  FanField f{std::vector<std::uint64_t>(size(), kFar), std::vector<std::ptrdiff_t>(size(), -1)};
  std::deque<std::size_t> queue;
  for (auto i : fan(s)) {
    f.distance[i] = 0;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (auto j : adjacent_[i]) {
      if (f.distance[j] != kFar) continue;
      f.distance[j] = f.distance[i] + 1;
      f.toward[j] = static_cast<std::ptrdiff_t>(i);
      queue.push_back(j);
    }
  }
  return f;
}

std::vector<OracleCheck> oracle_check(const FareyTriangle& base, EvenClass ec, unsigned depth) {
  const TreeOracle oracle(base, depth);
  const std::size_t n = oracle.size();
  std::vector<OracleCheck> out;

  {
    Recorder r("ball_size");
    r.expect(n == expected_ball_size(depth),
             "ball has " + std::to_string(n) + " triangles, expected " +
                 std::to_string(expected_ball_size(depth)));
    out.push_back(r.done());
  }
  {
    Recorder r("residue_classes");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& t = oracle.node(i).triangle;
      std::set<std::pair<bool, bool>> classes;
      int even = 0;
      for (const auto& v : t.vertices()) {
        classes.insert({v.p().is_odd(), v.q().is_odd()});
        even += is_even(v, ec) ? 1 : 0;
      }
      r.expect(classes.size() == 3 && even == 1, "residues of " + t.str());
    }
    out.push_back(r.done());
  }
  {
    Recorder r("neighbor_involution");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& t = oracle.node(i).triangle;
      for (const auto& v : t.vertices()) {
        const FareyTriangle next = neighbor(t, v);
        const Slope w = fold_over(t, v);
        r.expect(next != t && next.contains(w) && !next.contains(v) && neighbor(next, w) == t,
                 "neighbor of " + t.str() + " across " + v.str());
      }
    }
    out.push_back(r.done());
  }
  {
    Recorder r("fold_step");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& t = oracle.node(i).triangle;
      const Slope label = even_label(t, ec);
      r.expect(fold_even(t, ec) == even_label(neighbor(t, label), ec), "fold of " + t.str());
    }
    out.push_back(r.done());
  }
  {
    Recorder r("tree_distance");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = oracle.node(i).triangle;
      for (std::size_t j = i; j < n; ++j) {
        const auto& b = oracle.node(j).triangle;
        r.expect_lazy(tree_distance(a, b) == oracle.distance(i, j),
                      [&] { return "distance " + a.str() + " to " + b.str(); });
      }
    }
    out.push_back(r.done());
  }

  const std::vector<Slope> slopes = oracle.slopes();
  {
    Recorder step("step_toward");
    Recorder fan("fan_distance");
    Recorder geo("geodesic_to_fan");
    for (const auto& s : slopes) {
      const auto field = oracle.fan_field(s);
      const bool target_even = is_even(s, ec);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& t = oracle.node(i).triangle;
        const std::uint64_t d = field.distance[i];
        if (d > 0) {
          std::ptrdiff_t closer = -1;
          int count = 0;
          for (auto j : oracle.adjacent(i)) {
            if (field.distance[j] + 1 == d) {
              closer = static_cast<std::ptrdiff_t>(j);
              ++count;
            }
          }
          const GeodesicStep st = step_toward(t, s);
          step.expect_lazy(count == 1 && st.to == oracle.node(static_cast<std::size_t>(closer)).triangle &&
                               st.from == t && !st.to.contains(st.layered_edge),
                           [&] { return "step from " + t.str() + " toward " + s.str(); });
        }
        fan.expect_lazy(fan_distance(t, s) == d,
                        [&] { return "fan distance from " + t.str() + " to " + s.str(); });
        // Materialised paths are only ever requested toward even slopes.
        if (!target_even) continue;
        const auto path = geodesic_to_fan(t, s);
        std::size_t end = i;
        while (field.toward[end] >= 0) end = static_cast<std::size_t>(field.toward[end]);
        const FareyTriangle& last = path.empty() ? t : path.back().to;
        bool chained = true;
        for (std::size_t k = 0; k < path.size(); ++k) {
          const FareyTriangle& from = k == 0 ? t : path[k - 1].to;
          chained = chained && path[k].from == from;
        }
        geo.expect_lazy(path.size() == d && chained && last == oracle.node(end).triangle,
                        [&] { return "geodesic from " + t.str() + " to fan of " + s.str(); });
      }
    }
    out.push_back(step.done());
    out.push_back(fan.done());
    out.push_back(geo.done());
  }
  {
    Recorder even("even_distance");
    Recorder bound("even_distance_bound");
    std::vector<Slope> evens;
    for (const auto& s : slopes) {
      if (is_even(s, ec)) evens.push_back(s);
    }
    std::vector<FareyTriangle> canon;
    canon.reserve(evens.size());
    for (const auto& s : evens) canon.push_back(canonical_triangle(s, ec));
    for (std::size_t a = 0; a < evens.size(); ++a) {
      const auto field = oracle.fan_field(evens[a]);
      for (std::size_t b = 0; b < evens.size(); ++b) {
        std::uint64_t expected = 0;
        if (a != b) {
          std::size_t best = 0;
          std::uint64_t best_d = TreeOracle::kFar;
          for (auto i : oracle.fan(evens[b])) {
            if (field.distance[i] < best_d) {
              best_d = field.distance[i];
              best = i;
            }
          }
          std::set<Slope> labels;
          for (std::size_t i = best;; i = static_cast<std::size_t>(field.toward[i])) {
            labels.insert(even_label(oracle.node(i).triangle, ec));
            if (field.toward[i] < 0) break;
          }
          expected = labels.size() - 1;
        }
        const std::uint64_t got = even_distance(evens[a], evens[b], ec);
        even.expect_lazy(got == expected, [&] {
          return "even distance " + evens[a].str() + " to " + evens[b].str() + ": got " +
                 std::to_string(got) + ", oracle " + std::to_string(expected);
        });
        if (a < b) {
          // Fan-to-fan geodesics start and end with a cross edge, so 2d - 1 is sharp.
          bound.expect_lazy(2 * got - 1 <= tree_distance(canon[a], canon[b]), [&] {
            return "2 * even distance - 1 exceeds canonical distance for " + evens[a].str() + ", " +
                   evens[b].str();
          });
        }
      }
    }
    out.push_back(even.done());
    out.push_back(bound.done());
  }
  return out;
}

}  // namespace dehnfill
