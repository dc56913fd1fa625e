#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dehnfill/slope.hpp"

namespace dehnfill {

namespace detail {
struct TriangleAccess;
}

// An ideal triangle of the Farey tessellation, i.e. one isotopy class of
// one-vertex two-triangle torus triangulations. Vertices are kept sorted.
class FareyTriangle {
 public:
  // Throws Error(not_neighbors) unless every pair of vertices has |det| = 1.
  FareyTriangle(Slope a, Slope b, Slope c);

  static FareyTriangle parse(const std::array<std::string, 3>& vertices);

  const std::array<Slope, 3>& vertices() const { return v_; }
  bool contains(const Slope& s) const;
  // The two vertices other than `v`; throws Error(not_a_vertex).
  std::pair<Slope, Slope> others(const Slope& v) const;

  // "{a, b, c}" in sorted order.
  std::string str() const;

  friend bool operator==(const FareyTriangle&, const FareyTriangle&) = default;
  friend auto operator<=>(const FareyTriangle& a, const FareyTriangle& b) {
    return a.v_ <=> b.v_;
  }

 private:
  struct Unchecked {};
  struct Presorted {};
  FareyTriangle(std::array<Slope, 3> v, Unchecked);
  FareyTriangle(std::array<Slope, 3> v, Presorted) : v_(std::move(v)) {}
  friend struct detail::TriangleAccess;

  std::array<Slope, 3> v_;
};

// One layering: the boundary edge of slope `layered_edge` is flipped.
struct GeodesicStep {
  FareyTriangle from;
  Slope layered_edge;
  FareyTriangle to;

  friend bool operator==(const GeodesicStep&, const GeodesicStep&) = default;
};

// The two third vertices of the triangles on edge {a, b}: the mediant first,
// then the difference. Throws Error(not_neighbors) if |det(a, b)| != 1.
std::pair<Slope, Slope> completions(const Slope& a, const Slope& b);

// Normal form of alpha + multiplier * beta on the given representatives.
Slope farey_sum(const SignedPair& alpha, const SignedPair& beta, const Integer& multiplier);

Slope even_label(const FareyTriangle& t, EvenClass ec);

// The triangle across the edge opposite `v`.
FareyTriangle neighbor(const FareyTriangle& t, const Slope& v);

// Slope of the filling realised by folding the boundary torus over edge `v`.
Slope fold_over(const FareyTriangle& t, const Slope& v);
Slope fold_even(const FareyTriangle& t, EvenClass ec);

// The unique neighbour strictly closer to the fan of `alpha`.
// Throws Error(already_in_fan) if alpha is a vertex of t.
GeodesicStep step_toward(const FareyTriangle& t, const Slope& alpha);

// Steps until alpha is a vertex; empty when it already is.
std::vector<GeodesicStep> geodesic_to_fan(const FareyTriangle& t, const Slope& alpha);

// Length of geodesic_to_fan without materialising the steps.
std::uint64_t fan_distance(const FareyTriangle& t, const Slope& alpha);

// Distance in the dual tree.
std::uint64_t tree_distance(const FareyTriangle& a, const FareyTriangle& b);

// Distinct even labels on the fan-to-fan geodesic, minus one; 0 when equal.
// Throws Error(odd_slope) if either slope is odd.
std::uint64_t even_distance(const Slope& a, const Slope& b, EvenClass ec);

// The triangle of the fan of alpha in which alpha lies between the other two
// vertices: alpha is the mediant of its Farey parents x < alpha < y (1/0 read
// as +infinity), so integers n give {n-1, n, 1/0}. For alpha = 1/0 the
// circular order wraps and {-1/1, 0/1, 1/0} is used.
FareyTriangle canonical_triangle(const Slope& alpha, EvenClass ec);

// Breadth-first enumeration of the dual tree.
struct BallNode {
  FareyTriangle triangle;
  unsigned depth;
  std::ptrdiff_t parent;  // -1 for the root
};

struct Ball {
  std::vector<BallNode> nodes;  // BFS order, nodes[0] is the root
};

inline constexpr unsigned kDefaultBallDepthCap = 25;

// Throws Error(resource) when depth exceeds depth_cap.
Ball ball(const FareyTriangle& root, unsigned depth, unsigned depth_cap = kDefaultBallDepthCap);

// Guard for iterated walks; exceeding it throws Error(resource).
inline constexpr std::uint64_t kMaxWalkSteps = 50'000'000;

}  // namespace dehnfill
