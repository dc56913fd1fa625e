#include "dehnfill/farey.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>

#include "dehnfill/error.hpp"

namespace dehnfill {

namespace detail {
struct TriangleAccess {
  static FareyTriangle make(std::array<Slope, 3> v) {
    return FareyTriangle(std::move(v), FareyTriangle::Unchecked{});
  }
  static FareyTriangle make_sorted(std::array<Slope, 3> v) {
    return FareyTriangle(std::move(v), FareyTriangle::Presorted{});
  }
};
}  // namespace detail

namespace {

// Walks run on plain int64 coordinates while they fit and restart on the
// arbitrary-precision path if any product or sum overflows.
struct Overflow {};

struct SmallSlope {
  std::int64_t p;
  std::int64_t q;
  friend bool operator==(const SmallSlope&, const SmallSlope&) = default;
};

template <class S>
using Tri = std::array<S, 3>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

SmallSlope normal_form(std::int64_t p, std::int64_t q) {
  if (q < 0 || (q == 0 && p < 0)) {
    if (p == std::numeric_limits<std::int64_t>::min() || q == std::numeric_limits<std::int64_t>::min()) {
      throw Overflow{};
    }
    return {-p, -q};
  }
  return {p, q};
}

int sign_det(const SmallSlope& a, const SmallSlope& b) {
  const std::int64_t x = checked_mul(a.p, b.q);
  const std::int64_t y = checked_mul(b.p, a.q);
  return (x > y) - (x < y);
}

int sign_det(const Slope& a, const Slope& b) { return det(a, b).sign(); }

bool even(const SmallSlope& s, EvenClass ec) {
  return static_cast<int>(s.p & 1) == ec.rp() && static_cast<int>(s.q & 1) == ec.rq();
}

bool even(const Slope& s, EvenClass ec) { return is_even(s, ec); }

// Third vertex of the other triangle on edge {a, b} (|det(a, b)| = 1 assumed).
SmallSlope opposite(const SmallSlope& a, const SmallSlope& b, const SmallSlope& away_from) {
  SmallSlope sum = normal_form(checked_add(a.p, b.p), checked_add(a.q, b.q));
  if (sum != away_from) return sum;
  return normal_form(checked_sub(a.p, b.p), checked_sub(a.q, b.q));
}

Slope opposite(const Slope& a, const Slope& b, const Slope& away_from) {
  Slope sum = Slope::from_primitive(a.p() + b.p(), a.q() + b.q());
  if (sum != away_from) return sum;
  return Slope::from_primitive(a.p() - b.p(), a.q() - b.q());
}

Slope to_slope(const SmallSlope& s) { return Slope::from_primitive(s.p, s.q); }
const Slope& to_slope(const Slope& s) { return s; }

std::optional<SmallSlope> to_small(const Slope& s) {
  auto p = s.p().to_int64();
  auto q = s.q().to_int64();
  if (!p || !q) return std::nullopt;
  return SmallSlope{*p, *q};
}

std::optional<Tri<SmallSlope>> to_small(const Tri<Slope>& t) {
  Tri<SmallSlope> out{};
  for (int i = 0; i < 3; ++i) {
    auto s = to_small(t[i]);
    if (!s) return std::nullopt;
    out[i] = *s;
  }
  return out;
}

// Runs body on int64 coordinates when possible, else on the given values.
template <class Body>
auto dispatch(const Tri<Slope>& t, const Slope& target, Body&& body) {
  if (auto st = to_small(t)) {
    if (auto ss = to_small(target)) {
      try {
        return body(*st, *ss);
      } catch (const Overflow&) {
      }
    }
  }
  return body(t, target);
}

template <class S>
int index_of(const Tri<S>& v, const S& s) {
  for (int i = 0; i < 3; ++i) {
    if (v[i] == s) return i;
  }
  return -1;
}

// Index of the vertex whose opposite edge separates the triangle from target t.
// The edge {a, b} leads toward t iff t lies on the arc between a and b that
// avoids the third vertex c, read off from the circular-order sign test.
template <class S>
int exit_vertex(const Tri<S>& v, const S& t) {
  const int dt[3] = {sign_det(v[0], t), sign_det(v[1], t), sign_det(v[2], t)};
  // de[i] = sign det(v[i], v[i + 1]); the c-side sign for vertex i is
  // sign det(v[j], v[i]) * sign det(v[i], v[k]) = de[j'] * de[i'] below.
  const int de[3] = {sign_det(v[0], v[1]), sign_det(v[1], v[2]), sign_det(v[2], v[0])};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const int side_t = -dt[j] * dt[k];
    const int side_c = de[i] * de[k];
    if (side_t != side_c) return i;
  }
  throw std::logic_error("no exit edge found for " + to_slope(t).str());
}

template <class S>
void step_in_place(Tri<S>& v, int i) {
  v[i] = opposite(v[(i + 1) % 3], v[(i + 2) % 3], v[i]);
}

inline void count_step(std::uint64_t& steps) {
  if (++steps > kMaxWalkSteps) {
    throw Error(ErrorKind::resource, "walk exceeded step limit");
  }
}

void require_unimodular(const Slope& a, const Slope& b) {
  if (abs(det(a, b)) != Integer(1)) {
    throw Error(ErrorKind::not_neighbors,
                "slopes " + a.str() + " and " + b.str() + " are not Farey neighbours");
  }
}

void require_even(const Slope& s, EvenClass ec) {
  if (!is_even(s, ec)) {
    throw Error(ErrorKind::odd_slope, "slope " + s.str() + " is not even for class " + ec.str());
  }
}

FareyTriangle to_triangle(Tri<SmallSlope> v) {
  std::sort(v.begin(), v.end(), [](const SmallSlope& a, const SmallSlope& b) {
    return a.p < b.p || (a.p == b.p && a.q < b.q);
  });
  return detail::TriangleAccess::make_sorted({to_slope(v[0]), to_slope(v[1]), to_slope(v[2])});
}

FareyTriangle to_triangle(const Tri<Slope>& v) { return detail::TriangleAccess::make(v); }

}  // namespace

FareyTriangle::FareyTriangle(Slope a, Slope b, Slope c) : v_{std::move(a), std::move(b), std::move(c)} {
  require_unimodular(v_[0], v_[1]);
  require_unimodular(v_[1], v_[2]);
  require_unimodular(v_[0], v_[2]);
  std::sort(v_.begin(), v_.end());
}

FareyTriangle::FareyTriangle(std::array<Slope, 3> v, Unchecked) : v_(std::move(v)) {
  std::sort(v_.begin(), v_.end());
}

FareyTriangle FareyTriangle::parse(const std::array<std::string, 3>& vertices) {
  return FareyTriangle(Slope::parse(vertices[0]), Slope::parse(vertices[1]),
                       Slope::parse(vertices[2]));
}

bool FareyTriangle::contains(const Slope& s) const { return index_of(v_, s) >= 0; }

std::pair<Slope, Slope> FareyTriangle::others(const Slope& v) const {
  const int i = index_of(v_, v);
  if (i < 0) {
    throw Error(ErrorKind::not_a_vertex, v.str() + " is not a vertex of " + str());
  }
  return {v_[(i + 1) % 3], v_[(i + 2) % 3]};
}

std::string FareyTriangle::str() const {
  return "{" + v_[0].str() + ", " + v_[1].str() + ", " + v_[2].str() + "}";
}

std::pair<Slope, Slope> completions(const Slope& a, const Slope& b) {
  require_unimodular(a, b);
  return {Slope::from_primitive(a.p() + b.p(), a.q() + b.q()),
          Slope::from_primitive(a.p() - b.p(), a.q() - b.q())};
}

Slope farey_sum(const SignedPair& alpha, const SignedPair& beta, const Integer& multiplier) {
  return Slope(alpha.p + multiplier * beta.p, alpha.q + multiplier * beta.q);
}

Slope even_label(const FareyTriangle& t, EvenClass ec) {
  for (const auto& s : t.vertices()) {
    if (is_even(s, ec)) return s;
  }
  throw std::logic_error("triangle " + t.str() + " has no even vertex");
}

FareyTriangle neighbor(const FareyTriangle& t, const Slope& v) {
  auto [a, b] = t.others(v);
  Slope c = opposite(a, b, v);
  return detail::TriangleAccess::make({std::move(a), std::move(b), std::move(c)});
}

Slope fold_over(const FareyTriangle& t, const Slope& v) {
  auto [a, b] = t.others(v);
  return opposite(a, b, v);
}

Slope fold_even(const FareyTriangle& t, EvenClass ec) { return fold_over(t, even_label(t, ec)); }

GeodesicStep step_toward(const FareyTriangle& t, const Slope& alpha) {
  if (t.contains(alpha)) {
    throw Error(ErrorKind::already_in_fan, alpha.str() + " is already a vertex of " + t.str());
  }
  const int i = dispatch(t.vertices(), alpha, [](const auto& v, const auto& a) { return exit_vertex(v, a); });
  const Slope& v = t.vertices()[i];
  return {t, v, neighbor(t, v)};
}

std::vector<GeodesicStep> geodesic_to_fan(const FareyTriangle& t, const Slope& alpha) {
  return dispatch(t.vertices(), alpha, [&t](auto v, const auto& a) {
    // Walk first on raw coordinates so the result is allocated once.
    using S = typename decltype(v)::value_type;
    std::vector<std::pair<Tri<S>, S>> walk;
    std::uint64_t steps = 0;
    while (index_of(v, a) < 0) {
      count_step(steps);
      const int i = exit_vertex(v, a);
      S flipped = v[i];
      step_in_place(v, i);
      walk.emplace_back(v, std::move(flipped));
    }
    std::vector<GeodesicStep> path;
    path.reserve(walk.size());
    for (auto& [tri, flipped] : walk) {
      path.push_back({path.empty() ? t : path.back().to, to_slope(flipped), to_triangle(tri)});
    }
    return path;
  });
}

std::uint64_t fan_distance(const FareyTriangle& t, const Slope& alpha) {
  return dispatch(t.vertices(), alpha, [](auto v, const auto& a) {
    std::uint64_t steps = 0;
    while (index_of(v, a) < 0) {
      count_step(steps);
      step_in_place(v, exit_vertex(v, a));
    }
    return steps;
  });
}

std::uint64_t tree_distance(const FareyTriangle& a, const FareyTriangle& b) {
  auto walk = [](auto v, const auto& target) -> std::uint64_t {
    std::uint64_t steps = 0;
    for (;;) {
      int missing = -1;
      for (int i = 0; i < 3; ++i) {
        if (index_of(v, target[i]) < 0) {
          missing = i;
          break;
        }
      }
      if (missing < 0) return steps;
      count_step(steps);
      step_in_place(v, exit_vertex(v, target[missing]));
    }
  };
  if (auto sa = to_small(a.vertices())) {
    if (auto sb = to_small(b.vertices())) {
      try {
        return walk(*sa, *sb);
      } catch (const Overflow&) {
      }
    }
  }
  return walk(a.vertices(), b.vertices());
}

std::uint64_t even_distance(const Slope& a, const Slope& b, EvenClass ec) {
  require_even(a, ec);
  require_even(b, ec);
  if (a == b) return 0;
  // Starting inside the fan of a, every cross step (one replacing the even
  // vertex) brings a new label, and no fan is entered twice.
  return dispatch(canonical_triangle(a, ec).vertices(), b, [ec](auto v, const auto& target) {
    std::uint64_t steps = 0;
    std::uint64_t cross = 0;
    while (index_of(v, target) < 0) {
      count_step(steps);
      const int i = exit_vertex(v, target);
      if (even(v[i], ec)) ++cross;
      step_in_place(v, i);
    }
    return cross;
  });
}

FareyTriangle canonical_triangle(const Slope& alpha, EvenClass ec) {
  require_even(alpha, ec);
  if (alpha.is_infinity()) {
    return FareyTriangle(Slope(-1, 1), Slope(0, 1), Slope::infinity());
  }
  const Integer& p = alpha.p();
  const Integer& q = alpha.q();
  if (q == Integer(1)) {
    return FareyTriangle(Slope(p - 1, 1), alpha, Slope::infinity());
  }
  // Right parent c/d has c*q - d*p = 1 with 0 <= d < q.
  const ExtendedGcd e = extended_gcd(p, q);
  const Integer d = floor_mod(-e.x, q);
  const Integer c = (Integer(1) + d * p) / q;
  return FareyTriangle(Slope(c, d), alpha, Slope(p - c, q - d));
}

Ball ball(const FareyTriangle& root, unsigned depth, unsigned depth_cap) {
  if (depth > depth_cap) {
    throw Error(ErrorKind::resource, "ball depth " + std::to_string(depth) +
                                         " exceeds cap " + std::to_string(depth_cap));
  }
  Ball out;
  out.nodes.push_back({root, 0, -1});
  std::set<FareyTriangle> seen{root};
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    if (out.nodes[i].depth == depth) continue;
    const FareyTriangle cur = out.nodes[i].triangle;
    for (const auto& v : cur.vertices()) {
      FareyTriangle next = neighbor(cur, v);
      if (out.nodes[i].parent >= 0 && next == out.nodes[out.nodes[i].parent].triangle) continue;
      if (!seen.insert(next).second) {
        throw std::logic_error("dual graph revisited " + next.str());
      }
      out.nodes.push_back({std::move(next), out.nodes[i].depth + 1,
                           static_cast<std::ptrdiff_t>(i)});
    }
  }
  return out;
}

}  // namespace dehnfill
