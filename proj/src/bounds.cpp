#include "dehnfill/bounds.hpp"

#include <set>
#include <stdexcept>

#include "dehnfill/error.hpp"

namespace dehnfill {

namespace {

void require_even(const ManifoldData& m, const Slope& alpha) {
  if (!is_even(alpha, m.even_class)) {
    throw Error(ErrorKind::odd_slope,
                "slope " + alpha.str() + " is odd for even class " + m.even_class.str());
  }
}

// t lies on the open arc from a to b that avoids c.
bool on_arc(const Slope& a, const Slope& b, const Slope& c, const Slope& t) {
  if (t == a || t == b) return false;
  const int side_t = det(a, t).sign() * det(t, b).sign();
  const int side_c = det(a, c).sign() * det(c, b).sign();
  return side_t != side_c;
}

bool shares_edge(const FareyTriangle& x, const FareyTriangle& y) {
  int common = 0;
  for (const auto& v : x.vertices()) common += y.contains(v) ? 1 : 0;
  return common == 2;
}

}  // namespace

LayeringPlan layering_plan(const ManifoldData& m, const Slope& alpha) {
  require_even(m, alpha);
  const FareyTriangle base = m.base();
  LayeringPlan plan{{}, base, alpha, m.size};
  if (even_label(base, m.even_class) == alpha) {
    plan.steps.push_back({base, alpha, neighbor(base, alpha)});
    plan.fold_triangle = plan.steps.back().to;
  } else {
    plan.steps = geodesic_to_fan(base, alpha);
    plan.steps.pop_back();
    if (!plan.steps.empty()) plan.fold_triangle = plan.steps.back().to;
  }
  plan.tetrahedra = m.size + static_cast<std::int64_t>(plan.steps.size());
  plan.filled_slope = fold_even(plan.fold_triangle, m.even_class);
  if (plan.filled_slope != alpha) {
    throw std::logic_error("fold of " + plan.fold_triangle.str() + " gives " +
                           plan.filled_slope.str() + ", expected " + alpha.str());
  }
  return plan;
}

std::int64_t upper_bound(const ManifoldData& m, const Slope& alpha) {
  return layering_plan(m, alpha).tetrahedra;
}

std::int64_t labeled_size(const ManifoldData& m, const Slope& alpha) {
  require_even(m, alpha);
  return m.size + static_cast<std::int64_t>(fan_distance(m.base(), alpha));
}

BoundsReport bounds_report(const ManifoldData& m, const Slope& alpha) {
  const NormResult norm = slope_norm(m, alpha);
  const LowerBound lower = lower_bound(m, alpha);
  const std::int64_t upper = upper_bound(m, alpha);
  return {alpha,         norm.norm, norm.witness, lower.bound, upper, upper - lower.bound,
          labeled_size(m, alpha), lower.caveat};
}

FamilyReport family_fan(const ManifoldData& m, const SignedPair& alpha, const SignedPair& beta,
                        std::int64_t kmin, std::int64_t kmax) {
  if (kmin < 0 || kmax < kmin) {
    throw Error(ErrorKind::out_of_range, "k range [" + std::to_string(kmin) + ", " +
                                             std::to_string(kmax) + "] is empty or negative");
  }
  const Slope a(alpha);
  const Slope b(beta);
  if (!is_even(a, m.even_class)) {
    throw Error(ErrorKind::odd_seed, "seed " + a.str() + " is odd for even class " + m.even_class.str());
  }
  if (abs(det(alpha, beta)) != Integer(1)) {
    throw Error(ErrorKind::not_neighbors, "seed " + a.str() + " and direction " + b.str() +
                                              " are not Farey neighbours");
  }

  const FareyTriangle base = m.base();
  const Slope behind = farey_sum(alpha, beta, -1);
  const Slope ahead = farey_sum(alpha, beta, 1);
  const FareyTriangle start(behind, a, b);
  const FareyTriangle next(a, b, ahead);
  const std::int64_t start_norm = slope_norm(m, a).norm;
  const std::uint64_t start_dist = tree_distance(base, start);

  bool premise = tree_distance(base, next) == start_dist + 1;
  for (const auto& r : m.surfaces) {
    if (!premise) break;
    if (!r.slope || !on_arc(a, b, behind, *r.slope)) continue;
    const auto via_seed = start_norm + static_cast<std::int64_t>(even_distance(a, *r.slope, m.even_class));
    premise = -r.euler >= via_seed;
  }

  FamilyReport out{a,          alpha,   beta, start, start_norm,
                   m.size + static_cast<std::int64_t>(start_dist), premise, std::nullopt, {}};
  if (premise) out.closed_form_gap = out.start_size - 2 * start_norm - 1;

  const Slope base_label = even_label(base, m.even_class);
  for (std::int64_t k = kmin; k <= kmax; ++k) {
    FamilyEntry e{k, bounds_report(m, farey_sum(alpha, beta, Integer(2) * Integer(k))), false,
                  std::nullopt, false};
    if (e.bounds.slope == base_label) {
      e.seed = true;
      e.generic_upper = m.size - 1;
    }
    e.closed_form_mismatch = out.closed_form_gap && k >= 1 && e.bounds.gap != *out.closed_form_gap;
    out.entries.push_back(std::move(e));
  }
  return out;
}

AdmissibleBound admissible_gap_bound(const ManifoldData& m, const std::vector<FareyTriangle>& path) {
  const FareyTriangle base = m.base();
  if (path.empty() || path.front() != base) {
    throw Error(ErrorKind::invalid_path, "path must start at the base triangle " + base.str());
  }
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!shares_edge(path[i - 1], path[i])) {
      throw Error(ErrorKind::invalid_path,
                  path[i - 1].str() + " and " + path[i].str() + " are not adjacent");
    }
    if (i >= 2 && path[i] == path[i - 2]) {
      throw Error(ErrorKind::invalid_path, "path backtracks at node " + std::to_string(i));
    }
  }

  std::vector<Slope> labels;
  labels.reserve(path.size());
  for (const auto& t : path) labels.push_back(even_label(t, m.even_class));
  for (std::size_t i = 2; i < labels.size(); ++i) {
    const bool before = labels[i - 2] != labels[i - 1];
    const bool after = labels[i - 1] != labels[i];
    if (before == after) {
      throw Error(ErrorKind::path_not_alternating,
                  "even label does not change at every second node near node " + std::to_string(i));
    }
  }

  std::set<Slope> surface_slopes;
  for (const auto& r : m.surfaces) {
    if (r.slope) surface_slopes.insert(*r.slope);
  }
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (surface_slopes.count(labels[i]) != 0) last = i;
  }
  if (!last) throw Error(ErrorKind::path_does_not_clear, "no node is labelled by a surface slope");

  std::size_t pivot = *last;
  while (pivot > 0 && labels[pivot - 1] == labels[*last]) --pivot;
  std::size_t clear = *last + 1;
  while (clear < labels.size() && labels[clear] == labels[*last]) ++clear;
  if (clear >= labels.size()) {
    throw Error(ErrorKind::path_does_not_clear,
                "path ends before leaving the fan of " + labels[*last].str());
  }
  const auto dist = static_cast<std::int64_t>(tree_distance(base, path[pivot]));
  return {m.size + dist + 1, pivot, clear};
}

}  // namespace dehnfill
