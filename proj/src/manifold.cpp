#include "dehnfill/manifold.hpp"

#include "dehnfill/error.hpp"

namespace dehnfill {

namespace {

std::string pattern_str(const Pattern& pat) {
  return "(" + pat[0].str() + "," + pat[1].str() + "," + pat[2].str() + ")";
}

}  // namespace

FareyTriangle ManifoldData::base() const {
  return FareyTriangle(base_order[0], base_order[1], base_order[2]);
}

std::string Violation::str() const {
  if (record) return "surface[" + std::to_string(*record) + "]: " + message;
  return message;
}

std::vector<Violation> validate(const ManifoldData& m) {
  std::vector<Violation> out;
  auto fail = [&out](std::optional<std::size_t> i, std::string msg) {
    out.push_back({i, std::move(msg)});
  };

  if (m.size < 1) fail(std::nullopt, "size must be positive, got " + std::to_string(m.size));
  bool base_ok = true;
  try {
    (void)m.base();
  } catch (const Error&) {
    base_ok = false;
    fail(std::nullopt, "base triangle is not a Farey triangle");
  }
  if (m.surfaces.empty()) fail(std::nullopt, "no surface records");

  bool any_slope = false;
  for (std::size_t i = 0; i < m.surfaces.size(); ++i) {
    const SurfaceRecord& r = m.surfaces[i];
    if (r.euler > 0) fail(i, "euler characteristic " + std::to_string(r.euler) + " is positive");
    if (r.pattern) {
      for (const auto& e : *r.pattern) {
        if (e.sign() < 0) {
          fail(i, "pattern " + pattern_str(*r.pattern) + " has a negative entry");
          break;
        }
      }
    }
    if (!r.slope) {
      if (r.pattern) fail(i, "pattern " + pattern_str(*r.pattern) + " has no resolved slope");
      continue;
    }
    any_slope = true;
    if (!is_even(*r.slope, m.even_class)) {
      fail(i, "slope " + r.slope->str() + " is odd for even class " + m.even_class.str());
    }
    if (r.pattern && base_ok) {
      for (int j = 0; j < 3; ++j) {
        if (abs(det(*r.slope, m.base_order[j])) != (*r.pattern)[j]) {
          fail(i, "pattern " + pattern_str(*r.pattern) + " does not match slope " +
                      r.slope->str() + " at base vertex " + m.base_order[j].str());
          break;
        }
      }
    }
  }
  if (!m.surfaces.empty() && !any_slope) fail(std::nullopt, "no surface has a boundary slope");
  return out;
}

Slope slope_from_pattern(const std::array<Slope, 3>& base_order, const Pattern& pattern) {
  bool all_zero = true;
  for (const auto& e : pattern) {
    if (e.sign() < 0) {
      throw Error(ErrorKind::infeasible, "pattern " + pattern_str(pattern) + " has a negative entry");
    }
    all_zero = all_zero && e.is_zero();
  }
  if (all_zero) throw Error(ErrorKind::infeasible, "pattern is all zero");

  const Slope& s1 = base_order[0];
  const Slope& s2 = base_order[1];
  const Integer d = det(s1, s2);
  if (abs(d) != Integer(1)) {
    throw Error(ErrorKind::not_neighbors, "base vertices " + s1.str() + " and " + s2.str() +
                                              " are not Farey neighbours");
  }

  // det(x, s1) = u and det(x, s2) = v pin x down; the sign pair (-u, -v)
  // gives the same slope, so u keeps its sign.
  std::vector<Slope> found;
  const Integer& u = pattern[0];
  for (const Integer& v : {pattern[1], -pattern[1]}) {
    const Integer p = (s1.p() * v - s2.p() * u) / d;
    const Integer q = (s1.q() * v - s2.q() * u) / d;
    if (p.is_zero() && q.is_zero()) continue;
    if (gcd(p, q) != Integer(1)) continue;
    Slope x(p, q);
    if (abs(det(x, base_order[2])) != pattern[2]) continue;
    bool dup = false;
    for (const auto& f : found) dup = dup || f == x;
    if (!dup) found.push_back(std::move(x));
    if (u.is_zero()) break;
  }
  if (found.empty()) {
    throw Error(ErrorKind::infeasible, "no slope realises pattern " + pattern_str(pattern));
  }
  if (found.size() > 1) {
    throw Error(ErrorKind::ambiguous, "pattern " + pattern_str(pattern) + " fits both " +
                                          found[0].str() + " and " + found[1].str());
  }
  return found.front();
}

ManifoldData resolve_patterns(ManifoldData m) {
  for (auto& r : m.surfaces) {
    if (!r.slope && r.pattern) r.slope = slope_from_pattern(m.base_order, *r.pattern);
  }
  return m;
}

NormResult slope_norm(const ManifoldData& m, const Slope& alpha) {
  if (!is_even(alpha, m.even_class)) {
    throw Error(ErrorKind::odd_slope,
                "slope " + alpha.str() + " is odd for even class " + m.even_class.str());
  }
  std::optional<NormResult> best;
  for (std::size_t i = 0; i < m.surfaces.size(); ++i) {
    const SurfaceRecord& r = m.surfaces[i];
    if (!r.slope) continue;
    const std::uint64_t d = even_distance(*r.slope, alpha, m.even_class);
    const std::int64_t value = -r.euler + static_cast<std::int64_t>(d);
    if (!best || value < best->norm) best = NormResult{alpha, value, i, std::nullopt};
  }
  if (!best) {
    throw Error(ErrorKind::no_bounded_surfaces, "dataset " + m.name + " has no surface with a slope");
  }
  if (best->norm >= 1) best->dual_norm = best->norm - 1;
  return *best;
}

std::int64_t dual_class_norm(const ManifoldData& m, const Slope& alpha) {
  const NormResult r = slope_norm(m, alpha);
  if (!r.dual_norm) {
    throw Error(ErrorKind::capping_degenerates,
                "slope " + alpha.str() + " has norm 0; the capped surface is excluded");
  }
  return *r.dual_norm;
}

LowerBound lower_bound(const ManifoldData& m, const Slope& alpha) {
  return {2 * slope_norm(m, alpha).norm, true};
}

}  // namespace dehnfill
