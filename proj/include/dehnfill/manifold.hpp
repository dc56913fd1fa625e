#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dehnfill/farey.hpp"
#include "dehnfill/slope.hpp"

namespace dehnfill {

using Pattern = std::array<Integer, 3>;

// One fundamental normal surface. A missing slope means a closed surface (or an
// unresolved pattern, before resolve_patterns).
struct SurfaceRecord {
  std::optional<Slope> slope;
  std::int64_t euler = 0;
  bool orientable = false;
  std::optional<Pattern> pattern;  // arc counts against base_order, in order

  friend bool operator==(const SurfaceRecord&, const SurfaceRecord&) = default;
};

struct ManifoldData {
  std::string name;
  std::int64_t size = 0;
  std::array<Slope, 3> base_order{Slope::infinity(), Slope::infinity(), Slope::infinity()};
  EvenClass even_class = EvenClass::meridian_even();
  std::vector<SurfaceRecord> surfaces;
  std::optional<std::string> isosig;
  std::optional<std::string> notes;

  // Throws Error(not_neighbors) if base_order is not a Farey triangle.
  FareyTriangle base() const;

  friend bool operator==(const ManifoldData&, const ManifoldData&) = default;
};

struct Violation {
  std::optional<std::size_t> record;  // surface index, if the violation is per record
  std::string message;

  std::string str() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const ManifoldData& m);

// The slope a with |det(a, base_order[i])| = pattern[i] for i = 0, 1, 2.
// Throws Error(infeasible) or Error(ambiguous).
Slope slope_from_pattern(const std::array<Slope, 3>& base_order, const Pattern& pattern);

// Fills every missing slope that has a pattern. Existing slopes are kept.
ManifoldData resolve_patterns(ManifoldData m);

struct NormResult {
  Slope slope;
  std::int64_t norm;
  std::size_t witness;
  std::optional<std::int64_t> dual_norm;  // norm - 1 when norm >= 1

  friend bool operator==(const NormResult&, const NormResult&) = default;
};

// Minimum over records with a slope of -euler + even_distance(record, alpha).
// Throws Error(odd_slope) or Error(no_bounded_surfaces).
NormResult slope_norm(const ManifoldData& m, const Slope& alpha);

// Throws Error(capping_degenerates) when the norm is zero.
std::int64_t dual_class_norm(const ManifoldData& m, const Slope& alpha);

struct LowerBound {
  std::int64_t bound;
  // Always set: the bound assumes the filling is not a balanced lens space,
  // which is not checked here.
  bool caveat = true;

  friend bool operator==(const LowerBound&, const LowerBound&) = default;
};

LowerBound lower_bound(const ManifoldData& m, const Slope& alpha);

}  // namespace dehnfill
