#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dehnfill/farey.hpp"
#include "dehnfill/manifold.hpp"

namespace dehnfill {

// Layer along `steps`, then fold fold_triangle over its even edge.
struct LayeringPlan {
  std::vector<GeodesicStep> steps;
  FareyTriangle fold_triangle;
  Slope filled_slope;
  std::int64_t tetrahedra;
};

// Throws Error(odd_slope).
LayeringPlan layering_plan(const ManifoldData& m, const Slope& alpha);
std::int64_t upper_bound(const ManifoldData& m, const Slope& alpha);
// Size plus the distance from the base to the nearest triangle labelled alpha.
std::int64_t labeled_size(const ManifoldData& m, const Slope& alpha);

struct BoundsReport {
  Slope slope;
  std::int64_t norm;
  std::size_t witness;
  std::int64_t lower;
  std::int64_t upper;
  std::int64_t gap;
  std::int64_t labeled_size;
  bool caveat;
};

BoundsReport bounds_report(const ManifoldData& m, const Slope& alpha);

struct FamilyEntry {
  std::int64_t k;
  BoundsReport bounds;
  // alpha_k is the base's own even label; generic_upper is what the off-base
  // formula size + L - 1 would give with L = 0.
  bool seed = false;
  std::optional<std::int64_t> generic_upper;
  bool closed_form_mismatch = false;
};

struct FamilyReport {
  Slope alpha;
  SignedPair alpha_rep;
  SignedPair beta;
  // The fan triangle {alpha - beta, alpha, beta} the family grows from, with
  // its labels a = norm(alpha) and b = size + distance(base, start).
  FareyTriangle start;
  std::int64_t start_norm;
  std::int64_t start_size;
  // The base sits behind the start triangle and every surface slope beyond
  // edge {alpha, beta} is no cheaper than going through alpha.
  bool premise_holds;
  std::optional<std::int64_t> closed_form_gap;  // b - 2a - 1, only with the premise
  std::vector<FamilyEntry> entries;
};

// alpha_k = alpha + 2k * beta on the given representatives, for k in [kmin, kmax].
// Throws Error(odd_seed), Error(not_neighbors) or Error(out_of_range).
FamilyReport family_fan(const ManifoldData& m, const SignedPair& alpha, const SignedPair& beta,
                        std::int64_t kmin, std::int64_t kmax);

struct AdmissibleBound {
  std::int64_t bound;
  std::size_t pivot_index;       // start of the label run holding the last surface slope
  std::size_t admissible_start;  // first node past that run
};

// path must start at the base, walk adjacent triangles without backtracking and
// change its even label at every second node.
// Throws Error(invalid_path), Error(path_not_alternating) or Error(path_does_not_clear).
AdmissibleBound admissible_gap_bound(const ManifoldData& m, const std::vector<FareyTriangle>& path);

}  // namespace dehnfill
