#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dehnfill/farey.hpp"
#include "dehnfill/manifold.hpp"

namespace dehnfill {

inline constexpr unsigned kMaxRenderDepth = 12;

enum class RenderFormat { dot, svg };

// One triangle of the rendered region, annotated with (norm, labeled size).
struct RenderNode {
  FareyTriangle triangle;
  unsigned depth;
  std::ptrdiff_t parent;
  Slope label;
  std::int64_t norm;
  std::int64_t labeled_size;  // size + depth
  bool is_base;
  bool is_canonical;
  bool surface_label;
};

// Throws Error(resource) above kMaxRenderDepth.
std::vector<RenderNode> render_nodes(const ManifoldData& m, unsigned depth);

std::string render(const ManifoldData& m, unsigned depth, RenderFormat format);

}  // namespace dehnfill
