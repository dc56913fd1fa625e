#include "dehnfill/render.hpp"

#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "dehnfill/error.hpp"

namespace dehnfill {

namespace {

constexpr double kCentre = 500.0;
constexpr double kRadius = 440.0;
constexpr unsigned kVertexLabelDepth = 4;

struct Point {
  double x;
  double y;
};

// p/q on the unit circle with 1/0 at the top, 0/1 at the bottom and 1/1 on the right.
Point boundary_point(const Slope& s) {
  const double p = s.p().to_double();
  const double q = s.q().to_double();
  const double n = p * p + q * q;
  return {kCentre + kRadius * (2 * p * q / n), kCentre - kRadius * ((p * p - q * q) / n)};
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string annotation(const RenderNode& n) {
  return "(" + std::to_string(n.norm) + "," + std::to_string(n.labeled_size) + ")";
}

std::string render_dot(const ManifoldData& m, const std::vector<RenderNode>& nodes) {
  std::ostringstream out;
  out << "graph \"" << escape(m.name) << "\" {\n";
  out << "  node [shape=box, style=filled, fillcolor=white, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const RenderNode& n = nodes[i];
    const char* fill = n.is_base ? "palegreen" : (n.is_canonical ? "khaki1" : "white");
    out << "  t" << i << " [label=\"" << n.triangle.str() << "\\n" << annotation(n) << "\", fillcolor="
        << fill;
    if (n.surface_label) out << ", color=green4, penwidth=2";
    out << "];\n";
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const RenderNode& n = nodes[i];
    const FareyTriangle& from = nodes[n.parent].triangle;
    std::string flipped;
    for (const auto& v : from.vertices()) {
      if (!n.triangle.contains(v)) flipped = v.str();
    }
    out << "  t" << n.parent << " -- t" << i << " [label=\"" << flipped << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const ManifoldData& m, const std::vector<RenderNode>& nodes) {
  std::set<Slope> surface_slopes;
  for (const auto& r : m.surfaces) {
    if (r.slope) surface_slopes.insert(*r.slope);
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  out << "<title>" << escape(m.name) << "</title>\n";
  out << "<circle cx=\"500\" cy=\"500\" r=\"" << fixed(kRadius)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const auto& n : nodes) {
    const char* fill = n.is_base ? "#98fb98" : (n.is_canonical ? "#fff68f" : "none");
    out << "<polygon points=\"";
    const auto& v = n.triangle.vertices();
    for (std::size_t j = 0; j < 3; ++j) {
      const Point pt = boundary_point(v[j]);
      out << (j ? " " : "") << fixed(pt.x) << "," << fixed(pt.y);
    }
    out << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
  }
  for (const auto& n : nodes) {
    const auto& v = n.triangle.vertices();
    Point c{0, 0};
    for (const auto& s : v) {
      const Point pt = boundary_point(s);
      c.x += pt.x / 3;
      c.y += pt.y / 3;
    }
    const unsigned font = n.depth < 10 ? 12 - n.depth : 2;
    out << "<text x=\"" << fixed(c.x) << "\" y=\"" << fixed(c.y) << "\" font-size=\"" << font
        << "\" text-anchor=\"middle\"" << (n.surface_label ? " fill=\"green\"" : "") << ">"
        << annotation(n) << "</text>\n";
  }

  std::set<Slope> labelled;
  for (const auto& n : nodes) {
    for (const auto& s : n.triangle.vertices()) {
      const bool surface = surface_slopes.count(s) != 0;
      if (n.depth > kVertexLabelDepth && !surface) continue;
      if (!labelled.insert(s).second) continue;
      const Point pt = boundary_point(s);
      const double dx = (pt.x - kCentre) / kRadius;
      const double dy = (pt.y - kCentre) / kRadius;
      const char* colour = surface ? "green" : "black";
      out << "<circle cx=\"" << fixed(pt.x) << "\" cy=\"" << fixed(pt.y) << "\" r=\"3\" fill=\""
          << colour << "\"/>\n";
      out << "<text x=\"" << fixed(kCentre + dx * (kRadius + 24)) << "\" y=\""
          << fixed(kCentre + dy * (kRadius + 24) + 4) << "\" font-size=\"11\" text-anchor=\"middle\" fill=\""
          << colour << "\">" << s.str() << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::vector<RenderNode> render_nodes(const ManifoldData& m, unsigned depth) {
  if (depth > kMaxRenderDepth) {
    throw Error(ErrorKind::resource, "render depth " + std::to_string(depth) + " exceeds cap " +
                                         std::to_string(kMaxRenderDepth));
  }
  std::set<Slope> surface_slopes;
  for (const auto& r : m.surfaces) {
    if (r.slope) surface_slopes.insert(*r.slope);
  }
  const FareyTriangle base = m.base();
  std::map<Slope, std::int64_t> norms;
  std::vector<RenderNode> out;
  for (const auto& b : ball(base, depth).nodes) {
    const Slope label = even_label(b.triangle, m.even_class);
    auto it = norms.find(label);
    if (it == norms.end()) it = norms.emplace(label, slope_norm(m, label).norm).first;
    out.push_back({b.triangle, b.depth, b.parent, label, it->second,
                   m.size + static_cast<std::int64_t>(b.depth), b.triangle == base,
                   canonical_triangle(label, m.even_class) == b.triangle,
                   surface_slopes.count(label) != 0});
  }
  return out;
}

std::string render(const ManifoldData& m, unsigned depth, RenderFormat format) {
  const auto nodes = render_nodes(m, depth);
  return format == RenderFormat::dot ? render_dot(m, nodes) : render_svg(m, nodes);
}

}  // namespace dehnfill
