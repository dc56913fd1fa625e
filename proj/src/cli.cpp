#include "dehnfill/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "dehnfill/bounds.hpp"
#include "dehnfill/constants.hpp"
#include "dehnfill/error.hpp"
#include "dehnfill/manifold.hpp"
#include "dehnfill/oracle.hpp"
#include "dehnfill/render.hpp"
#include "dehnfill/serialize.hpp"

namespace dehnfill {

namespace {

// Bad flag values; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dataset violations; already listed, exit status 1.
struct DataInvalid {};

Slope slope_flag(const std::string& flag, const std::string& text) {
  try {
    return Slope::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

SignedPair pair_flag(const std::string& flag, const std::string& text) {
  try {
    return SignedPair::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Integer integer_flag(const std::string& flag, const std::string& text) {
  try {
    return Integer::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorKind::resource, "cannot write " + path);
}

void print_violations(const std::string& path, const std::vector<Violation>& v, std::ostream& err) {
  err << path << ": " << v.size() << " violation" << (v.size() == 1 ? "" : "s") << "\n";
  for (const auto& x : v) err << "  " << x.str() << "\n";
}

ManifoldData load_valid(const std::string& path, std::ostream& err) {
  ManifoldData m = load_manifold(path);
  if (auto v = validate(m); !v.empty()) {
    print_violations(path, v, err);
    throw DataInvalid{};
  }
  return m;
}

// First column and header left-aligned, other cells right-aligned.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_[0].size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::string line;
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        const std::string& cell = rows_[r][i];
        const std::string pad(width[i] - cell.size(), ' ');
        if (i) line += "  ";
        line += r == 0 || i == 0 ? cell + pad : pad + cell;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string str(std::int64_t x) { return std::to_string(x); }
std::string str(const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : "-"; }

struct Globals {
  bool json = false;
  bool quiet = false;
};

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  // Exactly one of the two renderings is written, or nothing under --quiet.
  template <class Human>
  void emit(const Json& j, Human&& human) {
    if (g_.quiet) return;
    if (g_.json) {
      out_ << canonical_dump(j);
    } else {
      human(out_);
    }
  }

 private:
  const Globals& g_;
  std::ostream& out_;
};

void bounds_table(Table& t, const BoundsReport& r) {
  t.add({r.slope.str(), str(r.norm), str(r.labeled_size), str(r.lower), str(r.upper), str(r.gap)});
}

int cmd_norm(const ManifoldData& m, const Slope& alpha, Emitter& em) {
  const NormResult r = slope_norm(m, alpha);
  em.emit(to_json(r), [&](std::ostream& o) {
    Table t({"slope", "norm", "witness", "witness_slope", "dual_norm"});
    t.add({r.slope.str(), str(r.norm), std::to_string(r.witness), m.surfaces[r.witness].slope->str(),
           str(r.dual_norm)});
    t.print(o);
  });
  return kExitOk;
}

int cmd_bounds(const ManifoldData& m, const Slope& alpha, Emitter& em) {
  const BoundsReport r = bounds_report(m, alpha);
  em.emit(to_json(r), [&](std::ostream& o) {
    Table t({"slope", "a", "b", "lower", "upper", "gap"});
    bounds_table(t, r);
    t.print(o);
    o << r.lower << " <= c(M(" << r.slope.str() << ")) <= " << r.upper
      << (r.caveat ? "  (unless M(" + r.slope.str() + ") is a balanced lens space)" : "") << "\n";
  });
  return kExitOk;
}

int cmd_family(const ManifoldData& m, const SignedPair& alpha, const SignedPair& beta, std::int64_t kmin,
               std::int64_t kmax, Emitter& em) {
  const FamilyReport r = family_fan(m, alpha, beta, kmin, kmax);
  em.emit(to_json(r), [&](std::ostream& o) {
    o << "alpha_k = " << r.alpha_rep.str() << " + 2k * " << r.beta.str() << "\n";
    o << "start " << r.start.str() << "  (a, b) = (" << r.start_norm << ", " << r.start_size << ")\n";
    if (r.closed_form_gap) {
      o << "closed-form gap b - 2a - 1 = " << *r.closed_form_gap << "\n";
    } else {
      o << "closed-form gap not attached: a surface slope is cheaper inside the fan\n";
    }
    Table t({"k", "slope", "a", "b", "lower", "upper", "gap", "flags"});
    for (const auto& e : r.entries) {
      std::string flags;
      if (e.seed) flags += "seed(generic upper " + str(e.generic_upper) + ")";
      if (e.closed_form_mismatch) flags += std::string(flags.empty() ? "" : " ") + "mismatch";
      t.add({str(e.k), e.bounds.slope.str(), str(e.bounds.norm), str(e.bounds.labeled_size),
             str(e.bounds.lower), str(e.bounds.upper), str(e.bounds.gap), flags});
    }
    t.print(o);
  });
  return kExitOk;
}

int cmd_path(const ManifoldData& m, const Slope& alpha, Emitter& em) {
  const LayeringPlan p = layering_plan(m, alpha);
  em.emit(to_json(p), [&](std::ostream& o) {
    Table t({"step", "from", "layered", "to"});
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      const auto& s = p.steps[i];
      t.add({std::to_string(i + 1), s.from.str(), s.layered_edge.str(), s.to.str()});
    }
    if (!p.steps.empty()) t.print(o);
    o << "fold " << p.fold_triangle.str() << " -> " << p.filled_slope.str() << ", " << p.tetrahedra
      << " tetrahedra\n";
  });
  return kExitOk;
}

int cmd_admissible(const ManifoldData& m, const std::string& path_file, Emitter& em) {
  const auto path = parse_path(read_file(path_file));
  const AdmissibleBound b = admissible_gap_bound(m, path);
  em.emit(to_json(b), [&](std::ostream& o) {
    o << "pivot " << path[b.pivot_index].str() << " (node " << b.pivot_index << ")\n";
    o << "gap bound " << b.bound << " for slopes from node " << b.admissible_start << " on\n";
  });
  return kExitOk;
}

struct ConstantsArgs {
  std::string theorem;
  std::int64_t n = 1;
  std::optional<std::string> k;
  std::string m0 = "proof";
};

int cmd_constants(const ConstantsArgs& a, Emitter& em) {
  std::optional<Integer> k;
  if (a.k) k = integer_flag("--k", *a.k);
  if (k && k->sign() < 0) throw UsageError("--k: must be nonnegative");
  Json j{{"theorem", a.theorem}, {"n", a.n}};
  Table t({"quantity", "value"});
  auto row = [&](const std::string& name, const Json& v) {
    t.add({name, v.is_string() ? v.get<std::string>() : v.dump()});
  };

  if (a.theorem == "basic") {
    j["gap"] = to_json(basic_gap(a.n));
    j["hlp_arc_bound"] = to_json(hlp_arc_bound(a.n));
    j["hlp_arc_bound_doubled"] = to_json(hlp_arc_bound_doubled(a.n));
    j["fib_min_ell"] = fib_min_ell(a.n);
    j["ell_bound"] = ell_bound(a.n);
    if (k) j["bounds"] = to_json(basic_bounds(a.n, *k));
    for (const char* key : {"gap", "hlp_arc_bound", "hlp_arc_bound_doubled", "fib_min_ell", "ell_bound"}) {
      row(key, j[key]);
    }
  } else if (a.theorem == "ideal" || a.theorem == "knotbasic") {
    const bool ideal = a.theorem == "ideal";
    const GapForm g = ideal ? ideal_gap(a.n) : knotbasic_gap(a.n);
    j["gap"] = to_json(g);
    j["inflation"] = to_json(inflation_terms(a.n));
    if (!ideal) j["weeks_size"] = to_json(weeks_size(a.n));
    if (k) {
      const BoundPair b = basic_bounds(1, *k);  // lower 2k, upper shifted by the exact gap
      j["bounds"] = to_json(BoundPair{b.lower, b.lower + g.exact});
    }
    if (!ideal) row("weeks_size", j["weeks_size"]);
    row("size", j["gap"]["size"]);
    row("exact_gap", j["gap"]["exact"]);
    row("published_gap", to_json(g.published_numerator).dump() + "/" + to_json(g.published_denominator).dump());
  } else if (a.theorem == "constantgap") {
    M0Variant v = M0Variant::proof;
    if (a.m0 == "statement") {
      v = M0Variant::statement;
    } else if (a.m0 != "proof") {
      throw UsageError("--m0: expected statement or proof");
    }
    const ConstantGapParams p = constantgap_params(a.n, v);
    j = to_json(p);
    j["theorem"] = a.theorem;
    if (k) j["bounds"] = to_json(p.bounds(*k));
    for (const char* key : {"m0_statement", "m0_proof", "variant", "m0", "n0_digits", "n0_digits_estimate"}) {
      row(key, j[key]);
    }
  } else {
    throw UsageError("--theorem: expected basic, ideal, knotbasic or constantgap");
  }
  if (j.contains("bounds")) {
    row("lower", j["bounds"]["lower"]);
    row("upper", j["bounds"]["upper"]);
  }
  em.emit(j, [&](std::ostream& o) { t.print(o); });
  return kExitOk;
}

int cmd_render(const ManifoldData& m, unsigned depth, const std::string& format, const std::string& out_path,
               const Globals& g, std::ostream& out) {
  RenderFormat f = RenderFormat::dot;
  if (format == "svg") {
    f = RenderFormat::svg;
  } else if (format != "dot") {
    throw UsageError("--format: expected dot or svg");
  }
  if (depth > kMaxRenderDepth) {
    throw UsageError("--depth: at most " + std::to_string(kMaxRenderDepth));
  }
  write_file(out_path, render(m, depth, f), out);
  if (!g.quiet && out_path != "-") {
    if (g.json) {
      out << canonical_dump(Json{{"out", out_path}, {"depth", depth}, {"format", format}});
    } else {
      out << "wrote " << out_path << "\n";
    }
  }
  return kExitOk;
}

int cmd_oracle(const ManifoldData& m, unsigned depth, Emitter& em) {
  if (depth > kDefaultBallDepthCap) {
    throw UsageError("--depth: at most " + std::to_string(kDefaultBallDepthCap));
  }
  const auto checks = oracle_check(m.base(), m.even_class, depth);
  Json j = Json::array();
  bool ok = true;
  for (const auto& c : checks) {
    j.push_back(to_json(c));
    ok = ok && c.ok();
  }
  em.emit(j, [&](std::ostream& o) {
    Table t({"check", "cases", "failures", "first_failure"});
    for (const auto& c : checks) {
      t.add({c.name, std::to_string(c.cases), std::to_string(c.failures), c.first_failure});
    }
    t.print(o);
  });
  return ok ? kExitOk : kExitData;
}

int cmd_validate(const std::string& path, Emitter& em) {
  const ManifoldData m = load_manifold(path);
  const auto v = validate(m);
  em.emit(to_json(v), [&](std::ostream& o) {
    if (v.empty()) {
      o << path << ": ok\n";
    } else {
      print_violations(path, v, o);
    }
  });
  return v.empty() ? kExitOk : kExitData;
}

int cmd_resolve(const std::string& path, const std::string& out_path, const Globals& g, std::ostream& out,
                std::ostream& err) {
  const ManifoldData m = resolve_patterns(load_manifold(path));
  if (auto v = validate(m); !v.empty()) {
    print_violations(path, v, err);
    return kExitData;
  }
  const std::string text = canonical_dump(to_json(m));
  if (out_path == "-") {
    if (!g.quiet) out << text;
  } else {
    write_file(out_path, text, out);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norms and complexity bounds for even Dehn fillings", "dehnfill"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit canonical JSON");
  app.add_flag("--quiet", g.quiet, "Suppress normal output");

  std::string file, slope_text, alpha_text, beta_text, format = "dot", out_path, path_file;
  std::int64_t kmin = 0, kmax = 0;
  unsigned depth = 0;
  ConstantsArgs ca;

  auto dataset = [&](CLI::App* sub) { sub->add_option("file", file, "Dataset JSON")->required(); };
  auto slope_opt = [&](CLI::App* sub) { sub->add_option("--slope", slope_text, "Slope p/q")->required(); };

  auto* norm = app.add_subcommand("norm", "Slope norm of an even slope");
  dataset(norm);
  slope_opt(norm);
  auto* bounds = app.add_subcommand("bounds", "Lower and upper complexity bounds");
  dataset(bounds);
  slope_opt(bounds);
  auto* family = app.add_subcommand("family", "Bounds along alpha + 2k beta");
  dataset(family);
  family->add_option("--alpha", alpha_text, "Seed p/q")->required();
  family->add_option("--beta", beta_text, "Direction p/q, sign kept")->required();
  family->add_option("--kmax", kmax, "Last k")->required();
  family->add_option("--kmin", kmin, "First k")->capture_default_str();
  auto* path = app.add_subcommand("path", "Layering plan realising a filling");
  dataset(path);
  slope_opt(path);
  auto* admissible = app.add_subcommand("admissible", "Constant gap bound along an admissible path");
  dataset(admissible);
  admissible->add_option("--path", path_file, "JSON array of triangles")->required();
  auto* constants = app.add_subcommand("constants", "Explicit constants of the bound theorems");
  constants->add_option("--theorem", ca.theorem, "basic, ideal, knotbasic or constantgap")->required();
  constants->add_option("--n", ca.n, "Size or crossing number")->required();
  auto* kopt = constants->add_option("--k", "Family index");
  constants->add_option("--m0", ca.m0, "statement or proof")->capture_default_str();
  auto* rend = app.add_subcommand("render", "Farey region around the base as DOT or SVG");
  dataset(rend);
  rend->add_option("--depth", depth, "Tree depth")->required();
  rend->add_option("--format", format, "dot or svg")->capture_default_str();
  rend->add_option("--out", out_path, "Output path, - for stdout")->required();
  auto* oracle = app.add_subcommand("oracle-check", "Compare the Farey walks against a BFS ball");
  dataset(oracle);
  depth = 10;
  oracle->add_option("--depth", depth, "Ball depth")->capture_default_str();
  auto* valid = app.add_subcommand("validate", "List dataset violations");
  dataset(valid);
  auto* resolve = app.add_subcommand("resolve", "Fill missing slopes from boundary patterns");
  dataset(resolve);
  resolve->add_option("--out", out_path, "Output path, - for stdout")->default_val("-");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (kopt->count() > 0) ca.k = kopt->as<std::string>();

  Emitter em(g, out);
  try {
    if (*constants) return cmd_constants(ca, em);
    if (*valid) return cmd_validate(file, em);
    if (*resolve) return cmd_resolve(file, out_path, g, out, err);
    if (*norm || *bounds || *path) {
      const Slope alpha = slope_flag("--slope", slope_text);
      const ManifoldData m = load_valid(file, err);
      if (*norm) return cmd_norm(m, alpha, em);
      if (*bounds) return cmd_bounds(m, alpha, em);
      return cmd_path(m, alpha, em);
    }
    if (*family) {
      const SignedPair a = pair_flag("--alpha", alpha_text);
      const SignedPair b = pair_flag("--beta", beta_text);
      if (kmin > kmax) throw UsageError("--kmin: exceeds --kmax");
      return cmd_family(load_valid(file, err), a, b, kmin, kmax, em);
    }
    if (*admissible) return cmd_admissible(load_valid(file, err), path_file, em);
    if (*rend) return cmd_render(load_valid(file, err), depth, format, out_path, g, out);
    if (*oracle) return cmd_oracle(load_valid(file, err), depth, em);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataInvalid&) {
    return kExitData;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace dehnfill
