#include "dehnfill/constants.hpp"

#include <cmath>

#include "dehnfill/error.hpp"

namespace dehnfill {

namespace {

void require_n(std::int64_t n, std::int64_t min) {
  if (n < min) {
    throw Error(ErrorKind::out_of_range,
                "n must be at least " + std::to_string(min) + ", got " + std::to_string(n));
  }
}

Integer pow2(const Integer& e) {
  const auto exp = e.to_int64();
  if (!exp || *exp < 0 || *exp > 100'000'000) {
    throw Error(ErrorKind::resource, "exponent " + e.str() + " out of range");
  }
  return Integer(BigInt(1) << static_cast<unsigned>(*exp));
}

Integer floor_div3(const Integer& x) { return (x - floor_mod(x, 3)) / 3; }

GapForm gap_form(const Integer& size, Integer published_numerator) {
  const Integer exact = Integer(13) * floor_div3(Integer(11) * size + 10) + 7;
  Rational published(published_numerator.to_big(), BigInt(3));
  return {size, exact, std::move(published_numerator), 3, std::move(published)};
}

}  // namespace

Integer hlp_arc_bound(std::int64_t n) {
  require_n(n, 1);
  return Integer(n) * pow2(Integer(7) * n + 2);
}

Integer hlp_arc_bound_doubled(std::int64_t n) { return hlp_arc_bound(n) * 2; }

Integer fibonacci(std::uint64_t i) {
  BigInt a = 0;
  BigInt b = 1;
  for (std::uint64_t j = 0; j < i; ++j) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return Integer(a);
}

std::int64_t fib_min_ell(std::int64_t n) {
  const BigInt threshold = hlp_arc_bound_doubled(n).to_big();
  BigInt a = 0;
  BigInt b = 1;
  for (std::int64_t i = 0;; ++i) {
    // a = F_i
    if (i % 3 == 0 && a > threshold) return i - 1;
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
}

std::int64_t ell_bound(std::int64_t n) {
  require_n(n, 1);
  return 12 * n + 8;
}

BoundPair basic_bounds(std::int64_t n, const Integer& k) {
  require_n(n, 1);
  if (k.sign() < 0) throw Error(ErrorKind::out_of_range, "k must be nonnegative");
  return {Integer(2) * k, Integer(2) * k + basic_gap(n)};
}

Integer basic_gap(std::int64_t n) {
  require_n(n, 1);
  return Integer(13) * n + 7;
}

InflationTerms inflation_terms(std::int64_t n) {
  require_n(n, 1);
  const Integer size(n);
  const Integer edges = Integer(2) * n + 1;
  const Integer flips = floor_div3(edges);
  return {size, edges, flips, 2, floor_div3(Integer(11) * n + 10)};
}

Integer inflation_size(std::int64_t n) { return inflation_terms(n).total; }

GapForm ideal_gap(std::int64_t n) {
  require_n(n, 1);
  return gap_form(n, Integer(143) * n + 151);
}

Integer weeks_size(std::int64_t n) {
  require_n(n, 1);
  return Integer(4) * n + 4;
}

GapForm knotbasic_gap(std::int64_t n) {
  require_n(n, 1);
  return gap_form(weeks_size(n), Integer(572) * n + 723);
}

BoundPair ConstantGapParams::bounds(const Integer& k) const {
  if (k <= n0) {
    throw Error(ErrorKind::out_of_range, "k must exceed n0 (" + std::to_string(decimal_digits(n0)) +
                                             " digits)");
  }
  return {Integer(2) * (k - n0), m0 + Integer(2) * k - 1};
}

Integer ConstantGapParams::gap() const { return m0 + Integer(2) * n0 - 1; }

ConstantGapParams constantgap_params(std::int64_t n, M0Variant variant) {
  require_n(n, 2);
  const Integer n1 = Integer(n) - 1;
  ConstantGapParams out{n, variant, Integer(1401) * n1, Integer(1408) * n1, 0, 0, {}};
  out.m0 = variant == M0Variant::proof ? out.m0_proof : out.m0_statement;
  out.n0 = out.m0 * pow2(Integer(7) * out.m0 + 2);

  ConstructionChain& c = out.chain;
  c.prisms = Integer(4) * n - 5;
  c.prism_tetrahedra = Integer(14) * c.prisms;
  c.prism_boundary_triangles = Integer(2) * c.prisms + 12;
  c.sphere_tetrahedra = c.prism_tetrahedra + c.prism_boundary_triangles;
  c.exterior_tetrahedra = Integer(16 * 64) * n1;
  c.boundary_triangles = Integer(3 * 64) * n1;
  c.boundary_edges = Integer(288) * n1;
  c.boundary_vertices = Integer(96) * n1;
  c.reduction_tetrahedra = Integer(4) * (c.boundary_vertices - 1);
  c.total_tetrahedra = c.exterior_tetrahedra + c.reduction_tetrahedra;
  return out;
}

std::string to_string(M0Variant v) { return v == M0Variant::proof ? "proof" : "statement"; }

std::uint64_t decimal_digits(const Integer& x) {
  const std::string s = abs(x).str();
  return s.size();
}

std::uint64_t estimated_n0_digits(const Integer& m0) {
  const double e = (Integer(7) * m0 + 2).to_double();
  return static_cast<std::uint64_t>(std::floor(e * std::log10(2.0) + std::log10(m0.to_double()))) + 1;
}

}  // namespace dehnfill
