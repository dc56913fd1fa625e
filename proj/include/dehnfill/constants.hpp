#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dehnfill/integer.hpp"

namespace dehnfill {

using Rational = boost::multiprecision::cpp_rational;

// Every function taking n throws Error(out_of_range) below its minimum n.

// Normal arcs per boundary arc type: n * 2^(7n + 2), and twice that.
Integer hlp_arc_bound(std::int64_t n);
Integer hlp_arc_bound_doubled(std::int64_t n);

// F_0 = 0, F_1 = 1.
Integer fibonacci(std::uint64_t i);
// Least l with F_(l+1) even and F_(l+1) > n * 2^(7n + 3).
std::int64_t fib_min_ell(std::int64_t n);
std::int64_t ell_bound(std::int64_t n);  // 12n + 8

struct BoundPair {
  Integer lower;
  Integer upper;
  Integer gap() const { return upper - lower; }
};

// (2k, 2k + 13n + 7)
BoundPair basic_bounds(std::int64_t n, const Integer& k);
Integer basic_gap(std::int64_t n);

// Size of the inflated triangulation: n + (2n + 1) + floor((2n + 1) / 3) + 2.
struct InflationTerms {
  Integer ideal_size;  // n
  Integer edges;       // 2n + 1
  Integer flips;       // floor((2n + 1) / 3)
  Integer extra;       // 2
  Integer total;       // floor((11n + 10) / 3)
};
InflationTerms inflation_terms(std::int64_t n);
Integer inflation_size(std::int64_t n);

// An exact gap next to the rational bound printed in the corollary.
struct GapForm {
  Integer size;          // triangulation size fed into the basic bound
  Integer exact;         // 13 * inflation_size(size) + 7
  Integer published_numerator;
  Integer published_denominator;  // 3, unreduced
  Rational published;        // numerator / denominator
};

GapForm ideal_gap(std::int64_t n);      // published (143n + 151) / 3
Integer weeks_size(std::int64_t n);     // 4n + 4
GapForm knotbasic_gap(std::int64_t n);  // published (572n + 723) / 3

// Tetrahedron counts in the knot-exterior construction, all for a diagram
// with n >= 2 crossings.
struct ConstructionChain {
  Integer prisms;                // 4n - 5
  Integer prism_tetrahedra;      // 14 * prisms
  Integer prism_boundary_triangles;  // 2 * prisms + 12
  Integer sphere_tetrahedra;     // 64n - 68
  Integer exterior_tetrahedra;   // 16 * 64(n - 1)
  Integer boundary_triangles;    // 3 * 64(n - 1)
  Integer boundary_edges;        // 288(n - 1)
  Integer boundary_vertices;     // 96(n - 1)
  Integer reduction_tetrahedra;  // 4 * (96(n - 1) - 1)
  Integer total_tetrahedra;      // exterior + reduction
};

enum class M0Variant { statement, proof };

struct ConstantGapParams {
  std::int64_t n;
  M0Variant variant;
  Integer m0_statement;  // 1401(n - 1)
  Integer m0_proof;      // 1408(n - 1)
  Integer m0;            // the selected variant
  Integer n0;            // m0 * 2^(7 m0 + 2)
  ConstructionChain chain;

  // Throws Error(out_of_range) unless k > n0.
  BoundPair bounds(const Integer& k) const;
  Integer gap() const;  // m0 + 2 n0 - 1
};

// Throws Error(out_of_range) for n < 2.
ConstantGapParams constantgap_params(std::int64_t n, M0Variant variant = M0Variant::proof);

std::string to_string(M0Variant v);

std::uint64_t decimal_digits(const Integer& x);
// floor((7 m0 + 2) log10 2 + log10 m0) + 1, the digit count of n0 by logarithms.
std::uint64_t estimated_n0_digits(const Integer& m0);

}  // namespace dehnfill
