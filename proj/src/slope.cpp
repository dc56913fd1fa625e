#include "dehnfill/slope.hpp"

#include <ostream>

#include "dehnfill/error.hpp"

namespace dehnfill {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_slope: return "invalid slope";
    case ErrorKind::not_neighbors: return "not neighbors";
    case ErrorKind::not_a_vertex: return "not a vertex";
    case ErrorKind::already_in_fan: return "slope already a vertex";
    case ErrorKind::odd_slope: return "odd slope";
    case ErrorKind::odd_seed: return "odd seed";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::ambiguous: return "ambiguous";
    case ErrorKind::no_bounded_surfaces: return "no bounded surfaces";
    case ErrorKind::capping_degenerates: return "capping degenerates";
    case ErrorKind::resource: return "resource limit";
    case ErrorKind::path_not_alternating: return "path not alternating";
    case ErrorKind::path_does_not_clear: return "path does not clear surface slopes";
    case ErrorKind::invalid_path: return "invalid path";
    case ErrorKind::out_of_range: return "out of range";
    case ErrorKind::parse: return "parse error";
  }
  return "unknown";
}

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

Integer parse_component(std::string_view text, std::string_view whole) {
  std::string normalized;
  if (text.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
    normalized = "-";
    text.remove_prefix(kUnicodeMinus.size());
  }
  normalized.append(text);
  try {
    return Integer::parse(normalized);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::parse, "malformed slope '" + std::string(whole) + "'");
  }
}

std::pair<Integer, Integer> parse_pair(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorKind::parse, "malformed slope '" + std::string(text) + "', expected p/q");
  }
  return {parse_component(text.substr(0, slash), text),
          parse_component(text.substr(slash + 1), text)};
}

}  // namespace

SignedPair SignedPair::parse(std::string_view text) {
  auto [p, q] = parse_pair(text);
  if (p.is_zero() && q.is_zero()) {
    throw Error(ErrorKind::invalid_slope, "pair 0/0 is not a slope representative");
  }
  return {std::move(p), std::move(q)};
}

std::string SignedPair::str() const { return p.str() + "/" + q.str(); }

Slope::Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_zero() && q_.is_zero()) {
    throw Error(ErrorKind::invalid_slope, "0/0 is not a slope");
  }
  if (gcd(p_, q_) != Integer(1)) {
    throw Error(ErrorKind::invalid_slope,
                "slope " + p_.str() + "/" + q_.str() + " is not primitive");
  }
  if (q_.sign() < 0 || (q_.is_zero() && p_.sign() < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

Slope Slope::parse(std::string_view text) {
  auto [p, q] = parse_pair(text);
  return Slope(std::move(p), std::move(q));
}

std::string Slope::str() const { return p_.str() + "/" + q_.str(); }

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

EvenClass::EvenClass(int rp, int rq) : rp_(rp), rq_(rq) {
  const bool ok = (rp == 0 && rq == 1) || (rp == 1 && rq == 0) || (rp == 1 && rq == 1);
  if (!ok) {
    throw Error(ErrorKind::parse, "even class must be one of [0,1], [1,0], [1,1]");
  }
}

std::string EvenClass::str() const {
  return "[" + std::to_string(rp_) + "," + std::to_string(rq_) + "]";
}

Integer det(const Slope& a, const Slope& b) { return a.p() * b.q() - b.p() * a.q(); }

Integer det(const SignedPair& a, const SignedPair& b) { return a.p * b.q - b.p * a.q; }

bool is_even(const Slope& a, EvenClass ec) {
  return static_cast<int>(a.p().is_odd()) == ec.rp() &&
         static_cast<int>(a.q().is_odd()) == ec.rq();
}

}  // namespace dehnfill
