#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "dehnfill/farey.hpp"

namespace dehnfill {

// Brute-force view of a finite ball of the dual tree. Distances come from BFS
// parent pointers only, never from the circular-order walk.
class TreeOracle {
 public:
  static constexpr std::uint64_t kFar = std::numeric_limits<std::uint64_t>::max();

  TreeOracle(const FareyTriangle& root, unsigned depth);

  std::size_t size() const { return ball_.nodes.size(); }
  const BallNode& node(std::size_t i) const { return ball_.nodes[i]; }
  const std::vector<std::size_t>& adjacent(std::size_t i) const { return adjacent_[i]; }

  // Distance through the lowest common ancestor.
  std::uint64_t distance(std::size_t i, std::size_t j) const;

  // Every vertex slope of the ball, sorted.
  std::vector<Slope> slopes() const;
  // Ball triangles containing s.
  const std::vector<std::size_t>& fan(const Slope& s) const;

  // Multi-source BFS from the fan of s: distance of every node (kFar when the
  // fan misses the ball) and the next node toward the fan (-1 on the fan).
  struct FanField {
    std::vector<std::uint64_t> distance;
    std::vector<std::ptrdiff_t> toward;
  };
  FanField fan_field(const Slope& s) const;

 private:
  Ball ball_;
  std::vector<std::vector<std::size_t>> adjacent_;
  std::map<Slope, std::vector<std::size_t>> fans_;
};

struct OracleCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

// Compares every Farey-core operation against the oracle on the ball of the
// given depth around base.
std::vector<OracleCheck> oracle_check(const FareyTriangle& base, EvenClass ec, unsigned depth);

}  // namespace dehnfill
