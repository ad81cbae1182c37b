#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

// Points are 0..v-1; (k, lambda) are the declared parameters.
struct Design {
  int v = 0;
  int k = 0;
  int lambda = 0;
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const Design&, const Design&) = default;
};

struct BibdReport {
  bool valid = false;
  std::string violation;  // first problem found; empty when valid

  explicit operator bool() const { return valid; }
};

// Never throws; reports the first bad block or point pair.
BibdReport validate_bibd(const Design& d);

// Sorts points within blocks and blocks lexicographically.
void canonicalize(Design& d);

// All 2-subsets of v points: a (v, 2, 1) design.
Design construct_pair_design(int v);

// Steiner triple system on v points, v = 1 or 3 (mod 6), v >= 7. Bose's
// construction for v = 3 (mod 6), Skolem's for v = 1 (mod 6).
Design construct_sts(int v);

// One vertex per block, labeled base:<block index>; blocks are adjacent when
// they intersect. Throws DesignError on an invalid design.
Graph block_intersection_graph(const Design& d);

// Base graph with cop and zombie number k: K_1 for k = 1, the block
// intersection graph of the (4,2,1) pair design for k = 2 and of the Bose
// STS(15) for k = 3. k >= 4 needs a supplied (v,k,1) design with
// v > k(k-1)^2 + 1.
Graph build_ZC(int k, const std::optional<Design>& supplied = std::nullopt);
Design canonical_ZC_design(int k);

// {"v":int,"k":int,"lambda":int,"blocks":[[int,...],...]}
std::string design_to_json(const Design& d);
Design design_from_json(const std::string& text);
Design read_design_file(const std::string& path);

}  // namespace pursuit
