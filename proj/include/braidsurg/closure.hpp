#pragma once

#include <vector>

#include "braidsurg/braid.hpp"

namespace braidsurg {

// Component decomposition of a braid closure: orbits of the underlying
// permutation, labeled 1..m in increasing order of minimal strand index.
struct Components {
  int component_count = 0;
  std::vector<int> strand_to_component;  // size k, values 1..m
  std::vector<int> strand_counts;        // size m, sums to k
};

// Components plus the pairwise linking matrix of the closure. All strands
// are oriented coherently around the braid axis; the diagonal is 0 (surgery
// coefficients are Seifert-framed, so self-linking is never stored). The
// strand count of a component equals its linking number with the braid axis.
struct ClosureInfo {
  int strands = 1;
  int component_count = 0;
  std::vector<int> strand_to_component;
  std::vector<int> strand_counts;
  std::vector<std::vector<long long>> linking;  // m x m, symmetric, zero diagonal

  friend bool operator==(const ClosureInfo&, const ClosureInfo&) = default;
};

Components components(const BraidWord& w);

// Strand-tracked crossing count: each letter +-i is a crossing of sign +-1
// between the two strands at positions i, i+1; the linking number of two
// distinct components is half the signed sum over their crossings.
ClosureInfo linking_matrix(const BraidWord& w);

// Linking numbers with the braid axis: each strand of a component pierces
// the axis disk once, positively, so lk(component j, axis) = strand count j.
std::vector<int> axis_linking(const ClosureInfo& info);

}  // namespace braidsurg
