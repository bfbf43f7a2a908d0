#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace altk {

// Small labeled-tree toolkit shared by the decomposition and the achirality
// search: canonical strings for equality-up-to-isomorphism, centers, and
// automorphism enumeration with a pluggable label compatibility test.
struct LabeledTree {
  std::vector<std::string> label;          // one per vertex
  std::vector<std::pair<int, int>> edges;  // n-1 edges, vertices 0..n-1
};

std::vector<std::vector<int>> tree_adjacency(const LabeledTree& T);

// One or two central vertices (midpoints of a longest path).
std::vector<int> tree_centers(const LabeledTree& T);

// AHU-style canonical string rooted at the center; equal strings iff the
// labeled trees are isomorphic.
std::string tree_canonical(const LabeledTree& T);

// All vertex bijections preserving adjacency with compat(v, image) true for
// every vertex.  compat defaults to label equality when not supplied.
std::vector<std::vector<int>> tree_automorphisms(
    const LabeledTree& T,
    const std::function<bool(int, int)>& compat = nullptr);

}  // namespace altk
