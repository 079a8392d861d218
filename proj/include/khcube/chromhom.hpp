#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khcube/bigraded.hpp"
#include "khcube/errors.hpp"
#include "khcube/exactlin.hpp"

namespace khcube {

/// Abstract graph: vertex count plus an ordered edge list (0-based endpoint
/// indices). The edge order fixes the cube axes. Multi-edges are permitted;
/// loops are rejected by the homology operations.
struct AbstractGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Throws validation_error on bad endpoints; loops are reported only when
/// reject_loops is set.
void require_valid(const AbstractGraph& g, bool reject_loops);

/// Number of connected components of the spanning subgraph (V, s).
int spanning_components(const AbstractGraph& g, const std::vector<int>& edge_subset);

/// Edge-subset cube with one exterior-algebra factor per component.
/// Generators at (i, j): subsets s with |s| = i, labelings with total degree
/// j where deg(one) = 0 and deg(x) = 1.
struct ChromComplex {
    int edge_count = 0;
    std::vector<int> component_counts; // per subset bitmask
    std::map<std::pair<int, int>, std::vector<std::pair<std::uint32_t, std::uint32_t>>> basis;
    std::map<std::pair<int, int>, SparseMatrix> diff; // block (i,j) -> (i+1,j)

    long long dim(int i, int j) const;
    long long total_generators() const;
};

ChromComplex chromatic_complex(const AbstractGraph& g);

ChromTable chromatic_homology(const AbstractGraph& g, int max_edges = 16);

/// (G - e, G / e); contraction identifies the endpoints, removes e together
/// with its parallels, and merges duplicate edges, preserving edge order.
std::pair<AbstractGraph, AbstractGraph> deletion_contraction(const AbstractGraph& g, int e);

/// Dimension-wise corollary of the deletion-contraction long exact sequence:
/// dim H^{i,j}(G) <= dim H^{i,j}(G-e) + dim H^{i-1,j}(G/e) for all (i, j).
bool les_bound_check(const AbstractGraph& g, int e, int max_edges = 16);

} // namespace khcube
