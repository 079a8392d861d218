#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khcube/bigraded.hpp"
#include "khcube/errors.hpp"
#include "khcube/linkdiag.hpp"

namespace khcube {

/// Planar diagram of a graph embedded in the 3-sphere: one cyclic sequence
/// of incident arc-end labels per vertex, plus crossings coded as in
/// LinkDiagram (strands occupy slots 0/2 and 1/3, the first pair passing
/// under). Every arc label occurs exactly twice across all crossing and
/// vertex slots. Loops and multi-edges are permitted.
struct SpatialGraphDiagram {
    std::vector<std::vector<int>> vertices;
    std::vector<std::array<int, 4>> crossings;
    int free_loops = 0;
};

/// Per vertex: the unordered pair of slot positions to join, or
/// no-connection (nullopt, only for vertices of degree < 2).
struct ReplacementChoice {
    std::vector<std::optional<std::pair<int, int>>> connections;
};

struct FamilyMember {
    ReplacementChoice choice;
    LinkDiagram diagram;
    KhTable table;
};

enum class DedupMode { set_by_table, multiset };

struct LinkFamily {
    std::vector<FamilyMember> members;
    DedupMode mode = DedupMode::set_by_table;
};

struct FamilyOptions {
    DedupMode mode = DedupMode::set_by_table;
    bool drop_empty = false;
    long long max_choices = 10000;
    int max_crossings = 16;
};

ValidationReport validate_spatial(const SpatialGraphDiagram& g);
void require_valid(const SpatialGraphDiagram& g);

/// All global replacement choices: the product over vertices of the C(d,2)
/// slot pairs, with a single no-connection choice for degree < 2.
std::vector<ReplacementChoice> enumerate_replacements(const SpatialGraphDiagram& g);

/// Joins the chosen slot pair inside each vertex disk, frees every other
/// slot, deletes all open strands together with the crossings they pass
/// (splicing the surviving strand), and returns the remaining closed curves
/// as an oriented link diagram.
LinkDiagram apply_replacement(const SpatialGraphDiagram& g, const ReplacementChoice& choice);

/// The link family of all replacement choices, each member carrying its
/// homology table. Members are ordered by table; set_by_table keeps one
/// member per distinct table.
LinkFamily kauffman_family(const SpatialGraphDiagram& g, const FamilyOptions& opts = {});

/// Pointwise sum of the member tables of kauffman_family.
KhTable graph_khovanov(const SpatialGraphDiagram& g, const FamilyOptions& opts = {});

} // namespace khcube
