#pragma once

#include <array>
#include <string>
#include <vector>

#include "khcube/errors.hpp"

namespace khcube {

/// Oriented link diagram as a planar-diagram code.
///
/// Each crossing lists its four incident arc labels counterclockwise,
/// starting at the incoming under-strand, so the under-strand runs from
/// slot 0 to slot 2. Components are cyclic arc sequences in orientation
/// order. Crossing-free circles are carried only as a count (free_loops)
/// and are addressed by pseudo-arc labels -1, -2, ... where needed.
struct LinkDiagram {
    std::vector<std::array<int, 4>> crossings;
    std::vector<std::vector<int>> components;
    int free_loops = 0;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// One smoothing of the diagram: alpha picks a resolution per crossing,
/// circles partition the arc labels; circle_count additionally counts the
/// crossing-free circles.
struct Smoothing {
    std::vector<int> alpha;
    std::vector<std::vector<int>> circles;
    int circle_count = 0;
};

struct SignData {
    std::vector<int> signs; // +1 or -1 per crossing
    int n_plus = 0;
    int n_minus = 0;
};

/// Checks every structural invariant; ok iff all hold. Violations name the
/// offending arc or crossing.
ValidationReport validate_link(const LinkDiagram& d);

/// Throws validation_error when validate_link reports violations.
void require_valid(const LinkDiagram& d);

/// Sign of crossing (a,b,c,d): +1 when the over-strand runs b -> d, -1 when
/// it runs d -> b. Resolved globally so that every arc terminates exactly
/// once (2-arc components make the local successor test ambiguous).
SignData crossing_signs(const LinkDiagram& d);

/// Smoothing by a bit per crossing: bit 0 at (a,b,c,d) joins {a,b} and
/// {c,d}; bit 1 joins {a,d} and {b,c}.
Smoothing resolve(const LinkDiagram& d, const std::vector<int>& alpha);

/// Split union: d2's arc labels are shifted clear of d1's.
LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2);

/// Mirror image: over- and under-strands exchange roles at every crossing,
/// so every crossing sign flips. Involutive.
LinkDiagram mirror(const LinkDiagram& d);

/// Connected sum: arcs a1 and a2 are each cut and the four ends cross-joined,
/// merging the two ambient components. A crossing-free circle of either
/// diagram may be designated by its pseudo-arc label.
LinkDiagram connected_sum(const LinkDiagram& d1, int a1, const LinkDiagram& d2, int a2);

/// Elementary band surgery: both arcs are cut and reconnected the other way.
/// Drops the component count by 1 when the arcs lie on distinct components
/// (fusion) and raises it by 1 otherwise (fission). A crossing-free circle
/// may be named twice (a1 == a2 == pseudo-arc) to split it in two; this is
/// the only permitted form of a1 == a2.
LinkDiagram saddle(const LinkDiagram& d, int a1, int a2);

inline bool is_pseudo_arc(int label) { return label < 0; }

int component_count(const LinkDiagram& d);
int max_arc_label(const LinkDiagram& d);

} // namespace khcube
