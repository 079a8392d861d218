#include "khcube/spatialgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "khcube/khovanov.hpp"

namespace khcube {

namespace {

enum class LocKind { crossing, vertex };

struct Location {
    LocKind kind;
    int index; // crossing or vertex index
    int slot;
};

// Arc-end incidence structure. Ends are numbered 2*arc + {0,1} in scan
// order: crossings by (index, slot), then vertices by (index, slot).
struct Ends {
    std::vector<int> arc_labels;            // sorted
    std::map<int, int> arc_index;
    std::vector<Location> where;            // per end
    std::vector<int> end_at_crossing_slot;  // 4 * crossing + slot -> end
    std::vector<std::vector<int>> end_at_vertex_slot;
};

Ends collect_ends(const SpatialGraphDiagram& g) {
    Ends ends;
    std::map<int, int> count;
    for (const auto& x : g.crossings)
        for (int a : x)
            count[a]++;
    for (const auto& v : g.vertices)
        for (int a : v)
            count[a]++;
    for (const auto& [a, c] : count)
        ends.arc_labels.push_back(a);
    for (std::size_t i = 0; i < ends.arc_labels.size(); ++i)
        ends.arc_index[ends.arc_labels[i]] = static_cast<int>(i);

    ends.where.resize(2 * ends.arc_labels.size());
    std::vector<int> seen(ends.arc_labels.size(), 0);
    auto place = [&](int label, Location loc) {
        const int arc = ends.arc_index.at(label);
        const int end = 2 * arc + seen[arc]++;
        ends.where[end] = loc;
        return end;
    };

    ends.end_at_crossing_slot.assign(4 * g.crossings.size(), -1);
    for (std::size_t k = 0; k < g.crossings.size(); ++k)
        for (int s = 0; s < 4; ++s)
            ends.end_at_crossing_slot[4 * k + s] =
                place(g.crossings[k][s], {LocKind::crossing, static_cast<int>(k), s});
    ends.end_at_vertex_slot.resize(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (std::size_t s = 0; s < g.vertices[v].size(); ++s)
            ends.end_at_vertex_slot[v].push_back(
                place(g.vertices[v][s], {LocKind::vertex, static_cast<int>(v), static_cast<int>(s)}));
    return ends;
}

struct StopRec {
    int crossing;
    int enter_slot;
    int exit_slot;
};

struct Strand {
    bool closed = false;
    int min_arc_label = 0;
    std::vector<int> end_sequence; // visited ends in walk order
    std::vector<StopRec> stops;    // crossing passes in walk order (all crossings)
};

struct StrandDecomposition {
    std::vector<Strand> strands;
    std::vector<int> strand_of_end;
};

// Walks the curve starting at `start`. The first move traverses the arc
// when forward, the location link otherwise (reversing the cycle).
Strand walk_from(const Ends& ends, const std::vector<int>& loc_link, int start, bool forward,
                 std::vector<int>* strand_of_end, int strand_id) {
    Strand s;
    int e = start;
    bool via_arc = forward;
    while (true) {
        if (strand_of_end)
            (*strand_of_end)[e] = strand_id;
        s.end_sequence.push_back(e);
        int next;
        if (via_arc) {
            next = e ^ 1;
        } else {
            next = loc_link[e];
            if (next < 0) {
                s.closed = false;
                return s;
            }
            const Location& loc = ends.where[e];
            if (loc.kind == LocKind::crossing)
                s.stops.push_back({loc.index, loc.slot, ends.where[next].slot});
        }
        e = next;
        via_arc = !via_arc;
        if (e == start && via_arc == forward) {
            s.closed = true;
            return s;
        }
    }
}

StrandDecomposition decompose(const Ends& ends, const std::vector<int>& loc_link) {
    StrandDecomposition dec;
    dec.strand_of_end.assign(ends.where.size(), -1);
    const int arcs = static_cast<int>(ends.arc_labels.size());

    // Open strands first, from each free end.
    for (int e = 0; e < 2 * arcs; ++e) {
        if (loc_link[e] >= 0 || dec.strand_of_end[e] >= 0)
            continue;
        const int id = static_cast<int>(dec.strands.size());
        Strand s = walk_from(ends, loc_link, e, /*forward=*/true, &dec.strand_of_end, id);
        s.closed = false;
        dec.strands.push_back(std::move(s));
    }
    // Closed strands, discovered in ascending minimum arc label.
    for (int arc = 0; arc < arcs; ++arc) {
        const int e = 2 * arc;
        if (dec.strand_of_end[e] >= 0)
            continue;
        const int id = static_cast<int>(dec.strands.size());
        Strand s = walk_from(ends, loc_link, e, /*forward=*/true, &dec.strand_of_end, id);
        s.min_arc_label = ends.arc_labels[arc];
        dec.strands.push_back(std::move(s));
    }
    return dec;
}

} // namespace

ValidationReport validate_spatial(const SpatialGraphDiagram& g) {
    ValidationReport rep;
    auto flag = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    if (g.free_loops < 0)
        flag("free_loops must be nonnegative");
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (g.vertices[v].empty())
            flag("vertex " + std::to_string(v) + " has degree 0");

    std::map<int, int> count;
    for (const auto& x : g.crossings)
        for (int a : x) {
            if (a <= 0)
                flag("crossing slot holds non-positive arc label " + std::to_string(a));
            count[a]++;
        }
    for (const auto& v : g.vertices)
        for (int a : v) {
            if (a <= 0)
                flag("vertex slot holds non-positive arc label " + std::to_string(a));
            count[a]++;
        }
    for (const auto& [a, n] : count)
        if (n != 2)
            flag("arc-end label " + std::to_string(a) + " occurs " + std::to_string(n) +
                 " times (expected exactly two)");
    return rep;
}

void require_valid(const SpatialGraphDiagram& g) {
    const auto rep = validate_spatial(g);
    if (!rep.ok)
        throw validation_error("invalid spatial graph diagram: " + rep.violations.front());
}

std::vector<ReplacementChoice> enumerate_replacements(const SpatialGraphDiagram& g) {
    require_valid(g);
    std::vector<std::vector<std::optional<std::pair<int, int>>>> per_vertex;
    for (const auto& v : g.vertices) {
        std::vector<std::optional<std::pair<int, int>>> options;
        const int deg = static_cast<int>(v.size());
        if (deg < 2) {
            options.push_back(std::nullopt);
        } else {
            for (int p = 0; p < deg; ++p)
                for (int q = p + 1; q < deg; ++q)
                    options.emplace_back(std::make_pair(p, q));
        }
        per_vertex.push_back(std::move(options));
    }

    std::vector<ReplacementChoice> all;
    ReplacementChoice current;
    current.connections.resize(g.vertices.size());
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == per_vertex.size()) {
            all.push_back(current);
            return;
        }
        for (const auto& opt : per_vertex[v]) {
            current.connections[v] = opt;
            rec(v + 1);
        }
    };
    rec(0);
    return all;
}

namespace {

struct Assembly {
    LinkDiagram diagram;
    // Per crossing of g: surviving flag and the strands of its two passages.
    std::vector<bool> surviving;
    std::vector<int> under_strand, over_strand;
    std::vector<int> oriented_strands; // strand ids with at least one stop
};

std::vector<int> location_links(const SpatialGraphDiagram& g, const Ends& ends,
                                const ReplacementChoice& choice) {
    std::vector<int> loc_link(ends.where.size(), -1);
    for (std::size_t k = 0; k < g.crossings.size(); ++k) {
        loc_link[ends.end_at_crossing_slot[4 * k + 0]] = ends.end_at_crossing_slot[4 * k + 2];
        loc_link[ends.end_at_crossing_slot[4 * k + 2]] = ends.end_at_crossing_slot[4 * k + 0];
        loc_link[ends.end_at_crossing_slot[4 * k + 1]] = ends.end_at_crossing_slot[4 * k + 3];
        loc_link[ends.end_at_crossing_slot[4 * k + 3]] = ends.end_at_crossing_slot[4 * k + 1];
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (!choice.connections[v])
            continue;
        const auto [p, q] = *choice.connections[v];
        const int ep = ends.end_at_vertex_slot[v][p];
        const int eq = ends.end_at_vertex_slot[v][q];
        loc_link[ep] = eq;
        loc_link[eq] = ep;
    }
    return loc_link;
}

// Builds the output diagram for one orientation class; reversed[t] flips
// the walk direction of retained strand t.
Assembly assemble(const SpatialGraphDiagram& g, const Ends& ends,
                  const std::vector<int>& loc_link, const StrandDecomposition& dec,
                  const std::vector<bool>& reversed) {
    Assembly out;
    out.surviving.assign(g.crossings.size(), false);
    out.under_strand.assign(g.crossings.size(), -1);
    out.over_strand.assign(g.crossings.size(), -1);

    for (std::size_t k = 0; k < g.crossings.size(); ++k) {
        const int su = dec.strand_of_end[ends.end_at_crossing_slot[4 * k + 0]];
        const int so = dec.strand_of_end[ends.end_at_crossing_slot[4 * k + 1]];
        out.under_strand[k] = su;
        out.over_strand[k] = so;
        out.surviving[k] = dec.strands[su].closed && dec.strands[so].closed;
    }

    out.diagram.free_loops = g.free_loops;
    std::vector<std::array<int, 4>> slot_labels(g.crossings.size(), {0, 0, 0, 0});
    std::vector<int> under_in_slot(g.crossings.size(), -1);

    int next_label = 1;
    for (std::size_t t = 0; t < dec.strands.size(); ++t) {
        const Strand& base = dec.strands[t];
        if (!base.closed)
            continue;
        const bool rev = t < reversed.size() && reversed[t];
        const Strand s = rev ? walk_from(ends, loc_link, base.end_sequence.front(),
                                         /*forward=*/false, nullptr, -1)
                             : base;

        std::vector<StopRec> stops;
        for (const auto& stop : s.stops)
            if (out.surviving[stop.crossing])
                stops.push_back(stop);
        if (stops.empty()) {
            out.diagram.free_loops += 1;
            continue;
        }

        const int first = next_label;
        const int m = static_cast<int>(stops.size());
        std::vector<int> cycle;
        for (int i = 0; i < m; ++i)
            cycle.push_back(next_label++);
        out.diagram.components.push_back(cycle);
        out.oriented_strands.push_back(static_cast<int>(t));

        // Segment i runs from stop i to stop i+1 and carries label first+i,
        // so stop i sees incoming segment i-1 and outgoing segment i.
        for (int i = 0; i < m; ++i) {
            const int incoming = first + (i + m - 1) % m;
            const int outgoing = first + i;
            slot_labels[stops[i].crossing][stops[i].enter_slot] = incoming;
            slot_labels[stops[i].crossing][stops[i].exit_slot] = outgoing;
            if (stops[i].enter_slot == 0 || stops[i].enter_slot == 2)
                under_in_slot[stops[i].crossing] = stops[i].enter_slot;
        }
    }

    for (std::size_t k = 0; k < g.crossings.size(); ++k) {
        if (!out.surviving[k])
            continue;
        const auto& sl = slot_labels[k];
        if (under_in_slot[k] == 0)
            out.diagram.crossings.push_back({sl[0], sl[1], sl[2], sl[3]});
        else if (under_in_slot[k] == 2)
            out.diagram.crossings.push_back({sl[2], sl[3], sl[0], sl[1]});
        else
            throw internal_error("apply_replacement: surviving crossing without an under pass");
    }
    return out;
}

} // namespace

LinkDiagram apply_replacement(const SpatialGraphDiagram& g, const ReplacementChoice& choice) {
    require_valid(g);
    if (choice.connections.size() != g.vertices.size())
        throw validation_error("apply_replacement: choice covers " +
                               std::to_string(choice.connections.size()) + " vertices of " +
                               std::to_string(g.vertices.size()));
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const int deg = static_cast<int>(g.vertices[v].size());
        const auto& conn = choice.connections[v];
        if (!conn) {
            if (deg >= 2)
                throw validation_error("apply_replacement: vertex " + std::to_string(v) +
                                       " of degree " + std::to_string(deg) +
                                       " requires a slot pair");
            continue;
        }
        const auto [p, q] = *conn;
        if (p == q || p < 0 || q < 0 || p >= deg || q >= deg)
            throw validation_error("apply_replacement: invalid slot pair (" + std::to_string(p) +
                                   "," + std::to_string(q) + ") at vertex " + std::to_string(v));
    }

    const Ends ends = collect_ends(g);
    const auto loc_link = location_links(g, ends, choice);
    const StrandDecomposition dec = decompose(ends, loc_link);

    // First pass with every strand in discovery orientation.
    Assembly base = assemble(g, ends, loc_link, dec, {});

    // The table of the result depends on the relative component orientations
    // only through (n_plus, n_minus); orient to maximize the writhe so the
    // output is independent of input labeling.
    const auto& oriented = base.oriented_strands;
    if (!oriented.empty() && !base.diagram.crossings.empty()) {
        const SignData signs = crossing_signs(base.diagram);
        std::map<int, int> strand_pos; // strand id -> bit position
        for (std::size_t i = 0; i < oriented.size(); ++i)
            strand_pos[oriented[i]] = static_cast<int>(i);

        // base.diagram.crossings[kk] corresponds to the kk-th surviving k.
        std::vector<std::pair<int, int>> pass_strands;
        for (std::size_t k = 0; k < g.crossings.size(); ++k)
            if (base.surviving[k])
                pass_strands.emplace_back(base.under_strand[k], base.over_strand[k]);

        const std::size_t classes = std::size_t{1} << (oriented.size() - 1);
        if (classes > (std::size_t{1} << 20))
            throw guard_error("apply_replacement: too many components to orient");
        long best_writhe = 0;
        std::size_t best_class = 0;
        for (std::size_t cls = 0; cls < classes; ++cls) {
            long w = 0;
            for (std::size_t kk = 0; kk < pass_strands.size(); ++kk) {
                const auto [su, so] = pass_strands[kk];
                const bool ru = (strand_pos.at(su) > 0) && ((cls >> (strand_pos.at(su) - 1)) & 1);
                const bool ro = (strand_pos.at(so) > 0) && ((cls >> (strand_pos.at(so) - 1)) & 1);
                w += (ru != ro) ? -signs.signs[kk] : signs.signs[kk];
            }
            if (cls == 0 || w > best_writhe) {
                best_writhe = w;
                best_class = cls;
            }
        }
        if (best_class != 0) {
            std::vector<bool> reversed(dec.strands.size(), false);
            for (std::size_t i = 1; i < oriented.size(); ++i)
                if ((best_class >> (i - 1)) & 1)
                    reversed[oriented[i]] = true;
            base = assemble(g, ends, loc_link, dec, reversed);
        }
    }

    require_valid(base.diagram);
    return base.diagram;
}

LinkFamily kauffman_family(const SpatialGraphDiagram& g, const FamilyOptions& opts) {
    require_valid(g);
    long long total = 1;
    for (const auto& v : g.vertices) {
        const long long deg = static_cast<long long>(v.size());
        const long long options = deg < 2 ? 1 : deg * (deg - 1) / 2;
        total *= options;
        if (total > opts.max_choices)
            throw guard_error("kauffman_family: replacement count exceeds guard of " +
                              std::to_string(opts.max_choices));
    }

    LinkFamily family;
    family.mode = opts.mode;
    for (const auto& choice : enumerate_replacements(g)) {
        FamilyMember member;
        member.choice = choice;
        member.diagram = apply_replacement(g, choice);
        if (opts.drop_empty && member.diagram.crossings.empty() &&
            member.diagram.components.empty() && member.diagram.free_loops == 0)
            continue;
        member.table = khovanov_homology(member.diagram, opts.max_crossings);
        family.members.push_back(std::move(member));
    }

    std::stable_sort(family.members.begin(), family.members.end(),
                     [](const FamilyMember& a, const FamilyMember& b) { return a.table < b.table; });
    if (opts.mode == DedupMode::set_by_table) {
        std::vector<FamilyMember> unique;
        for (auto& m : family.members)
            if (unique.empty() || !(unique.back().table == m.table))
                unique.push_back(std::move(m));
        family.members = std::move(unique);
    }
    return family;
}

KhTable graph_khovanov(const SpatialGraphDiagram& g, const FamilyOptions& opts) {
    KhTable total;
    for (const auto& member : kauffman_family(g, opts).members)
        total = sum_tables(total, member.table);
    return total;
}

} // namespace khcube
