#include "khcube/linkdiag.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace khcube {

namespace {

std::map<int, int> successor_map(const LinkDiagram& d) {
    std::map<int, int> succ;
    for (const auto& comp : d.components)
        for (std::size_t i = 0; i < comp.size(); ++i)
            succ[comp[i]] = comp[(i + 1) % comp.size()];
    return succ;
}

struct SlotRef {
    int crossing = -1;
    int slot = -1;
};

// Orientation analysis: which slot each arc terminates at (head) and starts
// at (tail), plus the resulting crossing signs. Each consecutive pair
// (x, succ x) of a component cycle is consumed by exactly one strand passage.
struct Passages {
    SignData signs;
    std::map<int, SlotRef> head;
    std::map<int, SlotRef> tail;
};

Passages analyze_passages(const LinkDiagram& d) {
    const auto succ = successor_map(d);
    std::map<int, bool> avail; // pair (x, succ x) still unconsumed
    for (const auto& [x, y] : succ)
        avail[x] = true;

    Passages p;
    p.signs.signs.assign(d.crossings.size(), 0);

    auto consume = [&](int x, const char* what, int k) {
        auto it = avail.find(x);
        if (it == avail.end() || !it->second)
            throw validation_error("crossing " + std::to_string(k) + ": " + what +
                                   " transition through arc " + std::to_string(x) +
                                   " is not consistent with the component cycles");
        it->second = false;
    };

    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& [a, b, c, dd] = d.crossings[k];
        auto it = succ.find(a);
        if (it == succ.end() || it->second != c)
            throw validation_error("crossing " + std::to_string(k) +
                                   ": under-strand must run " + std::to_string(a) + " -> " +
                                   std::to_string(c));
        consume(a, "under", static_cast<int>(k));
        p.head[a] = {static_cast<int>(k), 0};
        p.tail[c] = {static_cast<int>(k), 2};
    }

    auto assign = [&](std::size_t k, int sign) {
        const auto& [a, b, c, dd] = d.crossings[k];
        p.signs.signs[k] = sign;
        if (sign > 0) {
            consume(b, "over", static_cast<int>(k));
            p.head[b] = {static_cast<int>(k), 1};
            p.tail[dd] = {static_cast<int>(k), 3};
        } else {
            consume(dd, "over", static_cast<int>(k));
            p.head[dd] = {static_cast<int>(k), 3};
            p.tail[b] = {static_cast<int>(k), 1};
        }
    };

    // Propagate forced choices; an unforced crossing (its over-strand is a
    // 2-arc component crossed twice) is resolved to +1 deterministically.
    std::size_t unresolved = d.crossings.size();
    while (unresolved > 0) {
        bool changed = false;
        std::size_t first_open = d.crossings.size();
        for (std::size_t k = 0; k < d.crossings.size(); ++k) {
            if (p.signs.signs[k] != 0)
                continue;
            const auto& [a, b, c, dd] = d.crossings[k];
            auto sb = succ.find(b);
            auto sd = succ.find(dd);
            const bool cand_pos = sb != succ.end() && sb->second == dd && avail.at(b);
            const bool cand_neg = sd != succ.end() && sd->second == b && avail.at(dd);
            if (!cand_pos && !cand_neg)
                throw validation_error("crossing " + std::to_string(k) +
                                       ": over-strand transition between arcs " +
                                       std::to_string(b) + " and " + std::to_string(dd) +
                                       " is not consistent with the component cycles");
            if (cand_pos != cand_neg) {
                assign(k, cand_pos ? +1 : -1);
                --unresolved;
                changed = true;
            } else if (first_open == d.crossings.size()) {
                first_open = k;
            }
        }
        if (!changed && unresolved > 0) {
            assign(first_open, +1);
            --unresolved;
        }
    }

    for (int s : p.signs.signs)
        (s > 0 ? p.signs.n_plus : p.signs.n_minus)++;
    return p;
}

// Rebuild component cycles from a successor map, smallest start label first.
std::vector<std::vector<int>> cycles_from_successors(const std::map<int, int>& succ) {
    std::vector<std::vector<int>> cycles;
    std::set<int> seen;
    for (const auto& [start, ignored] : succ) {
        if (seen.count(start))
            continue;
        std::vector<int> cyc;
        int x = start;
        do {
            cyc.push_back(x);
            seen.insert(x);
            x = succ.at(x);
        } while (x != start);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

LinkDiagram shift_labels(const LinkDiagram& d, int offset) {
    LinkDiagram out;
    out.free_loops = d.free_loops;
    out.crossings.reserve(d.crossings.size());
    for (const auto& x : d.crossings)
        out.crossings.push_back({x[0] + offset, x[1] + offset, x[2] + offset, x[3] + offset});
    out.components.reserve(d.components.size());
    for (const auto& comp : d.components) {
        std::vector<int> c;
        c.reserve(comp.size());
        for (int a : comp)
            c.push_back(a + offset);
        out.components.push_back(std::move(c));
    }
    return out;
}

bool has_arc(const LinkDiagram& d, int label) {
    for (const auto& comp : d.components)
        if (std::find(comp.begin(), comp.end(), label) != comp.end())
            return true;
    return false;
}

void check_arc_designator(const LinkDiagram& d, int label, const char* role) {
    if (is_pseudo_arc(label)) {
        if (-label > d.free_loops)
            throw validation_error(std::string(role) + ": pseudo-arc " + std::to_string(label) +
                                   " names no crossing-free circle (free_loops=" +
                                   std::to_string(d.free_loops) + ")");
    } else if (!has_arc(d, label)) {
        throw validation_error(std::string(role) + ": unknown arc label " + std::to_string(label));
    }
}

void relabel_slot(LinkDiagram& d, const SlotRef& where, int new_label) {
    d.crossings[where.crossing][where.slot] = new_label;
}

} // namespace

ValidationReport validate_link(const LinkDiagram& d) {
    ValidationReport rep;
    auto flag = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    if (d.free_loops < 0)
        flag("free_loops must be nonnegative");

    std::map<int, int> comp_count, slot_count;
    for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        if (d.components[ci].empty())
            flag("component " + std::to_string(ci) + " is empty");
        for (int a : d.components[ci]) {
            if (a <= 0)
                flag("component " + std::to_string(ci) + ": arc labels must be positive, got " +
                     std::to_string(a));
            comp_count[a]++;
        }
    }
    for (const auto& x : d.crossings)
        for (int a : x) {
            if (a <= 0)
                flag("crossing slot holds non-positive arc label " + std::to_string(a));
            slot_count[a]++;
        }

    for (const auto& [a, n] : comp_count)
        if (n != 1)
            flag("arc " + std::to_string(a) + " appears " + std::to_string(n) +
                 " times in the component cycles (expected once)");
    for (const auto& [a, n] : slot_count)
        if (n != 2)
            flag("arc " + std::to_string(a) + " appears in " + std::to_string(n) +
                 " crossing slots (expected exactly two)");
    for (const auto& [a, n] : comp_count)
        if (!slot_count.count(a))
            flag("arc " + std::to_string(a) + " lies on a component but in no crossing slot");
    for (const auto& [a, n] : slot_count)
        if (!comp_count.count(a))
            flag("arc " + std::to_string(a) + " sits in crossing slots but on no component");

    if (!rep.ok)
        return rep;

    const auto succ = successor_map(d);
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& [a, b, c, dd] = d.crossings[k];
        if (succ.at(a) != c)
            flag("crossing " + std::to_string(k) + ": under-strand invariant fails, " +
                 std::to_string(c) + " does not succeed " + std::to_string(a));
        if (succ.at(b) != dd && succ.at(dd) != b)
            flag("crossing " + std::to_string(k) + ": over-strand invariant fails between arcs " +
                 std::to_string(b) + " and " + std::to_string(dd));
    }
    if (!rep.ok)
        return rep;

    try {
        analyze_passages(d);
    } catch (const validation_error& e) {
        flag(e.what());
    }
    return rep;
}

void require_valid(const LinkDiagram& d) {
    const auto rep = validate_link(d);
    if (!rep.ok)
        throw validation_error("invalid link diagram: " + rep.violations.front());
}

SignData crossing_signs(const LinkDiagram& d) {
    require_valid(d);
    return analyze_passages(d).signs;
}

Smoothing resolve(const LinkDiagram& d, const std::vector<int>& alpha) {
    if (alpha.size() != d.crossings.size())
        throw contract_error("resolve: alpha has " + std::to_string(alpha.size()) +
                             " bits for " + std::to_string(d.crossings.size()) + " crossings");

    std::map<int, int> parent;
    for (const auto& comp : d.components)
        for (int a : comp)
            parent[a] = a;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& [a, b, c, dd] = d.crossings[k];
        if (alpha[k] == 0) {
            unite(a, b);
            unite(c, dd);
        } else {
            unite(a, dd);
            unite(b, c);
        }
    }

    std::map<int, std::vector<int>> classes;
    for (const auto& [a, ignored] : parent)
        classes[find(a)].push_back(a);

    Smoothing s;
    s.alpha = alpha;
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        s.circles.push_back(std::move(members));
    }
    std::sort(s.circles.begin(), s.circles.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    s.circle_count = static_cast<int>(s.circles.size()) + d.free_loops;
    return s;
}

LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2) {
    require_valid(d1);
    require_valid(d2);
    LinkDiagram out = d1;
    const LinkDiagram shifted = shift_labels(d2, max_arc_label(d1));
    out.crossings.insert(out.crossings.end(), shifted.crossings.begin(), shifted.crossings.end());
    out.components.insert(out.components.end(), shifted.components.begin(),
                          shifted.components.end());
    out.free_loops += shifted.free_loops;
    return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
    require_valid(d);
    const auto signs = analyze_passages(d).signs;
    LinkDiagram out;
    out.free_loops = d.free_loops;
    out.components = d.components;
    out.crossings.reserve(d.crossings.size());
    for (std::size_t k = 0; k < d.crossings.size(); ++k) {
        const auto& [a, b, c, dd] = d.crossings[k];
        // Re-root at the old over-strand's incoming slot, which the sign
        // locates; the rotation keeps the counterclockwise slot order.
        if (signs.signs[k] > 0)
            out.crossings.push_back({b, c, dd, a});
        else
            out.crossings.push_back({dd, a, b, c});
    }
    return out;
}

LinkDiagram connected_sum(const LinkDiagram& d1, int a1, const LinkDiagram& d2, int a2) {
    require_valid(d1);
    require_valid(d2);
    check_arc_designator(d1, a1, "connected_sum");
    check_arc_designator(d2, a2, "connected_sum");

    // A crossing-free circle is absorbed without structural change.
    if (is_pseudo_arc(a1) || is_pseudo_arc(a2)) {
        LinkDiagram out = disjoint_union(d1, d2);
        out.free_loops -= 1;
        return out;
    }

    const int offset = max_arc_label(d1);
    const LinkDiagram s2 = shift_labels(d2, offset);
    const int a2s = a2 + offset;

    const auto p1 = analyze_passages(d1);
    const auto p2 = analyze_passages(s2);

    LinkDiagram out;
    out.free_loops = d1.free_loops + s2.free_loops;
    out.crossings = d1.crossings;
    const std::size_t base = out.crossings.size();
    out.crossings.insert(out.crossings.end(), s2.crossings.begin(), s2.crossings.end());

    // Cut both arcs and cross-join: the piece keeping label a1 now terminates
    // where a2s used to, and vice versa.
    SlotRef h2 = p2.head.at(a2s);
    h2.crossing += static_cast<int>(base);
    relabel_slot(out, p1.head.at(a1), a2s);
    relabel_slot(out, h2, a1);

    auto succ1 = successor_map(d1);
    const auto succ2 = successor_map(s2);
    std::map<int, int> succ = succ1;
    succ.insert(succ2.begin(), succ2.end());
    const int q1 = succ.at(a1);
    const int q2 = succ.at(a2s);
    succ[a1] = q2;
    succ[a2s] = q1;

    std::set<int> merged_arcs;
    {
        int x = a1;
        do {
            merged_arcs.insert(x);
            x = succ.at(x);
        } while (x != a1);
    }
    for (const auto& comp : d1.components)
        if (!merged_arcs.count(comp.front()))
            out.components.push_back(comp);
    for (const auto& comp : s2.components)
        if (!merged_arcs.count(comp.front()))
            out.components.push_back(comp);
    std::vector<int> joined;
    int x = a1;
    do {
        joined.push_back(x);
        x = succ.at(x);
    } while (x != a1);
    out.components.push_back(std::move(joined));
    return out;
}

LinkDiagram saddle(const LinkDiagram& d, int a1, int a2) {
    require_valid(d);
    check_arc_designator(d, a1, "saddle");
    check_arc_designator(d, a2, "saddle");

    if (is_pseudo_arc(a1) && is_pseudo_arc(a2)) {
        LinkDiagram out = d;
        // Same circle cut twice: fission. Distinct circles: fusion.
        out.free_loops += (a1 == a2) ? +1 : -1;
        return out;
    }
    if (a1 == a2)
        throw validation_error("saddle: a1 and a2 must be distinct arcs");
    if (is_pseudo_arc(a1) || is_pseudo_arc(a2)) {
        // Fusion of a crossing-free circle into the other arc's component.
        LinkDiagram out = d;
        out.free_loops -= 1;
        return out;
    }

    const auto p = analyze_passages(d);
    LinkDiagram out;
    out.free_loops = d.free_loops;
    out.crossings = d.crossings;
    relabel_slot(out, p.head.at(a1), a2);
    relabel_slot(out, p.head.at(a2), a1);

    auto succ = successor_map(d);
    std::swap(succ[a1], succ[a2]);
    out.components = cycles_from_successors(succ);
    return out;
}

int component_count(const LinkDiagram& d) {
    return static_cast<int>(d.components.size()) + d.free_loops;
}

int max_arc_label(const LinkDiagram& d) {
    int m = 0;
    for (const auto& comp : d.components)
        for (int a : comp)
            m = std::max(m, a);
    return m;
}

} // namespace khcube
