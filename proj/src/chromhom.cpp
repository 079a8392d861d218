#include "khcube/chromhom.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

namespace khcube {

void require_valid(const AbstractGraph& g, bool reject_loops) {
    if (g.vertex_count < 0)
        throw validation_error("graph: negative vertex count");
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& [u, v] = g.edges[e];
        if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count)
            throw validation_error("graph: edge " + std::to_string(e) + " = (" +
                                   std::to_string(u) + "," + std::to_string(v) +
                                   ") has an endpoint outside 0.." +
                                   std::to_string(g.vertex_count - 1));
        if (reject_loops && u == v)
            throw validation_error("graph: edge " + std::to_string(e) + " is a loop at vertex " +
                                   std::to_string(u));
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i)
            parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

// Component id per vertex, ids in order of least vertex.
std::pair<std::vector<int>, int> component_layout(const AbstractGraph& g, std::uint32_t bits) {
    UnionFind uf(g.vertex_count);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if ((bits >> e) & 1)
            uf.unite(g.edges[e].first, g.edges[e].second);
    std::vector<int> comp(g.vertex_count, -1);
    std::vector<int> id_of_root(g.vertex_count, -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        const int r = uf.find(v);
        if (id_of_root[r] < 0)
            id_of_root[r] = next++;
        comp[v] = id_of_root[r];
    }
    return {comp, next};
}

} // namespace

int spanning_components(const AbstractGraph& g, const std::vector<int>& edge_subset) {
    require_valid(g, /*reject_loops=*/false);
    UnionFind uf(g.vertex_count);
    for (int e : edge_subset) {
        if (e < 0 || e >= static_cast<int>(g.edges.size()))
            throw contract_error("spanning_components: edge index " + std::to_string(e) +
                                 " out of range");
        uf.unite(g.edges[e].first, g.edges[e].second);
    }
    int count = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (uf.find(v) == v)
            ++count;
    return count;
}

long long ChromComplex::dim(int i, int j) const {
    auto it = basis.find({i, j});
    return it == basis.end() ? 0 : static_cast<long long>(it->second.size());
}

long long ChromComplex::total_generators() const {
    long long n = 0;
    for (const auto& [ij, gens] : basis)
        n += static_cast<long long>(gens.size());
    return n;
}

ChromComplex chromatic_complex(const AbstractGraph& g) {
    require_valid(g, /*reject_loops=*/true);
    const int n = static_cast<int>(g.edges.size());
    if (n > 24)
        throw guard_error("chromatic_complex: more than 24 edges");
    if (g.vertex_count > 28)
        throw guard_error("chromatic_complex: more than 28 vertices");

    ChromComplex cx;
    cx.edge_count = n;

    const std::uint32_t states = 1u << n;
    std::vector<std::vector<int>> comp_of_vertex;
    comp_of_vertex.reserve(states);
    for (std::uint32_t s = 0; s < states; ++s) {
        auto [comp, count] = component_layout(g, s);
        comp_of_vertex.push_back(std::move(comp));
        cx.component_counts.push_back(count);
    }

    auto grading = [&](std::uint32_t s, std::uint32_t mask) {
        return std::make_pair(std::popcount(s), std::popcount(mask)); // deg(x) = 1
    };

    for (std::uint32_t s = 0; s < states; ++s) {
        const std::uint32_t gens = 1u << cx.component_counts[s];
        for (std::uint32_t mask = 0; mask < gens; ++mask)
            cx.basis[grading(s, mask)].emplace_back(s, mask);
    }

    std::map<std::pair<int, int>, std::unordered_map<std::uint64_t, int>> pos;
    for (const auto& [ij, gens] : cx.basis) {
        auto& m = pos[ij];
        m.reserve(gens.size());
        for (std::size_t r = 0; r < gens.size(); ++r)
            m[(static_cast<std::uint64_t>(gens[r].first) << 32) | gens[r].second] =
                static_cast<int>(r);
    }

    auto block = [&](int i, int j) -> SparseMatrix& {
        auto it = cx.diff.find({i, j});
        if (it == cx.diff.end())
            it = cx.diff
                     .emplace(std::make_pair(i, j),
                              SparseMatrix(static_cast<int>(cx.dim(i + 1, j)),
                                           static_cast<int>(cx.dim(i, j))))
                     .first;
        return it->second;
    };

    for (std::uint32_t s = 0; s < states; ++s) {
        const int k1 = cx.component_counts[s];
        for (int r = 0; r < n; ++r) {
            if ((s >> r) & 1)
                continue;
            const std::uint32_t s2 = s | (1u << r);
            const int k2 = cx.component_counts[s2];

            std::vector<int> image(k1, -1);
            for (int v = 0; v < g.vertex_count; ++v)
                if (image[comp_of_vertex[s][v]] < 0)
                    image[comp_of_vertex[s][v]] = comp_of_vertex[s2][v];

            const int sign_bits = std::popcount(s & ((1u << r) - 1));
            const mpq_class edge_sign = (sign_bits % 2 == 0) ? 1 : -1;

            int m1 = -1, m2 = -1, target = -1;
            if (k2 == k1 - 1) {
                m1 = comp_of_vertex[s][g.edges[r].first];
                m2 = comp_of_vertex[s][g.edges[r].second];
                if (m1 == m2)
                    throw internal_error("chromatic_complex: merge edge inside one component");
                if (m1 > m2)
                    std::swap(m1, m2);
                target = image[m1];
            } else if (k2 != k1) {
                throw internal_error("chromatic_complex: cube edge changes component count by " +
                                     std::to_string(k2 - k1));
            }

            for (std::uint32_t mask = 0; mask < (1u << k1); ++mask) {
                std::uint32_t tmask = 0;
                if (k2 == k1) {
                    // Edge inside one component: the per-edge map is the identity.
                    for (int c = 0; c < k1; ++c)
                        if ((mask >> c) & 1)
                            tmask |= 1u << image[c];
                } else {
                    const bool x1 = (mask >> m1) & 1, x2 = (mask >> m2) & 1;
                    if (x1 && x2)
                        continue; // x*x = 0
                    for (int c = 0; c < k1; ++c)
                        if (c != m1 && c != m2 && ((mask >> c) & 1))
                            tmask |= 1u << image[c];
                    if (x1 || x2)
                        tmask |= 1u << target;
                }
                const auto [i, j] = grading(s, mask);
                const auto tij = grading(s2, tmask);
                if (tij != std::make_pair(i + 1, j))
                    throw internal_error("chromatic_complex: per-edge map changes j-grading");
                auto& blk = block(i, j);
                const int row = pos.at(tij).at((static_cast<std::uint64_t>(s2) << 32) | tmask);
                const int col = pos.at({i, j}).at((static_cast<std::uint64_t>(s) << 32) | mask);
                blk.set(row, col, blk.get(row, col) + edge_sign);
            }
        }
    }

    for (const auto& [ij, blk] : cx.diff) {
        auto next = cx.diff.find({ij.first + 1, ij.second});
        if (next == cx.diff.end())
            continue;
        if (!SparseMatrix::multiply(next->second, blk).is_zero())
            throw internal_error("chromatic_complex: d^2 != 0 at (i,j)=(" +
                                 std::to_string(ij.first) + "," + std::to_string(ij.second) +
                                 ")");
    }
    return cx;
}

ChromTable chromatic_homology(const AbstractGraph& g, int max_edges) {
    if (static_cast<int>(g.edges.size()) > max_edges)
        throw guard_error("chromatic_homology: graph has " + std::to_string(g.edges.size()) +
                          " edges, guard is " + std::to_string(max_edges));
    const ChromComplex cx = chromatic_complex(g);

    ChromTable table;
    for (const auto& [ij, gens] : cx.basis) {
        const auto [i, j] = ij;
        const int n = static_cast<int>(gens.size());
        auto out_it = cx.diff.find({i, j});
        auto in_it = cx.diff.find({i - 1, j});
        const SparseMatrix d_out =
            out_it != cx.diff.end() ? out_it->second
                                    : SparseMatrix(static_cast<int>(cx.dim(i + 1, j)), n);
        const SparseMatrix d_in = in_it != cx.diff.end()
                                      ? in_it->second
                                      : SparseMatrix(n, static_cast<int>(cx.dim(i - 1, j)));
        table.add(i, j, homology_dim(d_out, d_in));
    }
    return table;
}

std::pair<AbstractGraph, AbstractGraph> deletion_contraction(const AbstractGraph& g, int e) {
    require_valid(g, /*reject_loops=*/false);
    if (e < 0 || e >= static_cast<int>(g.edges.size()))
        throw contract_error("deletion_contraction: edge index " + std::to_string(e) +
                             " out of range");

    AbstractGraph deleted = g;
    deleted.edges.erase(deleted.edges.begin() + e);

    const auto [eu, ev] = g.edges[e];
    const int keep = std::min(eu, ev), gone = std::max(eu, ev);
    AbstractGraph contracted;
    contracted.vertex_count = g.vertex_count - (keep == gone ? 0 : 1);
    auto remap = [&](int v) {
        if (keep == gone)
            return v; // contracting a loop removes no vertex
        if (v == gone)
            v = keep;
        return v > gone ? v - 1 : v;
    };
    std::set<std::pair<int, int>> seen;
    for (std::size_t f = 0; f < g.edges.size(); ++f) {
        if (static_cast<int>(f) == e)
            continue;
        int u = remap(g.edges[f].first), v = remap(g.edges[f].second);
        if (u == v)
            continue; // a parallel of e merged away
        if (u > v)
            std::swap(u, v);
        if (seen.insert({u, v}).second)
            contracted.edges.emplace_back(u, v);
    }
    return {std::move(deleted), std::move(contracted)};
}

bool les_bound_check(const AbstractGraph& g, int e, int max_edges) {
    const auto [minus, over] = deletion_contraction(g, e);
    const ChromTable hg = chromatic_homology(g, max_edges);
    const ChromTable hminus = chromatic_homology(minus, max_edges);
    const ChromTable hover = chromatic_homology(over, max_edges);
    for (const auto& [ij, dim] : hg.dims)
        if (dim > hminus.at(ij.first, ij.second) + hover.at(ij.first - 1, ij.second))
            return false;
    return true;
}

} // namespace khcube
