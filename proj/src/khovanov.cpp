#include "khcube/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace khcube {

long long KhComplex::dim(int i, int j) const {
    auto it = basis.find({i, j});
    return it == basis.end() ? 0 : static_cast<long long>(it->second.size());
}

long long KhComplex::total_generators() const {
    long long n = 0;
    for (const auto& [ij, gens] : basis)
        n += static_cast<long long>(gens.size());
    return n;
}

Generator KhComplex::unpack(std::uint32_t alpha_bits, std::uint32_t label_bits) const {
    Generator g;
    g.alpha.resize(crossing_count);
    for (int k = 0; k < crossing_count; ++k)
        g.alpha[k] = (alpha_bits >> k) & 1;
    const int circles = circle_counts[alpha_bits];
    g.labels.resize(circles);
    for (int c = 0; c < circles; ++c)
        g.labels[c] = (label_bits >> c) & 1;
    return g;
}

namespace {

// Circle layout of one smoothing: arcs indexed 0..A-1, circle ids in
// canonical order (ascending minimum arc label, then free loops).
struct CircleLayout {
    std::vector<int> circle_of_arc;
    int circles = 0; // incl. free loops
};

CircleLayout layout_of(const LinkDiagram& d, const std::vector<int>& arc_by_index,
                       const std::map<int, int>& index_of_arc, std::uint32_t alpha_bits) {
    const int n = static_cast<int>(d.crossings.size());
    const int arcs = static_cast<int>(arc_by_index.size());

    std::vector<int> parent(arcs);
    for (int i = 0; i < arcs; ++i)
        parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    for (int k = 0; k < n; ++k) {
        const auto& [a, b, c, dd] = d.crossings[k];
        const int ia = index_of_arc.at(a), ib = index_of_arc.at(b);
        const int ic = index_of_arc.at(c), id = index_of_arc.at(dd);
        if ((alpha_bits >> k) & 1) {
            parent[find(ia)] = find(id);
            parent[find(ib)] = find(ic);
        } else {
            parent[find(ia)] = find(ib);
            parent[find(ic)] = find(id);
        }
    }

    // arc_by_index is sorted ascending, so scanning once numbers the classes
    // by their minimum arc label.
    CircleLayout lay;
    lay.circle_of_arc.assign(arcs, -1);
    std::vector<int> id_of_root(arcs, -1);
    for (int i = 0; i < arcs; ++i) {
        const int r = find(i);
        if (id_of_root[r] < 0)
            id_of_root[r] = lay.circles++;
        lay.circle_of_arc[i] = id_of_root[r];
    }
    lay.circles += d.free_loops;
    return lay;
}

} // namespace

KhComplex build_complex(const LinkDiagram& d) {
    require_valid(d);
    const int n = static_cast<int>(d.crossings.size());
    if (n > 24)
        throw guard_error("build_complex: more than 24 crossings");

    const auto signs = crossing_signs(d);

    std::vector<int> arc_by_index;
    for (const auto& comp : d.components)
        arc_by_index.insert(arc_by_index.end(), comp.begin(), comp.end());
    std::sort(arc_by_index.begin(), arc_by_index.end());
    std::map<int, int> index_of_arc;
    for (std::size_t i = 0; i < arc_by_index.size(); ++i)
        index_of_arc[arc_by_index[i]] = static_cast<int>(i);

    KhComplex cx;
    cx.crossing_count = n;
    cx.n_plus = signs.n_plus;
    cx.n_minus = signs.n_minus;

    const std::uint32_t states = 1u << n;
    std::vector<CircleLayout> layouts;
    layouts.reserve(states);
    cx.circle_counts.reserve(states);
    for (std::uint32_t a = 0; a < states; ++a) {
        layouts.push_back(layout_of(d, arc_by_index, index_of_arc, a));
        if (layouts.back().circles > 28)
            throw guard_error("build_complex: a smoothing has more than 28 circles");
        cx.circle_counts.push_back(layouts.back().circles);
    }

    auto grading = [&](std::uint32_t alpha, std::uint32_t mask) {
        const int weight = std::popcount(alpha);
        const int k = cx.circle_counts[alpha];
        const int deg = k - 2 * std::popcount(mask); // one: +1, x: -1
        const int i = weight - cx.n_minus;
        const int j = deg + weight + cx.n_plus - 2 * cx.n_minus;
        return std::make_pair(i, j);
    };

    for (std::uint32_t a = 0; a < states; ++a) {
        const std::uint32_t gens = 1u << cx.circle_counts[a];
        for (std::uint32_t mask = 0; mask < gens; ++mask)
            cx.basis[grading(a, mask)].emplace_back(a, mask);
    }

    // Position of each generator within its (i, j) strand.
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

    for (std::uint32_t a = 0; a < states; ++a) {
        const CircleLayout& src = layouts[a];
        for (int r = 0; r < n; ++r) {
            if ((a >> r) & 1)
                continue;
            const std::uint32_t a2 = a | (1u << r);
            const CircleLayout& dst = layouts[a2];

            // Correspondence of circles across the cube edge.
            const int arcs = static_cast<int>(arc_by_index.size());
            std::vector<int> image(src.circles, -1);
            std::vector<int> preimage_count(dst.circles, 0);
            for (int i = 0; i < arcs; ++i) {
                const int s = src.circle_of_arc[i];
                if (image[s] < 0) {
                    image[s] = dst.circle_of_arc[i];
                    preimage_count[dst.circle_of_arc[i]]++;
                }
            }
            const int real_src = src.circles - d.free_loops;
            const int real_dst = dst.circles - d.free_loops;
            for (int f = 0; f < d.free_loops; ++f) {
                image[real_src + f] = real_dst + f;
                preimage_count[real_dst + f]++;
            }

            const int sign_bits = std::popcount(a & ((1u << r) - 1));
            const mpq_class edge_sign = (sign_bits % 2 == 0) ? 1 : -1;

            if (dst.circles == src.circles - 1) {
                // Merge: multiplication one*one=one, one*x=x, x*x=0.
                int m1 = -1, m2 = -1, target = -1;
                for (int t = 0; t < dst.circles; ++t)
                    if (preimage_count[t] == 2)
                        target = t;
                for (int s = 0; s < src.circles; ++s)
                    if (image[s] == target)
                        (m1 < 0 ? m1 : m2) = s;
                if (target < 0 || m2 < 0)
                    throw internal_error("build_complex: merge edge without a merged pair");

                for (std::uint32_t mask = 0; mask < (1u << src.circles); ++mask) {
                    const bool x1 = (mask >> m1) & 1, x2 = (mask >> m2) & 1;
                    if (x1 && x2)
                        continue;
                    std::uint32_t tmask = 0;
                    for (int s = 0; s < src.circles; ++s)
                        if (s != m1 && s != m2 && ((mask >> s) & 1))
                            tmask |= 1u << image[s];
                    if (x1 || x2)
                        tmask |= 1u << target;
                    const auto [i, j] = grading(a, mask);
                    const auto tij = grading(a2, tmask);
                    if (tij != std::make_pair(i + 1, j))
                        throw internal_error("build_complex: merge does not preserve q-grading");
                    auto& blk = block(i, j);
                    const int row = pos.at(tij).at((static_cast<std::uint64_t>(a2) << 32) | tmask);
                    const int col = pos.at({i, j}).at((static_cast<std::uint64_t>(a) << 32) | mask);
                    blk.set(row, col, blk.get(row, col) + edge_sign);
                }
            } else if (dst.circles == src.circles + 1) {
                // Split: comultiplication one -> one x + x one, x -> x x.
                // The split circle is the one whose arcs land in two targets.
                int source = -1, t1 = -1, t2 = -1;
                for (int i = 0; i < arcs; ++i) {
                    const int s = src.circle_of_arc[i];
                    const int t = dst.circle_of_arc[i];
                    if (image[s] != t) {
                        source = s;
                        t1 = image[s];
                        t2 = t;
                        break;
                    }
                }
                if (source < 0)
                    throw internal_error("build_complex: split edge without a split circle");
                if (t1 > t2)
                    std::swap(t1, t2);

                for (std::uint32_t mask = 0; mask < (1u << src.circles); ++mask) {
                    std::uint32_t base = 0;
                    for (int s = 0; s < src.circles; ++s)
                        if (s != source && ((mask >> s) & 1))
                            base |= 1u << image[s];
                    const bool x = (mask >> source) & 1;
                    std::vector<std::uint32_t> tmasks;
                    if (x)
                        tmasks = {base | (1u << t1) | (1u << t2)};
                    else
                        tmasks = {base | (1u << t2), base | (1u << t1)};
                    const auto [i, j] = grading(a, mask);
                    for (std::uint32_t tmask : tmasks) {
                        const auto tij = grading(a2, tmask);
                        if (tij != std::make_pair(i + 1, j))
                            throw internal_error(
                                "build_complex: split does not preserve q-grading");
                        auto& blk = block(i, j);
                        const int row =
                            pos.at(tij).at((static_cast<std::uint64_t>(a2) << 32) | tmask);
                        const int col =
                            pos.at({i, j}).at((static_cast<std::uint64_t>(a) << 32) | mask);
                        blk.set(row, col, blk.get(row, col) + edge_sign);
                    }
                }
            } else {
                throw internal_error("build_complex: cube edge changes circle count by " +
                                     std::to_string(dst.circles - src.circles));
            }
        }
    }

    // d^2 = 0, verified block by block.
    for (const auto& [ij, blk] : cx.diff) {
        auto next = cx.diff.find({ij.first + 1, ij.second});
        if (next == cx.diff.end())
            continue;
        if (!SparseMatrix::multiply(next->second, blk).is_zero())
            throw internal_error("build_complex: d^2 != 0 at (i,j)=(" +
                                 std::to_string(ij.first) + "," + std::to_string(ij.second) + ")");
    }
    return cx;
}

KhTable khovanov_homology(const LinkDiagram& d, int max_crossings) {
    if (static_cast<int>(d.crossings.size()) > max_crossings)
        throw guard_error("khovanov_homology: diagram has " +
                          std::to_string(d.crossings.size()) + " crossings, guard is " +
                          std::to_string(max_crossings));
    const KhComplex cx = build_complex(d);

    KhTable table;
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

LaurentPoly graded_euler(const KhTable& t) {
    LaurentPoly p;
    for (const auto& [ij, dim] : t.dims)
        p.add_term(ij.second, (ij.first % 2 == 0) ? dim : -dim);
    return p;
}

KhTable tensor_tables(const KhTable& t1, const KhTable& t2) {
    KhTable out;
    for (const auto& [ij1, d1] : t1.dims)
        for (const auto& [ij2, d2] : t2.dims)
            out.add(ij1.first + ij2.first, ij1.second + ij2.second, d1 * d2);
    return out;
}

KhTable dual_table(const KhTable& t) {
    KhTable out;
    for (const auto& [ij, dim] : t.dims)
        out.add(-ij.first, -ij.second, dim);
    return out;
}

KhTable sum_tables(const KhTable& t1, const KhTable& t2) {
    KhTable out = t1;
    for (const auto& [ij, dim] : t2.dims)
        out.add(ij.first, ij.second, dim);
    return out;
}

} // namespace khcube
