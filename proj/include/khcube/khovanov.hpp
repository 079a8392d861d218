#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khcube/bigraded.hpp"
#include "khcube/errors.hpp"
#include "khcube/exactlin.hpp"
#include "khcube/laurent.hpp"
#include "khcube/linkdiag.hpp"

namespace khcube {

/// One basis element of the cube complex: a smoothing together with a
/// one/x label per circle.
struct Generator {
    std::vector<int> alpha;
    std::vector<int> labels; // 0 = one (degree +1), 1 = x (degree -1)
};

/// The bigraded cube-of-resolutions complex. Generators are packed as
/// (alpha bits, label bits) with circles in canonical order (ascending
/// minimum arc label, crossing-free circles last). Homological degree is
/// i = |alpha| - n_minus, quantum degree j = deg(v) + |alpha| + n_plus
/// - 2 n_minus. Every differential block preserves j, and d^2 = 0 is
/// verified at build time.
struct KhComplex {
    int crossing_count = 0;
    int n_plus = 0;
    int n_minus = 0;
    std::vector<int> circle_counts; // per alpha bitmask, incl. free loops
    std::map<std::pair<int, int>, std::vector<std::pair<std::uint32_t, std::uint32_t>>> basis;
    std::map<std::pair<int, int>, SparseMatrix> diff; // block (i,j) -> (i+1,j)

    long long dim(int i, int j) const;
    long long total_generators() const;
    Generator unpack(std::uint32_t alpha_bits, std::uint32_t label_bits) const;
};

KhComplex build_complex(const LinkDiagram& d);

/// Bigraded homology dimensions over Q.
KhTable khovanov_homology(const LinkDiagram& d, int max_crossings = 16);

/// Sum over the table of (-1)^i q^j dim(i, j).
LaurentPoly graded_euler(const KhTable& t);

/// Bigraded convolution, the table of a split union.
KhTable tensor_tables(const KhTable& t1, const KhTable& t2);

/// (i, j) -> (-i, -j), the table of the mirror image.
KhTable dual_table(const KhTable& t);

/// Pointwise sum of tables.
KhTable sum_tables(const KhTable& t1, const KhTable& t2);

} // namespace khcube
