#pragma once

#include <map>
#include <utility>

namespace khcube {

/// Bigraded dimension table (i, j) -> positive dimension. Zero entries are
/// never stored, so equality is plain map equality.
struct BigradedTable {
    std::map<std::pair<int, int>, long long> dims;

    void add(int i, int j, long long dim) {
        if (dim == 0)
            return;
        auto it = dims.find({i, j});
        if (it == dims.end()) {
            dims.emplace(std::make_pair(i, j), dim);
        } else {
            it->second += dim;
            if (it->second == 0)
                dims.erase(it);
        }
    }

    long long at(int i, int j) const {
        auto it = dims.find({i, j});
        return it == dims.end() ? 0 : it->second;
    }

    bool empty() const { return dims.empty(); }

    friend bool operator==(const BigradedTable&, const BigradedTable&) = default;
    friend auto operator<=>(const BigradedTable& a, const BigradedTable& b) {
        return a.dims <=> b.dims;
    }
};

using KhTable = BigradedTable;
using ChromTable = BigradedTable;

} // namespace khcube
