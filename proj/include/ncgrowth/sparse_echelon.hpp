#pragma once

#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>

#include <ncgrowth/numeric.hpp>

namespace ncgrowth
{

// Incremental row echelon form over a field; rows are sparse maps from
// column index to coefficient.  Only the rank is tracked.
template <typename K>
class SparseEchelon
{
public:
    using Row = std::map<std::size_t, K>;

    // Returns true when the row is independent of those inserted before.
    bool insert(Row row)
    {
        while (!row.empty()) {
            auto lead = row.begin();
            auto pivot = pivots_.find(lead->first);
            if (pivot == pivots_.end()) {
                const K inv = inverse(lead->second);
                for (auto &[col, v] : row) {
                    v = v * inv;
                }
                pivots_.emplace(lead->first, std::move(row));
                return true;
            }
            const K factor = lead->second;
            for (const auto &[col, v] : pivot->second) {
                auto [it, inserted] = row.try_emplace(col, -(factor * v));
                if (!inserted) {
                    it->second = it->second - factor * v;
                    if (is_zero(it->second)) {
                        row.erase(it);
                    }
                }
            }
        }
        return false;
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    std::unordered_map<std::size_t, Row> pivots_;
};

} // namespace ncgrowth
