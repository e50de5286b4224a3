#ifndef ZLAB_LINALG_HPP
#define ZLAB_LINALG_HPP

#include <cstdint>
#include <vector>

namespace zlab {

// Incremental Gaussian elimination over F_p. Rows are fed one at a time
// and reduced against the pivots found so far; pivoting is on the first
// nonzero column, so fixing the column order fixes the computation.
class FpRowReducer {
public:
    FpRowReducer(std::size_t cols, std::uint64_t p);

    // Reduces the row in place against the current basis. Returns true if
    // a new pivot was added (the rank grew).
    bool add_row(std::vector<std::uint64_t> row);

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

private:
    std::size_t cols_;
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> rows_; // echelon rows, pivot 1
    std::vector<std::size_t> pivot_cols_;          // ascending
};

} // namespace zlab

#endif
