#include "zlab/linalg.hpp"

#include <stdexcept>

namespace zlab {

namespace {

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    // Fermat; p is prime and a != 0 mod p.
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1)
            r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * a % p);
        a = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * a % p);
        e >>= 1;
    }
    return r;
}

} // namespace

FpRowReducer::FpRowReducer(std::size_t cols, std::uint64_t p) : cols_(cols), p_(p) {
    if (p < 2)
        throw std::invalid_argument("modulus must be at least 2");
}

bool FpRowReducer::add_row(std::vector<std::uint64_t> row) {
    if (row.size() != cols_)
        throw std::invalid_argument("row width mismatch");
    for (auto& v : row)
        v %= p_;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint64_t c = row[pivot_cols_[k]];
        if (c == 0)
            continue;
        const auto& basis = rows_[k];
        for (std::size_t j = pivot_cols_[k]; j < cols_; ++j) {
            if (basis[j] == 0)
                continue;
            std::uint64_t t = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(c) * basis[j] % p_);
            row[j] = (row[j] + p_ - t) % p_;
        }
    }
    std::size_t pivot = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (row[j] != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot == cols_)
        return false;
    std::uint64_t scale = inv_mod_p(row[pivot], p_);
    for (std::size_t j = pivot; j < cols_; ++j)
        row[j] = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(row[j]) * scale % p_);
    // keep pivot columns ascending
    std::size_t at = 0;
    while (at < pivot_cols_.size() && pivot_cols_[at] < pivot)
        ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
    pivot_cols_.insert(pivot_cols_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
    return true;
}

} // namespace zlab
