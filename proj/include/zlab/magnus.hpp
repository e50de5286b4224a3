#ifndef ZLAB_MAGNUS_HPP
#define ZLAB_MAGNUS_HPP

#include <utility>
#include <vector>

#include "zlab/ncpoly.hpp"

namespace zlab {

// Cap on the factor count of an expanded commutator word; nested
// commutators grow fourfold per level.
inline constexpr int max_group_word_factors = 100000;

// A free-group element as a freely reduced sequence of (generator, +-1)
// factors. The empty sequence is the identity.
class GroupWord {
public:
    explicit GroupWord(Alphabet alphabet) : alphabet_(alphabet) {}
    static GroupWord generator(Alphabet alphabet, Letter x);
    static GroupWord from_factors(Alphabet alphabet,
                                  std::span<const std::pair<Letter, int>> factors);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::pair<Letter, int>>& factors() const { return factors_; }
    int length() const { return static_cast<int>(factors_.size()); }
    bool is_identity() const { return factors_.empty(); }

    GroupWord inverse() const;
    friend GroupWord operator*(const GroupWord& g, const GroupWord& h);

    bool operator==(const GroupWord&) const = default;

private:
    void push_reduced(Letter x, int e);

    Alphabet alphabet_;
    std::vector<std::pair<Letter, int>> factors_; // exponents are +1 or -1
};

// g^{-1} h^{-1} g h
GroupWord commutator(const GroupWord& g, const GroupWord& h);

// The Magnus expansion of g: the product over its factors of 1 + x or of
// the geometric-series inverse, truncated. The constant term is 1.
NcSeries magnus_expand(const GroupWord& g, const ModRing& ring, int trunc_deg);

// Coefficient of w in the Magnus expansion of g (computed at truncation
// degree |w|).
std::uint64_t magnus_coefficient(const GroupWord& g, const Word& w, const ModRing& ring);

// The iterated commutator of a Lyndon word: a single letter maps to its
// generator, and a longer word to the commutator of the images of its
// standard factorization halves.
GroupWord commutator_word(const Word& w, const Alphabet& alphabet);

// Magnus expansion of commutator_word(w), computed directly on series:
// the commutator of the expansions of the two halves. Agrees with
// expanding the group word and is far cheaper for powers downstream.
NcSeries commutator_series(const Word& w, const ModRing& ring,
                           const Alphabet& alphabet, int trunc_deg);

// The p^j-th power of commutator_series(w) for j the least exponent with
// |w| p^j >= n, over Z/p^K with K = (least j with p^j >= n) + 1. This is
// the canonical level-n generator series attached to the Lyndon word w.
NcSeries commutator_power_series(const Word& w, int n, std::uint64_t p,
                                 const Alphabet& alphabet, int trunc_deg);

// A unitriangular matrix over Z/p^K: 1 on the diagonal, 0 below, stored
// entries above.
class UnitriMatrix {
public:
    UnitriMatrix(int size, ModRing ring); // identity

    int size() const { return n_; }
    const ModRing& ring() const { return ring_; }

    std::uint64_t at(int r, int c) const;          // 0-based, full matrix semantics
    void set(int r, int c, std::uint64_t v);       // requires r < c

    UnitriMatrix operator*(const UnitriMatrix& o) const;
    UnitriMatrix inverse() const;
    UnitriMatrix pow(std::uint64_t e) const;

    bool operator==(const UnitriMatrix&) const = default;

private:
    std::size_t idx(int r, int c) const;

    int n_;
    ModRing ring_;
    std::vector<std::uint64_t> upper_; // row-major, entries with r < c
};

// The unitriangular representation attached to a word w = x_1...x_i: the
// (k,l) entry of the image of g is the Magnus coefficient of the subword
// x_{k+1}...x_l over Z/p^{j+1} (0-based k < l; size i+1).
UnitriMatrix magnus_representation(const Word& w, const GroupWord& g,
                                   std::uint64_t p, int j);

// True iff every Magnus coefficient of g at a word of length 1 <= i <= n
// is divisible by p^{j_i} in Z/p^K, where j_i is the least exponent with
// i p^{j_i} >= n and K is one more than the largest such exponent.
// Membership in the level-n filtration subgroup implies this.
bool check_coefficient_bounds(const GroupWord& g, int n, std::uint64_t p);

} // namespace zlab

#endif
