#ifndef ZLAB_ZASSENHAUS_HPP
#define ZLAB_ZASSENHAUS_HPP

#include <string>
#include <vector>

#include "zlab/ncpoly.hpp"

namespace zlab {

// Least j >= 0 with i p^j >= n, for 1 <= i <= n. Integer arithmetic only.
int jump_exponent(int n, int i, std::uint64_t p);

// The set { ceil(n / p^k) : k >= 0 }, ascending. These are exactly the
// word lengths that carry generators and basis indices at level n.
std::vector<int> jump_set(int n, std::uint64_t p);

// Cross-checks the jump set against its other characterization: i is a
// jump iff i' p^(j_n(i')) >= i p^(j_n(i)) for every i' <= i, by brute
// force over all i.
bool jump_set_equivalence(int n, std::uint64_t p);

// Level parameters: prime p, level n >= 2, alphabet size m, and the
// working precision K (coefficients live in Z/p^K). The default K is one
// more than the largest jump exponent, which is enough for every pairing
// entry.
struct LevelParams {
    std::uint64_t p;
    int n;
    int m;
    int precision;

    LevelParams(std::uint64_t p, int n, int m);
    LevelParams(std::uint64_t p, int n, int m, int precision);

    Alphabet alphabet() const { return Alphabet(m); }
    ModRing ring() const { return ModRing(p, precision); }
};

// The level-n pairing of a word w (1 <= |w| <= n) against a Lyndon word
// w' (|w'| <= n), as an element of F_p: the Magnus coefficient of w in
// the level-n power series of w', divided by p^(j_n(|w|)) and reduced
// mod p. The divisibility is guaranteed; its failure is reported as an
// internal error, not a verification result.
std::uint64_t pairing_value(const Word& w, const Word& w_prime, const LevelParams& params);

// The matrix of pairing values over the Lyndon words with lengths in the
// jump set, ordered by the graded order, stored transposed:
// entries[r][c] = pairing(index[c], index[r]). In this convention the
// matrix is unipotent upper-triangular.
struct FundamentalMatrix {
    LevelParams params;
    std::vector<Word> index;
    std::vector<std::vector<std::uint64_t>> entries;
    bool transposed = true;

    std::size_t size() const { return index.size(); }
};

FundamentalMatrix fundamental_matrix(const LevelParams& params);

// Sum of necklace counts over the jump set; the predicted basis size of
// the level-n relation space, and the fundamental matrix dimension.
std::uint64_t h2_dimension(const LevelParams& params);

struct ShuffleRelationReport {
    long relations_checked = 0; // (pair, index word) combinations
    long pairs_checked = 0;     // distinct (u, v) pairs
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

// For every jump length i >= 2, every nonempty pair (u, v) with
// |u| + |v| = i and u <= v alphabetically, and every index word w':
// checks that sum over |w| = i of (u sh v)_w * pairing(w, w') vanishes
// in F_p. Violations are collected, not thrown.
ShuffleRelationReport verify_shuffle_relations(const LevelParams& params);

// For 2 <= n < p: checks that m + indec_dimension = h2_dimension =
// fundamental matrix size and that Lyndon words span the shuffle
// quotient.
bool main_theorem_check(const LevelParams& params);

} // namespace zlab

#endif
