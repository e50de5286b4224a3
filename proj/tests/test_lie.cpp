#include <doctest.h>

#include "zlab/lie.hpp"
#include "zlab/text.hpp"

using namespace zlab;

namespace {

Word W(const char* s) { return parse_word(s, Alphabet(9)); }

} // namespace

TEST_SUITE_BEGIN("lie");

TEST_CASE("bracket expansion over the integers") {
    Alphabet a2(2);
    IntPoly ab = lie_expand(bracketing(W("ab")), a2);
    CHECK(ab.coeff_or_zero(W("ab")) == 1);
    CHECK(ab.coeff_or_zero(W("ba")) == -1);
    CHECK(ab.terms().size() == 2);

    IntPoly aab = lie_expand(bracketing(W("aab")), a2);
    CHECK(aab.coeff_or_zero(W("aab")) == 1);
    CHECK(aab.coeff_or_zero(W("aba")) == -2);
    CHECK(aab.coeff_or_zero(W("baa")) == 1);
    CHECK(aab.terms().size() == 3);

    IntPoly letter = lie_expand(BracketedWord(0), a2);
    CHECK(letter.coeff_or_zero(W("a")) == 1);
    CHECK(letter.terms().size() == 1);
}

TEST_CASE("bracket expansion reduced into a ring") {
    Alphabet a2(2);
    ModRing r9(3, 2);
    NcSeries f = lie_expand(bracketing(W("aab")), r9, a2, 3);
    CHECK(f.coeff_or_zero(W("aab")) == 1);
    CHECK(f.coeff_or_zero(W("aba")) == 7);
    CHECK(f.coeff_or_zero(W("baa")) == 1);
    CHECK_THROWS_AS(lie_expand(bracketing(W("aab")), r9, a2, 2), std::out_of_range);
}

TEST_CASE("restricted powers") {
    Alphabet a2(2);
    ModRing r2(2, 1);
    CHECK(restricted_power_expand(0, bracketing(W("aab")), r2, a2, 3) ==
          lie_expand(bracketing(W("aab")), r2, a2, 3));

    NcSeries sq = restricted_power_expand(1, BracketedWord(0), r2, a2, 2);
    CHECK(sq.coeff_or_zero(W("aa")) == 1);
    CHECK(sq.terms().size() == 1);

    NcSeries bracket_sq = restricted_power_expand(1, bracketing(W("ab")), r2, a2, 4);
    CHECK(bracket_sq.coeff_or_zero(W("abab")) == 1);
    CHECK(bracket_sq.coeff_or_zero(W("baba")) == 1);
    CHECK(bracket_sq.coeff_or_zero(W("abba")) == 1);
    CHECK(bracket_sq.coeff_or_zero(W("baab")) == 1);
    CHECK(bracket_sq.terms().size() == 4);

    CHECK_THROWS_AS(restricted_power_expand(2, bracketing(W("ab")), r2, a2, 4),
                    std::out_of_range);
}

TEST_CASE("homogeneous ranks") {
    Alphabet a2(2);
    ModRing f5(5, 1);
    std::vector<NcSeries> cubic;
    for (const Word& w : lyndon_words(a2, {3}))
        cubic.push_back(lie_expand(bracketing(w), f5, a2, 3));
    CHECK(homogeneous_rank(cubic, 3, 5) == 2);

    ModRing f3(3, 1);
    NcSeries one = lie_expand(bracketing(W("ab")), f3, a2, 2);
    std::vector<NcSeries> dependent{one, add(one, one)};
    CHECK(homogeneous_rank(dependent, 2, 3) == 1);

    // all power families at total degree 4 over two letters, p = 2
    ModRing f2(2, 1);
    std::vector<NcSeries> family;
    for (const Word& w : lyndon_words(a2, {4}))
        family.push_back(restricted_power_expand(0, bracketing(w), f2, a2, 4));
    family.push_back(restricted_power_expand(1, bracketing(W("ab")), f2, a2, 4));
    family.push_back(restricted_power_expand(2, BracketedWord(0), f2, a2, 4));
    family.push_back(restricted_power_expand(2, BracketedWord(1), f2, a2, 4));
    CHECK(family.size() == 6);
    CHECK(homogeneous_rank(family, 4, 2) == 6);

    std::vector<NcSeries> inhomog{NcSeries::one(f2, a2, 2)};
    CHECK_THROWS_AS(homogeneous_rank(inhomog, 2, 2), std::invalid_argument);
}

TEST_CASE("leading term and homogeneity") {
    for (int m = 2; m <= 3; ++m) {
        Alphabet alphabet(m);
        for (int len = 1; len <= 5; ++len)
            for (const Word& w : lyndon_words(alphabet, {len})) {
                IntPoly f = lie_expand(bracketing(w), alphabet);
                CHECK(f.coeff_or_zero(w) == 1);
                for (const auto& [term, c] : f.terms()) {
                    CHECK(term.size() == len);
                    (void)c;
                }
            }
    }
}

TEST_CASE("restricted power families stay independent") {
    Alphabet a2(2);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        ModRing ring(p, 1);
        for (int n = 1; n <= 5; ++n) {
            std::vector<NcSeries> family;
            for (std::uint64_t q = 1; q <= static_cast<std::uint64_t>(n); q *= p) {
                if (n % static_cast<int>(q) != 0) {
                    if (q * p > static_cast<std::uint64_t>(n))
                        break;
                    continue;
                }
                int j = 0;
                for (std::uint64_t v = 1; v < q; v *= p)
                    ++j;
                for (const Word& w : lyndon_words(a2, {n / static_cast<int>(q)}))
                    family.push_back(restricted_power_expand(j, bracketing(w), ring, a2, n));
            }
            CHECK(homogeneous_rank(family, n, p) == std::ssize(family));
        }
    }
}

TEST_CASE("antisymmetry of the bracket") {
    Alphabet a3(3);
    std::vector<BracketedWord> sample{
        BracketedWord(0), BracketedWord(1), BracketedWord(2),
        bracketing(W("ab")), bracketing(W("abc")), bracketing(W("aab"))};
    for (const BracketedWord& u : sample)
        for (const BracketedWord& v : sample) {
            IntPoly lhs = lie_expand(BracketedWord(u, v), a3);
            IntPoly rhs = scale(lie_expand(BracketedWord(v, u), a3), -1);
            CHECK(lhs == rhs);
        }
}

TEST_SUITE_END();
