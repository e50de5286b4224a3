#include <doctest.h>

#include <random>

#include "zlab/magnus.hpp"
#include "zlab/text.hpp"
#include "zlab/zassenhaus.hpp"

using namespace zlab;

namespace {

Word W(const char* s) { return parse_word(s, Alphabet(9)); }

GroupWord group_power(const GroupWord& g, std::uint64_t e) {
    GroupWord acc(g.alphabet());
    for (std::uint64_t t = 0; t < e; ++t)
        acc = acc * g;
    return acc;
}

GroupWord random_group_word(std::mt19937& rng, const Alphabet& alphabet, int factors) {
    GroupWord g(alphabet);
    for (int i = 0; i < factors; ++i) {
        GroupWord gen = GroupWord::generator(
            alphabet, static_cast<Letter>(rng() % static_cast<unsigned>(alphabet.size())));
        g = g * (rng() % 2 ? gen : gen.inverse());
    }
    return g;
}

} // namespace

TEST_SUITE_BEGIN("magnus");

TEST_CASE("free reduction") {
    Alphabet a2(2);
    GroupWord x = GroupWord::generator(a2, 0);
    GroupWord y = GroupWord::generator(a2, 1);
    CHECK((x * x.inverse()).is_identity());
    CHECK((x * y * y.inverse() * x.inverse()).is_identity());
    GroupWord c = commutator(x, y);
    CHECK(c.length() == 4);
    CHECK(c.factors() == std::vector<std::pair<Letter, int>>{{0, -1}, {1, -1}, {0, 1}, {1, 1}});
    CHECK((c * c.inverse()).is_identity());
}

TEST_CASE("expansion of generators") {
    Alphabet a2(2);
    ModRing r8(2, 3);
    NcSeries fx = magnus_expand(GroupWord::generator(a2, 0), r8, 2);
    CHECK(fx.coeff_or_zero(W("")) == 1);
    CHECK(fx.coeff_or_zero(W("a")) == 1);
    CHECK(fx.terms().size() == 2);

    NcSeries fxi = magnus_expand(GroupWord::generator(a2, 0).inverse(), r8, 2);
    CHECK(fxi.coeff_or_zero(W("")) == 1);
    CHECK(fxi.coeff_or_zero(W("a")) == 7);
    CHECK(fxi.coeff_or_zero(W("aa")) == 1);
    CHECK(mul(fx, fxi) == NcSeries::one(r8, a2, 2));
}

TEST_CASE("expansion of a commutator matches the classical series") {
    Alphabet a2(2);
    GroupWord c = commutator(GroupWord::generator(a2, 0), GroupWord::generator(a2, 1));
    NcSeries f = magnus_expand(c, ModRing(2, 2), 3);
    // 1 + ab - ba + aba - bab - aab + bba, modulo 4
    CHECK(f.coeff_or_zero(W("")) == 1);
    CHECK(f.coeff_or_zero(W("ab")) == 1);
    CHECK(f.coeff_or_zero(W("ba")) == 3);
    CHECK(f.coeff_or_zero(W("aba")) == 1);
    CHECK(f.coeff_or_zero(W("bab")) == 3);
    CHECK(f.coeff_or_zero(W("aab")) == 3);
    CHECK(f.coeff_or_zero(W("bba")) == 1);
    CHECK(f.coeff_or_zero(W("a")) == 0);
    CHECK(f.coeff_or_zero(W("b")) == 0);
    CHECK(f.coeff_or_zero(W("abb")) == 0);
    CHECK(f.terms().size() == 7);
}

TEST_CASE("named coefficients") {
    Alphabet a2(2), a3(3);
    GroupWord x2 = GroupWord::generator(a2, 0);
    CHECK(magnus_coefficient(x2, W("a"), ModRing(5, 1)) == 1);

    GroupWord xxy = commutator(GroupWord::generator(a2, 0),
                               commutator(GroupWord::generator(a2, 0), GroupWord::generator(a2, 1)));
    CHECK(magnus_coefficient(xxy, W("abb"), ModRing(3, 2)) == 0);

    GroupWord xyz = commutator(GroupWord::generator(a3, 0),
                               commutator(GroupWord::generator(a3, 1), GroupWord::generator(a3, 2)));
    CHECK(magnus_coefficient(xyz, W("acb"), ModRing(3, 2)) == 8); // -1
    CHECK(magnus_coefficient(xyz, W("acb"), ModRing(5, 3)) == 124);

    // empty-word coefficient is always 1
    std::mt19937 rng(99);
    for (int t = 0; t < 20; ++t) {
        GroupWord g = random_group_word(rng, a2, 1 + static_cast<int>(rng() % 10));
        CHECK(magnus_coefficient(g, W(""), ModRing(3, 2)) == 1);
    }
}

TEST_CASE("iterated commutator words") {
    Alphabet a2(2);
    CHECK(commutator_word(W("a"), a2) == GroupWord::generator(a2, 0));
    GroupWord ab = commutator_word(W("ab"), a2);
    CHECK(ab.factors() == std::vector<std::pair<Letter, int>>{{0, -1}, {1, -1}, {0, 1}, {1, 1}});
    // substituting the halves gives ten factors; one adjacent inverse
    // pair cancels under free reduction
    GroupWord aab = commutator_word(W("aab"), a2);
    CHECK(aab.length() == 8);
    CHECK(aab == parse_group_word("a^-1 b^-1 a^-1 b a b^-1 a b", a2));
    CHECK_THROWS_AS(commutator_word(W("ba"), a2), std::invalid_argument);
}

TEST_CASE("commutator series basics") {
    Alphabet a2(2);
    ModRing r9(3, 2);
    NcSeries fx = commutator_series(W("a"), r9, a2, 3);
    CHECK(fx.coeff_or_zero(W("")) == 1);
    CHECK(fx.coeff_or_zero(W("a")) == 1);
    CHECK(fx.terms().size() == 2);

    NcSeries fab = commutator_series(W("ab"), r9, a2, 2);
    CHECK(fab.coeff_or_zero(W("")) == 1);
    CHECK(fab.coeff_or_zero(W("ab")) == 1);
    CHECK(fab.coeff_or_zero(W("ba")) == 8);
    CHECK(fab.terms().size() == 3);

    CHECK_THROWS_AS(commutator_series(W("ba"), r9, a2, 2), std::invalid_argument);
}

TEST_CASE("series recursion agrees with expanding the group word") {
    for (int m = 2; m <= 3; ++m) {
        Alphabet alphabet(m);
        int max_len = m == 2 ? 5 : 4;
        for (std::uint64_t p : {2ull, 3ull}) {
            ModRing ring(p, 2);
            for (const Word& w : lyndon_words_up_to(alphabet, max_len)) {
                NcSeries direct = commutator_series(w, ring, alphabet, w.size() + 1);
                NcSeries via_word = magnus_expand(commutator_word(w, alphabet), ring, w.size() + 1);
                CHECK(direct == via_word);
            }
        }
    }
}

TEST_CASE("level power series") {
    Alphabet a2(2);
    NcSeries cube = commutator_power_series(W("a"), 2, 3, a2, 3);
    CHECK(cube.ring().modulus() == 9); // precision j_2(1)+1 = 2
    CHECK(cube.coeff_or_zero(W("")) == 1);
    CHECK(cube.coeff_or_zero(W("a")) == 3);
    CHECK(cube.coeff_or_zero(W("aa")) == 3);
    CHECK(cube.coeff_or_zero(W("aaa")) == 1);

    // length-n words take exponent one
    CHECK(commutator_power_series(W("ab"), 2, 5, a2, 3) ==
          commutator_series(W("ab"), ModRing(5, 2), a2, 3));

    NcSeries fourth = commutator_power_series(W("a"), 3, 2, a2, 4);
    CHECK(fourth.ring().modulus() == 8); // j_3(1) = 2, K = 3
    CHECK(fourth.coeff_or_zero(W("a")) == 4);
    CHECK(fourth.coeff_or_zero(W("aa")) == 6);
    CHECK(fourth.coeff_or_zero(W("aaa")) == 4);
    CHECK(fourth.coeff_or_zero(W("aaaa")) == 1);
}

TEST_CASE("triangular leading terms") {
    for (int m = 2; m <= 3; ++m) {
        Alphabet alphabet(m);
        ModRing ring(3, 8);
        for (const Word& w : lyndon_words_up_to(alphabet, m == 2 ? 5 : 4)) {
            NcSeries f = commutator_series(w, ring, alphabet, w.size());
            CHECK(f.coeff_or_zero(w) == 1);
            for (const auto& [term, c] : f.terms()) {
                if (!term.empty() && term != w)
                    CHECK(compare_graded(w, term) < 0);
                (void)c;
            }
        }
    }
}

TEST_CASE("expansion is a homomorphism") {
    std::mt19937 rng(2718);
    Alphabet a2(2);
    ModRing ring(2, 3);
    for (int t = 0; t < 100; ++t) {
        GroupWord g = random_group_word(rng, a2, 1 + static_cast<int>(rng() % 8));
        GroupWord h = random_group_word(rng, a2, 1 + static_cast<int>(rng() % 8));
        CHECK(magnus_expand(g * h, ring, 4) ==
              mul(magnus_expand(g, ring, 4), magnus_expand(h, ring, 4)));
    }
}

TEST_CASE("unitriangular representation") {
    Alphabet a2(2);
    GroupWord x = GroupWord::generator(a2, 0);
    UnitriMatrix rho = magnus_representation(W("ab"), x, 2, 0);
    CHECK(rho.size() == 3);
    CHECK(rho.at(0, 1) == 1);
    CHECK(rho.at(1, 2) == 0);
    CHECK(rho.at(0, 2) == 0);
    CHECK(rho.at(1, 1) == 1);
    CHECK(rho.at(2, 0) == 0);

    std::mt19937 rng(31);
    for (int t = 0; t < 25; ++t) {
        GroupWord g = random_group_word(rng, a2, 1 + static_cast<int>(rng() % 8));
        GroupWord h = random_group_word(rng, a2, 1 + static_cast<int>(rng() % 8));
        Word w = t % 2 ? W("ab") : W("aba");
        UnitriMatrix prod = magnus_representation(w, g * h, 3, 1);
        UnitriMatrix split =
            magnus_representation(w, g, 3, 1) * magnus_representation(w, h, 3, 1);
        CHECK(prod == split);
    }

    // single-letter word: a 2x2 matrix carrying one coefficient
    GroupWord g = random_group_word(rng, a2, 6);
    UnitriMatrix single = magnus_representation(W("a"), g, 3, 1);
    CHECK(single.size() == 2);
    CHECK(single.at(0, 1) == magnus_coefficient(g, W("a"), ModRing(3, 2)));
}

TEST_CASE("matrix inverse and powers") {
    ModRing r9(3, 2);
    UnitriMatrix m(4, r9);
    m.set(0, 1, 2);
    m.set(1, 2, 5);
    m.set(2, 3, 1);
    m.set(0, 3, 7);
    CHECK(m * m.inverse() == UnitriMatrix(4, r9));
    CHECK(m.inverse() * m == UnitriMatrix(4, r9));
    CHECK(m.pow(0) == UnitriMatrix(4, r9));
    CHECK(m.pow(3) == m * m * m);
}

TEST_CASE("coefficient divisibility bounds") {
    Alphabet a2(2);
    // generators of the level subgroup satisfy the bounds
    for (int n : {2, 3}) {
        for (std::uint64_t p : {2ull, 3ull}) {
            for (const Word& w : lyndon_words_up_to(a2, n)) {
                std::uint64_t e = 1;
                for (int t = 0; t < jump_exponent(n, w.size(), p); ++t)
                    e *= p;
                GroupWord sigma = group_power(commutator_word(w, a2), e);
                CHECK(check_coefficient_bounds(sigma, n, p));
            }
        }
    }

    // a bare generator fails at level 2
    CHECK_FALSE(check_coefficient_bounds(GroupWord::generator(a2, 0), 2, 2));

    // products and conjugates of level elements stay in the level
    std::mt19937 rng(77);
    GroupWord s1 = group_power(GroupWord::generator(a2, 0), 4);          // j_3(1) = 2
    GroupWord s2 = group_power(commutator_word(W("ab"), a2), 2);         // j_3(2) = 1
    GroupWord s3 = commutator_word(W("aab"), a2);                        // j_3(3) = 0
    for (int t = 0; t < 5; ++t) {
        GroupWord conj = random_group_word(rng, a2, 4);
        GroupWord element = s1 * s2 * (conj.inverse() * s3 * conj);
        CHECK(check_coefficient_bounds(element, 3, 2));
    }
}

TEST_SUITE_END();
