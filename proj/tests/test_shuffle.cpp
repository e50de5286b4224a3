#include <doctest.h>

#include <random>

#include "zlab/magnus.hpp"
#include "zlab/shuffle.hpp"
#include "zlab/text.hpp"

using namespace zlab;

namespace {

Word W(const char* s) { return parse_word(s, Alphabet(9)); }

std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - i + 1) / i;
    return r;
}

} // namespace

TEST_SUITE_BEGIN("shuffle");

TEST_CASE("shuffle of words") {
    Alphabet a3(3);
    IntPoly xy = shuffle(W("a"), W("b"), a3);
    CHECK(xy.coeff_or_zero(W("ab")) == 1);
    CHECK(xy.coeff_or_zero(W("ba")) == 1);
    CHECK(xy.terms().size() == 2);

    IntPoly xx = shuffle(W("a"), W("a"), a3);
    CHECK(xx.coeff_or_zero(W("aa")) == 2);
    CHECK(xx.terms().size() == 1);

    IntPoly riffle = shuffle(W("ab"), W("c"), a3);
    CHECK(riffle.coeff_or_zero(W("abc")) == 1);
    CHECK(riffle.coeff_or_zero(W("acb")) == 1);
    CHECK(riffle.coeff_or_zero(W("cab")) == 1);
    CHECK(riffle.terms().size() == 3);

    CHECK_THROWS_AS(shuffle(W("aaaaaaaaa"), W("aaaaaaaa"), a3), std::length_error);
}

TEST_CASE("infiltration of words") {
    Alphabet a2(2);
    IntPoly xy = infiltration(W("a"), W("b"), a2);
    CHECK(xy.coeff_or_zero(W("ab")) == 1);
    CHECK(xy.coeff_or_zero(W("ba")) == 1);
    CHECK(xy.terms().size() == 2);

    IntPoly xx = infiltration(W("a"), W("a"), a2);
    CHECK(xx.coeff_or_zero(W("aa")) == 2);
    CHECK(xx.coeff_or_zero(W("a")) == 1);
    CHECK(xx.terms().size() == 2);

    IntPoly mixed = infiltration(W("ab"), W("a"), a2);
    CHECK(mixed.coeff_or_zero(W("aab")) == 2);
    CHECK(mixed.coeff_or_zero(W("aba")) == 1);
    CHECK(mixed.coeff_or_zero(W("ab")) == 1);
    CHECK(mixed.terms().size() == 3);
}

TEST_CASE("commutativity and associativity up to total length six") {
    Alphabet a2(2);
    std::vector<Word> words;
    for (int len = 0; len <= 4; ++len)
        for (const Word& w : all_words(a2, len))
            words.push_back(w);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.size() + v.size() > 6)
                continue;
            CHECK(shuffle(u, v, a2) == shuffle(v, u, a2));
            CHECK(infiltration(u, v, a2) == infiltration(v, u, a2));
            for (const Word& t : words) {
                if (u.size() + v.size() + t.size() > 6)
                    continue;
                IntPoly tw = IntPoly::monomial(a2, t, 1);
                CHECK(shuffle(shuffle(u, v, a2), tw) == shuffle(IntPoly::monomial(a2, u, 1),
                                                                shuffle(v, t, a2)));
                CHECK(infiltration(infiltration(u, v, a2), tw) ==
                      infiltration(IntPoly::monomial(a2, u, 1), infiltration(v, t, a2)));
            }
        }
}

TEST_CASE("top degree of the infiltration is the shuffle") {
    Alphabet a2(2);
    for (int lu = 1; lu <= 3; ++lu)
        for (int lv = 1; lv <= 6 - lu && lv <= 3; ++lv)
            for (const Word& u : all_words(a2, lu))
                for (const Word& v : all_words(a2, lv))
                    CHECK(homogeneous_part(infiltration(u, v, a2), lu + lv) ==
                          shuffle(u, v, a2));
}

TEST_CASE("shuffle coefficients count riffles") {
    Alphabet a2(2);
    for (int lu = 1; lu <= 3; ++lu)
        for (int lv = 1; lv <= 3; ++lv)
            for (const Word& u : all_words(a2, lu))
                for (const Word& v : all_words(a2, lv)) {
                    IntPoly sh = shuffle(u, v, a2);
                    std::int64_t total = 0;
                    for (const auto& [w, c] : sh.terms()) {
                        total += c;
                        (void)w;
                    }
                    CHECK(total == binomial(lu + lv, lu));
                }
}

TEST_CASE("coefficient identity against the Magnus expansion") {
    std::mt19937 rng(5050);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    for (int t = 0; t < 200; ++t) {
        std::uint64_t p = primes[rng() % 4];
        int m = 2 + static_cast<int>(rng() % 2);
        Alphabet alphabet(m);
        ModRing ring(p, 1 + static_cast<int>(rng() % 3));
        auto random_word = [&](int len) {
            Word w;
            for (int i = 0; i < len; ++i)
                w = w.appended(static_cast<Letter>(rng() % static_cast<unsigned>(m)));
            return w;
        };
        Word u = random_word(1 + static_cast<int>(rng() % 3));
        Word v = random_word(1 + static_cast<int>(rng() % 3));
        GroupWord g(alphabet);
        int factors = 1 + static_cast<int>(rng() % 12);
        for (int i = 0; i < factors; ++i) {
            GroupWord gen = GroupWord::generator(
                alphabet, static_cast<Letter>(rng() % static_cast<unsigned>(m)));
            g = g * (rng() % 2 ? gen : gen.inverse());
        }
        int trunc = u.size() + v.size();
        std::uint64_t lhs = ring.mul(magnus_coefficient(g, u, ring),
                                     magnus_coefficient(g, v, ring));
        std::uint64_t rhs = pairing(magnus_expand(g, ring, trunc),
                                    reduce(infiltration(u, v, alphabet), ring, trunc));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("indecomposable quotient dimensions") {
    CHECK(indec_dimension(2, 2, 3) == 1);
    CHECK(indec_dimension(2, 3, 5) == 2);
    CHECK(indec_dimension(2, 4, 5) == 3);
    CHECK(indec_dimension(3, 3, 7) == 8);
    CHECK(indec_dimension(2, 1, 5) == 2); // no relations in degree one
}

TEST_CASE("lyndon words span the quotient") {
    CHECK(lyndon_span_check(2, 3, 5));
    CHECK(lyndon_span_check(2, 4, 7));
    CHECK(lyndon_span_check(3, 3, 5));
    CHECK_THROWS_AS(lyndon_span_check(3, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(lyndon_span_check(3, 2, 2), std::invalid_argument);
}

TEST_SUITE_END();
