#include "zlab/zassenhaus.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

#include "zlab/magnus.hpp"
#include "zlab/parallel.hpp"
#include "zlab/shuffle.hpp"
#include "zlab/text.hpp"

namespace zlab {

int jump_exponent(int n, int i, std::uint64_t p) {
    if (n < 1)
        throw std::invalid_argument("level must be positive");
    if (i < 1 || i > n)
        throw std::invalid_argument("index out of range");
    if (p < 2)
        throw std::invalid_argument("p must be at least 2");
    int j = 0;
    std::uint64_t v = static_cast<std::uint64_t>(i);
    while (v < static_cast<std::uint64_t>(n)) {
        v *= p;
        ++j;
    }
    return j;
}

std::vector<int> jump_set(int n, std::uint64_t p) {
    if (n < 1)
        throw std::invalid_argument("level must be positive");
    if (p < 2)
        throw std::invalid_argument("p must be at least 2");
    std::set<int> jumps;
    std::uint64_t pk = 1;
    while (true) {
        int ik = static_cast<int>((static_cast<std::uint64_t>(n) + pk - 1) / pk);
        jumps.insert(ik);
        if (ik == 1)
            break;
        pk *= p;
    }
    return {jumps.begin(), jumps.end()};
}

bool jump_set_equivalence(int n, std::uint64_t p) {
    if (n > 10000)
        throw std::invalid_argument("level bound exceeded");
    std::vector<std::uint64_t> weight(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        std::uint64_t q = 1;
        for (int t = 0; t < jump_exponent(n, i, p); ++t)
            q *= p;
        weight[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i) * q;
    }
    std::vector<int> by_minimality;
    for (int i = 1; i <= n; ++i) {
        // condition: every i' <= i has weight at least weight[i]
        std::uint64_t w = weight[static_cast<std::size_t>(i)];
        bool minimal = true;
        for (int ip = 1; ip <= i; ++ip)
            if (weight[static_cast<std::size_t>(ip)] < w) {
                minimal = false;
                break;
            }
        if (minimal)
            by_minimality.push_back(i);
    }
    return by_minimality == jump_set(n, p);
}

LevelParams::LevelParams(std::uint64_t p, int n, int m)
    : LevelParams(p, n, m, jump_exponent(n, 1, p) + 1) {}

LevelParams::LevelParams(std::uint64_t p, int n, int m, int precision)
    : p(p), n(n), m(m), precision(precision) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("level must be between 2 and 8");
    if (m < 1 || m > max_alphabet_size)
        throw std::invalid_argument("alphabet size out of range");
    if (precision < 1)
        throw std::invalid_argument("precision must be positive");
    (void)ModRing(p, precision); // validates p prime and the modulus range
}

namespace {

NcSeries level_series(const Word& w_prime, const LevelParams& params) {
    ModRing ring(params.p, params.precision);
    int j = jump_exponent(params.n, w_prime.size(), params.p);
    std::uint64_t e = 1;
    for (int t = 0; t < j; ++t)
        e *= params.p;
    return power(commutator_series(w_prime, ring, params.alphabet(), params.n), e);
}

// Divide the Magnus coefficient of w by p^(j_n(|w|)) and reduce mod p.
std::uint64_t reduced_pairing(const NcSeries& sigma, const Word& w,
                              const LevelParams& params) {
    int j = jump_exponent(params.n, w.size(), params.p);
    if (j >= params.precision)
        throw std::invalid_argument("precision too small for the level pairing");
    std::uint64_t q = 1;
    for (int t = 0; t < j; ++t)
        q *= params.p;
    std::uint64_t c = coefficient(sigma, w);
    if (c % q != 0)
        throw std::runtime_error("pairing divisibility failed for \"" +
                                 word_to_string(w) + "\": internal error");
    return (c / q) % params.p;
}

} // namespace

std::uint64_t pairing_value(const Word& w, const Word& w_prime, const LevelParams& params) {
    if (w.empty() || w.size() > params.n)
        throw std::invalid_argument("word length out of range");
    if (!is_lyndon(w_prime) || w_prime.size() > params.n)
        throw std::invalid_argument("second argument must be Lyndon of length <= n");
    NcSeries sigma = level_series(w_prime, params);
    return reduced_pairing(sigma, w, params);
}

FundamentalMatrix fundamental_matrix(const LevelParams& params) {
    std::vector<int> jumps = jump_set(params.n, params.p);
    std::vector<Word> index =
        lyndon_words(params.alphabet(), std::set<int>(jumps.begin(), jumps.end()));
    if (index.size() > 200)
        throw std::length_error("index size bound exceeded");

    FundamentalMatrix out{params, index, {}, true};
    out.entries.assign(index.size(), {});
    // Row r depends only on the level series of index[r]; rows are
    // independent and any thread interleaving writes disjoint slots.
    parallel_for(index.size(), [&](std::size_t r) {
        NcSeries sigma = level_series(index[r], params);
        std::vector<std::uint64_t> row(index.size(), 0);
        for (std::size_t c = 0; c < index.size(); ++c)
            row[c] = reduced_pairing(sigma, index[c], params);
        out.entries[r] = std::move(row);
    });
    return out;
}

std::uint64_t h2_dimension(const LevelParams& params) {
    std::uint64_t total = 0;
    for (int i : jump_set(params.n, params.p))
        total += necklace_count(params.m, i);
    return total;
}

ShuffleRelationReport verify_shuffle_relations(const LevelParams& params) {
    ShuffleRelationReport report;
    Alphabet alphabet = params.alphabet();
    std::vector<int> jumps = jump_set(params.n, params.p);
    std::vector<Word> index =
        lyndon_words(alphabet, std::set<int>(jumps.begin(), jumps.end()));

    // All shuffle products u sh v, grouped by total degree i.
    struct Relation {
        Word u, v;
        IntPoly poly;
    };
    std::map<int, std::vector<Relation>> relations;
    for (int i : jumps) {
        if (i < 2)
            continue;
        for (int r = 1; r < i; ++r)
            for (const Word& u : all_words(alphabet, r))
                for (const Word& v : all_words(alphabet, i - r)) {
                    relations[i].push_back({u, v, shuffle(u, v, alphabet)});
                    ++report.pairs_checked;
                }
    }

    for (const Word& w_prime : index) {
        NcSeries sigma = level_series(w_prime, params);
        for (const auto& [i, rels] : relations) {
            // F_p row of reduced pairings over the degree-i words
            std::map<Word, std::uint64_t, WordGradedLess> row;
            for (const Word& w : all_words(alphabet, i))
                row.emplace(w, reduced_pairing(sigma, w, params));
            for (const Relation& rel : rels) {
                std::uint64_t acc = 0;
                for (const auto& [w, c] : rel.poly.terms())
                    acc = (acc + static_cast<std::uint64_t>(c) % params.p * row.at(w)) % params.p;
                ++report.relations_checked;
                if (acc != 0)
                    report.violations.push_back(
                        "relation (" + word_to_string(rel.u) + ", " + word_to_string(rel.v) +
                        ") against " + word_to_string(w_prime) + " gives " + std::to_string(acc));
            }
        }
    }
    return report;
}

bool main_theorem_check(const LevelParams& params) {
    if (static_cast<std::uint64_t>(params.n) >= params.p)
        throw std::invalid_argument("requires n < p");
    std::uint64_t predicted = h2_dimension(params);
    std::uint64_t lhs = static_cast<std::uint64_t>(params.m) +
                        static_cast<std::uint64_t>(indec_dimension(params.m, params.n, params.p));
    FundamentalMatrix fm = fundamental_matrix(params);
    if (lhs != predicted || fm.size() != predicted)
        return false;
    return lyndon_span_check(params.m, params.n, params.p);
}

} // namespace zlab
