#include "zlab/shuffle.hpp"

#include <stdexcept>

#include "zlab/linalg.hpp"

namespace zlab {

namespace {

void require_bound(const Word& u, const Word& v) {
    if (u.size() + v.size() > max_word_length)
        throw std::length_error("word length bound exceeded");
}

IntPoly shuffle_rec(const Word& u, const Word& v, const Alphabet& alphabet) {
    if (u.empty())
        return IntPoly::monomial(alphabet, v, 1);
    if (v.empty())
        return IntPoly::monomial(alphabet, u, 1);
    IntPoly out(alphabet);
    IntPoly left = shuffle_rec(u.suffix_from(1), v, alphabet);
    for (const auto& [w, c] : left.terms())
        out.add_term(Word{}.appended(u[0]) + w, c);
    IntPoly right = shuffle_rec(u, v.suffix_from(1), alphabet);
    for (const auto& [w, c] : right.terms())
        out.add_term(Word{}.appended(v[0]) + w, c);
    return out;
}

IntPoly infiltration_rec(const Word& u, const Word& v, const Alphabet& alphabet) {
    if (u.empty())
        return IntPoly::monomial(alphabet, v, 1);
    if (v.empty())
        return IntPoly::monomial(alphabet, u, 1);
    IntPoly out(alphabet);
    IntPoly left = infiltration_rec(u.suffix_from(1), v, alphabet);
    for (const auto& [w, c] : left.terms())
        out.add_term(Word{}.appended(u[0]) + w, c);
    IntPoly right = infiltration_rec(u, v.suffix_from(1), alphabet);
    for (const auto& [w, c] : right.terms())
        out.add_term(Word{}.appended(v[0]) + w, c);
    if (u[0] == v[0]) {
        IntPoly merged = infiltration_rec(u.suffix_from(1), v.suffix_from(1), alphabet);
        for (const auto& [w, c] : merged.terms())
            out.add_term(Word{}.appended(u[0]) + w, c);
    }
    return out;
}

} // namespace

IntPoly shuffle(const Word& u, const Word& v, const Alphabet& alphabet) {
    require_bound(u, v);
    return shuffle_rec(u, v, alphabet);
}

IntPoly infiltration(const Word& u, const Word& v, const Alphabet& alphabet) {
    require_bound(u, v);
    return infiltration_rec(u, v, alphabet);
}

IntPoly shuffle(const IntPoly& f, const IntPoly& g) {
    if (!(f.alphabet() == g.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    IntPoly out(f.alphabet());
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms())
            out = add(out, scale(shuffle(u, v, f.alphabet()), a * b));
    return out;
}

IntPoly infiltration(const IntPoly& f, const IntPoly& g) {
    if (!(f.alphabet() == g.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    IntPoly out(f.alphabet());
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms())
            out = add(out, scale(infiltration(u, v, f.alphabet()), a * b));
    return out;
}

namespace {

std::uint64_t words_count(int m, int n) {
    std::uint64_t c = 1;
    for (int t = 0; t < n; ++t)
        c *= static_cast<std::uint64_t>(m);
    return c;
}

// Feeds every shuffle relation u sh v (u <= v alphabetically, both
// nonempty, |u| + |v| = n) into the reducer. Columns are the degree-n
// words in alphabetic order.
void add_shuffle_relations(FpRowReducer& reducer, const Alphabet& alphabet, int n,
                           const std::map<Word, std::size_t, WordGradedLess>& col_of) {
    for (int r = 1; r < n; ++r) {
        for (const Word& u : all_words(alphabet, r)) {
            for (const Word& v : all_words(alphabet, n - r)) {
                if (compare_alp(u, v) > 0)
                    continue;
                IntPoly rel = shuffle(u, v, alphabet);
                std::vector<std::uint64_t> row(col_of.size(), 0);
                for (const auto& [w, c] : rel.terms())
                    row[col_of.at(w)] = static_cast<std::uint64_t>(c); // shuffle coefficients are positive
                reducer.add_row(std::move(row));
            }
        }
    }
}

} // namespace

int indec_dimension(int m, int n, std::uint64_t p) {
    if (m < 1 || m > max_alphabet_size || n < 1 || n > max_word_length)
        throw std::invalid_argument("arguments out of range");
    std::uint64_t total = words_count(m, n);
    if (total > 100000)
        throw std::length_error("word count bound exceeded");
    Alphabet alphabet(m);
    std::vector<Word> columns = all_words(alphabet, n);
    std::map<Word, std::size_t, WordGradedLess> col_of;
    for (std::size_t j = 0; j < columns.size(); ++j)
        col_of.emplace(columns[j], j);
    FpRowReducer reducer(columns.size(), p);
    add_shuffle_relations(reducer, alphabet, n, col_of);
    return static_cast<int>(columns.size() - reducer.rank());
}

bool lyndon_span_check(int m, int n, std::uint64_t p) {
    if (!(static_cast<std::uint64_t>(n) < p))
        throw std::invalid_argument("requires n < p");
    if (m < 1 || m > max_alphabet_size || n < 1 || n > max_word_length)
        throw std::invalid_argument("arguments out of range");
    std::uint64_t total = words_count(m, n);
    if (total > 100000)
        throw std::length_error("word count bound exceeded");
    Alphabet alphabet(m);
    std::vector<Word> columns = all_words(alphabet, n);
    std::map<Word, std::size_t, WordGradedLess> col_of;
    for (std::size_t j = 0; j < columns.size(); ++j)
        col_of.emplace(columns[j], j);
    // Lyndon images span the quotient iff relations plus Lyndon unit
    // vectors fill the whole degree-n space.
    FpRowReducer reducer(columns.size(), p);
    add_shuffle_relations(reducer, alphabet, n, col_of);
    std::set<int> len{n};
    for (const Word& w : lyndon_words(alphabet, len)) {
        std::vector<std::uint64_t> row(columns.size(), 0);
        row[col_of.at(w)] = 1;
        reducer.add_row(std::move(row));
    }
    return reducer.rank() == columns.size();
}

} // namespace zlab
