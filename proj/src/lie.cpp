#include "zlab/lie.hpp"

#include <stdexcept>

#include "zlab/linalg.hpp"

namespace zlab {

IntPoly lie_expand(const BracketedWord& b, const Alphabet& alphabet) {
    if (b.is_letter())
        return IntPoly::monomial(alphabet, Word{}.appended(b.letter()), 1);
    IntPoly lhs = lie_expand(b.left(), alphabet);
    IntPoly rhs = lie_expand(b.right(), alphabet);
    IntPoly out(alphabet);
    for (const auto& [u, a] : lhs.terms())
        for (const auto& [v, c] : rhs.terms()) {
            out.add_term(u + v, a * c);
            out.add_term(v + u, -a * c);
        }
    return out;
}

NcSeries lie_expand(const BracketedWord& b, const ModRing& ring,
                    const Alphabet& alphabet, int trunc_deg) {
    if (b.size() > trunc_deg)
        throw std::out_of_range("truncation degree too small for the bracket");
    return reduce(lie_expand(b, alphabet), ring, trunc_deg);
}

NcSeries restricted_power_expand(int j, const BracketedWord& b, const ModRing& ring,
                                 const Alphabet& alphabet, int trunc_deg) {
    if (j < 0)
        throw std::invalid_argument("power index must be non-negative");
    std::uint64_t e = 1;
    for (int t = 0; t < j; ++t)
        e *= ring.p();
    if (static_cast<std::uint64_t>(b.size()) * e > static_cast<std::uint64_t>(trunc_deg))
        throw std::out_of_range("truncation degree too small for the power");
    return power(lie_expand(b, ring, alphabet, trunc_deg), e);
}

int homogeneous_rank(std::span<const NcSeries> polys, int degree, std::uint64_t p) {
    if (polys.empty())
        return 0;
    const Alphabet& alphabet = polys.front().alphabet();
    std::vector<Word> columns = all_words(alphabet, degree);
    std::map<Word, std::size_t, WordGradedLess> col_of;
    for (std::size_t j = 0; j < columns.size(); ++j)
        col_of.emplace(columns[j], j);

    FpRowReducer reducer(columns.size(), p);
    for (const NcSeries& f : polys) {
        if (!(f.alphabet() == alphabet))
            throw std::invalid_argument("alphabet mismatch");
        if (f.ring().p() != p)
            throw std::invalid_argument("ring characteristic mismatch");
        std::vector<std::uint64_t> row(columns.size(), 0);
        for (const auto& [w, c] : f.terms()) {
            if (w.size() != degree)
                throw std::invalid_argument("polynomial is not homogeneous of the degree");
            row[col_of.at(w)] = c % p;
        }
        reducer.add_row(std::move(row));
    }
    return static_cast<int>(reducer.rank());
}

} // namespace zlab
