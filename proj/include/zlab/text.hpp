#ifndef ZLAB_TEXT_HPP
#define ZLAB_TEXT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "zlab/magnus.hpp"
#include "zlab/ncpoly.hpp"
#include "zlab/zassenhaus.hpp"

namespace zlab {

// Words render with the letters a..i for indices 0..8; the empty string
// is the empty word.
std::string word_to_string(const Word& w);
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Bracket trees render as [left,right].
std::string bracketed_to_string(const BracketedWord& b);

// Group words: space-separated factors like "a b^-1 a^-1", with
// comm(X,Y) for nested commutators and parenthesised grouping.
std::string group_word_to_string(const GroupWord& g);
GroupWord parse_group_word(std::string_view text, const Alphabet& alphabet);

// Residue mapped into (-p/2, p/2] for display next to unsigned output.
std::int64_t signed_residue(std::uint64_t v, std::uint64_t modulus);

std::string series_to_string(const NcSeries& f);
nlohmann::json series_to_json(const NcSeries& f);

std::string int_poly_to_string(const IntPoly& f);
nlohmann::json int_poly_to_json(const IntPoly& f);

nlohmann::json matrix_to_json(const FundamentalMatrix& fm);
std::string matrix_to_csv(const FundamentalMatrix& fm);

} // namespace zlab

#endif
