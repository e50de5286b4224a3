#include "zlab/text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace zlab {

std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(static_cast<std::size_t>(w.size()));
    for (Letter x : w)
        s.push_back(static_cast<char>('a' + x));
    return s;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
    Word w;
    for (char ch : text) {
        if (ch < 'a' || ch >= 'a' + alphabet.size())
            throw std::invalid_argument("letter out of range in word: " + std::string(text));
        w = w.appended(static_cast<Letter>(ch - 'a'));
    }
    return w;
}

std::string bracketed_to_string(const BracketedWord& b) {
    if (b.is_letter())
        return std::string(1, static_cast<char>('a' + b.letter()));
    return "[" + bracketed_to_string(b.left()) + "," + bracketed_to_string(b.right()) + "]";
}

std::string group_word_to_string(const GroupWord& g) {
    if (g.is_identity())
        return "1";
    std::string s;
    for (auto [x, e] : g.factors()) {
        if (!s.empty())
            s.push_back(' ');
        s.push_back(static_cast<char>('a' + x));
        if (e < 0)
            s += "^-1";
    }
    return s;
}

namespace {

struct GroupParser {
    std::string_view text;
    std::size_t pos = 0;
    const Alphabet& alphabet;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("group word syntax: " + what + " at offset " +
                                    std::to_string(pos));
    }

    GroupWord parse_sequence(bool stop_at_comma) {
        GroupWord acc(alphabet);
        while (true) {
            skip_space();
            if (pos >= text.size())
                break;
            char c = text[pos];
            if (c == ')' || (stop_at_comma && c == ','))
                break;
            acc = acc * parse_factor();
        }
        return acc;
    }

    GroupWord parse_factor() {
        GroupWord base = parse_atom();
        skip_space();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_space();
            bool negative = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                negative = text[pos] == '-';
                ++pos;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos)
                fail("exponent expected");
            long e = std::stol(std::string(text.substr(start, pos - start)));
            GroupWord acc(alphabet);
            GroupWord unit = negative ? base.inverse() : base;
            for (long t = 0; t < e; ++t)
                acc = acc * unit;
            return acc;
        }
        return base;
    }

    GroupWord parse_atom() {
        skip_space();
        if (pos >= text.size())
            fail("unexpected end");
        if (text.compare(pos, 5, "comm(") == 0) {
            pos += 5;
            GroupWord lhs = parse_sequence(true);
            if (!eat(','))
                fail("',' expected in comm");
            GroupWord rhs = parse_sequence(true);
            if (!eat(')'))
                fail("')' expected in comm");
            return commutator(lhs, rhs);
        }
        if (text[pos] == '(') {
            ++pos;
            GroupWord inner = parse_sequence(false);
            if (!eat(')'))
                fail("')' expected");
            return inner;
        }
        char c = text[pos];
        if (c == '1') {
            ++pos;
            return GroupWord(alphabet);
        }
        if (c < 'a' || c >= 'a' + alphabet.size())
            fail("letter out of range");
        ++pos;
        return GroupWord::generator(alphabet, static_cast<Letter>(c - 'a'));
    }
};

} // namespace

GroupWord parse_group_word(std::string_view text, const Alphabet& alphabet) {
    GroupParser parser{text, 0, alphabet};
    GroupWord g = parser.parse_sequence(false);
    parser.skip_space();
    if (parser.pos != text.size())
        parser.fail("trailing input");
    return g;
}

std::int64_t signed_residue(std::uint64_t v, std::uint64_t modulus) {
    if (v <= modulus / 2)
        return static_cast<std::int64_t>(v);
    return static_cast<std::int64_t>(v) - static_cast<std::int64_t>(modulus);
}

namespace {

std::string term_text(const std::string& word, const std::string& coeff, bool coeff_is_one) {
    if (word.empty())
        return coeff;
    if (coeff_is_one)
        return word;
    return coeff + "*" + word;
}

} // namespace

std::string series_to_string(const NcSeries& f) {
    if (f.is_zero())
        return "0";
    std::string s;
    for (const auto& [w, c] : f.terms()) {
        if (!s.empty())
            s += " + ";
        s += term_text(word_to_string(w), std::to_string(c), c == 1);
    }
    return s;
}

nlohmann::json series_to_json(const NcSeries& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : f.terms())
        terms.push_back({{"word", word_to_string(w)}, {"coeff", c}});
    return {{"p", f.ring().p()},
            {"K", f.ring().precision()},
            {"trunc", f.trunc_deg()},
            {"terms", terms}};
}

std::string int_poly_to_string(const IntPoly& f) {
    if (f.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        std::int64_t a = c;
        if (first) {
            if (a < 0)
                s += "-";
        } else {
            s += a < 0 ? " - " : " + ";
        }
        std::int64_t mag = a < 0 ? -a : a;
        s += term_text(word_to_string(w), std::to_string(mag), mag == 1);
        first = false;
    }
    return s;
}

nlohmann::json int_poly_to_json(const IntPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : f.terms())
        terms.push_back({{"word", word_to_string(w)}, {"coeff", c}});
    return {{"m", f.alphabet().size()}, {"terms", terms}};
}

nlohmann::json matrix_to_json(const FundamentalMatrix& fm) {
    nlohmann::json index = nlohmann::json::array();
    for (const Word& w : fm.index)
        index.push_back(word_to_string(w));
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json signed_rows = nlohmann::json::array();
    for (const auto& row : fm.entries) {
        nlohmann::json r = nlohmann::json::array();
        nlohmann::json sr = nlohmann::json::array();
        for (std::uint64_t v : row) {
            r.push_back(v);
            sr.push_back(signed_residue(v, fm.params.p));
        }
        rows.push_back(std::move(r));
        signed_rows.push_back(std::move(sr));
    }
    return {{"p", fm.params.p},
            {"n", fm.params.n},
            {"m", fm.params.m},
            {"K", fm.params.precision},
            {"index", index},
            {"transposed", fm.transposed},
            {"matrix", rows},
            {"signed_matrix", signed_rows}};
}

std::string matrix_to_csv(const FundamentalMatrix& fm) {
    std::ostringstream out;
    for (std::size_t c = 0; c < fm.index.size(); ++c)
        out << (c ? "," : "") << word_to_string(fm.index[c]);
    out << "\n";
    for (const auto& row : fm.entries) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << row[c];
        out << "\n";
    }
    return out.str();
}

} // namespace zlab
