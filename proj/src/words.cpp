#include "zlab/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace zlab {

Alphabet::Alphabet(int size) : size_(size) {
    if (size < 1 || size > max_alphabet_size)
        throw std::invalid_argument("alphabet size must be between 1 and 9");
}

Word::Word(std::initializer_list<int> letters) {
    if (std::ssize(letters) > max_word_length)
        throw std::length_error("word length bound exceeded");
    for (int x : letters) {
        if (x < 0 || x >= max_alphabet_size)
            throw std::invalid_argument("letter index out of range");
        letters_[len_++] = static_cast<Letter>(x);
    }
}

Word Word::of(std::span<const Letter> letters) {
    if (std::ssize(letters) > max_word_length)
        throw std::length_error("word length bound exceeded");
    Word w;
    for (Letter x : letters) {
        if (x >= max_alphabet_size)
            throw std::invalid_argument("letter index out of range");
        w.letters_[w.len_++] = x;
    }
    return w;
}

int Word::max_letter() const {
    int best = -1;
    for (Letter x : *this)
        best = std::max(best, static_cast<int>(x));
    return best;
}

Word Word::prefix(int k) const { return slice(0, k); }

Word Word::suffix_from(int pos) const { return slice(pos, len_); }

Word Word::slice(int from, int to) const {
    if (from < 0 || to < from || to > len_)
        throw std::out_of_range("word slice out of range");
    Word w;
    for (int i = from; i < to; ++i)
        w.letters_[w.len_++] = letters_[static_cast<std::size_t>(i)];
    return w;
}

Word Word::appended(Letter x) const {
    if (len_ >= max_word_length)
        throw std::length_error("word length bound exceeded");
    if (x >= max_alphabet_size)
        throw std::invalid_argument("letter index out of range");
    Word w = *this;
    w.letters_[w.len_++] = x;
    return w;
}

Word operator+(const Word& u, const Word& v) {
    if (u.size() + v.size() > max_word_length)
        throw std::length_error("word length bound exceeded");
    Word w = u;
    for (Letter x : v)
        w.letters_[w.len_++] = x;
    return w;
}

std::strong_ordering compare_alp(const Word& w1, const Word& w2) {
    int n = std::min(w1.size(), w2.size());
    for (int i = 0; i < n; ++i) {
        if (w1[i] != w2[i])
            return w1[i] <=> w2[i];
    }
    return w1.size() <=> w2.size();
}

std::strong_ordering compare_graded(const Word& w1, const Word& w2) {
    if (w1.size() != w2.size())
        return w1.size() <=> w2.size();
    return compare_alp(w1, w2);
}

std::size_t WordHash::operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    h = (h ^ static_cast<std::size_t>(w.size())) * 1099511628211ull;
    for (Letter x : w)
        h = (h ^ x) * 1099511628211ull;
    return h;
}

bool is_lyndon(const Word& w) {
    if (w.empty())
        return false;
    for (int k = 1; k < w.size(); ++k) {
        if (compare_alp(w, w.suffix_from(k)) >= 0)
            return false;
    }
    return true;
}

// Duval's generation: all Lyndon words of length <= max_len in alphabetic
// order. Repeat the current word periodically up to max_len, strip
// trailing maximal letters, increment the last one.
std::vector<Word> lyndon_words_up_to(const Alphabet& alphabet, int max_len) {
    if (max_len < 0 || max_len > max_word_length)
        throw std::length_error("word length bound exceeded");
    std::vector<Word> out;
    if (max_len == 0)
        return out;
    const Letter top = static_cast<Letter>(alphabet.size() - 1);
    std::vector<Letter> w{0};
    while (true) {
        out.push_back(Word::of(w));
        int base = static_cast<int>(w.size());
        w.resize(static_cast<std::size_t>(max_len));
        for (int i = base; i < max_len; ++i)
            w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i - base)];
        while (!w.empty() && w.back() == top)
            w.pop_back();
        if (w.empty())
            break;
        ++w.back();
    }
    return out;
}

std::vector<Word> lyndon_words(const Alphabet& alphabet, const std::set<int>& lengths) {
    int max_len = 0;
    for (int n : lengths) {
        if (n < 1 || n > max_word_length)
            throw std::length_error("word length bound exceeded");
        max_len = std::max(max_len, n);
    }
    std::vector<Word> out;
    for (const Word& w : lyndon_words_up_to(alphabet, max_len)) {
        if (lengths.count(w.size()))
            out.push_back(w);
    }
    std::sort(out.begin(), out.end(), WordGradedLess{});
    return out;
}

std::vector<Word> all_words(const Alphabet& alphabet, int length) {
    if (length < 0 || length > max_word_length)
        throw std::length_error("word length bound exceeded");
    std::vector<Word> out;
    std::vector<Letter> cur(static_cast<std::size_t>(length), 0);
    const int m = alphabet.size();
    while (true) {
        out.push_back(Word::of(cur));
        int i = length - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - 1)
            cur[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2)
        throw std::invalid_argument("standard factorization needs length >= 2");
    if (!is_lyndon(w))
        throw std::invalid_argument("standard factorization needs a Lyndon word");
    for (int pos = 1; pos < w.size(); ++pos) {
        Word v = w.suffix_from(pos);
        if (is_lyndon(v))
            return {w.prefix(pos), v};
    }
    throw std::logic_error("Lyndon word without Lyndon suffix"); // unreachable
}

BracketedWord::BracketedWord(Letter x) : letter_(x) {
    if (x >= max_alphabet_size)
        throw std::invalid_argument("letter index out of range");
}

BracketedWord::BracketedWord(BracketedWord left, BracketedWord right)
    : left_(std::make_shared<const BracketedWord>(std::move(left))),
      right_(std::make_shared<const BracketedWord>(std::move(right))) {}

Word BracketedWord::foliage() const {
    if (is_letter())
        return Word{}.appended(letter_);
    return left().foliage() + right().foliage();
}

int BracketedWord::size() const {
    if (is_letter())
        return 1;
    return left().size() + right().size();
}

bool BracketedWord::operator==(const BracketedWord& o) const {
    if (is_letter() != o.is_letter())
        return false;
    if (is_letter())
        return letter_ == o.letter_;
    return left() == o.left() && right() == o.right();
}

BracketedWord bracketing(const Word& w) {
    if (!is_lyndon(w))
        throw std::invalid_argument("bracketing needs a Lyndon word");
    if (w.size() == 1)
        return BracketedWord(w[0]);
    auto [u, v] = standard_factorization(w);
    return BracketedWord(bracketing(u), bracketing(v));
}

std::vector<BracketedWord> lyndon_bracketings(const Alphabet& alphabet, int max_len) {
    std::vector<BracketedWord> out;
    for (const Word& w : lyndon_words_up_to(alphabet, max_len))
        out.push_back(bracketing(w));
    return out;
}

namespace {

// Structural key of a bracketed word, for rank lookups.
std::string tree_key(const BracketedWord& b) {
    if (b.is_letter())
        return std::string(1, static_cast<char>('a' + b.letter()));
    return "(" + tree_key(b.left()) + tree_key(b.right()) + ")";
}

} // namespace

bool check_hall_conditions(std::span<const BracketedWord> candidates,
                           const Alphabet& alphabet, int max_len) {
    std::unordered_map<std::string, int> rank;
    for (int i = 0; i < std::ssize(candidates); ++i)
        rank.emplace(tree_key(candidates[i]), i);

    auto rank_of = [&](const BracketedWord& b) -> int {
        auto it = rank.find(tree_key(b));
        return it == rank.end() ? -1 : it->second;
    };

    // (1) every letter occurs, and letter ranks follow the alphabet order
    int prev = -1;
    for (int x = 0; x < alphabet.size(); ++x) {
        int r = rank_of(BracketedWord(static_cast<Letter>(x)));
        if (r < 0 || r <= prev)
            return false;
        prev = r;
    }

    // (2) and the forward half of (3), over composite candidates
    for (int i = 0; i < std::ssize(candidates); ++i) {
        const BracketedWord& h = candidates[i];
        if (h.is_letter() || h.size() > max_len)
            continue;
        int rl = rank_of(h.left());
        int rr = rank_of(h.right());
        if (rr < 0 || i >= rr) // h'' in H and h < h''
            return false;
        if (rl < 0 || rl >= rr)
            return false;
        if (!h.left().is_letter() && rank_of(h.left().right()) < rr)
            return false;
    }

    // (3) as an equivalence, over pairs of candidates
    for (int a = 0; a < std::ssize(candidates); ++a) {
        for (int b = 0; b < std::ssize(candidates); ++b) {
            const BracketedWord& ha = candidates[a];
            const BracketedWord& hb = candidates[b];
            if (ha.size() + hb.size() > max_len)
                continue;
            bool eligible = a < b &&
                            (ha.is_letter() || rank_of(ha.right()) >= b);
            bool member = rank_of(BracketedWord(ha, hb)) >= 0;
            if (eligible != member)
                return false;
        }
    }
    return true;
}

namespace {

int moebius(int d) {
    int result = 1;
    for (int q = 2; q * q <= d; ++q) {
        if (d % q == 0) {
            d /= q;
            if (d % q == 0)
                return 0;
            result = -result;
        }
    }
    if (d > 1)
        result = -result;
    return result;
}

std::uint64_t upow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

} // namespace

std::uint64_t necklace_count(int m, int i) {
    if (m < 1 || i < 1 || i > max_word_length)
        throw std::invalid_argument("necklace_count arguments out of range");
    std::int64_t sum = 0;
    for (int d = 1; d <= i; ++d) {
        if (i % d != 0)
            continue;
        sum += static_cast<std::int64_t>(moebius(d)) *
               static_cast<std::int64_t>(upow(static_cast<std::uint64_t>(m), i / d));
    }
    return static_cast<std::uint64_t>(sum / i);
}

} // namespace zlab
