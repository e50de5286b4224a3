#ifndef ZLAB_WORDS_HPP
#define ZLAB_WORDS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace zlab {

// Hard configuration limits. Everything this library verifies fits well
// under these; they keep every word a small flat value.
inline constexpr int max_alphabet_size = 9;
inline constexpr int max_word_length = 16;

using Letter = std::uint8_t;

// A totally ordered finite alphabet; letters are the indices 0..size-1.
class Alphabet {
public:
    explicit Alphabet(int size);
    int size() const { return size_; }
    bool operator==(const Alphabet&) const = default;

private:
    int size_;
};

// A word over letter indices, length <= max_word_length. The empty word is
// a valid value distinct from every nonempty word.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters);
    static Word of(std::span<const Letter> letters);

    int size() const { return len_; }
    bool empty() const { return len_ == 0; }
    Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }

    const Letter* begin() const { return letters_.data(); }
    const Letter* end() const { return letters_.data() + len_; }

    // Largest letter index used, or -1 for the empty word.
    int max_letter() const;

    Word prefix(int k) const;       // first k letters
    Word suffix_from(int pos) const; // letters [pos, size)
    Word slice(int from, int to) const; // letters [from, to)
    Word appended(Letter x) const;

    friend Word operator+(const Word& u, const Word& v); // concatenation

    bool operator==(const Word&) const = default;

private:
    std::uint8_t len_ = 0;
    std::array<Letter, max_word_length> letters_{}; // zero beyond len_
};

// Alphabetic (lexicographic) order: a proper prefix precedes its
// extensions; otherwise decided by the first differing letter.
std::strong_ordering compare_alp(const Word& w1, const Word& w2);

// Length-graded order: by length first, ties broken alphabetically.
std::strong_ordering compare_graded(const Word& w1, const Word& w2);

struct WordAlpLess {
    bool operator()(const Word& a, const Word& b) const { return compare_alp(a, b) < 0; }
};
struct WordGradedLess {
    bool operator()(const Word& a, const Word& b) const { return compare_graded(a, b) < 0; }
};

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

// True iff w is nonempty and alphabetically smaller than each of its
// proper nonempty suffixes.
bool is_lyndon(const Word& w);

// All Lyndon words over the alphabet whose length lies in `lengths`,
// sorted by the graded order. Deterministic.
std::vector<Word> lyndon_words(const Alphabet& alphabet, const std::set<int>& lengths);

// Convenience: lengths 1..max_len.
std::vector<Word> lyndon_words_up_to(const Alphabet& alphabet, int max_len);

// All words of the given length in alphabetic order (plain base-m counting).
std::vector<Word> all_words(const Alphabet& alphabet, int length);

// For Lyndon w with |w| >= 2: the split w = uv where v is the longest
// proper suffix that is itself Lyndon. u is then Lyndon as well.
std::pair<Word, Word> standard_factorization(const Word& w);

// A word of the free magma: either a single letter or an ordered pair.
// Immutable; subtrees are shared.
class BracketedWord {
public:
    explicit BracketedWord(Letter x);
    BracketedWord(BracketedWord left, BracketedWord right);

    bool is_letter() const { return left_ == nullptr; }
    Letter letter() const { return letter_; }
    const BracketedWord& left() const { return *left_; }
    const BracketedWord& right() const { return *right_; }

    Word foliage() const; // drop the brackets
    int size() const;     // foliage length

    bool operator==(const BracketedWord& o) const; // structural

private:
    Letter letter_ = 0;
    std::shared_ptr<const BracketedWord> left_;
    std::shared_ptr<const BracketedWord> right_;
};

// The canonical bracketing of a Lyndon word: a single letter stays a leaf,
// otherwise bracket the two halves of the standard factorization.
BracketedWord bracketing(const Word& w);

// Bracketings of all Lyndon words of length <= max_len, in alphabetic
// order of their foliage. That order makes them a Hall family.
std::vector<BracketedWord> lyndon_bracketings(const Alphabet& alphabet, int max_len);

// Checks the closure conditions a totally ordered family of bracketed
// words must satisfy to be a Hall set, restricted to foliage lengths
// <= max_len. The position of each candidate in the sequence is its rank
// in the total order. Condition (1): the alphabet's letters all occur as
// leaves, ordered consistently. Condition (2): the right subtree of every
// composite candidate is a candidate ranked above it. Condition (3), both
// directions, over all pairs of candidates whose concatenated foliage
// fits in max_len: (ab) is a candidate iff rank(a) < rank(b) and a is a
// letter or the right subtree of a ranks >= b.
bool check_hall_conditions(std::span<const BracketedWord> candidates,
                           const Alphabet& alphabet, int max_len);

// Witt's necklace function: (1/i) * sum over d|i of mu(d) * m^(i/d).
// Counts the Lyndon words of length i over m letters.
std::uint64_t necklace_count(int m, int i);

} // namespace zlab

#endif
