#ifndef ZLAB_NCPOLY_HPP
#define ZLAB_NCPOLY_HPP

#include <cstdint>
#include <map>

#include "zlab/words.hpp"

namespace zlab {

// The ring Z/p^K for a prime p. Residues are canonical representatives in
// [0, p^K); the modulus must fit in 63 bits.
class ModRing {
public:
    ModRing(std::uint64_t p, int k);

    std::uint64_t p() const { return p_; }
    int precision() const { return k_; }
    std::uint64_t modulus() const { return modulus_; }

    std::uint64_t reduce(std::uint64_t v) const { return v % modulus_; }
    std::uint64_t reduce_signed(std::int64_t v) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : modulus_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    bool is_unit(std::uint64_t a) const { return a % p_ != 0; }
    std::uint64_t inv(std::uint64_t a) const; // throws if not a unit

    bool operator==(const ModRing&) const = default;

private:
    std::uint64_t p_;
    int k_;
    std::uint64_t modulus_;
};

// A truncated series in non-commuting variables with coefficients in
// Z/p^K: a finite word -> residue map holding no zero coefficients and no
// word longer than the truncation degree. The empty-word coefficient is
// the constant term. Values are immutable in spirit: all arithmetic
// returns fresh series, and the term map is only reachable const.
class NcSeries {
public:
    NcSeries(ModRing ring, Alphabet alphabet, int trunc_deg);

    static NcSeries constant(ModRing ring, Alphabet alphabet, int trunc_deg,
                             std::uint64_t c);
    static NcSeries one(ModRing ring, Alphabet alphabet, int trunc_deg);
    static NcSeries monomial(ModRing ring, Alphabet alphabet, int trunc_deg,
                             const Word& w, std::uint64_t c);

    const ModRing& ring() const { return ring_; }
    const Alphabet& alphabet() const { return alphabet_; }
    int trunc_deg() const { return trunc_deg_; }

    // Terms keyed by the graded order; deterministic iteration.
    const std::map<Word, std::uint64_t, WordGradedLess>& terms() const { return terms_; }

    std::uint64_t coeff_or_zero(const Word& w) const;

    // Adds delta to the coefficient of w, dropping the term if it
    // becomes zero. Words beyond the truncation degree are rejected.
    void add_term(const Word& w, std::uint64_t delta);

    bool is_zero() const { return terms_.empty(); }

    bool operator==(const NcSeries&) const = default;

private:
    ModRing ring_;
    Alphabet alphabet_;
    int trunc_deg_;
    std::map<Word, std::uint64_t, WordGradedLess> terms_;
};

// Coefficientwise sum/difference; the result is truncated to the finer of
// the two truncation degrees. Ring and alphabet must match.
NcSeries add(const NcSeries& f, const NcSeries& g);
NcSeries sub(const NcSeries& f, const NcSeries& g);

// Concatenation (Cauchy) product, truncated like add.
NcSeries mul(const NcSeries& f, const NcSeries& g);

// Two-sided inverse up to the truncation degree, by the geometric series;
// the constant term must be a unit.
NcSeries invert(const NcSeries& f);

// f^e by binary exponentiation; f^0 = 1.
NcSeries power(const NcSeries& f, std::uint64_t e);

// The stored coefficient of w, or zero. Throws if |w| exceeds the
// truncation degree, where the value would be meaningless.
std::uint64_t coefficient(const NcSeries& f, const Word& w);

// Sum of f_w * g_w over the support of g. Every word supported by g must
// lie within f's truncation degree.
std::uint64_t pairing(const NcSeries& f, const NcSeries& g);

// Integer-coefficient polynomial over words; the exact-arithmetic carrier
// for shuffle and infiltration products.
class IntPoly {
public:
    explicit IntPoly(Alphabet alphabet);
    static IntPoly monomial(Alphabet alphabet, const Word& w, std::int64_t c);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Word, std::int64_t, WordGradedLess>& terms() const { return terms_; }

    std::int64_t coeff_or_zero(const Word& w) const;
    void add_term(const Word& w, std::int64_t delta);

    bool is_zero() const { return terms_.empty(); }
    int max_degree() const; // 0 for the zero polynomial

    bool operator==(const IntPoly&) const = default;

private:
    Alphabet alphabet_;
    std::map<Word, std::int64_t, WordGradedLess> terms_;
};

IntPoly add(const IntPoly& f, const IntPoly& g);
IntPoly scale(const IntPoly& f, std::int64_t c);

// Terms of the given degree only.
IntPoly homogeneous_part(const IntPoly& f, int degree);

// Reduce the coefficients into Z/p^K, dropping words beyond trunc_deg.
NcSeries reduce(const IntPoly& f, const ModRing& ring, int trunc_deg);

} // namespace zlab

#endif
