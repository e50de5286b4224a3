#ifndef ZLAB_LIE_HPP
#define ZLAB_LIE_HPP

#include <span>

#include "zlab/ncpoly.hpp"

namespace zlab {

// Expansion of a bracketed word in the free associative algebra, with
// [a,b] = ab - ba applied along the tree. Homogeneous of degree equal to
// the foliage length. Exact integer coefficients.
IntPoly lie_expand(const BracketedWord& b, const Alphabet& alphabet);

// Same expansion with coefficients reduced into Z/p^K. The truncation
// degree must accommodate the foliage.
NcSeries lie_expand(const BracketedWord& b, const ModRing& ring,
                    const Alphabet& alphabet, int trunc_deg);

// The p^j-th associative power of lie_expand(b); homogeneous of degree
// |foliage| * p^j.
NcSeries restricted_power_expand(int j, const BracketedWord& b, const ModRing& ring,
                                 const Alphabet& alphabet, int trunc_deg);

// Rank over F_p of the coefficient matrix of a family of homogeneous
// polynomials of the stated degree (rows are polynomials, columns the
// words of that degree in graded order).
int homogeneous_rank(std::span<const NcSeries> polys, int degree, std::uint64_t p);

} // namespace zlab

#endif
