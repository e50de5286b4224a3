#ifndef ZLAB_SHUFFLE_HPP
#define ZLAB_SHUFFLE_HPP

#include "zlab/ncpoly.hpp"

namespace zlab {

// Shuffle product of two words: the sum over all riffle interleavings,
// by the recursion  au' sh bv' = a(u' sh bv') + b(au' sh v'), with the
// empty word as unit. Homogeneous of degree |u| + |v|.
IntPoly shuffle(const Word& u, const Word& v, const Alphabet& alphabet);

// Infiltration product, by the recursion
//   au' inf bv' = a(u' inf bv') + b(au' inf v') + [a==b] a(u' inf v'),
// with the empty word as unit. Its top-degree part is the shuffle.
IntPoly infiltration(const Word& u, const Word& v, const Alphabet& alphabet);

// Bilinear extensions.
IntPoly shuffle(const IntPoly& f, const IntPoly& g);
IntPoly infiltration(const IntPoly& f, const IntPoly& g);

// Dimension over F_p of the degree-n words modulo all shuffle products
// u sh v with u, v nonempty and |u| + |v| = n.
int indec_dimension(int m, int n, std::uint64_t p);

// True iff the images of the Lyndon words of length n span that quotient.
// Requires n < p.
bool lyndon_span_check(int m, int n, std::uint64_t p);

} // namespace zlab

#endif
