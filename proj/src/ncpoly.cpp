#include "zlab/ncpoly.hpp"

#include <stdexcept>

namespace zlab {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

} // namespace

ModRing::ModRing(std::uint64_t p, int k) : p_(p), k_(k) {
    if (!is_prime(p))
        throw std::invalid_argument("modulus base must be prime");
    if (k < 1)
        throw std::invalid_argument("modulus exponent must be positive");
    std::uint64_t m = 1;
    for (int i = 0; i < k; ++i) {
        if (m > (1ull << 62) / p)
            throw std::invalid_argument("modulus p^K does not fit in 63 bits");
        m *= p;
    }
    modulus_ = m;
}

std::uint64_t ModRing::reduce_signed(std::int64_t v) const {
    std::int64_t m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = v % m;
    if (r < 0)
        r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t ModRing::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
}

std::uint64_t ModRing::sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + modulus_ - b;
}

std::uint64_t ModRing::mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % modulus_);
}

std::uint64_t ModRing::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % modulus_;
    a %= modulus_;
    while (e > 0) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t ModRing::inv(std::uint64_t a) const {
    a %= modulus_;
    if (!is_unit(a))
        throw std::domain_error("not a unit modulo p^K");
    // extended Euclid on (a, p^K)
    std::int64_t r0 = static_cast<std::int64_t>(modulus_), r1 = static_cast<std::int64_t>(a);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return reduce_signed(s0);
}

NcSeries::NcSeries(ModRing ring, Alphabet alphabet, int trunc_deg)
    : ring_(ring), alphabet_(alphabet), trunc_deg_(trunc_deg) {
    if (trunc_deg < 0 || trunc_deg > max_word_length)
        throw std::invalid_argument("truncation degree out of range");
}

NcSeries NcSeries::constant(ModRing ring, Alphabet alphabet, int trunc_deg,
                            std::uint64_t c) {
    NcSeries f(ring, alphabet, trunc_deg);
    f.add_term(Word{}, c);
    return f;
}

NcSeries NcSeries::one(ModRing ring, Alphabet alphabet, int trunc_deg) {
    return constant(ring, alphabet, trunc_deg, 1);
}

NcSeries NcSeries::monomial(ModRing ring, Alphabet alphabet, int trunc_deg,
                            const Word& w, std::uint64_t c) {
    NcSeries f(ring, alphabet, trunc_deg);
    f.add_term(w, c);
    return f;
}

std::uint64_t NcSeries::coeff_or_zero(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void NcSeries::add_term(const Word& w, std::uint64_t delta) {
    if (w.size() > trunc_deg_)
        throw std::out_of_range("term beyond truncation degree");
    if (w.max_letter() >= alphabet_.size())
        throw std::invalid_argument("letter outside the alphabet");
    delta = ring_.reduce(delta);
    if (delta == 0)
        return;
    auto [it, fresh] = terms_.emplace(w, delta);
    if (!fresh) {
        it->second = ring_.add(it->second, delta);
        if (it->second == 0)
            terms_.erase(it);
    }
}

namespace {

void require_compatible(const NcSeries& f, const NcSeries& g) {
    if (!(f.ring() == g.ring()))
        throw std::invalid_argument("ring mismatch");
    if (!(f.alphabet() == g.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
}

} // namespace

NcSeries add(const NcSeries& f, const NcSeries& g) {
    require_compatible(f, g);
    NcSeries h(f.ring(), f.alphabet(), std::min(f.trunc_deg(), g.trunc_deg()));
    for (const auto& [w, c] : f.terms())
        if (w.size() <= h.trunc_deg())
            h.add_term(w, c);
    for (const auto& [w, c] : g.terms())
        if (w.size() <= h.trunc_deg())
            h.add_term(w, c);
    return h;
}

NcSeries sub(const NcSeries& f, const NcSeries& g) {
    require_compatible(f, g);
    NcSeries h(f.ring(), f.alphabet(), std::min(f.trunc_deg(), g.trunc_deg()));
    for (const auto& [w, c] : f.terms())
        if (w.size() <= h.trunc_deg())
            h.add_term(w, c);
    for (const auto& [w, c] : g.terms())
        if (w.size() <= h.trunc_deg())
            h.add_term(w, f.ring().neg(c));
    return h;
}

NcSeries mul(const NcSeries& f, const NcSeries& g) {
    require_compatible(f, g);
    NcSeries h(f.ring(), f.alphabet(), std::min(f.trunc_deg(), g.trunc_deg()));
    for (const auto& [u, a] : f.terms()) {
        if (u.size() > h.trunc_deg())
            continue;
        for (const auto& [v, b] : g.terms()) {
            if (u.size() + v.size() > h.trunc_deg())
                continue;
            h.add_term(u + v, f.ring().mul(a, b));
        }
    }
    return h;
}

NcSeries invert(const NcSeries& f) {
    const ModRing& R = f.ring();
    std::uint64_t c = f.coeff_or_zero(Word{});
    if (!R.is_unit(c))
        throw std::domain_error("constant term is not a unit");
    std::uint64_t c_inv = R.inv(c);
    // f = c(1 - h) with h supported in degrees >= 1, so
    // f^{-1} = (1 + h + ... + h^D) c^{-1}.
    NcSeries h = sub(NcSeries::one(R, f.alphabet(), f.trunc_deg()),
                     [&] {
                         NcSeries s(R, f.alphabet(), f.trunc_deg());
                         for (const auto& [w, a] : f.terms())
                             s.add_term(w, R.mul(c_inv, a));
                         return s;
                     }());
    NcSeries acc = NcSeries::one(R, f.alphabet(), f.trunc_deg());
    NcSeries hp = h;
    for (int d = 1; d <= f.trunc_deg() && !hp.is_zero(); ++d) {
        acc = add(acc, hp);
        hp = mul(hp, h);
    }
    NcSeries out(R, f.alphabet(), f.trunc_deg());
    for (const auto& [w, a] : acc.terms())
        out.add_term(w, R.mul(a, c_inv));
    return out;
}

NcSeries power(const NcSeries& f, std::uint64_t e) {
    NcSeries r = NcSeries::one(f.ring(), f.alphabet(), f.trunc_deg());
    NcSeries base = f;
    while (e > 0) {
        if (e & 1)
            r = mul(r, base);
        e >>= 1;
        if (e > 0)
            base = mul(base, base);
    }
    return r;
}

std::uint64_t coefficient(const NcSeries& f, const Word& w) {
    if (w.size() > f.trunc_deg())
        throw std::out_of_range("coefficient beyond truncation degree");
    return f.coeff_or_zero(w);
}

std::uint64_t pairing(const NcSeries& f, const NcSeries& g) {
    require_compatible(f, g);
    std::uint64_t acc = 0;
    for (const auto& [w, b] : g.terms()) {
        if (w.size() > f.trunc_deg())
            throw std::out_of_range("pairing support beyond truncation degree");
        acc = f.ring().add(acc, f.ring().mul(f.coeff_or_zero(w), b));
    }
    return acc;
}

IntPoly::IntPoly(Alphabet alphabet) : alphabet_(alphabet) {}

IntPoly IntPoly::monomial(Alphabet alphabet, const Word& w, std::int64_t c) {
    IntPoly f(alphabet);
    f.add_term(w, c);
    return f;
}

std::int64_t IntPoly::coeff_or_zero(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void IntPoly::add_term(const Word& w, std::int64_t delta) {
    if (delta == 0)
        return;
    if (w.max_letter() >= alphabet_.size())
        throw std::invalid_argument("letter outside the alphabet");
    auto [it, fresh] = terms_.emplace(w, delta);
    if (!fresh) {
        it->second += delta;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int IntPoly::max_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

IntPoly add(const IntPoly& f, const IntPoly& g) {
    if (!(f.alphabet() == g.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    IntPoly h = f;
    for (const auto& [w, c] : g.terms())
        h.add_term(w, c);
    return h;
}

IntPoly scale(const IntPoly& f, std::int64_t c) {
    IntPoly h(f.alphabet());
    for (const auto& [w, a] : f.terms())
        h.add_term(w, a * c);
    return h;
}

IntPoly homogeneous_part(const IntPoly& f, int degree) {
    IntPoly h(f.alphabet());
    for (const auto& [w, a] : f.terms())
        if (w.size() == degree)
            h.add_term(w, a);
    return h;
}

NcSeries reduce(const IntPoly& f, const ModRing& ring, int trunc_deg) {
    NcSeries s(ring, f.alphabet(), trunc_deg);
    for (const auto& [w, a] : f.terms())
        if (w.size() <= trunc_deg)
            s.add_term(w, ring.reduce_signed(a));
    return s;
}

} // namespace zlab
