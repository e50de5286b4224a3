#include "zlab/magnus.hpp"

#include <stdexcept>

#include "zlab/zassenhaus.hpp"

namespace zlab {

GroupWord GroupWord::generator(Alphabet alphabet, Letter x) {
    GroupWord g(alphabet);
    g.push_reduced(x, 1);
    return g;
}

GroupWord GroupWord::from_factors(Alphabet alphabet,
                                  std::span<const std::pair<Letter, int>> factors) {
    GroupWord g(alphabet);
    for (auto [x, e] : factors) {
        if (e == 0)
            continue;
        int step = e > 0 ? 1 : -1;
        for (int t = 0; t != e; t += step)
            g.push_reduced(x, step);
    }
    return g;
}

void GroupWord::push_reduced(Letter x, int e) {
    if (x >= alphabet_.size())
        throw std::invalid_argument("generator outside the alphabet");
    if (!factors_.empty() && factors_.back().first == x &&
        factors_.back().second == -e) {
        factors_.pop_back();
        return;
    }
    if (std::ssize(factors_) >= max_group_word_factors)
        throw std::length_error("group word factor bound exceeded");
    factors_.emplace_back(x, e);
}

GroupWord GroupWord::inverse() const {
    GroupWord g(alphabet_);
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
        g.push_reduced(it->first, -it->second);
    return g;
}

GroupWord operator*(const GroupWord& g, const GroupWord& h) {
    if (!(g.alphabet() == h.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    GroupWord r = g;
    for (auto [x, e] : h.factors_)
        r.push_reduced(x, e);
    return r;
}

GroupWord commutator(const GroupWord& g, const GroupWord& h) {
    return g.inverse() * h.inverse() * g * h;
}

namespace {

// 1 + x, or its inverse 1 - x + x^2 - ... when e = -1.
NcSeries generator_series(Letter x, int e, const ModRing& ring,
                          const Alphabet& alphabet, int trunc_deg) {
    NcSeries f = NcSeries::one(ring, alphabet, trunc_deg);
    if (e > 0) {
        if (trunc_deg >= 1)
            f.add_term(Word{}.appended(x), 1);
        return f;
    }
    Word w;
    for (int d = 1; d <= trunc_deg; ++d) {
        w = w.appended(x);
        f.add_term(w, d % 2 == 1 ? ring.neg(1) : 1);
    }
    return f;
}

} // namespace

NcSeries magnus_expand(const GroupWord& g, const ModRing& ring, int trunc_deg) {
    NcSeries f = NcSeries::one(ring, g.alphabet(), trunc_deg);
    for (auto [x, e] : g.factors())
        f = mul(f, generator_series(x, e, ring, g.alphabet(), trunc_deg));
    return f;
}

std::uint64_t magnus_coefficient(const GroupWord& g, const Word& w, const ModRing& ring) {
    return magnus_expand(g, ring, w.size()).coeff_or_zero(w);
}

GroupWord commutator_word(const Word& w, const Alphabet& alphabet) {
    if (!is_lyndon(w))
        throw std::invalid_argument("commutator word needs a Lyndon word");
    if (w.size() == 1)
        return GroupWord::generator(alphabet, w[0]);
    auto [u, v] = standard_factorization(w);
    return commutator(commutator_word(u, alphabet), commutator_word(v, alphabet));
}

NcSeries commutator_series(const Word& w, const ModRing& ring,
                           const Alphabet& alphabet, int trunc_deg) {
    if (!is_lyndon(w))
        throw std::invalid_argument("commutator series needs a Lyndon word");
    if (w.size() == 1) {
        NcSeries f = NcSeries::one(ring, alphabet, trunc_deg);
        if (trunc_deg >= 1)
            f.add_term(Word{}.appended(w[0]), 1);
        return f;
    }
    auto [u, v] = standard_factorization(w);
    NcSeries a = commutator_series(u, ring, alphabet, trunc_deg);
    NcSeries b = commutator_series(v, ring, alphabet, trunc_deg);
    return mul(mul(invert(a), invert(b)), mul(a, b));
}

NcSeries commutator_power_series(const Word& w, int n, std::uint64_t p,
                                 const Alphabet& alphabet, int trunc_deg) {
    if (!is_lyndon(w))
        throw std::invalid_argument("needs a Lyndon word");
    if (w.size() > n)
        throw std::invalid_argument("word longer than the level");
    ModRing ring(p, jump_exponent(n, 1, p) + 1);
    int j = jump_exponent(n, w.size(), p);
    std::uint64_t e = 1;
    for (int t = 0; t < j; ++t)
        e *= p;
    return power(commutator_series(w, ring, alphabet, trunc_deg), e);
}

UnitriMatrix::UnitriMatrix(int size, ModRing ring)
    : n_(size), ring_(ring),
      upper_(static_cast<std::size_t>(size) * (size - 1) / 2, 0) {
    if (size < 1)
        throw std::invalid_argument("matrix size must be positive");
}

std::size_t UnitriMatrix::idx(int r, int c) const {
    // row r holds n-1-r stored entries, columns r+1..n-1
    std::size_t before = static_cast<std::size_t>(r) * (2 * n_ - r - 1) / 2;
    return before + static_cast<std::size_t>(c - r - 1);
}

std::uint64_t UnitriMatrix::at(int r, int c) const {
    if (r < 0 || c < 0 || r >= n_ || c >= n_)
        throw std::out_of_range("matrix index out of range");
    if (r == c)
        return 1;
    if (r > c)
        return 0;
    return upper_[idx(r, c)];
}

void UnitriMatrix::set(int r, int c, std::uint64_t v) {
    if (r < 0 || c >= n_ || r >= c)
        throw std::out_of_range("only entries above the diagonal are stored");
    upper_[idx(r, c)] = ring_.reduce(v);
}

UnitriMatrix UnitriMatrix::operator*(const UnitriMatrix& o) const {
    if (n_ != o.n_ || !(ring_ == o.ring_))
        throw std::invalid_argument("matrix shape or ring mismatch");
    UnitriMatrix out(n_, ring_);
    for (int r = 0; r < n_; ++r)
        for (int c = r + 1; c < n_; ++c) {
            std::uint64_t acc = 0;
            for (int k = r; k <= c; ++k)
                acc = ring_.add(acc, ring_.mul(at(r, k), o.at(k, c)));
            out.set(r, c, acc);
        }
    return out;
}

UnitriMatrix UnitriMatrix::inverse() const {
    // (I + N)^{-1} = I - N + N^2 - ...; N is strictly upper, so the sum
    // stops after n-1 terms.
    auto entry = [&](const std::vector<std::uint64_t>& m, int r, int c) -> std::uint64_t {
        return m[static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(c)];
    };
    std::vector<std::uint64_t> nil(static_cast<std::size_t>(n_) * n_, 0);
    for (int r = 0; r < n_; ++r)
        for (int c = r + 1; c < n_; ++c)
            nil[static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(c)] = at(r, c);
    std::vector<std::uint64_t> pw = nil;
    UnitriMatrix out(n_, ring_);
    int sign = -1;
    for (int k = 1; k < n_; ++k) {
        for (int r = 0; r < n_; ++r)
            for (int c = r + 1; c < n_; ++c) {
                std::uint64_t v = entry(pw, r, c);
                if (v == 0)
                    continue;
                std::uint64_t cur = out.at(r, c);
                out.set(r, c, sign < 0 ? ring_.sub(cur, v) : ring_.add(cur, v));
            }
        if (k + 1 < n_) {
            std::vector<std::uint64_t> nx(static_cast<std::size_t>(n_) * n_, 0);
            for (int r = 0; r < n_; ++r)
                for (int c = r + 1; c < n_; ++c) {
                    std::uint64_t acc = 0;
                    for (int m = r + 1; m < c; ++m)
                        acc = ring_.add(acc, ring_.mul(entry(pw, r, m), entry(nil, m, c)));
                    nx[static_cast<std::size_t>(r) * n_ + static_cast<std::size_t>(c)] = acc;
                }
            pw = std::move(nx);
            sign = -sign;
        }
    }
    return out;
}

UnitriMatrix UnitriMatrix::pow(std::uint64_t e) const {
    UnitriMatrix r(n_, ring_);
    UnitriMatrix base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return r;
}

UnitriMatrix magnus_representation(const Word& w, const GroupWord& g,
                                   std::uint64_t p, int j) {
    ModRing ring(p, j + 1);
    NcSeries f = magnus_expand(g, ring, w.size());
    UnitriMatrix out(w.size() + 1, ring);
    for (int k = 0; k < out.size(); ++k)
        for (int l = k + 1; l < out.size(); ++l)
            out.set(k, l, f.coeff_or_zero(w.slice(k, l)));
    return out;
}

bool check_coefficient_bounds(const GroupWord& g, int n, std::uint64_t p) {
    if (n < 1)
        throw std::invalid_argument("level must be positive");
    int precision = jump_exponent(n, 1, p) + 1;
    ModRing ring(p, precision);
    NcSeries f = magnus_expand(g, ring, n);
    for (const auto& [w, c] : f.terms()) {
        if (w.empty())
            continue;
        int j = std::min(jump_exponent(n, w.size(), p), precision);
        std::uint64_t q = 1;
        for (int t = 0; t < j; ++t)
            q *= p;
        if (c % q != 0)
            return false;
    }
    return true;
}

} // namespace zlab
