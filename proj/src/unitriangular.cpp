#include "zlab/unitriangular.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "zlab/zassenhaus.hpp"

namespace zlab {

namespace {

// Compact matrix kernel for the exhaustive loops: full row-major storage,
// u32 entries, sizes up to 6x6.
constexpr int max_mat_size = 6;

struct Mat {
    int n = 0;
    std::uint32_t mod = 0;
    std::array<std::uint32_t, max_mat_size * max_mat_size> a{};

    std::uint32_t& at(int r, int c) { return a[static_cast<std::size_t>(r * n + c)]; }
    std::uint32_t at(int r, int c) const { return a[static_cast<std::size_t>(r * n + c)]; }
};

Mat mat_identity(int n, std::uint32_t mod) {
    Mat m;
    m.n = n;
    m.mod = mod;
    for (int r = 0; r < n; ++r)
        m.at(r, r) = 1 % mod;
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    Mat z;
    z.n = x.n;
    z.mod = x.mod;
    for (int r = 0; r < x.n; ++r) {
        z.at(r, r) = 1 % x.mod;
        for (int c = r + 1; c < x.n; ++c) {
            std::uint64_t acc = 0;
            for (int k = r; k <= c; ++k)
                acc += static_cast<std::uint64_t>(x.at(r, k)) * y.at(k, c);
            z.at(r, c) = static_cast<std::uint32_t>(acc % x.mod);
        }
    }
    return z;
}

Mat mat_inv(const Mat& x) {
    // row r of the inverse, by increasing column: entry (r,c) is minus the
    // partial product against x, since the product must vanish above the
    // diagonal.
    Mat z = mat_identity(x.n, x.mod);
    for (int r = 0; r < x.n; ++r)
        for (int c = r + 1; c < x.n; ++c) {
            std::uint64_t acc = 0;
            for (int k = r; k < c; ++k)
                acc += static_cast<std::uint64_t>(z.at(r, k)) * x.at(k, c);
            z.at(r, c) = static_cast<std::uint32_t>((x.mod - acc % x.mod) % x.mod);
        }
    return z;
}

Mat mat_pow(Mat base, std::uint64_t e) {
    Mat r = mat_identity(base.n, base.mod);
    while (e > 0) {
        if (e & 1)
            r = mat_mul(r, base);
        e >>= 1;
        if (e > 0)
            base = mat_mul(base, base);
    }
    return r;
}

int floor_log(std::uint64_t p, std::uint64_t x) {
    int e = 0;
    std::uint64_t v = p;
    while (v <= x) {
        v *= p;
        ++e;
    }
    return e;
}

std::uint64_t upow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

} // namespace

FiniteUTGroup::FiniteUTGroup(int dim, std::uint64_t p, int j)
    : dim_(dim), p_(p), j_(j), ring_(p, j + 1) {
    if (dim < 1 || dim + 1 > max_mat_size)
        throw std::invalid_argument("matrix dimension out of range");
    if (j < 0)
        throw std::invalid_argument("modulus exponent must be non-negative");
}

std::uint64_t FiniteUTGroup::order() const {
    std::uint64_t mod = ring_.modulus();
    std::uint64_t ord = 1;
    for (int t = 0; t < entry_count(); ++t) {
        if (ord > (std::uint64_t(1) << 62) / mod)
            throw std::overflow_error("group order does not fit");
        ord *= mod;
    }
    return ord;
}

std::uint64_t FiniteUTGroup::encode(const UnitriMatrix& matrix) const {
    if (matrix.size() != matrix_size() || !(matrix.ring() == ring_))
        throw std::invalid_argument("matrix does not belong to the group");
    std::uint64_t code = 0;
    for (int r = matrix_size() - 1; r >= 0; --r)
        for (int c = matrix_size() - 1; c > r; --c)
            code = code * ring_.modulus() + matrix.at(r, c);
    return code;
}

UnitriMatrix FiniteUTGroup::decode(std::uint64_t code) const {
    UnitriMatrix m(matrix_size(), ring_);
    for (int r = 0; r < matrix_size(); ++r)
        for (int c = r + 1; c < matrix_size(); ++c) {
            m.set(r, c, code % ring_.modulus());
            code /= ring_.modulus();
        }
    return m;
}

std::vector<std::uint64_t> FiniteUTGroup::all_codes() const {
    std::uint64_t ord = order();
    if (ord > max_exhaustive_order)
        throw std::length_error("group order bound exceeded");
    std::vector<std::uint64_t> codes(ord);
    // the packing is a plain mixed-radix counter, so codes are 0..ord-1
    for (std::uint64_t c = 0; c < ord; ++c)
        codes[c] = c;
    return codes;
}

std::vector<UnitriMatrix> FiniteUTGroup::elementary_generators() const {
    std::vector<UnitriMatrix> gens;
    for (int k = 0; k + 1 < matrix_size(); ++k) {
        UnitriMatrix m = identity();
        m.set(k, k + 1, 1);
        gens.push_back(m);
    }
    return gens;
}

namespace {

Mat group_decode(const FiniteUTGroup& g, std::uint64_t code) {
    Mat m = mat_identity(g.matrix_size(), static_cast<std::uint32_t>(g.ring().modulus()));
    for (int r = 0; r < g.matrix_size(); ++r)
        for (int c = r + 1; c < g.matrix_size(); ++c) {
            m.at(r, c) = static_cast<std::uint32_t>(code % g.ring().modulus());
            code /= g.ring().modulus();
        }
    return m;
}

std::uint64_t group_encode(const FiniteUTGroup& g, const Mat& m) {
    std::uint64_t code = 0;
    for (int r = g.matrix_size() - 1; r >= 0; --r)
        for (int c = g.matrix_size() - 1; c > r; --c)
            code = code * g.ring().modulus() + m.at(r, c);
    return code;
}

} // namespace

SubgroupSet::SubgroupSet(FiniteUTGroup parent, std::vector<std::uint64_t> sorted_codes,
                         std::vector<std::uint64_t> generator_codes)
    : parent_(parent), codes_(std::move(sorted_codes)), generators_(std::move(generator_codes)) {
    if (codes_.empty() || codes_.front() != 0 || !std::is_sorted(codes_.begin(), codes_.end()))
        throw std::invalid_argument("element set must be sorted and contain the identity");
}

bool SubgroupSet::contains(std::uint64_t code) const {
    return std::binary_search(codes_.begin(), codes_.end(), code);
}

bool SubgroupSet::is_subset_of(const SubgroupSet& other) const {
    if (!(parent_ == other.parent_))
        throw std::invalid_argument("parents differ");
    return std::includes(other.codes_.begin(), other.codes_.end(),
                         codes_.begin(), codes_.end());
}

bool SubgroupSet::verify_closed() const {
    std::vector<Mat> mats;
    mats.reserve(codes_.size());
    for (std::uint64_t c : codes_)
        mats.push_back(group_decode(parent_, c));
    for (const Mat& m : mats)
        if (!contains(group_encode(parent_, mat_inv(m))))
            return false;
    for (const Mat& x : mats)
        for (const Mat& y : mats)
            if (!contains(group_encode(parent_, mat_mul(x, y))))
                return false;
    return true;
}

SubgroupSet closure_codes(const FiniteUTGroup& parent, std::vector<std::uint64_t> generator_codes) {
    std::sort(generator_codes.begin(), generator_codes.end());
    generator_codes.erase(std::unique(generator_codes.begin(), generator_codes.end()),
                          generator_codes.end());
    std::vector<Mat> gens;
    gens.reserve(generator_codes.size());
    for (std::uint64_t c : generator_codes)
        gens.push_back(group_decode(parent, c));

    std::unordered_set<std::uint64_t> seen{0};
    std::queue<std::uint64_t> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        Mat x = group_decode(parent, frontier.front());
        frontier.pop();
        for (const Mat& g : gens) {
            std::uint64_t next = group_encode(parent, mat_mul(x, g));
            if (seen.insert(next).second) {
                if (seen.size() > max_exhaustive_order)
                    throw std::length_error("subgroup size bound exceeded");
                frontier.push(next);
            }
        }
    }
    std::vector<std::uint64_t> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    return SubgroupSet(parent, std::move(codes), std::move(generator_codes));
}

SubgroupSet closure(const FiniteUTGroup& parent, const std::vector<UnitriMatrix>& generators) {
    std::vector<std::uint64_t> codes;
    codes.reserve(generators.size());
    for (const UnitriMatrix& g : generators)
        codes.push_back(parent.encode(g));
    return closure_codes(parent, std::move(codes));
}

SubgroupSet full_group(const FiniteUTGroup& parent) {
    std::vector<std::uint64_t> gens;
    for (const UnitriMatrix& g : parent.elementary_generators())
        gens.push_back(parent.encode(g));
    return SubgroupSet(parent, parent.all_codes(), std::move(gens));
}

SubgroupSet commutator_subgroup(const SubgroupSet& a, const SubgroupSet& b) {
    if (!(a.parent() == b.parent()))
        throw std::invalid_argument("parents differ");
    const FiniteUTGroup& g = a.parent();
    std::vector<Mat> amats, ainv, bmats, binv;
    amats.reserve(a.codes().size());
    ainv.reserve(a.codes().size());
    for (std::uint64_t c : a.codes()) {
        amats.push_back(group_decode(g, c));
        ainv.push_back(mat_inv(amats.back()));
    }
    bmats.reserve(b.codes().size());
    binv.reserve(b.codes().size());
    for (std::uint64_t c : b.codes()) {
        bmats.push_back(group_decode(g, c));
        binv.push_back(mat_inv(bmats.back()));
    }
    std::unordered_set<std::uint64_t> gens;
    for (std::size_t x = 0; x < amats.size(); ++x)
        for (std::size_t y = 0; y < bmats.size(); ++y) {
            Mat comm = mat_mul(mat_mul(ainv[x], binv[y]), mat_mul(amats[x], bmats[y]));
            gens.insert(group_encode(g, comm));
        }
    return closure_codes(g, {gens.begin(), gens.end()});
}

SubgroupSet power_subgroup(const SubgroupSet& a, std::uint64_t e) {
    if (e == 0)
        throw std::invalid_argument("power must be positive");
    if (e == 1)
        return a;
    const FiniteUTGroup& g = a.parent();
    std::unordered_set<std::uint64_t> gens;
    for (std::uint64_t c : a.codes())
        gens.insert(group_encode(g, mat_pow(group_decode(g, c), e)));
    return closure_codes(g, {gens.begin(), gens.end()});
}

namespace {

std::mutex central_mutex;
std::map<std::array<std::uint64_t, 4>, SubgroupSet> central_cache;

} // namespace

SubgroupSet lower_central(const FiniteUTGroup& group, int k) {
    if (k < 1)
        throw std::invalid_argument("series index must be positive");
    std::array<std::uint64_t, 4> key{static_cast<std::uint64_t>(group.dim()), group.p(),
                                     static_cast<std::uint64_t>(group.j()),
                                     static_cast<std::uint64_t>(k)};
    {
        std::lock_guard<std::mutex> lock(central_mutex);
        auto it = central_cache.find(key);
        if (it != central_cache.end())
            return it->second;
    }
    SubgroupSet result = k == 1 ? full_group(group)
                                : commutator_subgroup(full_group(group),
                                                      lower_central(group, k - 1));
    std::lock_guard<std::mutex> lock(central_mutex);
    return central_cache.try_emplace(key, std::move(result)).first->second;
}

namespace {

// j_n(i) extended by zero beyond n; every i p^0 >= n there.
int jump_exponent_ext(int n, int i, std::uint64_t p) {
    return i >= n ? 0 : jump_exponent(n, i, p);
}

} // namespace

SubgroupSet zassenhaus_product(const FiniteUTGroup& group, int n) {
    if (n < 1)
        throw std::invalid_argument("level must be positive");
    std::vector<std::uint64_t> gens;
    for (int i = 1; i <= std::min(n, group.dim()); ++i) {
        SubgroupSet term =
            power_subgroup(lower_central(group, i), upow(group.p(), jump_exponent(n, i, group.p())));
        gens.insert(gens.end(), term.codes().begin(), term.codes().end());
    }
    if (gens.empty())
        gens.push_back(0);
    return closure_codes(group, std::move(gens));
}

SubgroupSet zassenhaus_inductive(const FiniteUTGroup& group, int n) {
    if (n < 1)
        throw std::invalid_argument("level must be positive");
    std::vector<SubgroupSet> level;
    level.reserve(static_cast<std::size_t>(n) + 1);
    level.push_back(full_group(group)); // placeholder for index 0
    level.push_back(full_group(group));
    for (int k = 2; k <= n; ++k) {
        int up = (k + static_cast<int>(group.p()) - 1) / static_cast<int>(group.p());
        std::vector<std::uint64_t> gens;
        SubgroupSet powers = power_subgroup(level[static_cast<std::size_t>(up)], group.p());
        gens.insert(gens.end(), powers.codes().begin(), powers.codes().end());
        for (int a = 1; a + a <= k; ++a) {
            SubgroupSet comm = commutator_subgroup(level[static_cast<std::size_t>(a)],
                                                   level[static_cast<std::size_t>(k - a)]);
            gens.insert(gens.end(), comm.codes().begin(), comm.codes().end());
        }
        level.push_back(closure_codes(group, std::move(gens)));
    }
    return level[static_cast<std::size_t>(n)];
}

namespace {

// Codes of all matrices whose entries vanish on the first depth-1
// superdiagonals; the closed form of the lower central terms.
std::vector<std::uint64_t> superdiagonal_zero_codes(const FiniteUTGroup& g, int depth) {
    std::vector<std::size_t> free_positions; // position in the mixed-radix packing
    std::size_t pos = 0;
    for (int r = 0; r < g.matrix_size(); ++r)
        for (int c = r + 1; c < g.matrix_size(); ++c, ++pos)
            if (c - r >= depth)
                free_positions.push_back(pos);
    std::uint64_t mod = g.ring().modulus();
    std::vector<std::uint64_t> codes;
    codes.push_back(0);
    for (std::size_t fp : free_positions) {
        std::uint64_t place = 1;
        for (std::size_t t = 0; t < fp; ++t)
            place *= mod;
        std::vector<std::uint64_t> next;
        next.reserve(codes.size() * mod);
        for (std::uint64_t base : codes)
            for (std::uint64_t v = 0; v < mod; ++v)
                next.push_back(base + v * place);
        codes = std::move(next);
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

// {I + c p^j E_(1,dim+1) : c in 0..p-1}
std::vector<std::uint64_t> center_line_codes(const FiniteUTGroup& g) {
    // packing position of the corner entry (0, dim)
    std::size_t corner = 0;
    {
        std::size_t pos = 0;
        for (int r = 0; r < g.matrix_size(); ++r)
            for (int c = r + 1; c < g.matrix_size(); ++c, ++pos)
                if (r == 0 && c == g.matrix_size() - 1)
                    corner = pos;
    }
    std::uint64_t place = 1;
    for (std::size_t t = 0; t < corner; ++t)
        place *= g.ring().modulus();
    std::uint64_t pj = upow(g.p(), g.j());
    std::vector<std::uint64_t> codes;
    for (std::uint64_t c = 0; c < g.p(); ++c)
        codes.push_back(c * pj % g.ring().modulus() * place);
    std::sort(codes.begin(), codes.end());
    return codes;
}

} // namespace

VerifyReport verify_ut_powers(std::uint64_t p, int i_max, int j_max, int n_max,
                              std::uint64_t order_cap) {
    VerifyReport report;
    auto note_violation = [&](const std::string& what) { report.violations.push_back(what); };

    for (int i = 1; i <= i_max; ++i)
        for (int j = 0; j <= j_max; ++j) {
            FiniteUTGroup g(i, p, j);
            if (g.order() > order_cap) {
                report.skipped.push_back("U_" + std::to_string(i) + "(Z/" +
                                         std::to_string(g.ring().modulus()) + ")");
                continue;
            }
            std::string gname = "U_" + std::to_string(i) + "(Z/" +
                                std::to_string(g.ring().modulus()) + ")";

            // lower central terms match the superdiagonal description
            for (int d = 1; d <= i + 1; ++d) {
                ++report.checks;
                if (lower_central(g, d).codes() != superdiagonal_zero_codes(g, d))
                    note_violation(gname + ": central term " + std::to_string(d) +
                                   " differs from the superdiagonal description");
            }

            std::vector<std::uint64_t> center = center_line_codes(g);
            for (int ip = 1; ip <= i; ++ip) {
                SubgroupSet term = lower_central(g, ip);
                int log_ratio = floor_log(p, static_cast<std::uint64_t>(i / ip));
                int jp_hi = j + 2 + log_ratio;
                for (int jp = 0; jp <= jp_hi; ++jp) {
                    SubgroupSet pw = power_subgroup(term, upow(p, jp));
                    ++report.checks;
                    bool trivial = pw.order() == 1;
                    bool trivial_pred = jp >= j + 1 + log_ratio;
                    if (trivial != trivial_pred)
                        note_violation(gname + ": triviality of powers fails at i'=" +
                                       std::to_string(ip) + " j'=" + std::to_string(jp));
                    bool center_eq = pw.codes() == center;
                    bool center_eq_pred = false;
                    for (int e = 0; ; ++e) {
                        std::uint64_t scaled = static_cast<std::uint64_t>(ip) * upow(p, e);
                        if (scaled > static_cast<std::uint64_t>(i))
                            break;
                        if (scaled == static_cast<std::uint64_t>(i) && jp == j + e)
                            center_eq_pred = true;
                    }
                    if (center_eq != center_eq_pred)
                        note_violation(gname + ": center-line equality fails at i'=" +
                                       std::to_string(ip) + " j'=" + std::to_string(jp));
                    bool center_le = std::includes(center.begin(), center.end(),
                                                   pw.codes().begin(), pw.codes().end());
                    bool center_le_pred = static_cast<std::uint64_t>(ip) * upow(p, jp) >=
                                          static_cast<std::uint64_t>(i) * upow(p, j);
                    if (center_le != center_le_pred)
                        note_violation(gname + ": center-line inclusion fails at i'=" +
                                       std::to_string(ip) + " j'=" + std::to_string(jp));
                }
            }
        }

    // level subgroup is the central Z/p exactly at the jump lengths
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> jumps = jump_set(n, p);
        for (int i = 1; i <= std::min(i_max, n); ++i) {
            int j = jump_exponent(n, i, p);
            FiniteUTGroup g(i, p, j);
            if (g.order() > order_cap) {
                report.skipped.push_back("U_" + std::to_string(i) + "(Z/" +
                                         std::to_string(g.ring().modulus()) + ") at level " +
                                         std::to_string(n));
                continue;
            }
            ++report.checks;
            SubgroupSet z = zassenhaus_product(g, n);
            bool is_center = z.codes() == center_line_codes(g);
            bool is_jump = std::find(jumps.begin(), jumps.end(), i) != jumps.end();
            if (is_center != is_jump)
                note_violation("level " + std::to_string(n) + ", U_" + std::to_string(i) +
                               "(Z/" + std::to_string(g.ring().modulus()) +
                               "): central Z/p criterion fails");
        }
    }
    return report;
}

VerifyReport verify_group_identities(const FiniteUTGroup& group, int n) {
    VerifyReport report;
    const std::uint64_t p = group.p();
    auto note_violation = [&](const std::string& what) { report.violations.push_back(what); };
    std::string prefix = "U_" + std::to_string(group.dim()) + "(Z/" +
                         std::to_string(group.ring().modulus()) + "), n=" + std::to_string(n) + ": ";

    SubgroupSet z = zassenhaus_product(group, n);

    ++report.checks;
    if (!(zassenhaus_inductive(group, n) == z))
        note_violation(prefix + "inductive and product definitions differ");

    // product of shifted power terms equals [G, G_(n)]
    SubgroupSet rhs = commutator_subgroup(full_group(group), z);
    std::vector<std::uint64_t> gens;
    for (int i = 1; i <= group.dim(); ++i) {
        SubgroupSet term = power_subgroup(lower_central(group, i + 1),
                                          upow(p, jump_exponent_ext(n, i, p)));
        gens.insert(gens.end(), term.codes().begin(), term.codes().end());
    }
    if (gens.empty())
        gens.push_back(0);
    ++report.checks;
    if (!(closure_codes(group, std::move(gens)) == rhs))
        note_violation(prefix + "shifted power product differs from [G, G_(n)]");

    // (G_(n))^p [G, G_(n)] absorbs level np and the non-jump power terms
    std::vector<std::uint64_t> frame_gens = power_subgroup(z, p).codes();
    frame_gens.insert(frame_gens.end(), rhs.codes().begin(), rhs.codes().end());
    SubgroupSet frame = closure_codes(group, std::move(frame_gens));

    ++report.checks;
    if (!zassenhaus_product(group, n * static_cast<int>(p)).is_subset_of(frame))
        note_violation(prefix + "level np is not inside (G_(n))^p [G, G_(n)]");

    std::vector<int> jumps = jump_set(n, p);
    for (int i = 1; i <= n; ++i) {
        if (std::find(jumps.begin(), jumps.end(), i) != jumps.end())
            continue;
        if (i > group.dim())
            break;
        ++report.checks;
        SubgroupSet term = power_subgroup(lower_central(group, i),
                                          upow(p, jump_exponent(n, i, p)));
        if (!term.is_subset_of(frame))
            note_violation(prefix + "non-jump power term at i=" + std::to_string(i) +
                           " escapes (G_(n))^p [G, G_(n)]");
    }
    return report;
}

namespace {

// Just enough unsigned bignum for exact binomial coefficients.
struct BigUint {
    std::vector<std::uint32_t> limbs; // little endian, no leading zeros

    static BigUint one() { return BigUint{{1}}; }

    void mul_small(std::uint64_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            std::uint64_t v = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(v & 0xffffffffu);
            carry = v >> 32;
        }
        while (carry > 0) {
            limbs.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }

    void div_small(std::uint64_t d) { // exact in our use
        std::uint64_t rem = 0;
        for (std::size_t t = limbs.size(); t-- > 0;) {
            std::uint64_t v = (rem << 32) | limbs[t];
            limbs[t] = static_cast<std::uint32_t>(v / d);
            rem = v % d;
        }
        while (!limbs.empty() && limbs.back() == 0)
            limbs.pop_back();
    }

    std::uint64_t mod_small(std::uint64_t m) const {
        std::uint64_t rem = 0;
        for (std::size_t t = limbs.size(); t-- > 0;)
            rem = ((rem << 32) | limbs[t]) % m;
        return rem;
    }
};

} // namespace

bool binomial_equiv_check(std::uint64_t p, int j, int j_prime, int t) {
    if (p < 2 || j < 0 || j_prime < 0 || t < 1)
        throw std::invalid_argument("arguments out of range");
    std::uint64_t top = upow(p, j_prime);
    if (static_cast<std::uint64_t>(t) > top || t > 500)
        throw std::invalid_argument("t exceeds min(p^j', 500)");
    std::uint64_t pj = upow(p, j);

    // (a) p^j divides C(p^j', l) for l = 1..t, on exact binomials
    bool all_divisible = true;
    std::uint64_t divisor_at_power = 0;
    int log_t = floor_log(p, static_cast<std::uint64_t>(t));
    std::uint64_t l_star = upow(p, log_t);
    BigUint binom = BigUint::one();
    for (std::uint64_t l = 1; l <= static_cast<std::uint64_t>(t); ++l) {
        binom.mul_small(top - l + 1);
        binom.div_small(l);
        if (binom.mod_small(pj) != 0)
            all_divisible = false;
        if (l == l_star)
            divisor_at_power = binom.mod_small(pj);
    }
    bool cond_a = all_divisible;
    bool cond_b = divisor_at_power == 0;
    bool cond_c = j_prime >= j + log_t;
    return cond_a == cond_b && cond_b == cond_c;
}

} // namespace zlab
