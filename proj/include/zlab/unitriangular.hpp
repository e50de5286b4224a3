#ifndef ZLAB_UNITRIANGULAR_HPP
#define ZLAB_UNITRIANGULAR_HPP

#include <string>
#include <vector>

#include "zlab/magnus.hpp"

namespace zlab {

// Largest element set an exhaustive subgroup computation will touch.
inline constexpr std::uint64_t max_exhaustive_order = 1000000;

// The finite group of unitriangular (dim+1) x (dim+1) matrices over
// Z/p^(j+1). Elements are encoded as base-p^(j+1) packings of the
// above-diagonal entries, so sets of elements are sets of integers.
class FiniteUTGroup {
public:
    FiniteUTGroup(int dim, std::uint64_t p, int j);

    int dim() const { return dim_; }
    std::uint64_t p() const { return p_; }
    int j() const { return j_; }
    ModRing ring() const { return ring_; }
    int matrix_size() const { return dim_ + 1; }
    int entry_count() const { return dim_ * (dim_ + 1) / 2; }

    std::uint64_t order() const; // modulus^entry_count, checked to fit

    std::uint64_t encode(const UnitriMatrix& matrix) const;
    UnitriMatrix decode(std::uint64_t code) const;
    UnitriMatrix identity() const { return UnitriMatrix(matrix_size(), ring_); }

    // All element codes, ascending. Requires order <= max_exhaustive_order.
    std::vector<std::uint64_t> all_codes() const;

    // The elementary generators I + E_{k,k+1}; they generate the group.
    std::vector<UnitriMatrix> elementary_generators() const;

    bool operator==(const FiniteUTGroup&) const = default;

private:
    int dim_;
    std::uint64_t p_;
    int j_;
    ModRing ring_;
};

// An explicit subgroup: the sorted codes of its elements plus the
// generator codes it was built from. Closed under product and inverse by
// construction (closure does the completing).
class SubgroupSet {
public:
    SubgroupSet(FiniteUTGroup parent, std::vector<std::uint64_t> sorted_codes,
                std::vector<std::uint64_t> generator_codes);

    const FiniteUTGroup& parent() const { return parent_; }
    const std::vector<std::uint64_t>& codes() const { return codes_; }
    const std::vector<std::uint64_t>& generator_codes() const { return generators_; }
    std::uint64_t order() const { return codes_.size(); }

    bool contains(std::uint64_t code) const;
    bool contains(const UnitriMatrix& m) const { return contains(parent_.encode(m)); }
    bool is_subset_of(const SubgroupSet& other) const;

    // Full closure property, by checking all products. Quadratic; meant
    // for tests.
    bool verify_closed() const;

    bool operator==(const SubgroupSet& o) const {
        return parent_ == o.parent_ && codes_ == o.codes_;
    }

private:
    FiniteUTGroup parent_;
    std::vector<std::uint64_t> codes_;
    std::vector<std::uint64_t> generators_;
};

// Breadth-first closure of the generators under multiplication; always
// contains the identity.
SubgroupSet closure(const FiniteUTGroup& parent, const std::vector<UnitriMatrix>& generators);
SubgroupSet closure_codes(const FiniteUTGroup& parent, std::vector<std::uint64_t> generator_codes);

// The whole group as a SubgroupSet.
SubgroupSet full_group(const FiniteUTGroup& parent);

// Subgroup generated by all commutators [a, b] = a^{-1} b^{-1} a b with
// a in A and b in B. Every pair of elements is enumerated.
SubgroupSet commutator_subgroup(const SubgroupSet& a, const SubgroupSet& b);

// Subgroup generated by the e-th powers of all elements of A.
SubgroupSet power_subgroup(const SubgroupSet& a, std::uint64_t e);

// The k-th term of the lower central series (k = 1 is the whole group).
// Memoized per (group, k); these recur throughout the verifications.
SubgroupSet lower_central(const FiniteUTGroup& group, int k);

// Level-n filtration subgroup, as the closure of the union over i of the
// p^(j_n(i))-th powers of the i-th lower central term.
SubgroupSet zassenhaus_product(const FiniteUTGroup& group, int n);

// The same subgroup by the inductive rule: level 1 is the group, and
// level n is generated by the p-th powers of level ceil(n/p) together
// with the commutators of level pairs summing to n. Must agree with
// zassenhaus_product.
SubgroupSet zassenhaus_inductive(const FiniteUTGroup& group, int n);

struct VerifyReport {
    long checks = 0;
    std::vector<std::string> violations;
    std::vector<std::string> skipped; // grid points over the order cap

    bool passed() const { return violations.empty(); }
};

// Exhaustive verification of the power-subgroup characterizations over
// the (i, j, i', j') grid, and of the "level subgroup is a central Z/p"
// criterion for every n <= n_max and i <= i_max at the matching modulus.
// Groups larger than order_cap are skipped and reported as such.
VerifyReport verify_ut_powers(std::uint64_t p, int i_max, int j_max, int n_max,
                              std::uint64_t order_cap = 4096);

// Checks, on one group: the two filtration definitions agree for this n;
// the product over i of the p^(j_n(i))-th powers of the (i+1)-st lower
// central terms equals [G, G_(n)]; level np sits inside (G_(n))^p [G, G_(n)];
// and for every non-jump i the p^(j_n(i))-th powers of the i-th term
// vanish into (G_(n))^p [G, G_(n)].
VerifyReport verify_group_identities(const FiniteUTGroup& group, int n);

// Cross-checks three equivalent statements about p-divisibility of the
// binomial coefficients C(p^j', l) for l = 1..t: divisibility by p^j of
// all of them, of the single one at l = p^floor(log_p t), and the
// inequality j' >= j + floor(log_p t). The first two are evaluated on
// exact big-integer binomials. Returns whether the three agree.
bool binomial_equiv_check(std::uint64_t p, int j, int j_prime, int t);

} // namespace zlab

#endif
