#include <doctest.h>

#include <random>

#include "zlab/unitriangular.hpp"
#include "zlab/zassenhaus.hpp"

using namespace zlab;

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

UnitriMatrix corner_element(const FiniteUTGroup& g, std::uint64_t value) {
    UnitriMatrix m = g.identity();
    m.set(0, g.matrix_size() - 1, value);
    return m;
}

} // namespace

TEST_SUITE_BEGIN("unitriangular");

TEST_CASE("group plumbing") {
    FiniteUTGroup g(2, 2, 0);
    CHECK(g.order() == 8);
    CHECK(g.entry_count() == 3);
    CHECK(FiniteUTGroup(3, 2, 1).order() == 4096);
    CHECK(FiniteUTGroup(2, 3, 1).order() == 729);

    // encode and decode are inverse to each other
    for (std::uint64_t code : g.all_codes())
        CHECK(g.encode(g.decode(code)) == code);

    // elementary generators really generate
    CHECK(closure(g, g.elementary_generators()).order() == g.order());
}

TEST_CASE("closure") {
    FiniteUTGroup g(2, 2, 0);
    CHECK(closure(g, {}).order() == 1);
    std::vector<UnitriMatrix> everything;
    for (std::uint64_t code : g.all_codes())
        everything.push_back(g.decode(code));
    CHECK(closure(g, everything).order() == 8);
    CHECK(closure(g, {corner_element(g, 1)}).order() == 2);
}

TEST_CASE("commutator subgroups") {
    FiniteUTGroup g(2, 2, 0);
    SubgroupSet full = full_group(g);
    SubgroupSet derived = commutator_subgroup(full, full);
    CHECK(derived.order() == 2);
    CHECK(derived.contains(corner_element(g, 1)));

    SubgroupSet trivial = closure(g, {});
    CHECK(commutator_subgroup(full, trivial).order() == 1);

    FiniteUTGroup g3(3, 2, 0);
    SubgroupSet third = commutator_subgroup(full_group(g3), lower_central(g3, 2));
    CHECK(third == lower_central(g3, 3));
    CHECK(third.order() == 2);
    CHECK(third.contains(corner_element(g3, 1)));
}

TEST_CASE("power subgroups") {
    FiniteUTGroup g(2, 2, 0);
    SubgroupSet full = full_group(g);
    SubgroupSet squares = power_subgroup(full, 2);
    CHECK(squares.order() == 2);
    CHECK(squares.contains(corner_element(g, 1)));
    CHECK(power_subgroup(full, 4).order() == 1);
    CHECK(power_subgroup(full, 1) == full);
}

TEST_CASE("lower central series") {
    FiniteUTGroup g(2, 2, 0);
    CHECK(lower_central(g, 1) == full_group(g));
    SubgroupSet second = lower_central(g, 2);
    CHECK(second.order() == 2); // only the corner entry survives
    CHECK(second.contains(corner_element(g, 1)));
    CHECK(lower_central(g, 3).order() == 1);

    // orders follow the superdiagonal pattern for a larger modulus
    FiniteUTGroup g9(2, 3, 1);
    CHECK(lower_central(g9, 1).order() == 729);
    CHECK(lower_central(g9, 2).order() == 9);
    CHECK(lower_central(g9, 3).order() == 1);

    FiniteUTGroup g3(3, 2, 0);
    CHECK(lower_central(g3, 2).order() == 8);
    CHECK(lower_central(g3, 3).order() == 2);
    CHECK(lower_central(g3, 4).order() == 1);
}

TEST_CASE("level subgroups by both definitions") {
    FiniteUTGroup g(2, 2, 0);
    SubgroupSet z = zassenhaus_product(g, 2);
    CHECK(z.order() == 2);
    CHECK(z.contains(corner_element(g, 1)));
    CHECK(zassenhaus_inductive(g, 2) == z);
    CHECK(zassenhaus_product(g, 1) == full_group(g));

    // one-dimensional case: the level subgroup is the p-th power line
    for (std::uint64_t p : {2ull, 3ull}) {
        for (int n = 2; n <= 4; ++n) {
            int j = jump_exponent(n, 1, p);
            FiniteUTGroup line(1, p, j);
            SubgroupSet z1 = zassenhaus_product(line, n);
            CHECK(z1.order() == p);
            CHECK(z1.contains(corner_element(line, upow(p, j))));
        }
    }
}

TEST_CASE("both definitions agree across a small grid") {
    std::vector<FiniteUTGroup> groups{FiniteUTGroup(2, 2, 0), FiniteUTGroup(2, 2, 1),
                                      FiniteUTGroup(3, 2, 0), FiniteUTGroup(2, 3, 0),
                                      FiniteUTGroup(2, 3, 1)};
    for (const FiniteUTGroup& g : groups) {
        int n_max = 2 * static_cast<int>(g.p());
        for (int n = 1; n <= n_max; ++n)
            CHECK(zassenhaus_inductive(g, n) == zassenhaus_product(g, n));
    }
}

TEST_CASE("filtration is monotone with exponent-p quotients") {
    std::vector<FiniteUTGroup> groups{FiniteUTGroup(2, 2, 1), FiniteUTGroup(3, 2, 0),
                                      FiniteUTGroup(2, 3, 0)};
    for (const FiniteUTGroup& g : groups) {
        SubgroupSet prev = zassenhaus_product(g, 1);
        for (int n = 2; n <= 6; ++n) {
            SubgroupSet cur = zassenhaus_product(g, n);
            CHECK(cur.is_subset_of(prev));
            // every element of the previous level has its p-th power in
            // the current one
            for (std::uint64_t code : prev.codes())
                CHECK(cur.contains(g.encode(g.decode(code).pow(g.p()))));
            prev = cur;
        }
    }
}

TEST_CASE("produced subgroups are closed and normal") {
    std::mt19937 rng(404);
    FiniteUTGroup g(3, 2, 0);
    SubgroupSet full = full_group(g);
    std::vector<SubgroupSet> produced{lower_central(g, 2), power_subgroup(full, 2),
                                      zassenhaus_product(g, 3),
                                      commutator_subgroup(full, lower_central(g, 2))};
    for (const SubgroupSet& s : produced) {
        CHECK(s.verify_closed());
        for (int t = 0; t < 20; ++t) {
            UnitriMatrix conj = g.decode(full.codes()[rng() % full.codes().size()]);
            UnitriMatrix member = g.decode(s.codes()[rng() % s.codes().size()]);
            CHECK(s.contains(conj.inverse() * member * conj));
        }
    }
}

TEST_CASE("power characterizations on the criterion grid") {
    VerifyReport r2 = verify_ut_powers(2, 3, 1, 6);
    CHECK(r2.passed());
    CHECK(r2.checks > 0);
    VerifyReport r3 = verify_ut_powers(3, 2, 1, 6);
    CHECK(r3.passed());

    // an explicit instance: squares of U_2(Z/2) land exactly on the
    // corner line
    FiniteUTGroup g(2, 2, 0);
    SubgroupSet squares = power_subgroup(lower_central(g, 1), 2);
    CHECK(squares.order() == 2);
    CHECK(squares.contains(corner_element(g, 1)));
}

TEST_CASE("filtration identities on the named groups") {
    std::vector<FiniteUTGroup> groups{FiniteUTGroup(2, 2, 1), FiniteUTGroup(3, 2, 0),
                                      FiniteUTGroup(2, 3, 0)};
    for (const FiniteUTGroup& g : groups) {
        for (int n = 1; n <= 2 * static_cast<int>(g.p()); ++n) {
            VerifyReport report = verify_group_identities(g, n);
            for (const std::string& v : report.violations)
                MESSAGE(v);
            CHECK(report.passed());
        }
    }
}

TEST_CASE("binomial condition agreement") {
    CHECK(binomial_equiv_check(2, 1, 2, 2));
    CHECK(binomial_equiv_check(2, 2, 2, 4));
    CHECK(binomial_equiv_check(3, 1, 1, 3));
    CHECK_THROWS_AS(binomial_equiv_check(2, 1, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(binomial_equiv_check(2, 1, 9, 501), std::invalid_argument);
    for (std::uint64_t p : {2ull, 3ull})
        for (int j = 0; j <= 3; ++j)
            for (int jp = 0; jp <= 4; ++jp) {
                int hi = static_cast<int>(std::min<std::uint64_t>(upow(p, jp), 64));
                for (int t = 1; t <= hi; ++t)
                    CHECK(binomial_equiv_check(p, j, jp, t));
            }
}

TEST_SUITE_END();
