#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "gbsoft/gb_dist.hpp"
#include "gbsoft/param_solver.hpp"

using namespace gbsoft;

TEST_SUITE("param_solver") {

TEST_CASE("intermediate classes sit at interval midpoints with std 1/(2J)") {
    const GBParams a = intermediate_params(3, 5);
    CHECK(a.alpha == 1.0);
    CHECK(a.u == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(a.v == doctest::Approx(12.0).epsilon(1e-12));

    const GBParams b = intermediate_params(2, 5);
    CHECK(b.u == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(b.v == doctest::Approx(14.0).epsilon(1e-12));

    const GBParams c = intermediate_params(2, 3);
    CHECK(c.u == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(c.v == doctest::Approx(4.0).epsilon(1e-12));

    for (int J = 3; J <= 14; ++J) {
        for (int j = 2; j <= J - 1; ++j) {
            const GBParams p = intermediate_params(j, J);
            const double m = (2.0 * j - 1.0) / (2.0 * J);
            CHECK(std::fabs(mean(p) - m) < 1e-12);
            CHECK(std::fabs(std::sqrt(variance(p)) - 1.0 / (2.0 * J)) < 1e-11);
        }
    }
}

TEST_CASE("intermediate solver rejects extreme-class indices") {
    CHECK_THROWS_AS(intermediate_params(1, 5), std::domain_error);
    CHECK_THROWS_AS(intermediate_params(5, 5), std::domain_error);
    CHECK_THROWS_AS(intermediate_params(2, 2), std::domain_error);
}

TEST_CASE("first-class v spot values") {
    const GBParams a = first_class_v(SolverConfig{5, 1.0, 1.0});
    CHECK(a.alpha == 2.0);
    CHECK(a.u == 1.0);
    CHECK(a.v == doctest::Approx(4.262087348130012).epsilon(1e-12));

    // mean bound dominates
    CHECK(first_class_v(SolverConfig{5, 0.5, 1.0}).v == doctest::Approx(3.0).epsilon(1e-12));

    CHECK(first_class_v(SolverConfig{8, 1.0, 1.0}).v ==
          doctest::Approx(6.310708435174291).epsilon(1e-12));
}

TEST_CASE("first-class variance cap binds beyond the closed-form bound at high lambda") {
    const SolverConfig cfg{3, 1.5, 1.0};
    const GBParams p = first_class_v(cfg);
    CHECK(p.v == doctest::Approx(3.62583113126158).epsilon(1e-9));
    CHECK(variance(p) <= 1.0 / (4.0 * 9.0 * 1.5 * 1.5) + 1e-9);
    CHECK(mean(p) <= 1.0 / 6.0 + 1e-9);
}

TEST_CASE("first-class constraints hold across J and the weight grid") {
    for (int J = 3; J <= 14; ++J) {
        for (double lam : {0.5, 0.75, 1.0, 1.25, 1.5}) {
            const GBParams p = first_class_v(SolverConfig{J, lam, 1.0});
            CHECK(mean(p) <= 1.0 / (2.0 * J) + 1e-9);
            CHECK(variance(p) <= 1.0 / (4.0 * J * J * lam * lam) + 1e-9);
        }
    }
}

TEST_CASE("first-class v grows with lambda and with J") {
    for (int J : {3, 5, 8, 14}) {
        double prev = 0.0;
        for (double lam : {0.5, 0.75, 1.0, 1.25, 1.5}) {
            const double v = first_class_v(SolverConfig{J, lam, 1.0}).v;
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
    double prev = 0.0;
    for (int J = 3; J <= 14; ++J) {
        const double v = first_class_v(SolverConfig{J, 1.0, 1.0}).v;
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("last-class u spot values") {
    const GBParams a = last_class_u(SolverConfig{5, 1.0, 1.0});
    CHECK(a.alpha == 2.0);
    CHECK(a.v == 0.5);
    // variance bound clamps the mean equality
    CHECK(a.u == doctest::Approx(8.017413652530747).epsilon(1e-12));

    // mean equality attainable
    CHECK(last_class_u(SolverConfig{5, 1.0, 0.5}).u ==
          doctest::Approx(8.76969600708473).epsilon(1e-12));
}

TEST_CASE("last-class bound degenerates gracefully for small eta") {
    // L >= 1 makes the quadratic bound vacuous; the mean equality root is returned
    const GBParams p = last_class_u(SolverConfig{3, 1.0, 0.4});
    CHECK(p.u == doctest::Approx(4.783882181415012).epsilon(1e-12));
    CHECK(std::fabs(mean(p) - 5.0 / 6.0) < 1e-12);
}

TEST_CASE("last-class u stays positive with the mean never past the midpoint target") {
    for (int J = 3; J <= 14; ++J) {
        for (double eta : {0.5, 0.75, 1.0, 1.25, 1.5}) {
            const GBParams p = last_class_u(SolverConfig{J, 1.0, eta});
            CHECK(p.u > 0.0);
            CHECK(mean(p) <= (2.0 * J - 1.0) / (2.0 * J) + 1e-9);
        }
    }
}

TEST_CASE("class_distributions composes the three solvers") {
    const ClassDistributionSet set = class_distributions(SolverConfig{5, 1.0, 1.0});
    REQUIRE(set.per_class.size() == 5);
    CHECK(set.per_class[0].alpha == 2.0);
    CHECK(set.per_class[0].u == 1.0);
    CHECK(set.per_class[0].v == doctest::Approx(4.2621).epsilon(1e-3));
    CHECK(set.per_class[1].u == doctest::Approx(6.0));
    CHECK(set.per_class[1].v == doctest::Approx(14.0));
    CHECK(set.per_class[2].u == doctest::Approx(12.0));
    CHECK(set.per_class[3].u == doctest::Approx(14.0));
    CHECK(set.per_class[3].v == doctest::Approx(6.0));
    CHECK(set.per_class[4].alpha == 2.0);
    CHECK(set.per_class[4].u == doctest::Approx(8.0174).epsilon(1e-3));
    CHECK(set.per_class[4].v == 0.5);

    const ClassDistributionSet three = class_distributions(SolverConfig{3, 1.0, 1.0});
    REQUIRE(three.per_class.size() == 3);
    CHECK(three.per_class[1].u == doctest::Approx(4.0));
    CHECK(three.per_class[1].v == doctest::Approx(4.0));
}

TEST_CASE("alpha pattern and strict mean ordering across the grid") {
    for (int J : {3, 5, 8, 14}) {
        for (double lam : {0.5, 1.0, 1.5}) {
            for (double eta : {0.5, 1.0, 1.5}) {
                const ClassDistributionSet set = class_distributions(SolverConfig{J, lam, eta});
                REQUIRE(static_cast<int>(set.per_class.size()) == J);
                CHECK(set.per_class.front().alpha == 2.0);
                CHECK(set.per_class.back().alpha == 2.0);
                double prev = -1.0;
                for (int k = 0; k < J; ++k) {
                    if (k > 0 && k < J - 1) CHECK(set.per_class[k].alpha == 1.0);
                    const double mk = mean(set.per_class[k]);
                    CHECK(mk > prev);
                    prev = mk;
                }
            }
        }
    }
}

TEST_CASE("intermediate parameters mirror under class reversal") {
    for (int J : {4, 5, 9}) {
        for (int j = 2; j <= J - 1; ++j) {
            const GBParams a = intermediate_params(j, J);
            const GBParams b = intermediate_params(J + 1 - j, J);
            CHECK(a.u == doctest::Approx(b.v).epsilon(1e-12));
            CHECK(a.v == doctest::Approx(b.u).epsilon(1e-12));
        }
    }
}

TEST_CASE("solver configs are validated") {
    CHECK_THROWS_AS(class_distributions(SolverConfig{2, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(first_class_v(SolverConfig{5, 0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(last_class_u(SolverConfig{5, 1.0, -1.0}), std::domain_error);
}

}  // TEST_SUITE
