#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "gbsoft/soft_encoder.hpp"

using namespace gbsoft;

namespace {

void check_row_invariants(const SoftLabelMatrix& m) {
    const int J = m.num_classes;
    for (int k = 1; k <= J; ++k) {
        double sum = 0.0;
        int argmax = 1;
        for (int j = 1; j <= J; ++j) {
            const double e = m.at(k, j);
            CHECK(e >= 0.0);
            CHECK(e <= 1.0);
            sum += e;
            if (e > m.at(k, argmax)) argmax = j;
        }
        CHECK(std::fabs(sum - 1.0) < 1e-9);
        CHECK(argmax == k);
        // non-increasing away from the mode on both sides
        for (int j = k; j >= 2; --j) CHECK(m.at(k, j - 1) <= m.at(k, j) + 1e-12);
        for (int j = k; j <= J - 1; ++j) CHECK(m.at(k, j + 1) <= m.at(k, j) + 1e-12);
    }
}

}  // namespace

TEST_SUITE("soft_encoder") {

TEST_CASE("uniform distribution spreads mass evenly") {
    ClassDistributionSet dists;
    dists.config = SolverConfig{5, 1.0, 1.0};
    dists.per_class.assign(5, GBParams{1.0, 1.0, 1.0});
    const std::vector<double> row = soft_label_row(2, dists);
    for (double e : row) CHECK(e == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("soft_label_row validates the class index") {
    const ClassDistributionSet dists = class_distributions(SolverConfig{5, 1.0, 1.0});
    CHECK_THROWS_AS(soft_label_row(0, dists), std::domain_error);
    CHECK_THROWS_AS(soft_label_row(6, dists), std::domain_error);
}

TEST_CASE("five-class default matrix matches frozen values") {
    const SoftLabelMatrix m = encode_matrix(SolverConfig{5, 1.0, 1.0});
    const double expected[5][5] = {
        {0.9200613237230685, 0.0659004323749589, 0.012291374629346374, 0.0016779574618935866,
         6.891181073265251e-05},
        {0.163062304248536, 0.6740152132639904, 0.15985465263144372, 0.0030671501608353635,
         6.796951945720053e-07},
        {0.0005973937086924248, 0.16304604693120084, 0.6727131187202136, 0.16304604693120084,
         0.0005973937086923842},
        {6.796951945216033e-07, 0.003067150160835399, 0.1598546526314436, 0.6740152132639905,
         0.16306230424853596},
        {0.0003995403361447508, 0.007182677931610891, 0.0386653694478656, 0.14156909573485607,
         0.8121833165495227}};
    for (int k = 1; k <= 5; ++k) {
        for (int j = 1; j <= 5; ++j) {
            CHECK(std::fabs(m.at(k, j) - expected[k - 1][j - 1]) < 1e-9);
        }
    }
    // first cell has the closed form 1 - (1 - sqrt(1/5))^v
    const double v = class_distributions(SolverConfig{5, 1.0, 1.0}).per_class[0].v;
    CHECK(std::fabs(m.at(1, 1) - (1.0 - std::pow(1.0 - std::sqrt(0.2), v))) < 1e-9);
}

TEST_CASE("row invariants hold across J and the weight grid") {
    for (int J : {3, 5, 8, 14}) {
        for (double lam : {0.5, 1.0, 1.5}) {
            for (double eta : {0.5, 1.0, 1.5}) {
                check_row_invariants(encode_matrix(SolverConfig{J, lam, eta}));
            }
        }
    }
}

TEST_CASE("first row decreases strictly left to right") {
    const SoftLabelMatrix m = encode_matrix(SolverConfig{5, 1.0, 1.0});
    for (int j = 1; j < 5; ++j) CHECK(m.at(1, j) > m.at(1, j + 1));
}

TEST_CASE("centre-class adjacent masses agree exactly for odd J") {
    for (int J : {5, 7, 9}) {
        const SoftLabelMatrix m = encode_matrix(SolverConfig{J, 1.0, 1.0});
        const int k = (J + 1) / 2;
        CHECK(std::fabs(m.at(k, k - 1) - m.at(k, k + 1)) < 1e-12);
    }
}

TEST_CASE("reflected intermediate rows mirror each other") {
    for (int J : {5, 8}) {
        const SoftLabelMatrix m = encode_matrix(SolverConfig{J, 1.0, 1.0});
        for (int k = 2; k <= J - 1; ++k) {
            const int kr = J + 1 - k;
            if (kr < 2 || kr > J - 1) continue;
            for (int j = 1; j <= J; ++j) {
                CHECK(std::fabs(m.at(k, j) - m.at(kr, J + 1 - j)) < 1e-12);
            }
        }
    }
}

TEST_CASE("extreme first class concentrates harder than its alpha=1 counterpart") {
    const int J = 5;
    const double lam = 1.0;
    const SoftLabelMatrix m = encode_matrix(SolverConfig{J, lam, 1.0});
    // alpha=1, u=1 solved under the same mean and second-moment constraints:
    // mean <= 1/(2J) forces v >= 2J-1; E[X^2] <= F E[X] forces v >= 2/F - 2
    const double F = (1.0 + lam * lam) / (2.0 * J * lam * lam);
    const double v1 = std::max(2.0 * J - 1.0, 2.0 / F - 2.0);
    const double p11_alpha1 = 1.0 - std::pow(1.0 - 1.0 / J, v1);
    CHECK(m.at(1, 1) > p11_alpha1);
    CHECK(p11_alpha1 == doctest::Approx(0.865782272).epsilon(1e-9));
}

TEST_CASE("larger lambda concentrates the first cell further") {
    double prev = 0.0;
    for (double lam : {0.5, 0.75, 1.0, 1.25, 1.5}) {
        const SoftLabelMatrix m = encode_matrix(SolverConfig{5, lam, 1.0});
        CHECK(m.at(1, 1) >= prev);
        prev = m.at(1, 1);
    }
}

TEST_CASE("one-hot matrix is the identity") {
    const SoftLabelMatrix m = one_hot_matrix(3);
    for (int k = 1; k <= 3; ++k) {
        for (int j = 1; j <= 3; ++j) {
            CHECK(m.at(k, j) == (k == j ? 1.0 : 0.0));
        }
    }
    check_row_invariants(m);
    CHECK_THROWS_AS(one_hot_matrix(1), std::domain_error);
}

TEST_CASE("csv output round-trips at full precision without a header") {
    const SoftLabelMatrix m = encode_matrix(SolverConfig{3, 1.0, 1.0});
    std::ostringstream os;
    write_csv(m, os);
    const std::string text = os.str();

    int lines = 0;
    for (char c : text) lines += c == '\n';
    CHECK(lines == 3);
    CHECK(text.find("0.") == 0);  // data starts immediately

    std::istringstream is(text);
    std::string line;
    int k = 1;
    while (std::getline(is, line)) {
        std::istringstream row(line);
        std::string cell;
        int j = 1;
        while (std::getline(row, cell, ',')) {
            CHECK(std::stod(cell) == m.at(k, j));  // exact round-trip
            ++j;
        }
        CHECK(j == 4);
        ++k;
    }
}

}  // TEST_SUITE
