#include "gbsoft/param_solver.hpp"

#include <cmath>
#include <stdexcept>

namespace gbsoft {

static void check(const SolverConfig& c) {
    if (c.num_classes < 3) throw std::domain_error("SolverConfig: num_classes must be >= 3");
    if (!(c.lambda > 0.0) || !(c.eta > 0.0)) {
        throw std::domain_error("SolverConfig: lambda and eta must be > 0");
    }
}

GBParams intermediate_params(int j, int J) {
    if (J < 3) throw std::domain_error("intermediate_params: J must be >= 3");
    if (j < 2 || j > J - 1) {
        throw std::domain_error("intermediate_params: class index must be in 2..J-1");
    }
    const double m = (2.0 * j - 1.0) / (2.0 * J);
    const double s = 4.0 * J * J * m * (1.0 - m) - 1.0;
    return GBParams{1.0, m * s, (1.0 - m) * s};
}

GBParams first_class_v(const SolverConfig& config) {
    check(config);
    const double J = config.num_classes;
    const double lam = config.lambda;
    const double F = (1.0 + lam * lam) / (2.0 * J * lam * lam);
    const double v_var = (-7.0 * F + std::sqrt(F * F + 48.0 * F)) / (2.0 * F);
    const double v_mean = (-3.0 + std::sqrt(1.0 + 16.0 * J)) / 2.0;
    double v = std::max(v_var, v_mean);

    // The closed-form variance bound is loose for lambda > 1; enforce the
    // variance cap directly on the decreasing branch when it is still exceeded.
    const double var_cap = 1.0 / (4.0 * J * J * lam * lam);
    auto var_at = [](double vv) { return variance(GBParams{2.0, 1.0, vv}); };
    if (var_at(v) > var_cap) {
        double lo = v, hi = v;
        while (var_at(hi) > var_cap) hi *= 2.0;
        for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
            const double mid = 0.5 * (lo + hi);
            (var_at(mid) > var_cap ? lo : hi) = mid;
        }
        v = hi;
    }
    return GBParams{2.0, 1.0, v};
}

GBParams last_class_u(const SolverConfig& config) {
    check(config);
    const double J = config.num_classes;
    const double eta = config.eta;
    const double m = (2.0 * J - 1.0) / (2.0 * J);
    const double u_mean = (2.0 * m - 1.0 + std::sqrt(m * m - m + 1.0)) / (2.0 * (1.0 - m));
    const double L = (1.0 + eta * eta * (2.0 * J - 1.0) * (2.0 * J - 1.0)) /
                     (2.0 * J * eta * eta * (2.0 * J - 1.0));
    double u = u_mean;
    if (L < 1.0) {
        const double A = 5.0 - 6.0 * L;
        const double disc = A * A - 4.0 * (1.0 - L) * (6.0 - 8.75 * L);
        const double u_max = (-A + std::sqrt(disc)) / (2.0 * (1.0 - L));
        u = std::min(u_mean, u_max);
    }
    return GBParams{2.0, u, 0.5};
}

ClassDistributionSet class_distributions(const SolverConfig& config) {
    check(config);
    ClassDistributionSet out;
    out.config = config;
    out.per_class.reserve(config.num_classes);
    out.per_class.push_back(first_class_v(config));
    for (int j = 2; j <= config.num_classes - 1; ++j) {
        out.per_class.push_back(intermediate_params(j, config.num_classes));
    }
    out.per_class.push_back(last_class_u(config));
    return out;
}

}  // namespace gbsoft
