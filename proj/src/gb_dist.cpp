#include "gbsoft/gb_dist.hpp"

#include <cmath>
#include <stdexcept>

#include "gbsoft/special_math.hpp"

namespace gbsoft {

static void check(const GBParams& p) {
    if (!(p.alpha > 0.0) || !(p.u > 0.0) || !(p.v > 0.0)) {
        throw std::domain_error("GBParams: alpha, u, v must all be > 0");
    }
}

double pdf(const GBParams& p, double x) {
    check(p);
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("pdf: x must be in (0,1)");
    const double lx = std::log(x);
    // 1 - x^{1/alpha} through expm1 keeps precision as x -> 1.
    const double one_minus_root = -std::expm1(lx / p.alpha);
    double lp = (p.u / p.alpha - 1.0) * lx - std::log(p.alpha) - log_beta(p.u, p.v);
    if (p.v != 1.0) lp += (p.v - 1.0) * std::log(one_minus_root);
    return std::exp(lp);
}

double cdf(const GBParams& p, double x) {
    check(p);
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("cdf: x must be in [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double z = std::pow(x, 1.0 / p.alpha);
    if (z > 1.0) z = 1.0;
    return reg_inc_beta(z, p.u, p.v);
}

double moment(const GBParams& p, int h) {
    check(p);
    if (h < 1) throw std::domain_error("moment: order must be a positive integer");
    return std::exp(log_beta(p.u + p.alpha * h, p.v) - log_beta(p.u, p.v));
}

double mean(const GBParams& p) { return moment(p, 1); }

double variance(const GBParams& p) {
    const double m1 = moment(p, 1);
    return moment(p, 2) - m1 * m1;
}

double sample(const GBParams& p, std::mt19937_64& rng) {
    check(p);
    const double target = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (reg_inc_beta(mid, p.u, p.v) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-12) return std::pow(0.5 * (lo + hi), p.alpha);
    }
    throw std::runtime_error("sample: bisection did not converge");
}

}  // namespace gbsoft
