#pragma once

#include <random>

namespace gbsoft {

// Generalised beta GB(alpha,u,v): X = Z^alpha with Z ~ Beta(u,v).
// alpha = 1 is the standard beta on (0,1).
struct GBParams {
    double alpha = 1.0;
    double u = 1.0;
    double v = 1.0;
};

// density x^{u/alpha-1} (1-x^{1/alpha})^{v-1} / (alpha B(u,v)), 0 < x < 1
double pdf(const GBParams& p, double x);

// F(x) = I_{x^{1/alpha}}(u,v), 0 <= x <= 1
double cdf(const GBParams& p, double x);

// E[X^h] = B(u + alpha h, v) / B(u, v), integer h >= 1
double moment(const GBParams& p, int h);

double mean(const GBParams& p);
double variance(const GBParams& p);

// Inverse-cdf draw: bisect I_z(u,v) = U, return z^alpha. Reproducible per stream.
double sample(const GBParams& p, std::mt19937_64& rng);

}  // namespace gbsoft
