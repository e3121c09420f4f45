#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace gbsoft {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

// Thrown when the evaluation budget runs out; carries the best estimate so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, QuadratureResult partial_result)
        : std::runtime_error(msg), partial(partial_result) {}
    QuadratureResult partial;
};

// ln Gamma(z), z > 0.
double log_gamma(double z);

// ln B(u,v) = ln Gamma(u) + ln Gamma(v) - ln Gamma(u+v).
double log_beta(double u, double v);

// Regularized incomplete beta I_z(u,v), z in [0,1].
double reg_inc_beta(double z, double u, double v);

// Adaptive Gauss-Kronrod 7/15 on [a,b]. Nodes are strictly interior, so
// integrable endpoint singularities (x^{p-1}, p in (0,1)) are handled by
// repeated splitting toward the endpoint.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol = 1e-10, std::int64_t max_evals = 1000000);

}  // namespace gbsoft
