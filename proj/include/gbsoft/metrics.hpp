#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbsoft {

// A metric's preconditions do not hold for the given counts (e.g. an empty true class).
class UndefinedMetricError : public std::runtime_error {
public:
    explicit UndefinedMetricError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfusionMatrix {
    int num_classes = 0;
    std::vector<std::int64_t> counts;  // row-major, rows = true class

    // 1-based accessors
    std::int64_t at(int i, int j) const { return counts[static_cast<size_t>(i - 1) * num_classes + (j - 1)]; }
    std::int64_t& at(int i, int j) { return counts[static_cast<size_t>(i - 1) * num_classes + (j - 1)]; }
    std::int64_t row_sum(int i) const;
    std::int64_t col_sum(int j) const;
    std::int64_t total() const;
};

// Labels are 1..J; mismatched lengths or out-of-range labels raise std::invalid_argument
// naming the offending position.
ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred, int J);

// Quadratically weighted kappa. The all-mass-in-one-diagonal-cell case (constant and
// equal truth/prediction) is returned as 1.0.
double qwk(const ConfusionMatrix& o);

// S_j = O_jj / O_j. for each class; requires every true class non-empty.
std::vector<double> sensitivities(const ConfusionMatrix& o);

double ms(const ConfusionMatrix& o);
double mae(const ConfusionMatrix& o);
double ccr(const ConfusionMatrix& o);
double one_off(const ConfusionMatrix& o);

// sqrt(S_1 * S_J); 0 when either extreme sensitivity is 0. Only the first and
// last true classes must be non-empty.
double gmsec(const ConfusionMatrix& o);

struct MetricReport {
    double qwk = 0.0;
    double ms = 0.0;
    double mae = 0.0;
    double ccr = 0.0;
    double one_off = 0.0;
    double gmsec = 0.0;
    std::vector<double> sensitivities;
};

MetricReport evaluate(const ConfusionMatrix& o);

}  // namespace gbsoft
