#include "gbsoft/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace gbsoft {

std::int64_t ConfusionMatrix::row_sum(int i) const {
    std::int64_t s = 0;
    for (int j = 1; j <= num_classes; ++j) s += at(i, j);
    return s;
}

std::int64_t ConfusionMatrix::col_sum(int j) const {
    std::int64_t s = 0;
    for (int i = 1; i <= num_classes; ++i) s += at(i, j);
    return s;
}

std::int64_t ConfusionMatrix::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

ConfusionMatrix confusion(const std::vector<int>& y_true, const std::vector<int>& y_pred, int J) {
    if (J < 2) throw std::invalid_argument("confusion: J must be >= 2");
    if (y_true.size() != y_pred.size()) {
        throw std::invalid_argument("confusion: y_true and y_pred lengths differ (" +
                                    std::to_string(y_true.size()) + " vs " +
                                    std::to_string(y_pred.size()) + ")");
    }
    if (y_true.empty()) throw std::invalid_argument("confusion: empty input");
    ConfusionMatrix o;
    o.num_classes = J;
    o.counts.assign(static_cast<size_t>(J) * J, 0);
    for (size_t i = 0; i < y_true.size(); ++i) {
        if (y_true[i] < 1 || y_true[i] > J || y_pred[i] < 1 || y_pred[i] > J) {
            throw std::invalid_argument("confusion: label out of range 1..J at position " +
                                        std::to_string(i + 1));
        }
        ++o.at(y_true[i], y_pred[i]);
    }
    return o;
}

double qwk(const ConfusionMatrix& o) {
    const int J = o.num_classes;
    const double n = static_cast<double>(o.total());
    if (n <= 0) throw UndefinedMetricError("qwk: empty confusion matrix");
    double num = 0.0, den = 0.0;
    const double scale = (J - 1.0) * (J - 1.0);
    for (int i = 1; i <= J; ++i) {
        const double ri = static_cast<double>(o.row_sum(i));
        for (int j = 1; j <= J; ++j) {
            const double w = (i - j) * (i - j) / scale;
            num += w * static_cast<double>(o.at(i, j));
            den += w * ri * static_cast<double>(o.col_sum(j)) / n;
        }
    }
    if (den == 0.0) return 1.0;  // all mass in a single diagonal cell
    return 1.0 - num / den;
}

std::vector<double> sensitivities(const ConfusionMatrix& o) {
    std::vector<double> s(o.num_classes);
    for (int j = 1; j <= o.num_classes; ++j) {
        const std::int64_t rj = o.row_sum(j);
        if (rj == 0) {
            throw UndefinedMetricError("sensitivity undefined: true class " + std::to_string(j) +
                                       " is empty");
        }
        s[j - 1] = static_cast<double>(o.at(j, j)) / static_cast<double>(rj);
    }
    return s;
}

double ms(const ConfusionMatrix& o) {
    const std::vector<double> s = sensitivities(o);
    return *std::min_element(s.begin(), s.end());
}

double mae(const ConfusionMatrix& o) {
    const double n = static_cast<double>(o.total());
    if (n <= 0) throw UndefinedMetricError("mae: empty confusion matrix");
    double acc = 0.0;
    for (int i = 1; i <= o.num_classes; ++i) {
        for (int j = 1; j <= o.num_classes; ++j) {
            acc += std::abs(i - j) * static_cast<double>(o.at(i, j));
        }
    }
    return acc / n;
}

double ccr(const ConfusionMatrix& o) {
    const double n = static_cast<double>(o.total());
    if (n <= 0) throw UndefinedMetricError("ccr: empty confusion matrix");
    std::int64_t diag = 0;
    for (int i = 1; i <= o.num_classes; ++i) diag += o.at(i, i);
    return static_cast<double>(diag) / n;
}

double one_off(const ConfusionMatrix& o) {
    const double n = static_cast<double>(o.total());
    if (n <= 0) throw UndefinedMetricError("one_off: empty confusion matrix");
    std::int64_t near = 0;
    for (int i = 1; i <= o.num_classes; ++i) {
        for (int j = 1; j <= o.num_classes; ++j) {
            if (std::abs(i - j) <= 1) near += o.at(i, j);
        }
    }
    return static_cast<double>(near) / n;
}

double gmsec(const ConfusionMatrix& o) {
    const int J = o.num_classes;
    const std::int64_t r1 = o.row_sum(1);
    const std::int64_t rj = o.row_sum(J);
    if (r1 == 0 || rj == 0) {
        throw UndefinedMetricError("gmsec undefined: an extreme true class is empty");
    }
    const double s1 = static_cast<double>(o.at(1, 1)) / static_cast<double>(r1);
    const double sj = static_cast<double>(o.at(J, J)) / static_cast<double>(rj);
    if (s1 == 0.0 || sj == 0.0) return 0.0;
    return std::exp(0.5 * (std::log(s1) + std::log(sj)));
}

MetricReport evaluate(const ConfusionMatrix& o) {
    MetricReport r;
    r.sensitivities = sensitivities(o);
    r.qwk = qwk(o);
    r.ms = ms(o);
    r.mae = mae(o);
    r.ccr = ccr(o);
    r.one_off = one_off(o);
    r.gmsec = gmsec(o);
    return r;
}

}  // namespace gbsoft
