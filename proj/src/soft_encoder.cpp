#include "gbsoft/soft_encoder.hpp"

#include <ostream>
#include <stdexcept>

#include "gbsoft/num_format.hpp"

namespace gbsoft {

std::vector<double> soft_label_row(int k, const ClassDistributionSet& dists) {
    const int J = dists.config.num_classes;
    if (static_cast<int>(dists.per_class.size()) != J) {
        throw std::domain_error("soft_label_row: distribution set size does not match num_classes");
    }
    if (k < 1 || k > J) throw std::domain_error("soft_label_row: class index must be in 1..J");

    const GBParams& d = dists.per_class[k - 1];
    std::vector<double> row(J);
    double prev = 0.0;
    double sum = 0.0;
    for (int j = 1; j <= J; ++j) {
        const double cur = cdf(d, static_cast<double>(j) / J);
        row[j - 1] = cur - prev;
        sum += row[j - 1];
        prev = cur;
    }
    for (double& e : row) e /= sum;
    return row;
}

SoftLabelMatrix encode_matrix(const SolverConfig& config) {
    const ClassDistributionSet dists = class_distributions(config);
    SoftLabelMatrix m;
    m.num_classes = config.num_classes;
    m.entries.reserve(static_cast<size_t>(config.num_classes) * config.num_classes);
    for (int k = 1; k <= config.num_classes; ++k) {
        const std::vector<double> row = soft_label_row(k, dists);
        m.entries.insert(m.entries.end(), row.begin(), row.end());
    }
    return m;
}

SoftLabelMatrix one_hot_matrix(int J) {
    if (J < 2) throw std::domain_error("one_hot_matrix: J must be >= 2");
    SoftLabelMatrix m;
    m.num_classes = J;
    m.entries.assign(static_cast<size_t>(J) * J, 0.0);
    for (int k = 1; k <= J; ++k) m.at(k, k) = 1.0;
    return m;
}

void write_csv(const SoftLabelMatrix& m, std::ostream& os) {
    for (int k = 1; k <= m.num_classes; ++k) {
        for (int j = 1; j <= m.num_classes; ++j) {
            if (j > 1) os << ',';
            os << format_double(m.at(k, j));
        }
        os << '\n';
    }
}

}  // namespace gbsoft
