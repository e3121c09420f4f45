#include "gbsoft/ordinal_loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gbsoft {

std::vector<double> softmax(const std::vector<double>& z) {
    if (z.empty()) throw std::domain_error("softmax: empty logit vector");
    const double zmax = *std::max_element(z.begin(), z.end());
    std::vector<double> p(z.size());
    double sum = 0.0;
    for (size_t i = 0; i < z.size(); ++i) {
        p[i] = std::exp(z[i] - zmax);
        sum += p[i];
    }
    for (double& e : p) e /= sum;
    return p;
}

static constexpr double kLogFloor = 1e-12;

double reg_cce(const std::vector<double>& p, int k, const SoftLabelMatrix& labels) {
    const int J = labels.num_classes;
    if (static_cast<int>(p.size()) != J) {
        throw std::domain_error("reg_cce: probability vector length does not match num_classes");
    }
    if (k < 1 || k > J) throw std::domain_error("reg_cce: class index must be in 1..J");
    double loss = 0.0;
    for (int j = 1; j <= J; ++j) {
        const double q = labels.at(k, j);
        if (q > 0.0) loss -= q * std::log(std::max(p[j - 1], kLogFloor));
    }
    return loss;
}

std::vector<double> reg_cce_grad(const std::vector<double>& z, int k, const SoftLabelMatrix& labels) {
    const int J = labels.num_classes;
    if (static_cast<int>(z.size()) != J) {
        throw std::domain_error("reg_cce_grad: logit vector length does not match num_classes");
    }
    if (k < 1 || k > J) throw std::domain_error("reg_cce_grad: class index must be in 1..J");
    std::vector<double> g = softmax(z);
    for (int j = 1; j <= J; ++j) g[j - 1] -= labels.at(k, j);
    return g;
}

}  // namespace gbsoft
