#pragma once

#include <vector>

#include "gbsoft/soft_encoder.hpp"

namespace gbsoft {

// Max-subtracted exponential normalization; shift invariant.
std::vector<double> softmax(const std::vector<double>& z);

// L(p,k) = sum_j q'(j,k) * (-log p_j), with p_j floored at 1e-12 inside the log.
double reg_cce(const std::vector<double>& p, int k, const SoftLabelMatrix& labels);

// Gradient of reg_cce(softmax(z), k) in z: softmax(z) - q'(.,k). Sums to 0.
std::vector<double> reg_cce_grad(const std::vector<double>& z, int k, const SoftLabelMatrix& labels);

}  // namespace gbsoft
