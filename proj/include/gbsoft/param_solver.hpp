#pragma once

#include <vector>

#include "gbsoft/gb_dist.hpp"

namespace gbsoft {

struct SolverConfig {
    int num_classes = 5;   // J >= 3
    double lambda = 1.0;   // first-class tightness weight
    double eta = 1.0;      // last-class tightness weight
};

struct ClassDistributionSet {
    std::vector<GBParams> per_class;  // index 0 is class 1
    SolverConfig config;
};

// Class j of J (2 <= j <= J-1): alpha=1, mean at the interval midpoint
// m = (2j-1)/(2J), std exactly 1/(2J).
GBParams intermediate_params(int j, int J);

// Class 1: alpha=2, u=1. v is the smallest value satisfying
// mean <= 1/(2J) and variance <= 1/(4 J^2 lambda^2).
GBParams first_class_v(const SolverConfig& config);

// Class J: alpha=2, v=0.5. u solves the mean equality E[X]=(2J-1)/(2J),
// clamped from above by the variance bound when the two conflict.
GBParams last_class_u(const SolverConfig& config);

ClassDistributionSet class_distributions(const SolverConfig& config);

}  // namespace gbsoft
