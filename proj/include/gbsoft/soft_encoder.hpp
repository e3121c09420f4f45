#pragma once

#include <iosfwd>
#include <vector>

#include "gbsoft/param_solver.hpp"

namespace gbsoft {

// Row k is the soft target vector for true class k. Rows sum to 1,
// entries lie in [0,1], the row maximum sits at column k.
struct SoftLabelMatrix {
    int num_classes = 0;
    std::vector<double> entries;  // row-major J*J

    // 1-based accessors
    double at(int k, int j) const { return entries[static_cast<size_t>(k - 1) * num_classes + (j - 1)]; }
    double& at(int k, int j) { return entries[static_cast<size_t>(k - 1) * num_classes + (j - 1)]; }
    const double* row(int k) const { return entries.data() + static_cast<size_t>(k - 1) * num_classes; }
};

// Entry j is cdf_k(j/J) - cdf_k((j-1)/J), renormalized by the row sum.
std::vector<double> soft_label_row(int k, const ClassDistributionSet& dists);

SoftLabelMatrix encode_matrix(const SolverConfig& config);

// Identity matrix: the plain 0/1 target baseline.
SoftLabelMatrix one_hot_matrix(int J);

// J rows, comma separated, full double precision, no header.
void write_csv(const SoftLabelMatrix& m, std::ostream& os);

}  // namespace gbsoft
