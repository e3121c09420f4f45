#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gbsoft/metrics.hpp"
#include "gbsoft/soft_encoder.hpp"

namespace gbsoft {

struct SyntheticDataset {
    int num_classes = 0;
    int dim = 0;
    std::uint64_t seed = 0;
    std::vector<double> features;  // row-major n x dim
    std::vector<int> labels;       // noisy labels, 1..J
    std::vector<int> clean_labels; // pre-noise labels, kept for diagnostics

    int n() const { return static_cast<int>(labels.size()); }
};

// Latent score x.w + 0.1*noise, equal-quantile cuts, then with probability
// p_noise the label moves to a uniformly chosen adjacent class (the end
// classes have a single neighbour).
SyntheticDataset generate(int J, int n, int d, double p_noise, std::uint64_t seed);

SyntheticDataset subset(const SyntheticDataset& data, const std::vector<int>& idx);

// Per-class shuffle and cut; returns (first part, second part), both sorted.
std::pair<std::vector<int>, std::vector<int>>
stratified_split(const std::vector<int>& labels, double first_frac, std::mt19937_64& rng);

struct LinearModel {
    int num_classes = 0;
    int dim = 0;                   // feature dim, weights include a bias column
    std::vector<double> weights;   // row-major J x (dim+1)
};

std::vector<int> predict(const LinearModel& model, const std::vector<double>& features, int n);

struct TrainResult {
    LinearModel model;             // weights with the best validation QWK
    double best_val_qwk = 0.0;
    int best_epoch = 0;            // 0 = the zero-initialized model
    std::vector<double> val_loss_history;  // entry e = validation loss after e updates
    std::vector<int> train_idx;
    std::vector<int> val_idx;
};

// Full-batch gradient descent on the mean soft-target cross-entropy over an
// internal stratified 85/15 train/validation split of `data`.
TrainResult train_linear(const SyntheticDataset& data, const SoftLabelMatrix& labels_matrix,
                         int epochs, double lr);

enum class Encoding { OneHot, GB };
std::string encoding_name(Encoding e);

struct GridChoice {
    double lambda = 1.0;
    double eta = 1.0;
};

struct RunResult {
    Encoding encoding = Encoding::OneHot;
    std::uint64_t seed = 0;
    MetricReport report;                 // test-split metrics
    std::optional<GridChoice> chosen;    // GB only
};

struct ExperimentConfig {
    int num_classes = 5;
    int n = 3000;
    int d = 20;
    double p_noise = 0.2;
    std::vector<Encoding> encodings = {Encoding::GB, Encoding::OneHot};
    std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<double> grid = {0.5, 0.75, 1.0, 1.25, 1.5};  // lambda and eta values
    int epochs = 300;
    double lr = 0.1;
};

// Per seed and encoding: fresh dataset, stratified 80/20 train/test split,
// (lambda,eta) picked by best validation QWK over grid x grid (GB only),
// metrics on the test split. Results sorted by (encoding, seed).
std::vector<RunResult> run_experiment(const ExperimentConfig& config);

struct TTestResult {
    double t = 0.0;
    double p = 1.0;
    double threshold = 0.05;
    bool significant = false;
};

// Welch two-sample t-test; threshold 0.05 / num_comparisons.
TTestResult compare_runs(const std::vector<double>& a, const std::vector<double>& b,
                         int num_comparisons);

// encoding,seed,lambda,eta,qwk,ms,mae,ccr,one_off,gmsec (lambda/eta blank for one-hot)
void write_results_csv(const std::vector<RunResult>& results, std::ostream& os);

// Per-encoding mean and sample SD per metric plus the pairwise Welch table,
// serialized as JSON text.
std::string summary_json(const std::vector<RunResult>& results, const ExperimentConfig& config);

}  // namespace gbsoft
