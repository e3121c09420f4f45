#include "gbsoft/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "gbsoft/num_format.hpp"
#include "gbsoft/ordinal_loss.hpp"
#include "gbsoft/special_math.hpp"

namespace gbsoft {

// Salts keep the split streams independent of the data-generation stream.
static constexpr std::uint64_t kTestSplitSalt = 0x9e3779b97f4a7c15ULL;
static constexpr std::uint64_t kValSplitSalt = 0xa5a5a5a55a5a5a5aULL;

SyntheticDataset generate(int J, int n, int d, double p_noise, std::uint64_t seed) {
    if (J < 3) throw std::invalid_argument("generate: J must be >= 3");
    if (n < 50 * J) throw std::invalid_argument("generate: n must be >= 50*J");
    if (d < 1) throw std::invalid_argument("generate: d must be >= 1");
    if (!(p_noise >= 0.0 && p_noise < 0.5)) {
        throw std::invalid_argument("generate: p_noise must be in [0, 0.5)");
    }

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<double> w(d);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& wi : w) {
            wi = gauss(rng);
            norm += wi * wi;
        }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (double& wi : w) wi /= norm;

    SyntheticDataset data;
    data.num_classes = J;
    data.dim = d;
    data.seed = seed;
    data.features.resize(static_cast<size_t>(n) * d);
    for (double& x : data.features) x = gauss(rng);

    std::vector<double> latent(n);
    for (int i = 0; i < n; ++i) {
        double dot = 0.0;
        const double* row = data.features.data() + static_cast<size_t>(i) * d;
        for (int c = 0; c < d; ++c) dot += row[c] * w[c];
        latent[i] = dot + 0.1 * gauss(rng);
    }

    // Equal-quantile cuts realized through rank blocks of the latent order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return latent[a] < latent[b]; });
    data.labels.resize(n);
    for (int r = 0; r < n; ++r) {
        data.labels[order[r]] = static_cast<int>((static_cast<std::int64_t>(r) * J) / n) + 1;
    }
    data.clean_labels = data.labels;

    for (int i = 0; i < n; ++i) {
        if (unif(rng) >= p_noise) continue;
        int& y = data.labels[i];
        if (y == 1) {
            y = 2;
        } else if (y == J) {
            y = J - 1;
        } else {
            y += unif(rng) < 0.5 ? -1 : 1;
        }
    }
    return data;
}

SyntheticDataset subset(const SyntheticDataset& data, const std::vector<int>& idx) {
    SyntheticDataset out;
    out.num_classes = data.num_classes;
    out.dim = data.dim;
    out.seed = data.seed;
    out.features.reserve(idx.size() * static_cast<size_t>(data.dim));
    out.labels.reserve(idx.size());
    out.clean_labels.reserve(idx.size());
    for (int i : idx) {
        if (i < 0 || i >= data.n()) throw std::invalid_argument("subset: index out of range");
        const double* row = data.features.data() + static_cast<size_t>(i) * data.dim;
        out.features.insert(out.features.end(), row, row + data.dim);
        out.labels.push_back(data.labels[i]);
        out.clean_labels.push_back(data.clean_labels[i]);
    }
    return out;
}

std::pair<std::vector<int>, std::vector<int>>
stratified_split(const std::vector<int>& labels, double first_frac, std::mt19937_64& rng) {
    if (!(first_frac > 0.0 && first_frac < 1.0)) {
        throw std::invalid_argument("stratified_split: fraction must be in (0,1)");
    }
    const int J = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
    std::vector<int> first, second;
    for (int c = 1; c <= J; ++c) {
        std::vector<int> idx;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == c) idx.push_back(static_cast<int>(i));
        }
        std::shuffle(idx.begin(), idx.end(), rng);
        const size_t cut = static_cast<size_t>(std::llround(first_frac * idx.size()));
        first.insert(first.end(), idx.begin(), idx.begin() + cut);
        second.insert(second.end(), idx.begin() + cut, idx.end());
    }
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    return {std::move(first), std::move(second)};
}

std::vector<int> predict(const LinearModel& model, const std::vector<double>& features, int n) {
    const int J = model.num_classes;
    const int d = model.dim;
    std::vector<int> pred(n);
    for (int i = 0; i < n; ++i) {
        const double* x = features.data() + static_cast<size_t>(i) * d;
        int best = 1;
        double best_logit = 0.0;
        for (int k = 0; k < J; ++k) {
            const double* wk = model.weights.data() + static_cast<size_t>(k) * (d + 1);
            double logit = wk[d];
            for (int c = 0; c < d; ++c) logit += wk[c] * x[c];
            if (k == 0 || logit > best_logit) {
                best = k + 1;
                best_logit = logit;
            }
        }
        pred[i] = best;
    }
    return pred;
}

namespace {

struct EvalOutcome {
    double loss = 0.0;
    double qwk_value = 0.0;
};

EvalOutcome evaluate_split(const LinearModel& model, const SyntheticDataset& data,
                           const std::vector<int>& idx, const SoftLabelMatrix& labels_matrix) {
    const int J = model.num_classes;
    const int d = model.dim;
    std::vector<double> logits(J);
    std::vector<int> y_true, y_pred;
    y_true.reserve(idx.size());
    y_pred.reserve(idx.size());
    double loss = 0.0;
    for (int i : idx) {
        const double* x = data.features.data() + static_cast<size_t>(i) * d;
        for (int k = 0; k < J; ++k) {
            const double* wk = model.weights.data() + static_cast<size_t>(k) * (d + 1);
            double z = wk[d];
            for (int c = 0; c < d; ++c) z += wk[c] * x[c];
            logits[k] = z;
        }
        const std::vector<double> p = softmax(logits);
        loss += reg_cce(p, data.labels[i], labels_matrix);
        y_true.push_back(data.labels[i]);
        y_pred.push_back(static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin()) + 1);
    }
    loss /= static_cast<double>(idx.size());
    return EvalOutcome{loss, qwk(confusion(y_true, y_pred, J))};
}

}  // namespace

TrainResult train_linear(const SyntheticDataset& data, const SoftLabelMatrix& labels_matrix,
                         int epochs, double lr) {
    const int J = data.num_classes;
    const int d = data.dim;
    if (labels_matrix.num_classes != J) {
        throw std::invalid_argument("train_linear: label matrix size does not match num_classes");
    }
    if (epochs < 0) throw std::invalid_argument("train_linear: epochs must be >= 0");
    if (!(lr > 0.0)) throw std::invalid_argument("train_linear: lr must be > 0");

    std::mt19937_64 split_rng(data.seed ^ kValSplitSalt);
    auto [train_idx, val_idx] = stratified_split(data.labels, 0.85, split_rng);
    if (train_idx.empty() || val_idx.empty()) {
        throw std::invalid_argument("train_linear: split produced an empty part");
    }

    TrainResult result;
    result.train_idx = train_idx;
    result.val_idx = val_idx;
    result.model = LinearModel{J, d, std::vector<double>(static_cast<size_t>(J) * (d + 1), 0.0)};

    LinearModel current = result.model;
    EvalOutcome ev = evaluate_split(current, data, val_idx, labels_matrix);
    result.val_loss_history.push_back(ev.loss);
    result.best_val_qwk = ev.qwk_value;
    result.best_epoch = 0;

    const double inv_n = 1.0 / static_cast<double>(train_idx.size());
    std::vector<double> logits(J);
    std::vector<double> grad(static_cast<size_t>(J) * (d + 1));
    for (int epoch = 1; epoch <= epochs; ++epoch) {
        std::fill(grad.begin(), grad.end(), 0.0);
        for (int i : train_idx) {
            const double* x = data.features.data() + static_cast<size_t>(i) * d;
            for (int k = 0; k < J; ++k) {
                const double* wk = current.weights.data() + static_cast<size_t>(k) * (d + 1);
                double z = wk[d];
                for (int c = 0; c < d; ++c) z += wk[c] * x[c];
                logits[k] = z;
            }
            const std::vector<double> delta = reg_cce_grad(logits, data.labels[i], labels_matrix);
            for (int k = 0; k < J; ++k) {
                double* gk = grad.data() + static_cast<size_t>(k) * (d + 1);
                const double dk = delta[k];
                for (int c = 0; c < d; ++c) gk[c] += dk * x[c];
                gk[d] += dk;
            }
        }
        for (size_t w = 0; w < current.weights.size(); ++w) {
            current.weights[w] -= lr * inv_n * grad[w];
        }

        ev = evaluate_split(current, data, val_idx, labels_matrix);
        if (!std::isfinite(ev.loss)) {
            throw std::runtime_error("train_linear: training diverged at epoch " +
                                     std::to_string(epoch));
        }
        result.val_loss_history.push_back(ev.loss);
        if (ev.qwk_value > result.best_val_qwk) {
            result.best_val_qwk = ev.qwk_value;
            result.best_epoch = epoch;
            result.model = current;
        }
    }
    return result;
}

std::string encoding_name(Encoding e) {
    return e == Encoding::OneHot ? "one_hot" : "gb";
}

std::vector<RunResult> run_experiment(const ExperimentConfig& config) {
    if (config.encodings.empty()) throw std::invalid_argument("run_experiment: no encodings");
    if (config.seeds.empty()) throw std::invalid_argument("run_experiment: no seeds");
    if (config.grid.empty()) throw std::invalid_argument("run_experiment: empty grid");

    const int J = config.num_classes;
    const SoftLabelMatrix one_hot = one_hot_matrix(J);

    // The soft-label matrices depend only on (J, lambda, eta); build once.
    std::vector<std::pair<GridChoice, SoftLabelMatrix>> gb_matrices;
    for (double lam : config.grid) {
        for (double eta : config.grid) {
            gb_matrices.push_back({GridChoice{lam, eta},
                                   encode_matrix(SolverConfig{J, lam, eta})});
        }
    }

    std::vector<RunResult> results;
    for (std::uint64_t seed : config.seeds) {
        const SyntheticDataset data = generate(J, config.n, config.d, config.p_noise, seed);
        std::mt19937_64 split_rng(seed ^ kTestSplitSalt);
        auto [train_idx, test_idx] = stratified_split(data.labels, 0.8, split_rng);
        const SyntheticDataset train_data = subset(data, train_idx);

        std::vector<int> y_test;
        y_test.reserve(test_idx.size());
        for (int i : test_idx) y_test.push_back(data.labels[i]);
        const SyntheticDataset test_data = subset(data, test_idx);

        for (Encoding enc : config.encodings) {
            RunResult run;
            run.encoding = enc;
            run.seed = seed;
            LinearModel model;
            if (enc == Encoding::OneHot) {
                model = train_linear(train_data, one_hot, config.epochs, config.lr).model;
            } else {
                double best_qwk = -2.0;
                for (const auto& [choice, matrix] : gb_matrices) {
                    TrainResult tr = train_linear(train_data, matrix, config.epochs, config.lr);
                    if (tr.best_val_qwk > best_qwk) {
                        best_qwk = tr.best_val_qwk;
                        model = tr.model;
                        run.chosen = choice;
                    }
                }
            }
            const std::vector<int> y_pred =
                predict(model, test_data.features, test_data.n());
            run.report = evaluate(confusion(y_test, y_pred, J));
            results.push_back(std::move(run));
        }
    }
    std::sort(results.begin(), results.end(), [](const RunResult& a, const RunResult& b) {
        if (a.encoding != b.encoding) return encoding_name(a.encoding) < encoding_name(b.encoding);
        return a.seed < b.seed;
    });
    return results;
}

TTestResult compare_runs(const std::vector<double>& a, const std::vector<double>& b,
                         int num_comparisons) {
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("compare_runs: each sample needs at least 2 values");
    }
    if (num_comparisons < 1) throw std::invalid_argument("compare_runs: num_comparisons must be >= 1");

    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / na;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / nb;
    double va = 0.0, vb = 0.0;
    for (double x : a) va += (x - ma) * (x - ma);
    for (double x : b) vb += (x - mb) * (x - mb);
    va /= na - 1.0;
    vb /= nb - 1.0;

    TTestResult res;
    res.threshold = 0.05 / num_comparisons;
    const double sea = va / na;
    const double seb = vb / nb;
    const double se2 = sea + seb;
    if (se2 == 0.0) {
        res.t = 0.0;
        res.p = ma == mb ? 1.0 : 0.0;
        if (ma != mb) res.t = ma > mb ? HUGE_VAL : -HUGE_VAL;
    } else {
        res.t = (ma - mb) / std::sqrt(se2);
        const double dof = se2 * se2 / (sea * sea / (na - 1.0) + seb * seb / (nb - 1.0));
        res.p = reg_inc_beta(dof / (dof + res.t * res.t), dof / 2.0, 0.5);
    }
    res.significant = res.p < res.threshold;
    return res;
}

void write_results_csv(const std::vector<RunResult>& results, std::ostream& os) {
    os << "encoding,seed,lambda,eta,qwk,ms,mae,ccr,one_off,gmsec\n";
    for (const RunResult& r : results) {
        os << encoding_name(r.encoding) << ',' << r.seed << ',';
        if (r.chosen) {
            os << format_double(r.chosen->lambda) << ',' << format_double(r.chosen->eta);
        } else {
            os << ',';
        }
        os << ',' << format_double(r.report.qwk) << ',' << format_double(r.report.ms) << ','
           << format_double(r.report.mae) << ',' << format_double(r.report.ccr) << ','
           << format_double(r.report.one_off) << ',' << format_double(r.report.gmsec) << '\n';
    }
}

namespace {

const std::vector<std::pair<std::string, double MetricReport::*>> kMetricFields = {
    {"qwk", &MetricReport::qwk},       {"ms", &MetricReport::ms},
    {"mae", &MetricReport::mae},       {"ccr", &MetricReport::ccr},
    {"one_off", &MetricReport::one_off}, {"gmsec", &MetricReport::gmsec}};

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    const double n = static_cast<double>(xs.size());
    out.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    if (xs.size() > 1) {
        double acc = 0.0;
        for (double x : xs) acc += (x - out.mean) * (x - out.mean);
        out.sd = std::sqrt(acc / (n - 1.0));
    }
    return out;
}

}  // namespace

std::string summary_json(const std::vector<RunResult>& results, const ExperimentConfig& config) {
    using json = nlohmann::ordered_json;

    std::map<std::string, std::map<std::string, std::vector<double>>> values;
    for (const RunResult& r : results) {
        for (const auto& [name, field] : kMetricFields) {
            values[encoding_name(r.encoding)][name].push_back(r.report.*field);
        }
    }

    json root;
    root["config"] = {{"num_classes", config.num_classes}, {"n", config.n},     {"d", config.d},
                      {"p_noise", config.p_noise},         {"epochs", config.epochs},
                      {"lr", config.lr},                   {"num_seeds", config.seeds.size()},
                      {"grid", config.grid}};
    root["test"] = "welch_two_sample_unpaired";

    json per_encoding = json::object();
    for (const auto& [enc, metric_values] : values) {
        json entry = json::object();
        for (const auto& [name, field] : kMetricFields) {
            const MeanSd stats = mean_sd(metric_values.at(name));
            entry[name] = {{"mean", stats.mean}, {"sd", stats.sd}};
        }
        per_encoding[enc] = entry;
    }
    root["per_encoding"] = per_encoding;

    std::vector<std::string> encodings;
    for (const auto& [enc, _] : values) encodings.push_back(enc);
    int num_pairs = static_cast<int>(encodings.size() * (encodings.size() - 1) / 2);
    if (num_pairs < 1) num_pairs = 1;
    root["num_comparisons"] = num_pairs;

    json comparisons = json::array();
    for (size_t i = 0; i < encodings.size(); ++i) {
        for (size_t j = i + 1; j < encodings.size(); ++j) {
            for (const auto& [name, field] : kMetricFields) {
                const std::vector<double>& a = values[encodings[i]][name];
                const std::vector<double>& b = values[encodings[j]][name];
                if (a.size() < 2 || b.size() < 2) continue;
                const TTestResult t = compare_runs(a, b, num_pairs);
                comparisons.push_back({{"metric", name},
                                       {"encoding_a", encodings[i]},
                                       {"encoding_b", encodings[j]},
                                       {"t", t.t},
                                       {"p", t.p},
                                       {"threshold", t.threshold},
                                       {"significant", t.significant}});
            }
        }
    }
    root["comparisons"] = comparisons;
    return root.dump(2) + "\n";
}

}  // namespace gbsoft
