#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbsoft/bench.hpp"
#include "gbsoft/gb_dist.hpp"
#include "gbsoft/metrics.hpp"
#include "gbsoft/num_format.hpp"
#include "gbsoft/param_solver.hpp"
#include "gbsoft/soft_encoder.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

int cmd_params(int classes, double lambda, double eta) {
    const gbsoft::ClassDistributionSet dists =
        gbsoft::class_distributions(gbsoft::SolverConfig{classes, lambda, eta});
    json out = json::array();
    for (int k = 1; k <= classes; ++k) {
        const gbsoft::GBParams& p = dists.per_class[k - 1];
        out.push_back({{"class", k},
                       {"alpha", p.alpha},
                       {"u", p.u},
                       {"v", p.v},
                       {"mean", gbsoft::mean(p)},
                       {"std", std::sqrt(gbsoft::variance(p))}});
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_encode(int classes, double lambda, double eta, const std::string& out_path) {
    const gbsoft::SoftLabelMatrix m =
        gbsoft::encode_matrix(gbsoft::SolverConfig{classes, lambda, eta});
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitRuntime;
    }
    gbsoft::write_csv(m, os);
    os.flush();
    if (!os) {
        std::cerr << "error: writing '" << out_path << "' failed\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_pdf(int classes, std::optional<int> klass, double lambda, double eta, int points,
            std::optional<double> alpha, std::optional<double> u, std::optional<double> v) {
    const int overrides = static_cast<int>(alpha.has_value()) + static_cast<int>(u.has_value()) +
                          static_cast<int>(v.has_value());
    gbsoft::GBParams params;
    if (overrides == 3) {
        params = gbsoft::GBParams{*alpha, *u, *v};
    } else if (overrides != 0) {
        std::cerr << "error: --alpha, --u and --v must be given together\n";
        return kExitUsage;
    } else {
        if (!klass) {
            std::cerr << "error: --class is required unless --alpha/--u/--v are given\n";
            return kExitUsage;
        }
        if (*klass < 1 || *klass > classes) {
            std::cerr << "error: --class must be in 1.." << classes << "\n";
            return kExitUsage;
        }
        const gbsoft::ClassDistributionSet dists =
            gbsoft::class_distributions(gbsoft::SolverConfig{classes, lambda, eta});
        params = dists.per_class[*klass - 1];
    }
    std::ostringstream os;
    for (int i = 1; i <= points; ++i) {
        const double x = static_cast<double>(i) / (points + 1);
        os << gbsoft::format_double(x) << ',' << gbsoft::format_double(gbsoft::pdf(params, x))
           << '\n';
    }
    std::cout << os.str();
    return kExitOk;
}

// Strict two-column integer CSV with header "true,pred".
int cmd_eval(const std::string& input_path, int classes) {
    std::ifstream is(input_path, std::ios::binary);
    if (!is) {
        std::cerr << "error: cannot open '" << input_path << "'\n";
        return kExitRuntime;
    }
    std::string line;
    if (!std::getline(is, line)) {
        std::cerr << "error: '" << input_path << "' is empty\n";
        return kExitRuntime;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "true,pred") {
        std::cerr << "error: line 1: expected header 'true,pred'\n";
        return kExitRuntime;
    }
    std::vector<int> y_true, y_pred;
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        int t = 0, p = 0;
        char comma = 0;
        std::istringstream row(line);
        if (!(row >> t >> comma >> p) || comma != ',' || !(row >> std::ws).eof()) {
            std::cerr << "error: line " << line_no << ": expected two comma-separated integers\n";
            return kExitRuntime;
        }
        if (t < 1 || t > classes || p < 1 || p > classes) {
            std::cerr << "error: line " << line_no << ": label out of range 1.." << classes << "\n";
            return kExitRuntime;
        }
        y_true.push_back(t);
        y_pred.push_back(p);
    }
    if (y_true.empty()) {
        std::cerr << "error: no data rows in '" << input_path << "'\n";
        return kExitRuntime;
    }
    const gbsoft::MetricReport r = gbsoft::evaluate(gbsoft::confusion(y_true, y_pred, classes));
    json out = {{"qwk", r.qwk},         {"ms", r.ms},
                {"mae", r.mae},         {"ccr", r.ccr},
                {"one_off", r.one_off}, {"gmsec", r.gmsec},
                {"sensitivities", r.sensitivities}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_bench(int classes, int samples, int dim, double noise, int num_seeds,
              std::uint64_t master_seed, int epochs, double lr, std::vector<double> grid,
              const std::string& out_dir) {
    gbsoft::ExperimentConfig config;
    config.num_classes = classes;
    config.n = samples;
    config.d = dim;
    config.p_noise = noise;
    config.epochs = epochs;
    config.lr = lr;
    if (!grid.empty()) config.grid = std::move(grid);
    config.seeds.clear();
    for (int i = 0; i < num_seeds; ++i) config.seeds.push_back(master_seed + i);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const std::vector<gbsoft::RunResult> results = gbsoft::run_experiment(config);

    {
        std::ofstream os(std::filesystem::path(out_dir) / "results.csv", std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot write results.csv in '" << out_dir << "'\n";
            return kExitRuntime;
        }
        gbsoft::write_results_csv(results, os);
    }
    const std::string summary = gbsoft::summary_json(results, config);
    {
        std::ofstream os(std::filesystem::path(out_dir) / "summary.json", std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot write summary.json in '" << out_dir << "'\n";
            return kExitRuntime;
        }
        os << summary;
    }

    const json parsed = json::parse(summary);
    std::cout << "encoding        metric      mean        sd\n";
    for (const auto& [enc, metric_stats] : parsed.at("per_encoding").items()) {
        for (const auto& [metric, stats] : metric_stats.items()) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%-15s %-10s %10.4f %9.4f", enc.c_str(),
                          metric.c_str(), stats.at("mean").get<double>(),
                          stats.at("sd").get<double>());
            std::cout << buf << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalised-beta soft-label toolkit for ordinal classification"};
    app.require_subcommand(1);

    int classes = 5;
    double lambda = 1.0, eta = 1.0;
    std::string out_path, input_path, out_dir;
    int points = 200;
    std::optional<int> klass;
    std::optional<double> alpha_override, u_override, v_override;
    int samples = 3000, dim = 20, num_seeds = 10, epochs = 300;
    double noise = 0.2, lr = 0.1;
    std::uint64_t master_seed = 0;
    std::vector<double> grid;

    CLI::App* params_cmd =
        app.add_subcommand("params", "Per-class distribution parameters as JSON");
    params_cmd->add_option("--classes", classes, "Number of classes J")
        ->required()
        ->check(CLI::Range(3, 1000));
    params_cmd->add_option("--lambda", lambda, "First-class tightness weight")
        ->check(CLI::PositiveNumber);
    params_cmd->add_option("--eta", eta, "Last-class tightness weight")
        ->check(CLI::PositiveNumber);

    CLI::App* encode_cmd = app.add_subcommand("encode", "Soft-label matrix as CSV");
    encode_cmd->add_option("--classes", classes, "Number of classes J")
        ->required()
        ->check(CLI::Range(3, 1000));
    encode_cmd->add_option("--lambda", lambda, "First-class tightness weight")
        ->check(CLI::PositiveNumber);
    encode_cmd->add_option("--eta", eta, "Last-class tightness weight")
        ->check(CLI::PositiveNumber);
    encode_cmd->add_option("--out", out_path, "Output CSV path")->required();

    CLI::App* pdf_cmd = app.add_subcommand("pdf", "Density samples as CSV on stdout");
    pdf_cmd->add_option("--classes", classes, "Number of classes J")->check(CLI::Range(3, 1000));
    pdf_cmd->add_option("--class", klass, "Class index 1..J");
    pdf_cmd->add_option("--lambda", lambda, "First-class tightness weight")
        ->check(CLI::PositiveNumber);
    pdf_cmd->add_option("--eta", eta, "Last-class tightness weight")->check(CLI::PositiveNumber);
    pdf_cmd->add_option("--points", points, "Number of sample points")->check(CLI::Range(2, 10000000));
    pdf_cmd->add_option("--alpha", alpha_override, "Override: shape exponent")
        ->check(CLI::PositiveNumber);
    pdf_cmd->add_option("--u", u_override, "Override: u")->check(CLI::PositiveNumber);
    pdf_cmd->add_option("--v", v_override, "Override: v")->check(CLI::PositiveNumber);

    CLI::App* eval_cmd = app.add_subcommand("eval", "Metric report as JSON on stdout");
    eval_cmd->add_option("--input", input_path, "Predictions CSV with header true,pred")
        ->required();
    eval_cmd->add_option("--classes", classes, "Number of classes J")
        ->required()
        ->check(CLI::Range(2, 1000));

    CLI::App* bench_cmd = app.add_subcommand("bench", "Synthetic benchmark");
    bench_cmd->add_option("--classes", classes, "Number of classes J")->check(CLI::Range(3, 1000));
    bench_cmd->add_option("--samples", samples, "Dataset size n")->check(CLI::Range(150, 100000000));
    bench_cmd->add_option("--dim", dim, "Feature dimension")->check(CLI::Range(1, 1000000));
    bench_cmd->add_option("--noise", noise, "Adjacent-flip probability")
        ->check(CLI::Range(0.0, 0.499999));
    bench_cmd->add_option("--seeds", num_seeds, "Number of seeds")->check(CLI::Range(1, 100000));
    bench_cmd->add_option("--master-seed", master_seed, "First seed value");
    bench_cmd->add_option("--epochs", epochs, "Training epochs")->check(CLI::Range(0, 100000000));
    bench_cmd->add_option("--lr", lr, "Learning rate")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--grid", grid, "Lambda/eta grid values")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--out", out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (params_cmd->parsed()) return cmd_params(classes, lambda, eta);
        if (encode_cmd->parsed()) return cmd_encode(classes, lambda, eta, out_path);
        if (pdf_cmd->parsed()) {
            return cmd_pdf(classes, klass, lambda, eta, points, alpha_override, u_override,
                           v_override);
        }
        if (eval_cmd->parsed()) return cmd_eval(input_path, classes);
        if (bench_cmd->parsed()) {
            return cmd_bench(classes, samples, dim, noise, num_seeds, master_seed, epochs, lr,
                             grid, out_dir);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
