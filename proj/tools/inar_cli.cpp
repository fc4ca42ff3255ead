// Command-line front end: simulate, estimate, classify, limit-sample,
// mc-compare, moments. Exit codes: 0 success, 1 validation error,
// 2 runtime failure; diagnostics are single lines on stderr.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "inar/cls.hpp"
#include "inar/limit_laws.hpp"
#include "inar/mc.hpp"
#include "inar/model.hpp"
#include "inar/moments.hpp"
#include "inar/trajectory.hpp"

namespace {

struct CliOptions {
    double alpha = 0.6;
    double beta = 0.4;
    std::string innovation = "poisson:2";
    double mu = 0.0;
    bool mu_given = false;
    long long n = 1000;
    long long replications = 1000;
    long long limit_replications = 10000;
    long long mesh = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 0;  // 0 = available cores
    std::string in_path;
    std::string out_path;
    std::string case_name = "auto";
    int order = 2;
};

// A JSON config file overrides whatever the flags said.
void apply_config(const std::string& path, CliOptions& opt) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("alpha")) opt.alpha = j["alpha"].get<double>();
    if (j.contains("beta")) opt.beta = j["beta"].get<double>();
    if (j.contains("innovation")) opt.innovation = j["innovation"].get<std::string>();
    if (j.contains("mu")) {
        opt.mu = j["mu"].get<double>();
        opt.mu_given = true;
    }
    if (j.contains("n")) opt.n = j["n"].get<long long>();
    if (j.contains("replications")) opt.replications = j["replications"].get<long long>();
    if (j.contains("limit_replications"))
        opt.limit_replications = j["limit_replications"].get<long long>();
    if (j.contains("mesh")) opt.mesh = j["mesh"].get<long long>();
    if (j.contains("seed")) opt.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("threads")) opt.threads = j["threads"].get<unsigned>();
    if (j.contains("out")) opt.out_path = j["out"].get<std::string>();
    if (j.contains("case")) opt.case_name = j["case"].get<std::string>();
    if (j.contains("order")) opt.order = j["order"].get<int>();
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot write output path: " + path);
    return file;
}

unsigned effective_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

int cmd_simulate(const CliOptions& opt) {
    const inar::AutoregressiveParams params(opt.alpha, opt.beta);
    const inar::InnovationModel innovation = inar::parse_innovation(opt.innovation);
    const inar::Trajectory traj = inar::simulate(params, innovation, opt.n, opt.seed);
    std::ofstream file;
    std::ostream& os = open_output(opt.out_path, file);
    inar::write_trajectory_csv(os, traj);
    return 0;
}

int cmd_estimate(const CliOptions& opt) {
    if (opt.in_path.empty()) throw std::invalid_argument("estimate requires --in");
    if (!opt.mu_given) throw std::invalid_argument("estimate requires --mu");
    std::ifstream in(opt.in_path);
    if (!in) throw std::invalid_argument("cannot read input path: " + opt.in_path);
    const std::vector<long long> values = inar::read_trajectory_csv(in);
    const inar::EstimateResult result = inar::estimate_cls(values, opt.mu);
    std::ofstream file;
    std::ostream& os = open_output(opt.out_path, file);
    os << inar::estimate_to_json(result) << '\n';
    return 0;
}

int cmd_classify(const CliOptions& opt) {
    const inar::AutoregressiveParams params(opt.alpha, opt.beta);
    const inar::ModelClass cls = inar::classify(params);
    nlohmann::json j;
    j["alpha"] = opt.alpha;
    j["beta"] = opt.beta;
    j["rho"] = params.rho();
    j["stability"] = inar::to_string(cls.stability);
    j["regularity"] = inar::to_string(cls.regularity);
    std::ofstream file;
    std::ostream& os = open_output(opt.out_path, file);
    os << j.dump(2) << '\n';
    return 0;
}

inar::Regularity resolve_case(const CliOptions& opt) {
    if (opt.case_name == "auto")
        return inar::classify(inar::AutoregressiveParams(opt.alpha, opt.beta)).regularity;
    if (opt.case_name == "positively-regular") return inar::Regularity::PositivelyRegular;
    if (opt.case_name == "decomposable") return inar::Regularity::Decomposable;
    if (opt.case_name == "indecomposable")
        return inar::Regularity::IndecomposableNotPositivelyRegular;
    throw std::invalid_argument("unknown --case: " + opt.case_name);
}

int cmd_limit_sample(const CliOptions& opt) {
    const inar::InnovationModel innovation = inar::parse_innovation(opt.innovation);
    const double mu = innovation.mean();
    const double sigma2 = innovation.variance();
    const bool df = opt.case_name == "dickey-fuller";
    const inar::Regularity regime =
        df ? inar::Regularity::IndecomposableNotPositivelyRegular : resolve_case(opt);
    std::vector<inar::LimitSample> samples(static_cast<std::size_t>(opt.replications));
    inar::parallel_for(samples.size(), effective_threads(opt.threads), [&](std::size_t i) {
        const std::uint64_t seed = inar::mix64(inar::mix64(opt.seed) ^ i);
        if (df) {
            samples[i] = inar::dickey_fuller_sample(opt.mesh, seed);
        } else if (regime == inar::Regularity::PositivelyRegular) {
            samples[i] =
                inar::limit_rho_positively_regular(opt.alpha, opt.beta, mu, opt.mesh, seed);
        } else if (regime == inar::Regularity::Decomposable) {
            samples[i] = inar::limit_rho_decomposable(mu, sigma2, seed);
        } else {
            samples[i] = inar::limit_rho_indecomposable(mu, sigma2, seed);
        }
    });
    std::ofstream file;
    std::ostream& os = open_output(opt.out_path, file);
    inar::write_limit_samples_csv(os, samples);
    return 0;
}

int cmd_mc_compare(const CliOptions& opt, const std::string& samples_path) {
    inar::CampaignConfig config;
    config.params = inar::AutoregressiveParams(opt.alpha, opt.beta);
    config.innovation = inar::parse_innovation(opt.innovation);
    config.n = opt.n;
    config.replications = opt.replications;
    config.master_seed = opt.seed;
    config.mesh = opt.mesh;
    config.limit_replications = opt.limit_replications;
    config.threads = effective_threads(opt.threads);
    const inar::CampaignResult result = inar::run_campaign(config);
    if (!samples_path.empty()) {
        std::ofstream samples(samples_path);
        if (!samples) throw std::invalid_argument("cannot write samples path: " + samples_path);
        inar::write_campaign_samples_csv(samples, result);
    }
    std::ofstream file;
    std::ostream& os = open_output(opt.out_path, file);
    os << inar::report_to_json(result.report) << '\n';
    return 0;
}

int cmd_moments(const CliOptions& opt) {
    const inar::AutoregressiveParams params(opt.alpha, opt.beta);
    const inar::InnovationModel innovation = inar::parse_innovation(opt.innovation);
    const inar::MomentTable table = inar::exact_joint_moments(params, innovation, opt.n, opt.order);
    std::ofstream file;
    std::ostream& os = open_output(opt.out_path, file);
    inar::write_moment_table_csv(os, table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unstable integer-valued AR(2) simulation and estimation toolkit"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string config_path;
    std::string samples_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file; overrides flags");
        sub->add_option("--seed", opt.seed, "master seed");
        sub->add_option("--out", opt.out_path, "output path (default: stdout)");
    };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--alpha", opt.alpha, "first autoregressive coefficient");
        sub->add_option("--beta", opt.beta, "second autoregressive coefficient");
        sub->add_option("--innovation", opt.innovation,
                        "innovation spec, e.g. poisson:2 geometric:0.4 categorical:0.5,0.5");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "simulate a trajectory, write CSV");
    add_model(simulate);
    add_common(simulate);
    simulate->add_option("--n", opt.n, "trajectory length");

    CLI::App* estimate = app.add_subcommand("estimate", "CLS estimate from a trajectory CSV");
    add_common(estimate);
    estimate->add_option("--in", opt.in_path, "trajectory CSV path")->required();
    estimate->add_option("--mu", opt.mu, "known innovation mean")
        ->each([&](const std::string&) { opt.mu_given = true; });

    CLI::App* classify = app.add_subcommand("classify", "stability and regularity of (alpha, beta)");
    add_model(classify);
    add_common(classify);

    CLI::App* limit = app.add_subcommand("limit-sample", "draw from a limit law, write CSV");
    add_model(limit);
    add_common(limit);
    limit->add_option("--case", opt.case_name,
                      "auto | positively-regular | decomposable | indecomposable | dickey-fuller");
    limit->add_option("--mesh", opt.mesh, "discretization mesh");
    limit->add_option("--reps", opt.replications, "number of draws");
    limit->add_option("--threads", opt.threads, "worker threads (0 = cores)");

    CLI::App* compare = app.add_subcommand("mc-compare", "simulation campaign vs limit law");
    add_model(compare);
    add_common(compare);
    compare->add_option("--case", opt.case_name, "auto (the class is derived from alpha, beta)");
    compare->add_option("--n", opt.n, "trajectory length");
    compare->add_option("--reps", opt.replications, "Monte Carlo replications");
    compare->add_option("--limit-reps", opt.limit_replications, "limit-law draws");
    compare->add_option("--mesh", opt.mesh, "discretization mesh for diffusion limits");
    compare->add_option("--threads", opt.threads, "worker threads (0 = cores)");
    compare->add_option("--samples-out", samples_path, "per-replication statistics CSV path");

    CLI::App* moments = app.add_subcommand("moments", "exact joint moment table, write CSV");
    add_model(moments);
    add_common(moments);
    moments->add_option("--n", opt.n, "horizon");
    moments->add_option("--order", opt.order, "moment order (1 or 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (!config_path.empty()) apply_config(config_path, opt);
        if (simulate->parsed()) return cmd_simulate(opt);
        if (estimate->parsed()) return cmd_estimate(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (limit->parsed()) return cmd_limit_sample(opt);
        if (compare->parsed()) return cmd_mc_compare(opt, samples_path);
        if (moments->parsed()) return cmd_moments(opt);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << '\n';
        return 2;
    }
}
