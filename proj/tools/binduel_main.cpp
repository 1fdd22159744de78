// Command-line front end: compute single duel probabilities, emit sequence
// traces as CSV/JSON, classify phases, locate modes, run the verification
// suites, and run seeded simulations.
//
// Exit codes: 0 success, 1 usage or parameter error, 2 verification failure,
// 3 numeric disagreement.

#include "binduel/checks.hpp"
#include "binduel/report.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace binduel;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitDisagreement = 3;

struct OutputOptions {
    std::string format;     // empty = the command's default
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
    cmd->add_option("--format", opts->format, "output format (default json; trace defaults to csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts->out_path, "write output to a file instead of stdout");
}

void emit(const OutputOptions& opts, const OrderedJson& as_json, const std::string& as_csv,
          const std::string& default_format = "json") {
    const std::string format = opts.format.empty() ? default_format : opts.format;
    const std::string payload = format == "json" ? as_json.dump(2) + "\n" : as_csv;
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + opts.out_path + "'");
    out << payload;
}

Rational parse_alpha(const std::string& text) {
    const Rational alpha = Rational::parse(text);
    if (alpha.sign() <= 0 || alpha >= Rational(1))
        throw std::domain_error("alpha must lie strictly between 0 and 1");
    return alpha;
}

long auto_mode_limit(const Rational& alpha, int r) {
    const double est = mode_location_estimate(alpha, r);
    return std::min<long>(kExactNLimit,
                          std::max<long>(64, 4 * static_cast<long>(std::ceil(est)) + 64));
}

int run_compute(const std::string& alpha_text, long n, int r, int d, const std::string& method,
                const OutputOptions& out) {
    const DuelParams params(parse_alpha(alpha_text), n, r, d);
    ComputeRecord rec{params.alpha, params.n, params.r, params.d, method,
                      std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    if (method == "exact" || method == "both") rec.exact = win_probability(params);
    if (method == "quadrature" || method == "both")
        rec.quadrature = win_probability_quadrature(params);
    if (method == "both") {
        rec.abs_difference = std::abs(rec.exact->to_double() - *rec.quadrature);
        rec.agreement = *rec.abs_difference <= 1e-10;
    }
    emit(out, compute_to_json(rec), compute_to_csv(rec));
    if (rec.agreement && !*rec.agreement) {
        std::cerr << "binduel: exact and quadrature values disagree by "
                  << format_double(*rec.abs_difference) << "\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

int run_trace(const std::string& alpha_text, int r, int d, long n_from, long n_to,
              const std::string& method, const OutputOptions& out) {
    const Rational alpha = parse_alpha(alpha_text);
    const SequenceTrace tr = method == "exact" ? exact_trace(alpha, r, d, n_from, n_to)
                                               : quadrature_trace(alpha, r, d, n_from, n_to);
    emit(out, trace_to_json(tr), trace_to_csv(tr), "csv");
    return kExitOk;
}

int run_classify(const std::string& alpha_text, int r, int d, const OutputOptions& out) {
    const Rational alpha = parse_alpha(alpha_text);
    const ClassifyRecord rec{alpha, r, d, classify(alpha, r, d)};
    emit(out, classify_to_json(rec), classify_to_csv(rec));
    return kExitOk;
}

int run_mode(const std::string& alpha_text, int r, long n_max, const OutputOptions& out) {
    const Rational alpha = parse_alpha(alpha_text);
    const PhaseReport rep = classify(alpha, r, 1);
    if (rep.regime != Regime::Unimodal)
        throw std::domain_error(
            "mode is defined only in the unimodal band 1/(2r) < alpha <= 1/(r+1); "
            "classification here: " + std::string(regime_name(rep.regime)));
    if (n_max <= 0) n_max = auto_mode_limit(alpha, r);
    ModeRecord rec;
    rec.alpha = alpha;
    rec.r = r;
    rec.n_max = n_max;
    rec.mode = find_mode(alpha, r, n_max);
    rec.asymptotic_estimate = mode_location_estimate(alpha, r);
    rec.ratio = static_cast<double>(rec.mode) / rec.asymptotic_estimate;
    emit(out, mode_to_json(rec), mode_to_csv(rec));
    return kExitOk;
}

int run_verify(const std::string& suite_name, const OutputOptions& out) {
    VerifyRecord rec;
    rec.suite = suite_name;
    rec.checks = checks::suite(suite_name);
    for (const CheckResult& c : rec.checks) rec.failures += c.pass ? 0 : 1;
    emit(out, verify_to_json(rec), verify_to_csv(rec));
    if (rec.failures > 0) {
        std::cerr << "binduel: " << rec.failures << " verification check(s) failed\n";
        return kExitVerifyFailure;
    }
    return kExitOk;
}

int run_simulate(const std::string& alpha_text, long n, int r, int d, std::uint64_t trials,
                 std::uint64_t seed, const OutputOptions& out) {
    const DuelParams params(parse_alpha(alpha_text), n, r, d);
    SimulateRecord rec;
    rec.kind = "duel";
    rec.alpha = params.alpha;
    rec.n = n;
    rec.r = r;
    rec.d = d;
    rec.trials = trials;
    rec.seed = seed;
    rec.estimate = simulate_duel(params, SimConfig{trials, seed});
    if (n <= kExactNLimit) {
        rec.reference = win_probability(params);
        const double exact = rec.reference->to_double();
        const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
        rec.sigma_distance = sigma > 0 ? std::abs(rec.estimate.p_hat - exact) / sigma : 0.0;
    }
    emit(out, simulate_to_json(rec), simulate_to_csv(rec));
    return kExitOk;
}

int run_simulate_doubleexp(const std::string& alpha_text, long n, double scale,
                           std::uint64_t trials, std::uint64_t seed, const OutputOptions& out) {
    const Rational alpha = parse_alpha(alpha_text);
    SimulateRecord rec;
    rec.kind = "double-exponential";
    rec.alpha = alpha;
    rec.n = n;
    rec.scale = scale;
    rec.trials = trials;
    rec.seed = seed;
    rec.estimate = simulate_double_exponential(n, alpha, scale, SimConfig{trials, seed});
    rec.reference = win_probability(DuelParams(alpha, n - 1, 1, 1));
    const double exact = rec.reference->to_double();
    const double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
    rec.sigma_distance = sigma > 0 ? std::abs(rec.estimate.p_hat - exact) / sigma : 0.0;
    emit(out, simulate_to_json(rec), simulate_to_csv(rec));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"competing binomial duel probabilities: exact kernel, quadrature, "
                 "phase classification, and seeded simulation"};
    app.require_subcommand(1);

    std::string alpha_text, method = "both", trace_method = "exact", suite_name = "all";
    long n = 0, n_from = 0, n_to = 0, n_max = 0;
    int r = 1, d = 1;
    double scale = 1.0;
    std::uint64_t trials = 100000, seed = 12345;
    OutputOptions out;

    CLI::App* compute = app.add_subcommand("compute", "one value of the duel probability");
    compute->add_option("--alpha", alpha_text, "heads probability, e.g. 3/10 or 0.3")->required();
    compute->add_option("--n", n, "common toss count")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--r", r, "extra tosses")->check(CLI::PositiveNumber)->capture_default_str();
    compute->add_option("--d", d, "required lead")->check(CLI::PositiveNumber)->capture_default_str();
    compute->add_option("--method", method, "evaluation path")
        ->check(CLI::IsMember({"exact", "quadrature", "both"}))
        ->capture_default_str();
    add_output_flags(compute, &out);

    CLI::App* trace = app.add_subcommand("trace", "sequence p_n over a range of n");
    trace->add_option("--alpha", alpha_text, "heads probability")->required();
    trace->add_option("--r", r, "extra tosses")->check(CLI::PositiveNumber)->capture_default_str();
    trace->add_option("--d", d, "required lead")->check(CLI::PositiveNumber)->capture_default_str();
    trace->add_option("--from", n_from, "first n")->check(CLI::NonNegativeNumber)->capture_default_str();
    trace->add_option("--to", n_to, "last n")->required()->check(CLI::NonNegativeNumber);
    trace->add_option("--method", trace_method, "evaluation path")
        ->check(CLI::IsMember({"exact", "quadrature"}))
        ->capture_default_str();
    add_output_flags(trace, &out);

    CLI::App* classify_cmd = app.add_subcommand("classify", "monotonicity regime of (alpha, r, d)");
    classify_cmd->add_option("--alpha", alpha_text, "heads probability")->required();
    classify_cmd->add_option("--r", r, "extra tosses")->check(CLI::PositiveNumber)->capture_default_str();
    classify_cmd->add_option("--d", d, "required lead")->check(CLI::PositiveNumber)->capture_default_str();
    add_output_flags(classify_cmd, &out);

    CLI::App* mode_cmd = app.add_subcommand("mode", "mode of the unimodal d=1 sequence");
    mode_cmd->add_option("--alpha", alpha_text, "heads probability")->required();
    mode_cmd->add_option("--r", r, "extra tosses")->required()->check(CLI::PositiveNumber);
    mode_cmd->add_option("--n-max", n_max, "scan limit (0 = auto)")->capture_default_str();
    add_output_flags(mode_cmd, &out);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite_name, "suite to run")
        ->check(CLI::IsMember({"identities", "oracle", "phases", "asymptotics", "montecarlo",
                               "conjectures", "all"}))
        ->capture_default_str();
    add_output_flags(verify_cmd, &out);

    CLI::App* simulate = app.add_subcommand("simulate", "seeded Monte Carlo duel");
    simulate->add_option("--alpha", alpha_text, "heads probability")->required();
    simulate->add_option("--n", n, "common toss count")->required()->check(CLI::NonNegativeNumber);
    simulate->add_option("--r", r, "extra tosses")->check(CLI::PositiveNumber)->capture_default_str();
    simulate->add_option("--d", d, "required lead")->check(CLI::PositiveNumber)->capture_default_str();
    simulate->add_option("--trials", trials, "number of trials")->capture_default_str();
    simulate->add_option("--seed", seed, "rng seed")->capture_default_str();
    add_output_flags(simulate, &out);

    CLI::App* doubleexp =
        app.add_subcommand("simulate-doubleexp", "positivity of a double-sided exponential sum");
    doubleexp->add_option("--alpha", alpha_text, "heads probability")->required();
    doubleexp->add_option("--n", n, "number of summands")->required()->check(CLI::PositiveNumber);
    doubleexp->add_option("--a", scale, "scale parameter (sign-invariant)")->capture_default_str();
    doubleexp->add_option("--trials", trials, "number of trials")->capture_default_str();
    doubleexp->add_option("--seed", seed, "rng seed")->capture_default_str();
    add_output_flags(doubleexp, &out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(alpha_text, n, r, d, method, out);
        if (trace->parsed()) return run_trace(alpha_text, r, d, n_from, n_to, trace_method, out);
        if (classify_cmd->parsed()) return run_classify(alpha_text, r, d, out);
        if (mode_cmd->parsed()) return run_mode(alpha_text, r, n_max, out);
        if (verify_cmd->parsed()) return run_verify(suite_name, out);
        if (simulate->parsed()) return run_simulate(alpha_text, n, r, d, trials, seed, out);
        if (doubleexp->parsed())
            return run_simulate_doubleexp(alpha_text, n, scale, trials, seed, out);
    } catch (const ModeBeyondRange& e) {
        std::cerr << "binduel: mode beyond scan range: " << e.what() << " (raise --n-max)\n";
        return kExitUsage;
    } catch (const QuadratureNonConvergence& e) {
        std::cerr << "binduel: " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "binduel: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
