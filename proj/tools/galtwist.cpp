// SPDX-License-Identifier: Apache-2.0
//
// Command-line front-end. Exit codes: 0 = pass, 1 = a mathematical check
// failed, 2 = input error (unreadable spec, syntax error, structural
// violation, bad prime, missing descriptor).
#include "galtwist/galtwist.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

namespace {

using namespace galtwist;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
    std::string spec_path;
    unsigned m_override = 0;
};

SpecFile load(const CommonOptions& opts) {
    SpecFile spec = load_spec_file(opts.spec_path);
    if (opts.m_override > 0) spec.override_m(opts.m_override);
    for (const auto& w : spec.parse_warnings) std::cerr << "warning: " << w << "\n";
    return spec;
}

void ensure_well_formed(const SpecFile& spec) {
    SpecIssues issues = spec.abelian ? spec.abelian->validate() : spec.dihedral->validate();
    for (const auto& w : issues.warnings) std::cerr << "warning: " << w << "\n";
    if (!issues.ok()) {
        for (const auto& e : issues.errors) std::cerr << "error: " << e << "\n";
        throw SpecFileError("spec is not well-formed: " + issues.errors.front());
    }
}

int run_build(const CommonOptions& opts, const std::string& out_path, const std::string& format) {
    SpecFile spec = load(opts);
    ensure_well_formed(spec);
    BuildOutput build =
        spec.abelian ? make_build_output(*spec.abelian) : make_build_output(*spec.dihedral);
    std::string payload =
        format == "text" ? build_to_text(build) : to_json(build).dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInputError;
        }
        out << payload;
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitPass;
}

int run_verify(const CommonOptions& opts, const std::string& format) {
    SpecFile spec = load(opts);
    VerificationReport report =
        spec.abelian ? full_verification(*spec.abelian) : full_verification(*spec.dihedral);
    if (format == "structured")
        std::cout << to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    for (const auto& check : report.checks)
        if (check.status == CheckStatus::Fail && check.name == "well-formedness")
            return kExitInputError;
    return report.overall_pass() ? kExitPass : kExitMathFailure;
}

int run_rank(const CommonOptions& opts) {
    SpecFile spec = load(opts);
    ensure_well_formed(spec);
    if (!spec.descriptor) {
        std::cerr << "error: spec file has no descriptor block (rk_end, torsion, ...)\n";
        return kExitInputError;
    }
    const AbelianVarietyDescriptor& desc = *spec.descriptor;
    unsigned m = spec.m();
    std::vector<std::string> notes;
    unsigned rank;
    unsigned degree;
    if (spec.abelian) {
        degree = 1;
        for (const auto& layer : spec.abelian->layers) degree *= layer.n;
        rank = predict_mw_rank(desc, m, &notes);
    } else {
        degree = 2 * spec.dihedral->n;
        rank = dihedral_jacobian_rank(desc, m, &notes);
    }
    MWPrediction shape = predict_mw_group(desc, m, degree);
    std::cout << "predicted Mordell-Weil rank: " << rank;
    if (!desc.assert_no_extra_factor) std::cout << "  [lower bound]";
    std::cout << "\n";
    std::cout << "group shape: " << shape.group_shape << "\n";
    for (const auto& n : notes) std::cout << "note: " << n << "\n";
    for (const auto& n : shape.notes) std::cout << "note: " << n << "\n";
    return kExitPass;
}

int run_ffcheck(const CommonOptions& opts, const std::string& primes_csv, unsigned trials,
                std::uint64_t seed) {
    SpecFile spec = load(opts);
    ensure_well_formed(spec);
    std::vector<std::uint64_t> primes;
    {
        std::stringstream ss(primes_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            primes.push_back(std::stoull(item));
        }
    }
    if (primes.empty()) {
        std::cerr << "error: empty prime list\n";
        return kExitInputError;
    }
    if (trials == 0) {
        std::cout << "warning: trials = 0, no samples drawn\n";
        return kExitPass;
    }

    BuildOutput build =
        spec.abelian ? make_build_output(*spec.abelian) : make_build_output(*spec.dihedral);

    bool all_pass = true;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        std::uint64_t p = primes[k];
        std::mt19937_64 rng(seed * 1000003 + p);
        unsigned valid = 0, passed = 0, rejected_denominator = 0;
        unsigned attempts_budget = trials * 50;
        while (valid < trials && attempts_budget > 0) {
            --attempts_budget;
            std::optional<FFSample> sample;
            // sampling throws BadPrimeError for a structurally bad prime
            if (spec.abelian)
                sample = sample_cover_point(*spec.abelian, p, 1, rng);
            else
                sample = sample_cover_point(*spec.dihedral, p, 1, rng);
            if (!sample) continue;
            FFCheckOutcome outcome = check_twist_point_ff(*sample, build.twist, build.points);
            if (outcome == FFCheckOutcome::ZeroDenominator) {
                ++rejected_denominator;
                continue;
            }
            ++valid;
            if (outcome == FFCheckOutcome::Pass) ++passed;
        }
        double ratio = valid ? 100.0 * passed / valid : 0.0;
        std::cout << "p=" << p << ": valid samples=" << valid << " pass=" << passed << " ("
                  << ratio << "%)";
        if (rejected_denominator)
            std::cout << "  [" << rejected_denominator << " samples rejected: vanishing denominator]";
        std::cout << "\n";
        if (valid == 0) {
            std::cout << "warning: no valid samples for p=" << p << "\n";
        } else if (passed != valid) {
            all_pass = false;
        }
    }
    return all_pass ? kExitPass : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification engine for twists of Galois covers"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string out_path = "-";
    std::string format = "structured";
    std::string verify_format = "text";
    std::string primes_csv = "7,11,13";
    unsigned trials = 100;
    std::uint64_t seed = 0;

    auto add_common = [&opts](CLI::App* cmd) {
        cmd->add_option("--spec", opts.spec_path, "path to a JSON cover spec")->required();
        cmd->add_option("--m", opts.m_override, "override the number of copies m");
    };

    CLI::App* build = app.add_subcommand("build", "construct cover/product/quotient/twist and points");
    add_common(build);
    build->add_option("--out", out_path, "output path ('-' for stdout)");
    build->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    CLI::App* verify = app.add_subcommand("verify", "run the full symbolic verification");
    add_common(verify);
    verify->add_option("--format", verify_format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    CLI::App* rank = app.add_subcommand("rank", "predict the Mordell-Weil rank and group shape");
    add_common(rank);

    CLI::App* ffcheck = app.add_subcommand("ffcheck", "finite-field sampling oracle");
    add_common(ffcheck);
    ffcheck->add_option("--primes", primes_csv, "comma-separated primes");
    ffcheck->add_option("--trials", trials, "valid samples per prime");
    ffcheck->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
        if (build->parsed()) return run_build(opts, out_path, format);
        if (verify->parsed()) return run_verify(opts, verify_format);
        if (rank->parsed()) return run_rank(opts);
        if (ffcheck->parsed()) return run_ffcheck(opts, primes_csv, trials, seed);
        return kExitInputError;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
