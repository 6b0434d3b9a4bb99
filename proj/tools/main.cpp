#include "cli_io.hpp"
#include "cli_presets.hpp"
#include "cli_run.hpp"

#include "fmd/errors.hpp"
#include "fmd/inversion.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Options {
    int N = 0;
    int a1 = 0;
    int a2 = 0;
    double pL = 0.0;
    double pU = 0.0;
    std::string completion = "strict";
    std::string out;
    std::string format = "csv";
    bool log_output = false;

    int M = 0; // reduce: events of the reduced mass; theorem2: window cut
    int K = 0;
    double pL_ext = 0.0;
    double pU_ext = 0.0;

    double theta1 = 0.0;
    double theta2 = 0.0;
    int n_events = 0;
    int compare_N = 0;

    std::vector<double> pU_list;
    double q0 = 0.0;
    double q1 = 0.0;

    std::string theorem;
    std::string preset;
    std::string out_dir = ".";
};

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += "|";
        s += p;
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequency-mimicking predictive distributions: build "
                 "predictive vectors from interval assertions, invert them "
                 "to mass functions, move across sequence lengths, and "
                 "compare against the incomplete-beta limit."};
    app.require_subcommand(1);
    Options opt;
    int exit_code = 0;

    const auto add_assertion = [&opt](CLI::App* cmd, bool with_pU = true) {
        cmd->add_option("--N", opt.N, "number of future events conditioned on")
            ->required();
        cmd->add_option("--a1", opt.a1, "first frequency-mimicking count")
            ->required();
        cmd->add_option("--a2", opt.a2, "last frequency-mimicking count")
            ->required();
        cmd->add_option("--pL", opt.pL, "scenario lower bound, 0 < pL <= a1/N")
            ->required();
        if (with_pU)
            cmd->add_option("--pU", opt.pU,
                            "scenario upper bound, a2/N <= pU < 1")
                ->required();
        cmd->add_option("--completion", opt.completion,
                        "completion family: linear|quartic|weak|strict")
            ->capture_default_str();
    };
    const auto add_output = [&opt](CLI::App* cmd) {
        cmd->add_option("--out", opt.out, "output file path")->required();
        cmd->add_option("--format", opt.format, "output format: csv|json")
            ->capture_default_str();
    };
    const auto add_log_output = [&opt](CLI::App* cmd) {
        cmd->add_flag("--log-output", opt.log_output,
                      "write natural logs in the q and density columns");
    };
    const auto make_assertion = [&opt]() {
        return fmd::PaNAssertion(opt.N, opt.a1, opt.a2, opt.pL, opt.pU);
    };
    const auto wrote = [](const std::string& path) {
        std::cout << "wrote " << path << "\n";
    };

    auto* predict = app.add_subcommand(
        "predict", "Emit the completed predictive vector p_{a,N}");
    add_assertion(predict);
    add_output(predict);
    add_log_output(predict); // accepted for uniformity; p stays linear
    predict->callback([&] {
        const auto kind = fmd::cli::parse_kind(opt.completion);
        fmd::cli::write_table(fmd::cli::predict_table(make_assertion(), kind),
                              opt.out, opt.format);
        wrote(opt.out);
    });

    auto* mass = app.add_subcommand(
        "mass", "Invert the predictive vector to the mass of the sum over "
                "N+1 events");
    add_assertion(mass);
    add_output(mass);
    add_log_output(mass);
    mass->callback([&] {
        const auto kind = fmd::cli::parse_kind(opt.completion);
        fmd::cli::write_table(
            fmd::cli::mass_table(make_assertion(), kind, opt.log_output),
            opt.out, opt.format);
        wrote(opt.out);
    });

    auto* reduce = app.add_subcommand(
        "reduce", "Reduce the implied mass to a shorter sequence");
    add_assertion(reduce);
    reduce->add_option("--M", opt.M, "events covered by the reduced mass")
        ->required();
    add_output(reduce);
    add_log_output(reduce);
    reduce->callback([&] {
        const auto kind = fmd::cli::parse_kind(opt.completion);
        fmd::cli::write_table(fmd::cli::reduce_table(make_assertion(), kind,
                                                     opt.M, opt.log_output),
                              opt.out, opt.format);
        wrote(opt.out);
    });

    auto* extend = app.add_subcommand(
        "extend", "Extend the assertion K events further and emit the "
                  "extended mass");
    add_assertion(extend);
    extend->add_option("--K", opt.K, "number of additional events")
        ->required();
    extend
        ->add_option("--pL-ext", opt.pL_ext,
                     "scenario lower bound after extension")
        ->required();
    extend
        ->add_option("--pU-ext", opt.pU_ext,
                     "scenario upper bound after extension")
        ->required();
    add_output(extend);
    add_log_output(extend);
    extend->callback([&] {
        const auto kind = fmd::cli::parse_kind(opt.completion);
        const fmd::ExtensionScenario scenario(make_assertion(), opt.K,
                                              opt.pL_ext, opt.pU_ext);
        const auto result = fmd::cli::extend_table(scenario, kind,
                                                   opt.log_output);
        fmd::cli::write_table(result.table, opt.out, opt.format);
        wrote(opt.out);
        std::cout << "interior_mass direct="
                  << fmd::cli::fmt17(result.interior.direct_sum)
                  << " closed=" << fmd::cli::fmt17(result.interior.closed_form)
                  << "\n";
    });

    auto* limit = app.add_subcommand(
        "limit", "Emit the incomplete-beta mixture mass over n events");
    limit->add_option("--theta1", opt.theta1, "lower mixing endpoint")
        ->required();
    limit->add_option("--theta2", opt.theta2, "upper mixing endpoint")
        ->required();
    limit->add_option("--n-events", opt.n_events, "events covered by the mass")
        ->required();
    auto* compare_opt = limit->add_option(
        "--compare-N", opt.compare_N,
        "also build the matching-window assertion at this N and print the "
        "sup distance between its histogram and the limit density");
    auto* limit_pL = limit->add_option(
        "--pL", opt.pL, "bound for --compare-N (default: the window edge)");
    auto* limit_pU = limit->add_option(
        "--pU", opt.pU, "bound for --compare-N (default: the window edge)");
    limit
        ->add_option("--completion", opt.completion,
                     "completion family for --compare-N")
        ->capture_default_str();
    add_output(limit);
    add_log_output(limit);
    limit->callback([&] {
        const fmd::IncompleteBetaParams params(opt.theta1, opt.theta2);
        fmd::cli::write_table(
            fmd::cli::limit_table(opt.n_events, params, opt.log_output),
            opt.out, opt.format);
        wrote(opt.out);
        if (compare_opt->count() > 0) {
            const auto [w1, w2] =
                fmd::fm_window(opt.compare_N, opt.theta1, opt.theta2);
            const double pl = limit_pL->count() > 0
                                  ? opt.pL
                                  : static_cast<double>(w1) / opt.compare_N;
            const double pu = limit_pU->count() > 0
                                  ? opt.pU
                                  : static_cast<double>(w2) / opt.compare_N;
            const fmd::PaNAssertion pan(opt.compare_N, w1, w2, pl, pu);
            const auto q = fmd::invert_to_mass(fmd::build_predictive(
                pan, fmd::cli::parse_kind(opt.completion)));
            std::cout << "sup_distance="
                      << fmd::cli::fmt17(fmd::compare_to_limit(q, params))
                      << "\n";
        }
    });

    auto* sensitivity = app.add_subcommand(
        "sensitivity", "Sweep the upper scenario bound and write one mass "
                       "table per value");
    add_assertion(sensitivity, /*with_pU=*/false);
    sensitivity
        ->add_option("--pU-list", opt.pU_list,
                     "comma-separated upper bounds to sweep")
        ->required()
        ->delimiter(',');
    add_output(sensitivity);
    add_log_output(sensitivity);
    sensitivity->callback([&] {
        const auto kind = fmd::cli::parse_kind(opt.completion);
        const std::filesystem::path base(opt.out);
        for (const double pu : opt.pU_list) {
            const fmd::PaNAssertion pan(opt.N, opt.a1, opt.a2, opt.pL, pu);
            char tag[32];
            std::snprintf(tag, sizeof tag, "-pU%g", pu);
            const std::filesystem::path path =
                base.parent_path() /
                (base.stem().string() + tag + base.extension().string());
            fmd::cli::write_table(fmd::cli::mass_table(pan, kind,
                                                       opt.log_output),
                                  path.string(), opt.format);
            wrote(path.string());
        }
    });

    auto* geometry = app.add_subcommand(
        "geometry", "Describe the conditional-probability lines and the "
                    "concurrency of the frequency-mimicking triples (JSON)");
    add_assertion(geometry);
    geometry->add_option("--out", opt.out, "output file path")->required();
    geometry->callback([&] {
        const auto kind = fmd::cli::parse_kind(opt.completion);
        std::ofstream out(opt.out, std::ios::binary);
        if (!out)
            throw fmd::ValidationError("cannot open output file: " + opt.out);
        out << fmd::cli::geometry_json(make_assertion(), kind);
        wrote(opt.out);
    });

    auto* verify = app.add_subcommand(
        "verify", "Check one of the provable identities and exit 0/1");
    verify
        ->add_option("theorem", opt.theorem,
                     "theorem1|theorem2|theorem3|theorem5")
        ->required();
    verify->add_option("--N", opt.N, "number of future events");
    verify->add_option("--a1", opt.a1, "first frequency-mimicking count");
    verify->add_option("--a2", opt.a2, "last frequency-mimicking count");
    verify->add_option("--pL", opt.pL, "scenario lower bound");
    verify->add_option("--pU", opt.pU, "scenario upper bound");
    verify
        ->add_option("--completion", opt.completion,
                     "completion family: linear|quartic|weak|strict")
        ->capture_default_str();
    verify->add_option("--q0", opt.q0, "mass at count 0 (theorem1/theorem2)");
    verify->add_option("--q1", opt.q1, "mass at count 1 (theorem1/theorem2)");
    verify->add_option("--M", opt.M, "window cut for theorem2");
    verify->add_option("--K", opt.K, "extension length for theorem5");
    verify->add_option("--pL-ext", opt.pL_ext,
                       "extended lower bound for theorem5");
    verify->add_option("--pU-ext", opt.pU_ext,
                       "extended upper bound for theorem5");
    verify->callback([&] {
        const auto need = [&](const char* flag) {
            if (verify->count(flag) == 0)
                throw fmd::ValidationError("verify " + opt.theorem +
                                           ": missing required option " +
                                           flag);
        };
        fmd::cli::VerifyResult result;
        if (opt.theorem == "theorem1") {
            need("--N"), need("--q0"), need("--q1");
            result = fmd::cli::verify_theorem1(opt.N, opt.q0, opt.q1);
        } else if (opt.theorem == "theorem2") {
            need("--N"), need("--M"), need("--q0"), need("--q1");
            result = fmd::cli::verify_theorem2(opt.N, opt.M, opt.q0, opt.q1);
        } else if (opt.theorem == "theorem3") {
            need("--N"), need("--a1"), need("--a2"), need("--pL"),
                need("--pU");
            result = fmd::cli::verify_theorem3(
                make_assertion(), fmd::cli::parse_kind(opt.completion));
        } else if (opt.theorem == "theorem5") {
            need("--N"), need("--a1"), need("--a2"), need("--pL"),
                need("--pU"), need("--K"), need("--pL-ext"), need("--pU-ext");
            const fmd::ExtensionScenario scenario(make_assertion(), opt.K,
                                                  opt.pL_ext, opt.pU_ext);
            result = fmd::cli::verify_theorem5(
                scenario, fmd::cli::parse_kind(opt.completion));
        } else {
            throw fmd::ValidationError(
                "unknown theorem id '" + opt.theorem +
                "' (expected theorem1|theorem2|theorem3|theorem5)");
        }
        std::cout << result.detail << "\n";
        if (!result.pass) exit_code = 1;
    });

    auto* preset = app.add_subcommand(
        "preset", "Write the artifact files for one named parameter set");
    preset
        ->add_option("name", opt.preset,
                     "one of: " + join(fmd::cli::preset_names()))
        ->required();
    preset
        ->add_option("--out-dir", opt.out_dir, "directory for artifact files")
        ->capture_default_str();
    preset->add_option("--format", opt.format, "output format: csv|json")
        ->capture_default_str();
    preset->callback([&] {
        for (const auto& line :
             fmd::cli::run_preset(opt.preset, opt.out_dir, opt.format))
            std::cout << line << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const fmd::PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
