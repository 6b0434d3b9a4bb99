#include "cli_presets.hpp"

#include "cli_io.hpp"
#include "cli_run.hpp"

#include "fmd/errors.hpp"
#include "fmd/inversion.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace fmd::cli {

namespace {

const std::vector<std::string> kNames = {
    "fig1",      "fig2-top", "fig2-bottom", "fig3",
    "fig4",      "fig8",     "appendix1",   "appendix2"};

constexpr CompletionKind kAllKinds[] = {
    CompletionKind::Linear, CompletionKind::Quartic, CompletionKind::Weak,
    CompletionKind::Strict};

std::string table_path(const std::string& dir, const std::string& stem,
                       const std::string& format) {
    return (std::filesystem::path(dir) / (stem + "." + format)).string();
}

} // namespace

std::vector<std::string> preset_names() { return kNames; }

std::vector<std::string> run_preset(const std::string& name,
                                    const std::string& out_dir,
                                    const std::string& format) {
    std::vector<std::string> log;
    const auto emit = [&](const Table& t, const std::string& stem) {
        const std::string path = table_path(out_dir, stem, format);
        write_table(t, path, format);
        log.push_back("wrote " + path);
    };

    if (name == "fig1") {
        // the four completion curves of one assertion
        const PaNAssertion pan(100, 25, 60, 0.1, 0.7);
        for (CompletionKind kind : kAllKinds)
            emit(predict_table(pan, kind), "fig1-" + kind_name(kind));
    } else if (name == "fig2-top" || name == "fig2-bottom") {
        const PaNAssertion pan = name == "fig2-top"
                                     ? PaNAssertion(100, 25, 60, 0.1, 0.7)
                                     : PaNAssertion(1000, 250, 600, 0.1, 0.7);
        for (CompletionKind kind : kAllKinds)
            emit(mass_table(pan, kind, false), name + "-" + kind_name(kind));
    } else if (name == "fig3") {
        // the long reduction: 10^5 conditioning events brought down to 101
        const PaNAssertion pan(100000, 25000, 60000, 0.1, 0.7);
        for (CompletionKind kind :
             {CompletionKind::Linear, CompletionKind::Strict})
            emit(reduce_table(pan, kind, 101, false),
                 "fig3-" + kind_name(kind));
    } else if (name == "fig4") {
        const PaNAssertion base(100, 25, 60, 0.1, 0.7);
        const ExtensionScenario scenario(base, 99900, 0.00012, 0.99998);
        ExtendOutput out = extend_table(scenario, CompletionKind::Linear,
                                        false);
        emit(out.table, "fig4-linear");
        log.push_back("fig4 interior_mass direct=" +
                      fmt17(out.interior.direct_sum) +
                      " closed=" + fmt17(out.interior.closed_form));
    } else if (name == "fig8") {
        const IncompleteBetaParams params(0.2, 0.6);
        for (int N : {100, 1000, 100000}) {
            const auto [w1, w2] = fm_window(N, 0.2, 0.6);
            const PaNAssertion pan(N, w1, w2, 0.1, 0.8);
            const PredictiveVector p =
                build_predictive(pan, CompletionKind::Strict);
            const MassFunction q = invert_to_mass(p);
            Table t = mass_table(pan, CompletionKind::Strict, false);
            emit(t, "fig8-N" + std::to_string(N));
            log.push_back("fig8 N=" + std::to_string(N) + " sup_distance=" +
                          fmt17(compare_to_limit(q, params)));
        }
        emit(limit_table(1001, params, false), "fig8-limit");
    } else if (name == "appendix1") {
        for (double pU : {0.75, 0.79, 0.83}) {
            char stem[32];
            std::snprintf(stem, sizeof stem, "appendix1-pU%g", pU);
            emit(mass_table(PaNAssertion(100, 25, 60, 0.1, pU),
                            CompletionKind::Weak, false),
                 stem);
        }
    } else if (name == "appendix2") {
        const std::string path =
            (std::filesystem::path(out_dir) / "appendix2-geometry.json")
                .string();
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw ValidationError("cannot open output file: " + path);
        out << geometry_json(PaNAssertion(8, 2, 5, 0.2, 0.7),
                             CompletionKind::Strict);
        log.push_back("wrote " + path);
    } else {
        throw ValidationError("unknown preset: " + name);
    }
    return log;
}

} // namespace fmd::cli
