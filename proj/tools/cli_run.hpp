#pragma once

#include "cli_io.hpp"

#include "fmd/completions.hpp"
#include "fmd/limits.hpp"
#include "fmd/theorems.hpp"

#include <string>

namespace fmd::cli {

CompletionKind parse_kind(const std::string& name);
std::string kind_name(CompletionKind kind);

// Tables for the common verbs.  log_output switches the q and density
// columns (only) to natural logs; predictive components stay linear.
Table predict_table(const PaNAssertion& pan, CompletionKind kind);
Table mass_table(const PaNAssertion& pan, CompletionKind kind,
                 bool log_output);
Table reduce_table(const PaNAssertion& pan, CompletionKind kind,
                   int target_events, bool log_output);

struct ExtendOutput {
    Table table;
    InteriorMassResult interior;
};
ExtendOutput extend_table(const ExtensionScenario& scenario,
                          CompletionKind kind, bool log_output);

Table limit_table(int n_events, const IncompleteBetaParams& params,
                  bool log_output);

// Line-system description of the assertion: every conditional line plus
// the concurrency result of each frequency-mimicking triple.
std::string geometry_json(const PaNAssertion& pan, CompletionKind kind);

struct VerifyResult {
    std::string detail; // one human-readable line, no trailing newline
    bool pass = false;
};

VerifyResult verify_theorem1(int N, double q0, double q1);
VerifyResult verify_theorem2(int N, int M, double q0, double q1);
VerifyResult verify_theorem3(const PaNAssertion& pan, CompletionKind kind);
VerifyResult verify_theorem5(const ExtensionScenario& scenario,
                             CompletionKind kind);

} // namespace fmd::cli
