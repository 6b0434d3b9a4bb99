#include "cli_run.hpp"

#include "fmd/errors.hpp"
#include "fmd/geometry.hpp"
#include "fmd/inversion.hpp"
#include "fmd/reduction.hpp"

#include "json.hpp"

#include <cmath>
#include <utility>

namespace fmd::cli {

CompletionKind parse_kind(const std::string& name) {
    if (name == "linear") return CompletionKind::Linear;
    if (name == "quartic") return CompletionKind::Quartic;
    if (name == "weak") return CompletionKind::Weak;
    if (name == "strict") return CompletionKind::Strict;
    throw ValidationError("unknown completion kind: " + name);
}

std::string kind_name(CompletionKind kind) {
    switch (kind) {
    case CompletionKind::Linear: return "linear";
    case CompletionKind::Quartic: return "quartic";
    case CompletionKind::Weak: return "weak";
    case CompletionKind::Strict: return "strict";
    }
    throw ValidationError("unknown completion kind");
}

namespace {

// Shared layout for every mass-bearing table: one row per component of q
// (over `events` events), abscissa a/events, density (events+1)*q_a, and
// the paired predictive in the p_aN column while it has entries.
Table mass_like_table(const PredictiveVector* p, const MassFunction& q,
                      bool log_output) {
    Table t;
    t.log_output = log_output;
    const int n = q.events();
    const double log_bins = std::log(static_cast<double>(n) + 1.0);
    t.rows.reserve(q.size());
    for (int a = 0; a <= n; ++a) {
        TableRow r;
        r.a = a;
        r.abscissa = static_cast<double>(a) / n;
        if (p && a < static_cast<int>(p->size()))
            r.p_aN = (*p)[a];
        if (log_output) {
            r.q_aNp1 = q.log_at(static_cast<std::size_t>(a));
            r.density = *r.q_aNp1 + log_bins;
        } else {
            r.q_aNp1 = q.at(static_cast<std::size_t>(a));
            r.density = *r.q_aNp1 * (n + 1);
        }
        t.rows.push_back(r);
    }
    return t;
}

} // namespace

Table predict_table(const PaNAssertion& pan, CompletionKind kind) {
    const PredictiveVector p = build_predictive(pan, kind);
    Table t;
    t.rows.reserve(p.size());
    for (int a = 0; a <= pan.N; ++a) {
        TableRow r;
        r.a = a;
        r.abscissa = static_cast<double>(a) / pan.N;
        r.p_aN = p[a];
        t.rows.push_back(r);
    }
    return t;
}

Table mass_table(const PaNAssertion& pan, CompletionKind kind,
                 bool log_output) {
    const PredictiveVector p = build_predictive(pan, kind);
    const MassFunction q = invert_to_mass(p);
    return mass_like_table(&p, q, log_output);
}

Table reduce_table(const PaNAssertion& pan, CompletionKind kind,
                   int target_events, bool log_output) {
    const PredictiveVector p = build_predictive(pan, kind);
    const MassFunction q = reduce_mass_to(invert_to_mass(p), target_events);
    if (q.strictly_positive()) {
        const PredictiveVector rp = mass_to_predictive(q);
        return mass_like_table(&rp, q, log_output);
    }
    return mass_like_table(nullptr, q, log_output);
}

ExtendOutput extend_table(const ExtensionScenario& scenario,
                          CompletionKind kind, bool log_output) {
    const PaNAssertion extended = extend_assertion(scenario);
    const PredictiveVector p = build_predictive(extended, kind);
    const MassFunction q = invert_to_mass(p);
    return {mass_like_table(&p, q, log_output),
            interior_mass(scenario, kind)};
}

Table limit_table(int n_events, const IncompleteBetaParams& params,
                  bool log_output) {
    const MassFunction q = incomplete_beta_mixture_mass(n_events, params);
    const PredictiveVector p = mass_to_predictive(q);
    return mass_like_table(&p, q, log_output);
}

namespace {

nlohmann::ordered_json line_json(const ConditionalLine& line) {
    nlohmann::ordered_json j;
    j["a"] = line.a;
    j["N"] = line.N;
    j["p"] = line.p;
    j["anchor_alpha"] = line.anchor_alpha();
    j["anchor_beta"] = line.anchor_beta();
    j["slope"] = line.slope();
    j["exact_fm"] = line.exact_fm();
    return j;
}

} // namespace

std::string geometry_json(const PaNAssertion& pan, CompletionKind kind) {
    const PredictiveVector p = build_predictive(pan, kind);
    nlohmann::ordered_json doc;
    doc["assertion"] = {{"N", pan.N},
                        {"a1", pan.a1},
                        {"a2", pan.a2},
                        {"pL", pan.pL},
                        {"pU", pan.pU}};
    doc["completion"] = kind_name(kind);

    nlohmann::ordered_json lines = nlohmann::ordered_json::array();
    for (int a = 0; a <= pan.N; ++a)
        lines.push_back(line_json(line_for_conditional(a, pan.N, p[a])));
    doc["lines"] = std::move(lines);

    // every adjacent pair inside the window, with its coherent reduction:
    // frequency-mimicking triples meet at the origin
    nlohmann::ordered_json triples = nlohmann::ordered_json::array();
    for (int a = pan.a1; a + 1 <= pan.a2; ++a) {
        const ConditionalLine l1 = line_for_conditional(a, pan.N, p[a]);
        const ConditionalLine l2 = line_for_conditional(a + 1, pan.N, p[a + 1]);
        const double reduced = p[a] / (1.0 - p[a + 1] + p[a]);
        const ConditionalLine l3 = line_for_conditional(a, pan.N - 1, reduced);
        const ConcurrencyResult c = concurrency_check(l1, l2, l3);
        nlohmann::ordered_json j;
        j["a"] = a;
        j["reduced_p"] = reduced;
        j["parallel"] = c.parallel;
        if (!c.parallel) {
            j["alpha"] = c.alpha;
            j["beta"] = c.beta;
        }
        j["exact"] = c.exact;
        triples.push_back(std::move(j));
    }
    doc["fm_triples"] = std::move(triples);
    return doc.dump(2) + "\n";
}

VerifyResult verify_theorem1(int N, double q0, double q1) {
    const MassFunction q = full_fm_mass(N, q0, q1);
    double dev = 0.0;
    if (q1 > 0.0) {
        for (int a = 2; a <= N; ++a) {
            const double want = (1.0 / a) *
                                (static_cast<double>(N) / (N - a + 1)) * q1;
            dev = std::max(dev,
                           std::fabs(q.at(static_cast<std::size_t>(a)) - want) /
                               want);
        }
    }
    const bool pass = dev < 1e-14;
    return {"theorem1: max_ratio_deviation=" + fmt17(dev) +
                " threshold=1e-14 -> " + (pass ? "PASS" : "FAIL"),
            pass};
}

VerifyResult verify_theorem2(int N, int M, double q0, double q1) {
    const SumBoundCheck c = interior_sum_bound_check(N, M, q0, q1);
    const bool pass = c.lhs <= c.rhs;
    return {"theorem2: lhs=" + fmt17(c.lhs) + " rhs=" + fmt17(c.rhs) +
                " -> " + (pass ? "PASS" : "FAIL"),
            pass};
}

VerifyResult verify_theorem3(const PaNAssertion& pan, CompletionKind kind) {
    const double dev = reduction_chain_deviation(pan, kind);
    const bool pass = dev < 1e-12;
    return {"theorem3: max_deviation=" + fmt17(dev) + " threshold=1e-12 -> " +
                (pass ? "PASS" : "FAIL"),
            pass};
}

VerifyResult verify_theorem5(const ExtensionScenario& scenario,
                             CompletionKind kind) {
    const InteriorMassResult r = interior_mass(scenario, kind);
    const double rel = std::fabs(r.direct_sum - r.closed_form) /
                       std::fabs(r.direct_sum);
    const bool pass = rel < 1e-10;
    return {"theorem5: direct=" + fmt17(r.direct_sum) +
                " closed=" + fmt17(r.closed_form) +
                " relative_gap=" + fmt17(rel) + " threshold=1e-10 -> " +
                (pass ? "PASS" : "FAIL"),
            pass};
}

} // namespace fmd::cli
