#include "qwhitney/verify.hpp"

#include <algorithm>

#include "qwhitney/identities.hpp"
#include "qwhitney/lah.hpp"
#include "qwhitney/whitney_first.hpp"
#include "qwhitney/whitney_second.hpp"

namespace qwhitney {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "routes", "defining", "orthogonality", "inverse", "ogf", "lah-matrix", "cheon-jung"};
    return names;
}

ParameterSet sample_parameter_set(std::mt19937_64& rng, int capacity, Mode mode) {
    const long long m = static_cast<long long>(draw(rng, 4));
    std::vector<long long> alpha(static_cast<std::size_t>(capacity));
    for (auto& a : alpha) {
        a = static_cast<long long>(draw(rng, 6));
    }
    return ParameterSet(m, Preset::explicit_list(std::move(alpha)), capacity, mode);
}

QLaurentPoly sample_poly(std::mt19937_64& rng, int lo_exp, int hi_exp, int max_terms) {
    QLaurentPoly p;
    const int terms = static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_terms) + 1));
    for (int i = 0; i < terms; ++i) {
        const int exp = lo_exp + static_cast<int>(draw(rng, static_cast<std::uint64_t>(hi_exp - lo_exp + 1)));
        const int coeff = -5 + static_cast<int>(draw(rng, 11));
        p += QLaurentPoly::monomial(Int(coeff), exp);
    }
    return p;
}

namespace {

// One record per failed parameter set; `detail` pinpoints the first bad entry.
struct SweepState {
    CheckOutcome outcome;

    explicit SweepState(std::string name) { outcome.check = std::move(name); }

    void record_failure(const ParameterSet& p, int dim, const CheckResult& r) {
        ++outcome.failures;
        if (outcome.ok) {
            outcome.ok = false;
            outcome.first_failure = check_report_to_json(outcome.check, p, dim, r);
        }
    }

    void record(const ParameterSet& p, int dim, const CheckResult& r) {
        if (!r.ok) {
            record_failure(p, dim, r);
        }
    }
};

template <typename T>
CheckResult compare_triangles(const Triangle<T>& a, const Triangle<T>& b) {
    if (a.rows() != b.rows()) {
        return CheckResult::fail(-1, -1, std::to_string(a.rows()), std::to_string(b.rows()));
    }
    for (int n = 0; n < a.rows(); ++n) {
        for (int k = 0; k <= n; ++k) {
            if (a.at(n, k) != b.at(n, k)) {
                if constexpr (std::is_same_v<T, Int>) {
                    return CheckResult::fail(n, k, a.at(n, k).str(), b.at(n, k).str());
                } else {
                    return CheckResult::fail(n, k, a.at(n, k).to_string(), b.at(n, k).to_string());
                }
            }
        }
    }
    return CheckResult::pass();
}

CheckResult bool_result(bool ok) {
    return ok ? CheckResult::pass() : CheckResult::fail(-1, -1, "identity", "violated");
}

CheckOutcome check_routes(const VerifyPlan& plan, std::mt19937_64& rng) {
    SweepState s("routes");
    const int rows = plan.max_n + 1;
    for (int i = 0; i < plan.samples; ++i) {
        const ParameterSet p = sample_parameter_set(rng, rows, Mode::QMode);
        const auto w1_rec = whitney_first::build_by_recurrence(p, rows);
        s.record(p, rows, compare_triangles(w1_rec, whitney_first::build_by_elementary_symmetric(p, rows)));
        s.record(p, rows, compare_triangles(w1_rec, whitney_first::build_by_vertical_recurrence(p, rows)));

        const auto w2_rec = whitney_second::build_by_recurrence(p, rows);
        s.record(p, rows, compare_triangles(w2_rec, whitney_second::build_by_complete_homogeneous(p, rows)));
        if (p.nodes_distinct(rows - 1)) {
            s.record(p, rows, compare_triangles(w2_rec, whitney_second::build_by_explicit_formula(p, rows)));
        }
        s.record(p, rows, bool_result(whitney_second::vertical_recurrence_check(p, w2_rec)));

        const ParameterSet pi(p.m(), p.preset(), p.capacity(), Mode::IntegerMode);
        const auto lah_rec = lah::build_by_recurrence(pi, rows);
        s.record(pi, rows, compare_triangles(lah_rec, lah::build_from_definition(pi, rows)));
        if (pi.nodes_distinct(rows - 1)) {
            s.record(pi, rows, compare_triangles(lah_rec, lah::build_by_explicit(pi, rows)));
        }
        s.record(pi, rows, bool_result(lah::vertical_recurrence_check(pi, lah_rec)));
    }
    return s.outcome;
}

CheckOutcome check_defining(const VerifyPlan& plan, std::mt19937_64& rng) {
    SweepState s("defining");
    const int rows = plan.max_n + 1;
    for (int i = 0; i < plan.samples; ++i) {
        const ParameterSet p = sample_parameter_set(rng, rows, Mode::QMode);
        s.record(p, rows, bool_result(whitney_first::defining_identity_check(p, rows)));
        s.record(p, rows, bool_result(whitney_second::defining_expansion_check(p, rows)));
        const ParameterSet pi(p.m(), p.preset(), p.capacity(), Mode::IntegerMode);
        s.record(pi, rows, bool_result(lah::connection_identity_check(pi, rows)));
    }
    return s.outcome;
}

CheckOutcome check_orthogonality(const VerifyPlan& plan, std::mt19937_64& rng) {
    SweepState s("orthogonality");
    const int dim = plan.max_n;
    for (int i = 0; i < plan.samples; ++i) {
        const ParameterSet p = sample_parameter_set(rng, dim, Mode::QMode);
        s.record(p, dim, orthogonality_check(p, dim));
        const auto w1 = whitney_first::build_by_recurrence(p, dim);
        const auto w2 = whitney_second::build_by_recurrence(p, dim);
        s.record(p, dim, compare_triangles(invert_triangle(w2), w1));
        s.record(p, dim, compare_triangles(invert_triangle(w1), w2));
    }
    return s.outcome;
}

CheckOutcome check_inverse(const VerifyPlan& plan, std::mt19937_64& rng) {
    SweepState s("inverse");
    const int len = plan.max_n + 1;
    for (int i = 0; i < plan.samples; ++i) {
        const ParameterSet p = sample_parameter_set(rng, len, Mode::QMode);
        for (int t = 0; t < 10; ++t) {
            std::vector<QLaurentPoly> f(static_cast<std::size_t>(len));
            for (auto& e : f) {
                e = sample_poly(rng);
            }
            const auto g = inverse_relation_apply(p, f, InverseDirection::FirstKind);
            const auto back = inverse_relation_apply(p, g, InverseDirection::SecondKind);
            if (back != f) {
                s.record_failure(p, len, CheckResult::fail(-1, -1, "round-trip", "mismatch"));
            }
        }
    }
    return s.outcome;
}

CheckOutcome check_ogf(const VerifyPlan& plan, std::mt19937_64& rng) {
    SweepState s("ogf");
    const int order = plan.max_n + 4;
    const int rows = order + 1;
    for (int i = 0; i < plan.samples; ++i) {
        const ParameterSet p = sample_parameter_set(rng, rows, Mode::QMode);
        const auto t = whitney_second::build_by_recurrence(p, rows);
        for (int k = 0; k <= plan.max_n; ++k) {
            const auto series = whitney_second::ogf_column(p, k, order);
            for (int n = 0; n <= order; ++n) {
                const QLaurentPoly expected = n >= k ? t.at(n, k) : QLaurentPoly();
                if (series.coeffs[static_cast<std::size_t>(n)] != expected) {
                    s.record_failure(p, order,
                                     CheckResult::fail(n, k,
                                                       series.coeffs[static_cast<std::size_t>(n)].to_string(),
                                                       expected.to_string()));
                }
            }
        }
    }
    return s.outcome;
}

CheckOutcome check_lah_matrix(const VerifyPlan& plan, std::mt19937_64& rng) {
    SweepState s("lah-matrix");
    const int dim = std::min(plan.max_n, 10);
    for (int i = 0; i < plan.samples; ++i) {
        const ParameterSet p = sample_parameter_set(rng, dim, Mode::IntegerMode);
        s.record(p, dim, bool_result(lah::matrix_identities_check(p, dim)));
    }
    return s.outcome;
}

CheckOutcome check_cheon_jung(const VerifyPlan& plan, std::mt19937_64&) {
    SweepState s("cheon-jung");
    const int n_max = std::min(plan.max_n, 10);
    for (long long m = 1; m <= 3; ++m) {
        for (long long r = 0; r <= 4; ++r) {
            const ParameterSet p(m, Preset::constant(r), n_max + 1, Mode::IntegerMode);
            s.record(p, n_max, bool_result(lah::cheon_jung_identity_check(m, r, n_max)));
        }
    }
    return s.outcome;
}

}  // namespace

Json VerifyReport::to_json() const {
    Json checks = Json::array();
    for (const auto& o : outcomes) {
        checks.push_back(Json{{"check", o.check},
                              {"ok", o.ok},
                              {"failures", o.failures},
                              {"first_failure", o.first_failure}});
    }
    return Json{{"seed", plan.seed},
                {"samples", plan.samples},
                {"max_n", plan.max_n},
                {"checks", std::move(checks)},
                {"ok", ok}};
}

VerifyReport run_verify_plan(const VerifyPlan& plan) {
    std::vector<std::string> selected = plan.checks.empty() ? known_checks() : plan.checks;
    for (const auto& name : selected) {
        if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end()) {
            throw DomainError("unknown check '" + name + "'");
        }
    }
    VerifyReport report;
    report.plan = plan;
    // Run in catalog order with a per-check RNG stream derived from the seed,
    // so the report does not depend on which subset was selected.
    for (std::size_t idx = 0; idx < known_checks().size(); ++idx) {
        const std::string& name = known_checks()[idx];
        if (std::find(selected.begin(), selected.end(), name) == selected.end()) {
            continue;
        }
        std::mt19937_64 rng(plan.seed + idx);
        CheckOutcome outcome;
        if (name == "routes") {
            outcome = check_routes(plan, rng);
        } else if (name == "defining") {
            outcome = check_defining(plan, rng);
        } else if (name == "orthogonality") {
            outcome = check_orthogonality(plan, rng);
        } else if (name == "inverse") {
            outcome = check_inverse(plan, rng);
        } else if (name == "ogf") {
            outcome = check_ogf(plan, rng);
        } else if (name == "lah-matrix") {
            outcome = check_lah_matrix(plan, rng);
        } else {
            outcome = check_cheon_jung(plan, rng);
        }
        report.ok = report.ok && outcome.ok;
        report.outcomes.push_back(std::move(outcome));
    }
    return report;
}

}  // namespace qwhitney
