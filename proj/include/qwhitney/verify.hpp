#pragma once

#include <random>
#include <string>
#include <vector>

#include "qwhitney/params.hpp"
#include "qwhitney/serialize.hpp"

namespace qwhitney {

/// Seed used by the CLI and the acceptance sweep when none is given.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// A deterministic verification sweep: which identity checks to run, over how
/// many sampled parameter sets, up to which triangle size. Identical plans
/// produce byte-identical reports.
struct VerifyPlan {
    std::vector<std::string> checks;  // empty = all known checks
    std::uint64_t seed = kDefaultSeed;
    int samples = 25;
    int max_n = 12;
};

/// All check names understood by run_verify_plan, in report order:
/// routes, defining, orthogonality, inverse, ogf, lah-matrix, cheon-jung.
const std::vector<std::string>& known_checks();

/// Uniform sample with m in [0,3] and alpha_j in [0,5], the distribution used
/// by every verification sweep. Bounded draws use modular reduction on the
/// raw engine output so sequences are identical across platforms.
ParameterSet sample_parameter_set(std::mt19937_64& rng, int capacity, Mode mode);

/// Random Laurent polynomial with exponents in [lo_exp, hi_exp] and small
/// coefficients; used for sequence round-trips and ring-axiom sampling.
QLaurentPoly sample_poly(std::mt19937_64& rng, int lo_exp = -3, int hi_exp = 3,
                         int max_terms = 4);

struct CheckOutcome {
    std::string check;
    bool ok = true;
    int failures = 0;
    Json first_failure;  // null when ok
};

struct VerifyReport {
    VerifyPlan plan;
    std::vector<CheckOutcome> outcomes;
    bool ok = true;

    Json to_json() const;
};

/// Runs every requested check; throws DomainError on unknown check names.
VerifyReport run_verify_plan(const VerifyPlan& plan);

}  // namespace qwhitney
