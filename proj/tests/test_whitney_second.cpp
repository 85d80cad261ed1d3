#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qwhitney/qcalc.hpp"
#include "qwhitney/verify.hpp"
#include "qwhitney/whitney_second.hpp"

using namespace qwhitney;
namespace ws = qwhitney::whitney_second;

namespace {

std::vector<QLaurentPoly> brackets(const ParameterSet& p, int count) {
    std::vector<QLaurentPoly> b;
    for (int j = 0; j < count; ++j) {
        b.push_back(p.q_node(j));
    }
    return b;
}

ParameterSet sample_distinct(std::mt19937_64& rng, int capacity) {
    for (;;) {
        ParameterSet p = sample_parameter_set(rng, capacity, Mode::QMode);
        if (p.nodes_distinct(capacity - 1)) {
            return p;
        }
    }
}

}  // namespace

TEST_SUITE("whitney_second") {

TEST_CASE("matrix-display entries hold for sampled parameters") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 10; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 6, Mode::QMode);
        const auto t = ws::build_by_recurrence(p, 4);
        const auto b = brackets(p, 3);
        CHECK(t.at(1, 0) == b[0]);
        CHECK(t.at(2, 0) == b[0].pow(2));
        CHECK(t.at(2, 1) == b[0] + b[1]);
        CHECK(t.at(3, 0) == b[0].pow(3));
        CHECK(t.at(3, 1) == b[0].pow(2) + b[0] * b[1] + b[1].pow(2));
        CHECK(t.at(3, 2) == b[0] + b[1] + b[2]);
        for (int n = 0; n < 4; ++n) {
            CHECK(t.at(n, n).is_one());
        }
    }
}

TEST_CASE("frozen small values") {
    const ParameterSet p(1, Preset::zero(), 4);
    const auto t = ws::build_by_recurrence(p, 4);
    // h_1([0]_q, [1]_q, [2]_q) = 0 + 1 + (1+q)
    CHECK(t.at(3, 2) == QLaurentPoly::from_terms({{0, Int(2)}, {1, Int(1)}}));
    // explicit route frozen value: [1]^3/([1]-[2]) + [2]^3/([2]-[1]) = 3+3q+q^2
    const ParameterSet pc(1, Preset::constant(1), 4);
    const auto te = ws::build_by_explicit_formula(pc, 4);
    CHECK(te.at(3, 1) ==
          QLaurentPoly::from_terms({{0, Int(3)}, {1, Int(3)}, {2, Int(1)}}));
    CHECK(te.at(1, 1).is_one());
}

TEST_CASE("entries match the multiset h oracle") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 6; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 7, Mode::QMode);
        const auto t = ws::build_by_recurrence(p, 7);
        const auto b = brackets(p, 7);
        for (int n = 0; n < 7; ++n) {
            for (int k = 0; k <= n; ++k) {
                const std::vector<QLaurentPoly> vars(b.begin(), b.begin() + k + 1);
                CHECK(t.at(n, k) == oracles::h_multiset_sum(vars, n - k));
            }
        }
    }
}

TEST_CASE("four routes agree") {
    std::mt19937_64 rng(53);
    int with_explicit = 0;
    for (int i = 0; i < 25; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 10, Mode::QMode);
        const auto a = ws::build_by_recurrence(p, 10);
        CHECK(a == ws::build_by_complete_homogeneous(p, 10));
        if (p.nodes_distinct(9)) {
            CHECK(a == ws::build_by_explicit_formula(p, 10));
            ++with_explicit;
        }
        for (int k = 0; k < 10; ++k) {
            const auto series = ws::ogf_column(p, k, 9);
            for (int n = 0; n < 10; ++n) {
                CHECK(series.coeffs[static_cast<std::size_t>(n)] ==
                      (n >= k ? a.at(n, k) : QLaurentPoly()));
            }
        }
    }
    // make sure the sweep exercised the explicit route at least a few times
    CHECK(with_explicit >= 3);
}

TEST_CASE("explicit route requires pairwise distinct nodes") {
    const ParameterSet p(0, Preset::constant(1), 4);
    CHECK_THROWS_AS(ws::build_by_explicit_formula(p, 4), DuplicateNodes);
    try {
        ws::build_by_explicit_formula(p, 3);
    } catch (const DuplicateNodes& e) {
        CHECK(e.j == 1);
        CHECK(e.i == 0);
    }
}

TEST_CASE("ogf columns") {
    SUBCASE("column 0 is the geometric series in [alpha_0]_q") {
        std::mt19937_64 rng(54);
        const ParameterSet p = sample_parameter_set(rng, 4, Mode::QMode);
        const auto s = ws::ogf_column(p, 0, 6);
        QLaurentPoly power(Int(1));
        for (int n = 0; n <= 6; ++n) {
            CHECK(s.coeffs[static_cast<std::size_t>(n)] == power);
            power *= p.q_node(0);
        }
    }
    SUBCASE("leading coefficient of column k is 1") {
        const ParameterSet p(2, Preset::constant(1), 6);
        for (int k = 0; k < 6; ++k) {
            const auto s = ws::ogf_column(p, k, 8);
            CHECK(s.coeffs[static_cast<std::size_t>(k)].is_one());
            for (int n = 0; n < k; ++n) {
                CHECK(s.coeffs[static_cast<std::size_t>(n)].is_zero());
            }
        }
    }
    SUBCASE("frozen coefficient: (m=1, alpha=0), k=2, t^3 -> 2+q") {
        const ParameterSet p(1, Preset::zero(), 4);
        const auto s = ws::ogf_column(p, 2, 4);
        CHECK(s.coeffs[3] == QLaurentPoly::from_terms({{0, Int(2)}, {1, Int(1)}}));
    }
    SUBCASE("order below the column index is rejected") {
        const ParameterSet p(1, Preset::zero(), 5);
        CHECK_THROWS_AS(ws::ogf_column(p, 3, 2), DomainError);
        CHECK_THROWS_AS(ws::ogf_column(p, 6, 8), CapacityError);
    }
}

TEST_CASE("defining expansion with Laurent scalars") {
    std::mt19937_64 rng(55);
    CHECK(ws::defining_expansion_check(ParameterSet(2, Preset::constant(3), 7), 7));
    for (int i = 0; i < 10; ++i) {
        CHECK(ws::defining_expansion_check(sample_parameter_set(rng, 8, Mode::QMode), 8));
    }
}

TEST_CASE("vertical recurrence holds on built triangles") {
    std::mt19937_64 rng(56);
    for (int i = 0; i < 10; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 9, Mode::QMode);
        CHECK(ws::vertical_recurrence_check(p, ws::build_by_recurrence(p, 9)));
    }
}

TEST_CASE("nonnegative coefficients throughout") {
    std::mt19937_64 rng(57);
    for (int i = 0; i < 10; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 9, Mode::QMode);
        const auto t = ws::build_by_recurrence(p, 9);
        for (int n = 0; n < 9; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(t.at(n, k).has_nonnegative_coeffs());
            }
        }
    }
}

TEST_CASE("m=0 constant-alpha collapse to binomial times bracket powers") {
    std::mt19937_64 rng(58);
    for (long long r = 0; r <= 4; ++r) {
        const ParameterSet p(0, Preset::constant(r), 8);
        const auto t = ws::build_by_recurrence(p, 8);
        const QLaurentPoly b = q_number(r);
        for (int n = 0; n < 8; ++n) {
            for (int k = 0; k <= n; ++k) {
                // via brute-force h over k+1 equal nodes
                const std::vector<QLaurentPoly> vars(static_cast<std::size_t>(k) + 1, b);
                const auto h = oracles::h_multiset_sum(vars, n - k);
                CHECK(t.at(n, k) == h);
                CHECK(t.at(n, k) == QLaurentPoly(oracles::binomial(n, k)) * b.pow(n - k));
            }
        }
    }
}

TEST_CASE("q -> 1 limit") {
    SUBCASE("S(4,2) = 7 frozen from set-partition enumeration") {
        CHECK(oracles::count_set_partitions(4, 2) == 7);
        const ParameterSet p(1, Preset::zero(), 5);
        CHECK(q1_limit(ws::build_by_recurrence(p, 5)).at(4, 2) == 7);
    }
    SUBCASE("column 0 is alpha_0^n") {
        std::mt19937_64 rng(59);
        const ParameterSet p = sample_parameter_set(rng, 7, Mode::QMode);
        const auto t = q1_limit(ws::build_by_recurrence(p, 7));
        Int power(1);
        for (int n = 0; n < 7; ++n) {
            CHECK(t.at(n, 0) == power);
            power *= Int(p.alpha(0));
        }
    }
    SUBCASE("limit satisfies both integer recurrences") {
        std::mt19937_64 rng(60);
        for (int i = 0; i < 8; ++i) {
            const ParameterSet p = sample_parameter_set(rng, 8, Mode::QMode);
            const auto t = q1_limit(ws::build_by_recurrence(p, 8));
            for (int n = 0; n + 1 < 8; ++n) {
                for (int k = 0; k <= n + 1; ++k) {
                    const Int nu = k <= n ? Int(p.node(k)) : Int(0);
                    CHECK(t.at(n + 1, k) == t.at(n, k - 1) + nu * t.at(n, k));
                }
            }
            // q -> 1 vertical recurrence
            for (int n = 1; n < 8; ++n) {
                for (int k = 1; k <= n; ++k) {
                    Int sum;
                    Int power(1);
                    for (int j = n; j >= k; --j) {
                        sum += t.at(j - 1, k - 1) * power;
                        power *= Int(p.node(k));
                    }
                    CHECK(t.at(n, k) == sum);
                }
            }
        }
    }
    SUBCASE("non-central Stirling via brute-force basis expansion of x^n") {
        for (long long r = 0; r <= 3; ++r) {
            const ParameterSet p(1, Preset::constant(r), 7);
            const auto t = q1_limit(ws::build_by_recurrence(p, 7));
            for (int n = 0; n < 7; ++n) {
                // x^n = sum_k W(n,k) prod_{j<k} (x - r - j) as integer polys
                oracles::IntPoly rhs(static_cast<std::size_t>(n) + 1, Int(0));
                for (int k = 0; k <= n; ++k) {
                    std::vector<long long> roots;
                    for (int j = 0; j < k; ++j) {
                        roots.push_back(r + j);
                    }
                    const auto basis = oracles::expand_product(roots);
                    for (std::size_t i = 0; i < basis.size(); ++i) {
                        rhs[i] += t.at(n, k) * basis[i];
                    }
                }
                for (int i = 0; i <= n; ++i) {
                    CHECK(rhs[static_cast<std::size_t>(i)] == (i == n ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("explicit route matches recurrence on larger distinct-node samples") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 5; ++i) {
        const ParameterSet p = sample_distinct(rng, 12);
        CHECK(ws::build_by_explicit_formula(p, 12) == ws::build_by_recurrence(p, 12));
    }
}

TEST_CASE("capacity errors") {
    const ParameterSet p(1, Preset::zero(), 3);
    CHECK_THROWS_AS(ws::build_by_recurrence(p, 4), CapacityError);
    CHECK_THROWS_AS(ws::build_by_complete_homogeneous(p, 9), CapacityError);
    CHECK_THROWS_AS(ws::build_by_explicit_formula(p, 4), CapacityError);
}

}  // TEST_SUITE
