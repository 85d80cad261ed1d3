#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qwhitney/qcalc.hpp"
#include "qwhitney/verify.hpp"
#include "qwhitney/whitney_first.hpp"

using namespace qwhitney;
namespace wf = qwhitney::whitney_first;

namespace {

std::vector<QLaurentPoly> brackets(const ParameterSet& p, int count) {
    std::vector<QLaurentPoly> b;
    for (int j = 0; j < count; ++j) {
        b.push_back(p.q_node(j));
    }
    return b;
}

}  // namespace

TEST_SUITE("whitney_first") {

TEST_CASE("matrix-display entries hold for sampled parameters") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 10; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 6, Mode::QMode);
        const auto t = wf::build_by_recurrence(p, 4);
        const auto b = brackets(p, 3);
        CHECK(t.at(0, 0).is_one());
        CHECK(t.at(1, 0) == -b[0]);
        CHECK(t.at(2, 0) == b[0] * b[1]);
        CHECK(t.at(2, 1) == -b[0] - b[1]);
        CHECK(t.at(3, 0) == -(b[0] * b[1] * b[2]));
        CHECK(t.at(3, 2) == -b[0] - b[1] - b[2]);
        for (int n = 0; n < 4; ++n) {
            CHECK(t.at(n, n).is_one());
        }
    }
}

TEST_CASE("frozen small values") {
    // (m=1, alpha=0): expanding X(X-1)(X-1-q) gives coefficient 1+q at X^1
    const ParameterSet p(1, Preset::zero(), 4);
    const auto t = wf::build_by_recurrence(p, 4);
    CHECK(t.at(3, 1) == QLaurentPoly::from_terms({{0, Int(1)}, {1, Int(1)}}));
}

TEST_CASE("entries match the subset-sum sigma oracle") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 8; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 8, Mode::QMode);
        const auto t = wf::build_by_recurrence(p, 8);
        const auto b = brackets(p, 7);
        for (int n = 0; n < 8; ++n) {
            const std::vector<QLaurentPoly> prefix(b.begin(), b.begin() + n);
            for (int k = 0; k <= n; ++k) {
                const auto sigma = oracles::sigma_subset_sum(prefix, n - k);
                CHECK(t.at(n, k) == ((n - k) % 2 == 0 ? sigma : -sigma));
            }
        }
    }
}

TEST_CASE("three routes agree on random parameter sets") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 25; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 10, Mode::QMode);
        const auto a = wf::build_by_recurrence(p, 10);
        CHECK(a == wf::build_by_elementary_symmetric(p, 10));
        CHECK(a == wf::build_by_vertical_recurrence(p, 10));
    }
}

TEST_CASE("defining identity") {
    std::mt19937_64 rng(44);
    CHECK(wf::defining_identity_check(ParameterSet(1, Preset::constant(2), 6), 6));
    for (int i = 0; i < 10; ++i) {
        CHECK(wf::defining_identity_check(sample_parameter_set(rng, 9, Mode::QMode), 9));
    }
}

TEST_CASE("alternating sign structure") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 10; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 9, Mode::QMode);
        const auto t = wf::build_by_recurrence(p, 9);
        for (int n = 0; n < 9; ++n) {
            for (int k = 0; k <= n; ++k) {
                const auto signless = (n - k) % 2 == 0 ? t.at(n, k) : -t.at(n, k);
                CHECK(signless.has_nonnegative_coeffs());
            }
        }
    }
}

TEST_CASE("row sums equal the generating polynomial at X = 1") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 10; ++i) {
        const ParameterSet p = sample_parameter_set(rng, 8, Mode::QMode);
        const auto t = wf::build_by_recurrence(p, 8);
        QLaurentPoly product(Int(1));
        for (int n = 0; n < 8; ++n) {
            QLaurentPoly row_sum;
            for (int k = 0; k <= n; ++k) {
                row_sum += t.at(n, k);
            }
            CHECK(row_sum == product);
            if (n + 1 < 8) {
                product *= QLaurentPoly(Int(1)) - p.q_node(n);
            }
        }
    }
}

TEST_CASE("laurent form rows") {
    SUBCASE("row 0 is [1]") {
        const ParameterSet p(2, Preset::constant(1), 3);
        const auto row = wf::laurent_form_row(p, 0);
        REQUIRE(row.size() == 1);
        CHECK(row[0].is_one());
    }
    SUBCASE("row 1 for constant r") {
        const ParameterSet p(3, Preset::constant(2), 3);
        const auto row = wf::laurent_form_row(p, 1);
        REQUIRE(row.size() == 2);
        const auto unit = QLaurentPoly::monomial(Int(1), -2);
        CHECK(row[0] == -(q_number(2) * unit));
        CHECK(row[1] == unit);
    }
    SUBCASE("row 2 for m=1, alpha=0, frozen by direct scaling") {
        const ParameterSet p(1, Preset::zero(), 3);
        const auto row = wf::laurent_form_row(p, 2);
        REQUIRE(row.size() == 3);
        CHECK(row[0].is_zero());
        CHECK(row[1] == QLaurentPoly::monomial(Int(-1), -1));
        CHECK(row[2] == QLaurentPoly::monomial(Int(1), -1));
    }
    SUBCASE("scaling matches the nodes for sampled parameters") {
        std::mt19937_64 rng(47);
        for (int i = 0; i < 6; ++i) {
            const ParameterSet p = sample_parameter_set(rng, 7, Mode::QMode);
            const auto t = wf::build_by_recurrence(p, 7);
            long long shift = 0;
            for (int n = 0; n < 7; ++n) {
                const auto row = wf::laurent_form_row(p, n);
                const auto unit = QLaurentPoly::monomial(Int(1), static_cast<int>(-shift));
                for (int k = 0; k <= n; ++k) {
                    CHECK(row[static_cast<std::size_t>(k)] == t.at(n, k) * unit);
                }
                if (n < 6) {
                    shift += p.node(n);
                }
            }
        }
    }
}

TEST_CASE("q -> 1 limit") {
    SUBCASE("frozen row 4 of the Stirling-first case") {
        // sigma over {0,1,2,3}: row = (0, -6, 11, -6, 1)
        const ParameterSet p(1, Preset::zero(), 5);
        const auto t = q1_limit(wf::build_by_recurrence(p, 5));
        CHECK(t.at(4, 0) == 0);
        CHECK(t.at(4, 1) == -6);
        CHECK(t.at(4, 2) == 11);
        CHECK(t.at(4, 3) == -6);
        CHECK(t.at(4, 4) == 1);
        CHECK(t.at(2, 1) == -1);
        CHECK(t.at(2, 2) == 1);
    }
    SUBCASE("|s(4,2)| = 11 frozen from expanding x(x-1)(x-2)(x-3)") {
        const auto coeffs = oracles::expand_product({0, 1, 2, 3});
        CHECK(coeffs[2] == 11);
        const ParameterSet p(1, Preset::zero(), 5);
        CHECK(q1_limit(wf::build_by_vertical_recurrence(p, 5)).at(4, 2) == coeffs[2]);
    }
    SUBCASE("limit satisfies the integer recurrence w(n+1,k) = w(n,k-1) - nu_n w(n,k)") {
        std::mt19937_64 rng(48);
        for (int i = 0; i < 10; ++i) {
            const ParameterSet p = sample_parameter_set(rng, 9, Mode::QMode);
            const auto t = q1_limit(wf::build_by_recurrence(p, 9));
            CHECK(t.at(1, 0) == -p.alpha(0));
            for (int n = 0; n + 1 < 9; ++n) {
                for (int k = 0; k <= n + 1; ++k) {
                    CHECK(t.at(n + 1, k) == t.at(n, k - 1) - Int(p.node(n)) * t.at(n, k));
                }
            }
        }
    }
    SUBCASE("q -> 1 vertical recurrence with the signless convention") {
        std::mt19937_64 rng(49);
        const ParameterSet p = sample_parameter_set(rng, 8, Mode::QMode);
        const auto t = q1_limit(wf::build_by_recurrence(p, 8));
        for (int n = 1; n < 8; ++n) {
            for (int k = 1; k <= n; ++k) {
                Int sum;
                Int suffix(1);
                for (int j = n; j >= k; --j) {
                    const Int term = t.at(j - 1, k - 1) * suffix;
                    sum += (n - j) % 2 == 0 ? term : -term;
                    if (j > k) {
                        suffix *= Int(p.node(j - 1));
                    }
                }
                CHECK(t.at(n, k) == sum);
            }
        }
    }
}

TEST_CASE("capacity errors") {
    const ParameterSet p(1, Preset::zero(), 3);
    CHECK_THROWS_AS(wf::build_by_recurrence(p, 4), CapacityError);
    CHECK_THROWS_AS(wf::build_by_elementary_symmetric(p, 5), CapacityError);
    CHECK_THROWS_AS(wf::build_by_vertical_recurrence(p, 4), CapacityError);
    CHECK_THROWS_AS(wf::laurent_form_row(p, 4), CapacityError);
    CHECK(wf::build_by_recurrence(p, 0).rows() == 0);
}

}  // TEST_SUITE
