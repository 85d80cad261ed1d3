#include <doctest.h>

#include "qwhitney/params.hpp"
#include "qwhitney/qcalc.hpp"

using namespace qwhitney;

TEST_SUITE("params") {

TEST_CASE("node values") {
    const ParameterSet constant(3, Preset::constant(2), 4);
    CHECK(constant.node(2) == 8);  // 2 + 2*3
    const ParameterSet zero(1, Preset::zero(), 8);
    CHECK(zero.node(5) == 5);
    const ParameterSet expl(2, Preset::explicit_list({1, 4, 2}), 3);
    CHECK(expl.node(2) == 6);
    CHECK_THROWS_AS(expl.node(3), IndexError);
    CHECK_THROWS_AS(expl.alpha(-1), IndexError);
}

TEST_CASE("q_node") {
    CHECK(ParameterSet(1, Preset::constant(0), 4).q_node(2) == q_number(2));
    CHECK(ParameterSet(1, Preset::constant(1), 4).q_node(0).is_one());
    CHECK(ParameterSet(1, Preset::explicit_list({0, 2}), 2).q_node(1) == q_number(3));
}

TEST_CASE("nodes_distinct") {
    CHECK_FALSE(ParameterSet(0, Preset::constant(1), 4).nodes_distinct(2));
    CHECK(ParameterSet(1, Preset::constant(1), 5).nodes_distinct(3));
    CHECK_FALSE(ParameterSet(1, Preset::explicit_list({3, 2, 1}), 3).nodes_distinct(2));
    CHECK_THROWS_AS(ParameterSet(1, Preset::zero(), 3).nodes_distinct(3), IndexError);
}

TEST_CASE("eager q-mode validation rejects negative nodes") {
    CHECK_THROWS_AS(ParameterSet(1, Preset::explicit_list({0, -5, 0}), 3), DomainError);
    // the same parameters are fine in integer mode
    const ParameterSet p(1, Preset::explicit_list({0, -5, 0}), 3, Mode::IntegerMode);
    CHECK(p.node(1) == -4);
    CHECK_THROWS_AS(p.q_node(1), DomainError);
    CHECK_THROWS_AS(ParameterSet(-1, Preset::zero(), 3), DomainError);
}

TEST_CASE("explicit and affine lists must cover the capacity") {
    CHECK_THROWS_AS(ParameterSet(1, Preset::explicit_list({1, 2}), 3), DomainError);
    CHECK_THROWS_AS(ParameterSet(1, Preset::affine({0, 2}), 3), DomainError);
}

TEST_CASE("affine preset forces m = 1 and hits the beta nodes exactly") {
    CHECK_THROWS_AS(ParameterSet(2, Preset::affine({0, 2, 4}), 3), DomainError);
    const ParameterSet p(1, Preset::affine({0, 2, 4}), 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(p.node(j) == 2 * j);        // node(j) = beta_j
        CHECK(p.alpha(j) == 2 * j - j);   // alpha_j = beta_j - j
    }
}

TEST_CASE("constant preset matches the equivalent explicit list") {
    for (long long m = 0; m <= 3; ++m) {
        const ParameterSet a(m, Preset::constant(2), 6);
        const ParameterSet b(m, Preset::explicit_list({2, 2, 2, 2, 2, 2}), 6);
        for (int j = 0; j < 6; ++j) {
            CHECK(a.node(j) == b.node(j));
        }
    }
}

TEST_CASE("alpha spec grammar") {
    CHECK(parse_alpha_spec("zero") == Preset::zero());
    CHECK(parse_alpha_spec("constant:4") == Preset::constant(4));
    CHECK(parse_alpha_spec("affine:0,2,4") == Preset::affine({0, 2, 4}));
    CHECK(parse_alpha_spec("explicit:1,4,2") == Preset::explicit_list({1, 4, 2}));
    CHECK_THROWS_AS(parse_alpha_spec("bogus"), DomainError);
    CHECK_THROWS_AS(parse_alpha_spec("constant:x"), DomainError);
    CHECK_THROWS_AS(parse_alpha_spec("explicit:"), DomainError);
    for (const auto* spec : {"zero", "constant:-3", "affine:5,6", "explicit:0,1,1"}) {
        CHECK(alpha_spec_string(parse_alpha_spec(spec)) == spec);
    }
}

}  // TEST_SUITE
