#include <doctest.h>

#include "entcert/constructions.hpp"
#include "entcert/json_io.hpp"
#include "entcert/locc.hpp"
#include "entcert/nonlocality.hpp"

using namespace entcert;

namespace {

Matrix bc_tau_projector() {
    Matrix p(4, 4);
    Scalar quarter(make_rational(1, 4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) p(i, j) = quarter;
    return p;
}

}  // namespace

TEST_CASE("applying the stopper projector on BC") {
    Family222 fam = family_222();
    Matrix p_tau = bc_tau_projector();
    Matrix p_rest = Matrix::identity(4) - p_tau;

    ApplyResult kept = apply_node(fam.U, {1, 2}, p_tau);
    // only eta^- and the stopper overlap the tau branch
    REQUIRE(kept.survivors.size() == 2);
    CHECK(kept.survivors.states[0].label == "eta^-");
    CHECK(kept.survivors.states[1].label == "tau_2^3");
    CHECK(kept.eliminated.size() == 4);

    // the stopper is untouched; eta^- collapses onto |0-1>|tau_2^2>/4
    CHECK(kept.survivors.states[1].coeffs == stopper(2, 3).coeffs);
    PureState expected(fam.U.system);
    Scalar quarter(make_rational(1, 4));
    for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
            expected.add_term({0, b, c}, quarter);
            expected.add_term({1, b, c}, -quarter);
        }
    CHECK(kept.survivors.states[0].coeffs == expected.coeffs);

    ApplyResult rest = apply_node(fam.U, {1, 2}, p_rest);
    REQUIRE(rest.survivors.size() == 5);
    CHECK(rest.eliminated == std::vector<std::string>{"tau_2^3"});
    // the four phi/psi states pass through unchanged
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(rest.survivors.states[i].coeffs == fam.U.states[i].coeffs);
    CHECK(rest.survivors.states[3].coeffs == fam.U.states[3].coeffs);
    CHECK(rest.survivors.states[4].coeffs == fam.U.states[4].coeffs);
    // eta^- projects to -(1/4)[ |0>(|0+1+2> - 3|3>) - |1>(|0+2+3> - 3|1>) ] in
    // the BC composite basis
    PureState eta(fam.U.system);
    Scalar mq(make_rational(-1, 4));
    eta.add_term({0, 0, 0}, mq);
    eta.add_term({0, 0, 1}, mq);
    eta.add_term({0, 1, 0}, mq);
    eta.add_term({0, 1, 1}, -Scalar(3) * mq);
    eta.add_term({1, 0, 0}, -mq);
    eta.add_term({1, 1, 0}, -mq);
    eta.add_term({1, 1, 1}, -mq);
    eta.add_term({1, 0, 1}, Scalar(3) * mq);
    CHECK(rest.survivors.states[2].coeffs == eta.coeffs);

    CHECK_THROWS_AS(apply_node(fam.U, {1, 2}, Matrix::identity(3)), std::invalid_argument);
    ApplyResult identity = apply_node(fam.U, {0}, Matrix::identity(2));
    CHECK(identity.survivors.size() == 6);
}

TEST_CASE("leaf distinguishability") {
    PartySystem sys({2, 2, 2});

    // orthogonal on the first party alone
    StateSet firstParty;
    firstParty.system = sys;
    PureState s0(sys, "s0"), s1(sys, "s1");
    s0.add_term({0, 0, 0}, Scalar(1));
    s0.add_term({0, 1, 1}, Scalar(2));
    s1.add_term({1, 0, 1}, Scalar(1));
    s1.add_term({1, 1, 0}, Scalar(-1));
    firstParty.push(s0);
    firstParty.push(s1);
    LeafCheck check = leaf_distinguishable(firstParty, {{0}, {1, 2}});
    CHECK(check.distinguishable);
    CHECK(*check.witnessGroup == std::vector<int>{0});

    // the published left-left leaf: BC supports are pairwise disjoint
    StateSet leaf;
    leaf.system = sys;
    PureState l0(sys, "l0"), l1(sys, "l1"), l2(sys, "l2");
    l0.add_term({0, 0, 0}, Scalar(1));
    l0.add_term({0, 1, 0}, Scalar(-1));
    l1.add_term({0, 0, 0}, Scalar(1));
    l1.add_term({0, 1, 0}, Scalar(1));
    l1.add_term({0, 0, 1}, Scalar(-2));
    l2.add_term({0, 0, 0}, Scalar(1));
    l2.add_term({0, 0, 1}, Scalar(1));
    l2.add_term({0, 1, 0}, Scalar(1));
    l2.add_term({0, 1, 1}, Scalar(-3));
    leaf.push(l0);
    leaf.push(l1);
    leaf.push(l2);
    LeafCheck leafCheck = leaf_distinguishable(leaf, {{0}, {1, 2}});
    CHECK(leafCheck.distinguishable);
    CHECK(*leafCheck.witnessGroup == std::vector<int>{1, 2});

    // identical marginals on both parties: not distinguishable
    StateSet bell;
    bell.system = PartySystem({2, 2});
    PureState plus(bell.system, "+"), minus(bell.system, "-");
    plus.add_term({0, 0}, Scalar(1));
    plus.add_term({1, 1}, Scalar(1));
    minus.add_term({0, 0}, Scalar(1));
    minus.add_term({1, 1}, Scalar(-1));
    bell.push(plus);
    bell.push(minus);
    LeafCheck bellCheck = leaf_distinguishable(bell, {{0}, {1}});
    CHECK_FALSE(bellCheck.distinguishable);
    // oracle check: the two A-marginals are literally equal
    CHECK(reduced_density({bell.states[0]}, {0}) == reduced_density({bell.states[1]}, {0}));

    StateSet single;
    single.system = sys;
    single.push(s0);
    CHECK(leaf_distinguishable(single, {}).distinguishable);
}

TEST_CASE("the published protocol tree discriminates the 2x2x2 UBB in A|BC") {
    Family222 fam = family_222();
    DiscriminationOutcome outcome = verify_tree(fam.U, Grouping({0}, 3), appendix_protocol_tree());
    CHECK(outcome.distinguished);
    REQUIRE(outcome.leaves.size() == 3);
    for (const auto& leaf : outcome.leaves) CHECK(leaf.distinguishable);

    // the tau branch keeps two survivors, the Alice branches three each
    std::size_t twoSurvivors = 0, threeSurvivors = 0;
    for (const auto& leaf : outcome.leaves) {
        if (leaf.survivors.size() == 2) ++twoSurvivors;
        if (leaf.survivors.size() == 3) ++threeSurvivors;
    }
    CHECK(twoSurvivors == 1);
    CHECK(threeSurvivors == 2);

    // eliminated states never reappear: the stopper dies on the first branch
    for (const auto& leaf : outcome.leaves) {
        if (leaf.path.front() == 0)
            for (const auto& label : leaf.survivors) CHECK(label != "tau_2^3");
    }

    // the same claims agree with the measurement-side verdict
    CHECK_FALSE(certify_strong_nonlocality(fam.U).strongly_nonlocal);
}

TEST_CASE("norm bookkeeping across a complete node") {
    Family222 fam = family_222();
    Matrix p_tau = bc_tau_projector();
    Matrix p_rest = Matrix::identity(4) - p_tau;
    for (const auto& s : fam.U.states) {
        StateSet one;
        one.system = fam.U.system;
        one.push(s);
        Rational total(0);
        for (const Matrix* op : {&p_tau, &p_rest}) {
            ApplyResult r = apply_node(one, {1, 2}, *op);
            if (r.survivors.size() == 1) total += norm_sq(r.survivors.states[0]);
        }
        CHECK(total == norm_sq(s));
    }
}

TEST_CASE("tree verification rejects malformed protocols") {
    Family222 fam = family_222();

    ProtocolNode incomplete;
    incomplete.group = {1, 2};
    incomplete.outcomes.push_back({bc_tau_projector(), nullptr});
    CHECK_THROWS_WITH_AS(verify_tree(fam.U, Grouping({0}, 3), incomplete),
                         doctest::Contains("completeness"), std::invalid_argument);

    ProtocolNode straddling;
    straddling.group = {0, 1};
    straddling.outcomes.push_back({Matrix::identity(4), nullptr});
    CHECK_THROWS_WITH_AS(verify_tree(fam.U, Grouping({0}, 3), straddling),
                         doctest::Contains("straddles"), std::invalid_argument);
}

TEST_CASE("a trivial tree distinguishes a singleton") {
    StateSet single;
    single.system = PartySystem({2, 2, 2});
    PureState s(single.system, "w");
    s.add_term({0, 0, 0}, Scalar(1));
    s.add_term({1, 1, 1}, Scalar(1));
    single.push(s);

    ProtocolNode trivial;
    trivial.group = {0};
    trivial.outcomes.push_back({Matrix::identity(2), nullptr});
    DiscriminationOutcome outcome = verify_tree(single, Grouping({0}, 3), trivial);
    CHECK(outcome.distinguished);
}

TEST_CASE("computational projectors on C do not discriminate the 19-state set") {
    Family333 fam = family_333(RotationTriple(0, 0, 0));
    ProtocolNode node;
    node.group = {2};
    for (int c = 0; c < 3; ++c) {
        Matrix proj(3, 3);
        proj(static_cast<std::size_t>(c), static_cast<std::size_t>(c)) = Scalar(1);
        node.outcomes.push_back({std::move(proj), nullptr});
    }
    DiscriminationOutcome outcome = verify_tree(fam.Uhqm, Grouping({0, 1}, 3), node);
    CHECK_FALSE(outcome.distinguished);
}

TEST_CASE("protocol JSON round trip") {
    ProtocolNode tree = appendix_protocol_tree();
    Json j = protocol_to_json(tree);
    ProtocolNode parsed = protocol_from_json(j);
    CHECK(dump_json(protocol_to_json(parsed)) == dump_json(j));

    Family222 fam = family_222();
    DiscriminationOutcome a = verify_tree(fam.U, Grouping({0}, 3), tree);
    DiscriminationOutcome b = verify_tree(fam.U, Grouping({0}, 3), parsed);
    CHECK(a.distinguished == b.distinguished);
    CHECK(a.leaves.size() == b.leaves.size());
}
