#include <doctest.h>

#include <random>

#include "entcert/constructions.hpp"
#include "entcert/fixtures.hpp"
#include "entcert/states.hpp"
#include "oracle.hpp"

using namespace entcert;

TEST_CASE("inner products of the 2x2x2 family") {
    Family222 fam = family_222();
    PureState tau = stopper(2, 3);

    CHECK(inner_product(tau, tau) == Scalar(8));
    // tau is orthogonal to every minus-type state
    for (const auto& s : fam.U.states)
        if (s.label != "tau_2^3") CHECK(inner_product(tau, s).is_zero());
    // <psi_0^+|tau> = 3
    CHECK(inner_product(fam.Gplus.states[0], tau) == Scalar(3));

    PureState other(PartySystem({2, 2}));
    other.add_term({0, 0}, Scalar(1));
    CHECK_THROWS_AS(inner_product(tau, other), std::invalid_argument);
}

TEST_CASE("inner product is conjugate symmetric") {
    std::mt19937 rng(31337);
    PartySystem sys({2, 3, 2});
    for (int trial = 0; trial < 50; ++trial) {
        PureState a = oracle::random_state(rng, sys);
        PureState b = oracle::random_state(rng, sys);
        // give them complex parts
        for (auto& [idx, c] : a.coeffs) c.im = make_rational(trial % 5 - 2);
        CHECK(inner_product(a, b) == inner_product(b, a).conj());
    }
}

TEST_CASE("flatten reproduces the published coefficient rows") {
    Family222 fam = family_222();
    StateSet omega = omega_set(fam.Gplus, 2, 2, 3);
    Grouping abc({0}, 3);

    Matrix flat = flatten(omega.states[0], abc);
    REQUIRE(flat.rows() == 2);
    REQUIRE(flat.cols() == 4);
    CHECK(flat(0, 0) == Scalar(2));
    CHECK(flat(0, 1) == Scalar(2));
    CHECK(flat(0, 2) == Scalar(2));
    CHECK(flat(0, 3) == Scalar(-3));
    CHECK(flat(1, 0) == Scalar(0));
    CHECK(flat(1, 1) == Scalar(-3));
    CHECK(flat(1, 2) == Scalar(0));
    CHECK(flat(1, 3) == Scalar(0));

    PureState product(PartySystem({2, 2, 2}));
    product.add_term({0, 0, 0}, Scalar(1));
    for (const auto& g : tripartite_groupings()) {
        Matrix f = flatten(product, g);
        CHECK(f(0, 0) == Scalar(1));
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.cols(); ++j)
                if (!f(i, j).is_zero()) ++nonzero;
        CHECK(nonzero == 1);
    }

    // GES state psi_0 against the published table row
    Family333 f333 = family_333(RotationTriple(0, 0, 0));
    Matrix ges0 = flatten(f333.gesBasis.states[0], abc);
    auto table = fixtures::ges000_coefficients();
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 9; ++l) CHECK(ges0(k, l) == Scalar(table[0][k][l]));
}

TEST_CASE("flatten and unflatten are inverse for every grouping") {
    std::mt19937 rng(808);
    PartySystem sys({2, 3, 4});
    std::vector<Grouping> groupings{Grouping({0}, 3), Grouping({1}, 3), Grouping({2}, 3),
                                    Grouping({0, 1}, 3), Grouping({0, 2}, 3), Grouping({1, 2}, 3)};
    for (int trial = 0; trial < 100; ++trial) {
        PureState s = oracle::random_state(rng, sys);
        for (const auto& g : groupings) {
            PureState back = unflatten(flatten(s, g), sys, g);
            CHECK(back.coeffs == s.coeffs);
        }
    }
}

TEST_CASE("cyclic rotation") {
    PartySystem sys({3, 3, 3});
    PureState s(sys);
    s.add_term({0, 1, 2}, Scalar(1));

    PureState r1 = cyclic_rotate(s, 1);
    REQUIRE(r1.coeffs.size() == 1);
    CHECK(r1.coeffs.count({2, 0, 1}) == 1);

    CHECK(cyclic_rotate(s, 0).coeffs == s.coeffs);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        PureState t = oracle::random_state(rng, sys);
        CHECK(cyclic_rotate(cyclic_rotate(t, 1), 1).coeffs == cyclic_rotate(t, 2).coeffs);
        CHECK(cyclic_rotate(cyclic_rotate(t, 1), 2).coeffs == t.coeffs);
    }

    PureState uneven(PartySystem({2, 2}));
    uneven.add_term({0, 0}, Scalar(1));
    CHECK_THROWS_AS(cyclic_rotate(uneven, 1), std::invalid_argument);
    PureState mixed(PartySystem({2, 3, 2}));
    mixed.add_term({0, 0, 0}, Scalar(1));
    CHECK_THROWS_AS(cyclic_rotate(mixed, 1), std::invalid_argument);
}

TEST_CASE("rotation relabels bipartitions consistently") {
    // flatten(rotate(s,1), A|BC) equals flatten(s, C|AB) under the composite
    // index conventions; exercised on the 3x3x3 family states.
    Family333 fam = family_333(RotationTriple(0, 0, 0));
    Grouping abc({0}, 3), cab({2}, 3);
    for (const auto& s : fam.Uhqm.states)
        CHECK(flatten(cyclic_rotate(s, 1), abc) == flatten(s, cab));
}

TEST_CASE("marginal ranks") {
    PartySystem sys222({2, 2, 2});
    PureState product(sys222);
    product.add_term({0, 1, 0}, Scalar(2));
    for (int alpha = 0; alpha < 3; ++alpha)
        CHECK(marginal_rank({product}, alpha) == 1);

    Family333 fam = family_333(RotationTriple(0, 0, 0));
    for (const auto& s : fam.gesBasis.states)
        for (int alpha = 0; alpha < 3; ++alpha) CHECK(marginal_rank({s}, alpha) >= 2);

    for (int alpha = 0; alpha < 3; ++alpha)
        CHECK(marginal_rank(fam.gesBasis.states, alpha) == 9);
}

TEST_CASE("marginal rank is permutation invariant in the state list") {
    Family333 fam = family_333(RotationTriple(1, 2, 0));
    std::vector<PureState> states(fam.gesBasis.states.begin(), fam.gesBasis.states.begin() + 4);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<PureState> shuffled = states;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (int alpha = 0; alpha < 3; ++alpha)
            CHECK(marginal_rank(shuffled, alpha) == marginal_rank(states, alpha));
    }
}

TEST_CASE("reduced density agrees with direct index contraction") {
    std::mt19937 rng(2718);
    PartySystem sys({3, 2, 3});
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<PureState> states{oracle::random_state(rng, sys),
                                      oracle::random_state(rng, sys)};
        for (int alpha = 0; alpha < 3; ++alpha) {
            std::vector<int> kept;
            for (int p = 0; p < 3; ++p)
                if (p != alpha) kept.push_back(p);
            CHECK(reduced_density(states, kept) == oracle::direct_partial_trace(states, alpha));
        }
    }
}

TEST_CASE("mutual orthogonality reports the first offending pair") {
    Family222 f222 = family_222();
    CHECK(is_mutually_orthogonal(f222.U).mutually_orthogonal);

    StateSet bad;
    bad.system = PartySystem({2, 2});
    PureState zero(bad.system, "a");
    zero.add_term({0, 0}, Scalar(1));
    PureState mixed(bad.system, "b");
    mixed.add_term({0, 0}, Scalar(1));
    mixed.add_term({1, 0}, Scalar(1));
    bad.push(zero);
    bad.push(mixed);
    auto report = is_mutually_orthogonal(bad);
    CHECK_FALSE(report.mutually_orthogonal);
    REQUIRE(report.offending_pair.has_value());
    CHECK(report.offending_pair->first == 0);
    CHECK(report.offending_pair->second == 1);

    Family333 f333 = family_333(RotationTriple(0, 0, 0));
    CHECK(f333.Uhqm.size() == 19);
    CHECK(is_mutually_orthogonal(f333.Uhqm).mutually_orthogonal);
}

TEST_CASE("state validation catches malformed inputs") {
    CHECK_THROWS_AS(PartySystem({1, 2}), std::invalid_argument);

    PureState empty(PartySystem({2, 2}));
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

    PureState outOfRange(PartySystem({2, 2}));
    outOfRange.coeffs[{0, 2}] = Scalar(1);
    CHECK_THROWS_AS(outOfRange.validate(), std::invalid_argument);

    CHECK_THROWS_AS(Grouping({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Grouping({0, 1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(Grouping({3}, 3), std::invalid_argument);
}

TEST_CASE("primitive clears denominators and common factors") {
    PureState s(PartySystem({2, 2}));
    s.add_term({0, 0}, Scalar(make_rational(-2, 3)));
    s.add_term({1, 1}, Scalar(make_rational(4, 3)));
    PureState p = s.primitive();
    CHECK(p.coeff({0, 0}) == Scalar(-1));
    CHECK(p.coeff({1, 1}) == Scalar(2));
}
