#include <doctest.h>

#include <random>

#include "entcert/matrix.hpp"
#include "oracle.hpp"

using namespace entcert;

namespace {

// The published 4x7 vectorization map for the A|BC cut of the 2x2x2
// construction's complement (appendix display, transcribed verbatim).
Matrix published_map_abc() {
    auto s = [](long v) { return Scalar(v); };
    return Matrix{
        {s(6), s(0), s(0), s(6), s(-9), s(0), s(0)},
        {s(0), s(0), s(0), s(0), s(-9), s(0), s(-1)},
        {s(-10), s(0), s(10), s(10), s(-5), s(10), s(1)},
        {s(0), s(0), s(6), s(0), s(9), s(6), s(0)},
    };
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(3, 5)) == 0);
    CHECK(rank(published_map_abc()) == 4);
}

TEST_CASE("rank equals the independent RREF oracle on random matrices") {
    std::mt19937 rng(20240201);
    std::uniform_int_distribution<std::size_t> dim(1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        Matrix m = oracle::random_matrix(rng, dim(rng), dim(rng));
        CAPTURE(trial);
        CHECK(rank(m) == oracle::rref_rank(m));
    }
}

TEST_CASE("rank handles engineered rank deficiency") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(2, 9);
        std::size_t rows = dim(rng), cols = dim(rng);
        std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min(rows, cols))(rng);
        Matrix m = oracle::random_product_matrix(rng, rows, cols, k);
        std::size_t r = rank(m);
        CHECK(r <= k);
        CHECK(r == oracle::rref_rank(m));
    }
}

TEST_CASE("rank is invariant under conjugate transpose") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = oracle::random_matrix(rng, 6, 4);
        CHECK(rank(m) == rank(m.conj_transpose()));
    }
}

TEST_CASE("rank plus kernel dimension equals the column count") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        Matrix m = trial % 2 == 0 ? oracle::random_matrix(rng, dim(rng), dim(rng))
                                  : oracle::random_product_matrix(rng, dim(rng), dim(rng), 2);
        auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == m.cols());
        for (const auto& v : basis) {
            // m v = 0, exactly
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Scalar sum;
                for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j) * v[j];
                CHECK(sum.is_zero());
            }
        }
    }
}

TEST_CASE("kernel of simple matrices") {
    CHECK(kernel_basis(Matrix::identity(3)).empty());

    Matrix row{{Scalar(1), Scalar(1)}};
    auto basis = kernel_basis(row);
    REQUIRE(basis.size() == 1);
    // proportional to (1, -1)
    CHECK(basis[0][0] * Scalar(-1) == basis[0][1]);
    CHECK_FALSE(basis[0][0].is_zero());
}

TEST_CASE("vectorize stacks columns") {
    Matrix m{{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
    Vector v = vectorize(m);
    REQUIRE(v.size() == 4);
    CHECK(v[0] == Scalar(1));
    CHECK(v[1] == Scalar(3));
    CHECK(v[2] == Scalar(2));
    CHECK(v[3] == Scalar(4));

    Matrix one{{Scalar(make_rational(7, 3))}};
    CHECK(vectorize(one) == Vector{Scalar(make_rational(7, 3))});

    Matrix gamma{{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}};
    CHECK(vectorize(gamma) == Vector{Scalar(0), Scalar(-1), Scalar(1), Scalar(0)});
}

TEST_CASE("column_stack shapes and errors") {
    Matrix a{{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
    Matrix stacked = column_stack({a});
    CHECK(stacked.rows() == 4);
    CHECK(stacked.cols() == 1);
    CHECK(stacked(1, 0) == Scalar(3));

    Matrix b(3, 2);
    CHECK_THROWS_AS(column_stack({a, b}), std::invalid_argument);
}

TEST_CASE("span rank is invariant under permutation and scaling of the family") {
    std::mt19937 rng(4242);
    std::vector<Matrix> family;
    for (int i = 0; i < 5; ++i) family.push_back(oracle::random_matrix(rng, 3, 3));
    std::size_t base = span_rank(family);

    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Matrix> shuffled = family;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::size_t pick = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
        Scalar c(std::uniform_int_distribution<int>(1, 9)(rng),
                 std::uniform_int_distribution<int>(-4, 4)(rng));
        shuffled[pick] = c * shuffled[pick];
        CHECK(span_rank(shuffled) == base);
    }
}

TEST_CASE("determinant basics") {
    CHECK(determinant(Matrix::identity(4)) == Scalar(1));
    Matrix swap2{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
    CHECK(determinant(swap2) == Scalar(-1));
    Matrix singular{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
    CHECK(determinant(singular) == Scalar(0));
    Matrix frac{{Scalar(make_rational(1, 2)), Scalar(0)}, {Scalar(7), Scalar(make_rational(2, 3))}};
    CHECK(determinant(frac) == Scalar(make_rational(1, 3)));

    // 3x3 with complex entries, cofactor expansion by hand:
    // det = 2*(1*1 - i*0) - i*(0*1 - i*1) = 2 + i^2 = 1
    Matrix c{{Scalar(2), Scalar::i(), Scalar(0)},
             {Scalar(0), Scalar(1), Scalar::i()},
             {Scalar(1), Scalar(0), Scalar(1)}};
    CHECK(determinant(c) == Scalar(1));
}

TEST_CASE("determinant matches elimination on random integer matrices") {
    // Cross-check through the multiplicative property det(AB) = det(A)det(B).
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = oracle::random_matrix(rng, 4, 4, false);
        Matrix b = oracle::random_matrix(rng, 4, 4, false);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("hermitian PSD minor check") {
    Matrix good{{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(2)}};
    CHECK(hermitian_psd_minor_check(good));

    Matrix indefinite{{Scalar(1), Scalar(3)}, {Scalar(3), Scalar(1)}};
    CHECK_FALSE(hermitian_psd_minor_check(indefinite));

    Matrix notHermitian{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}};
    CHECK_FALSE(hermitian_psd_minor_check(notHermitian));

    Matrix complexPsd{{Scalar(2), Scalar::i()}, {-Scalar::i(), Scalar(2)}};
    CHECK(hermitian_psd_minor_check(complexPsd));

    auto minors = leading_principal_minors(complexPsd);
    REQUIRE(minors.size() == 2);
    CHECK(minors[0] == Scalar(2));
    CHECK(minors[1] == Scalar(3));
}

TEST_CASE("exact arithmetic round trips") {
    Scalar a(make_rational(1, 3), make_rational(-2, 7));
    Scalar b(make_rational(22, 7), make_rational(5, 3));
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a.conj().conj() == a);
    Scalar sq = a * a.conj();
    CHECK(sq.im == 0);
    CHECK(sq.re >= 0);
}
