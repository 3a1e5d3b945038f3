#ifndef ENTCERT_FIXTURES_HPP
#define ENTCERT_FIXTURES_HPP

#include <array>
#include <string>
#include <vector>

#include "entcert/matrix.hpp"
#include "entcert/states.hpp"

namespace entcert::fixtures {

/// Frozen published tables and state displays for the two constructions.
/// verify_fixtures() cross-checks the generators against them; it backs the
/// CLI --verify-fixtures flag and the regression tests.

/// The two states spanning the complement of the 2x2x2 UBB.
StateSet omega23_states();

/// Their A|BC coefficient tables (rows k = 0..1, columns l = 0..3).
std::array<std::array<std::array<int, 4>, 2>, 2> omega23_coefficients();

/// The six published product-forming matrices for the A|BC cut, in
/// lexicographic (l, r) order, and the single symmetrization matrix.
std::vector<Matrix> omega23_lambda_display();
Matrix omega23_gamma_display();

/// The six states of the 2x2x2 UBB.
StateSet u222_states();

/// The nineteen states of the 3x3x3 UBB at rotation (0,0,0).
StateSet u000_states();

/// The eight complement-basis states at rotation (0,0,0).
StateSet ges000_states();

/// Their A|BC coefficient tables (8 states x rows k = 0..2 x columns
/// l = 0..8).
std::array<std::array<std::array<int, 9>, 3>, 8> ges000_coefficients();

struct FixtureCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Cross-checks every generator against the frozen tables above.
std::vector<FixtureCheck> verify_fixtures();
bool all_fixtures_pass(const std::vector<FixtureCheck>& checks);

}  // namespace entcert::fixtures

#endif
