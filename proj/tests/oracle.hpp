// Independent test oracles, deliberately written the textbook way and kept
// apart from the library implementations they check.

#ifndef ENTCERT_TESTS_ORACLE_HPP
#define ENTCERT_TESTS_ORACLE_HPP

#include <random>

#include "entcert/matrix.hpp"
#include "entcert/states.hpp"

namespace entcert::oracle {

/// Rank by plain Gauss-Jordan over the rationals: normalize each pivot to 1,
/// clear its column everywhere, count the pivots.
std::size_t rref_rank(const Matrix& m);

/// Reduced operator by direct index contraction over the traced party
/// (no flattening), for cross-checking reduced_density().
Matrix direct_partial_trace(const std::vector<PureState>& states, int tracedParty);

/// Uniform random matrix with integer real/imaginary parts in [-5, 5].
Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                     bool complexEntries = true);

/// Random rank-deficient matrix built as an (rows x k)(k x cols) product.
Matrix random_product_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                             std::size_t k);

/// Random sparse state on the system with small integer coefficients.
PureState random_state(std::mt19937& rng, const PartySystem& system, std::size_t maxTerms = 6);

/// Random integer matrix with determinant +-1 (product of elementary row
/// operations applied to the identity).
Matrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 24);

/// Recombines the set's states by an invertible integer matrix.
StateSet mix_states(const StateSet& set, const Matrix& mixing);

}  // namespace entcert::oracle

#endif
