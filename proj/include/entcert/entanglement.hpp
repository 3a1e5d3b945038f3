#ifndef ENTCERT_ENTANGLEMENT_HPP
#define ENTCERT_ENTANGLEMENT_HPP

#include <optional>
#include <string>

#include "entcert/states.hpp"

namespace entcert {

/// Span certificate for one bipartition: dimension of the space spanned by
/// the product-forming and symmetrization matrices of a state family,
/// computed as the exact rank of their column-wise vectorization map.
struct SpanCertificate {
    Grouping grouping;
    std::size_t stateCount = 0;   // n
    std::size_t lambdaCount = 0;  // C(d_L,2) * C(d_R,2)
    std::size_t gammaCount = 0;   // C(n,2)
    std::size_t spanDim = 0;
    bool full = false;  // spanDim == n^2
    Matrix stackedMap;
};

enum class GesVerdict {
    GenuinelyEntangled,  // full span in every bipartition
    Inconclusive,        // some cut not full; the criterion is sufficient only
    NotGes,              // an explicit product witness exists
};

struct GesCertificate {
    GesVerdict verdict = GesVerdict::Inconclusive;
    std::vector<SpanCertificate> cuts;
    std::string detail;
};

enum class UbbVerdict { Ubb, Inconclusive, NotUbb };

struct UbbCertificate {
    UbbVerdict verdict = UbbVerdict::Inconclusive;
    std::size_t complementDim = 0;
    StateSet complement;
    GesCertificate ges;
    std::string detail;
};

/// For every k < p over the left composite dimension and l < r over the
/// right: the n x n matrix of 2x2 determinants
///   a_kl^(i) a_pr^(j) - a_kr^(i) a_pl^(j),
/// ordered lexicographically in (k, p, l, r).
std::vector<Matrix> product_forming_matrices(const StateSet& set, const Grouping& g);

/// For every s < t in [n]: +1 at (s,t), -1 at (t,s). C(n,2) matrices.
std::vector<Matrix> symmetrization_matrices(std::size_t n);

SpanCertificate span_dimension(const StateSet& set, const Grouping& g);

/// First bipartition across which the state is a product (rank-1 flatten),
/// if any. A state with none is genuinely entangled.
std::optional<Grouping> product_bipartition(const PureState& s);

/// Verdict for a tripartite subspace basis: genuinely entangled iff the span
/// certificate is full in all three bipartitions. When some cut is not full,
/// the verdict downgrades to NotGes only if a basis state itself is a product
/// across a cut; otherwise the criterion is inconclusive.
GesCertificate certify_ges(const StateSet& basis);

/// Basis of the orthogonal complement of the candidate's span, via the exact
/// kernel of the conjugated coefficient matrix.
StateSet orthogonal_complement_basis(const StateSet& candidate);

/// Corollary-3 check: candidate states must be mutually orthogonal and each
/// biseparable (throws naming the violated precondition otherwise); the
/// verdict is Ubb iff the orthogonal complement is certified genuinely
/// entangled. The one-argument overload derives the complement by kernel; the
/// two-argument overload certifies against a supplied complement basis (e.g.
/// an Omega set) after validating that it spans the complement.
UbbCertificate certify_ubb(const StateSet& candidate);
UbbCertificate certify_ubb(const StateSet& candidate, const StateSet& complement);

}  // namespace entcert

#endif
