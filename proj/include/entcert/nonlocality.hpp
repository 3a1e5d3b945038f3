#ifndef ENTCERT_NONLOCALITY_HPP
#define ENTCERT_NONLOCALITY_HPP

#include <optional>
#include <string>
#include <utility>

#include "entcert/states.hpp"

namespace entcert {

enum class Side { Left, Right };

std::string side_name(Side s);

/// Reduced feature matrices Pi_ij over one side of a bipartition:
///   (Pi_ij)_{kp} = sum_l conj(a_kl^(i)) a_pl^(j)
/// for every ordered pair i != j (both orders matter over C). Each matrix is
/// d x d where d is the composite dimension of the active side.
struct FeatureFamily {
    Grouping grouping;
    Side side = Side::Left;
    std::size_t activeDim = 0;
    std::vector<Matrix> matrices;  // n(n-1) of them
    std::vector<std::pair<std::size_t, std::size_t>> pairIndex;
};

/// Solution structure of the orthogonality-preserving measurement equations
///   sum_kp e_kp (Pi_ij)_{kp} = 0  for all i != j.
/// The identity always solves them (the states are orthogonal), so
/// solutionDim >= 1; a nontrivial OPLM exists iff solutionDim >= 2.
struct OplmCertificate {
    Grouping grouping;
    Side side = Side::Left;
    std::size_t activeDim = 0;
    std::size_t spanDim = 0;      // rank of the stacked vec(Pi) map
    std::size_t solutionDim = 0;  // d^2 - spanDim
    bool nontrivialExists = false;
};

struct TwoOutcomeMeasurement {
    Matrix first;
    Matrix second;
};

struct OplmValidation {
    bool complete = false;        // outcomes sum to the identity
    bool hermitian = false;       // every outcome Hermitian
    bool psd = false;             // leading-principal-minor check per outcome
    bool orthogonality = false;   // <psi_i|(E x I)|psi_j> = 0 for all i != j
    bool nontrivial = false;      // some outcome not proportional to identity
    bool valid_oplm() const { return complete && hermitian && psd && orthogonality; }
};

struct StrongNonlocalityCertificate {
    bool strongly_nonlocal = false;
    std::vector<OplmCertificate> certificates;  // 3 cuts x 2 sides
    // Populated when some side is reducible: a concrete nontrivial OPLM there.
    std::optional<Grouping> witnessGrouping;
    std::optional<Side> witnessSide;
    std::optional<TwoOutcomeMeasurement> witness;
};

FeatureFamily reduced_feature_matrices(const StateSet& set, const Grouping& g, Side side);

/// spanDim / solutionDim for the family; throws "input set not orthogonal"
/// when the identity fails the equations.
OplmCertificate oplm_solution_space(const FeatureFamily& fam);

/// Builds {(I + E*/lambda)/2, (I - E*/lambda)/2} from a Hermitian solution
/// E* not proportional to the identity; lambda is an exact rational
/// Gershgorin-style upper bound on the spectral radius. Throws when no
/// nontrivial OPLM exists. The returned pair is self-verified: complete,
/// Hermitian, PSD by leading principal minors, and orthogonality-preserving.
TwoOutcomeMeasurement construct_nontrivial_oplm(const FeatureFamily& fam);

/// Checks an arbitrary measurement (list of POVM elements on the active side)
/// against the set: completeness, Hermiticity, PSD and the orthogonality-
/// preservation equations.
OplmValidation verify_oplm(const StateSet& set, const Grouping& g, Side side,
                           const std::vector<Matrix>& outcomes);

/// Theorem-6 certificate: strongly nonlocal iff no side of any bipartition
/// admits a nontrivial OPLM. Tripartite input.
StrongNonlocalityCertificate certify_strong_nonlocality(const StateSet& set);

}  // namespace entcert

#endif
