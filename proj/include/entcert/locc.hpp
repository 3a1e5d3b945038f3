#ifndef ENTCERT_LOCC_HPP
#define ENTCERT_LOCC_HPP

#include <memory>
#include <optional>
#include <string>

#include "entcert/states.hpp"

namespace entcert {

/// Finite measurement tree for bipartition-restricted LOCC: each node names
/// the acting group of parties and a complete family of Kraus operators on
/// that group's composite space (sum of E^dagger E equals the identity,
/// checked exactly by the verifier). An outcome without a child is a leaf.
struct ProtocolNode;

struct ProtocolOutcome {
    Matrix kraus;
    std::unique_ptr<ProtocolNode> child;  // null = leaf
};

struct ProtocolNode {
    std::vector<int> group;
    std::vector<ProtocolOutcome> outcomes;
};

struct ApplyResult {
    StateSet survivors;
    std::vector<std::string> eliminated;  // labels of states mapped to zero
};

/// Maps each state to (op x I_rest)|psi>; zero vectors are dropped and
/// recorded as eliminated.
ApplyResult apply_node(const StateSet& states, const std::vector<int>& group, const Matrix& op);

struct LeafCheck {
    bool distinguishable = false;
    std::optional<std::vector<int>> witnessGroup;
};

/// True when at most one state survives, or some allowed group's reduced
/// operators have pairwise disjoint supports (exact check: the product of
/// every pair of reduced density operators vanishes), which suffices for
/// one-shot projective discrimination by that group.
LeafCheck leaf_distinguishable(const StateSet& states, const std::vector<std::vector<int>>& groups);

struct LeafReport {
    std::vector<std::size_t> path;  // outcome indices from the root
    std::vector<std::string> survivors;
    bool distinguishable = false;
    std::string witnessGroup;        // e.g. "BC", empty when <= 1 survivor
    bool orthogonalityPreserved = true;  // survivors stayed pairwise orthogonal
};

struct DiscriminationOutcome {
    bool distinguished = false;
    bool orthogonalityPreserved = true;  // across the whole tree (reported, not required)
    std::vector<LeafReport> leaves;
};

/// Walks the tree, enforcing that each node's group lies within one side of
/// the bipartition and that each node's Kraus family is complete; verdict
/// "distinguished" iff every leaf passes leaf_distinguishable with the two
/// sides of the bipartition as the allowed groups.
DiscriminationOutcome verify_tree(const StateSet& states, const Grouping& g,
                                  const ProtocolNode& tree);

/// The two-round tree that discriminates the 2x2x2 construction's UBB in the
/// A|BC cut: Bob and Charlie measure {P_tau, I - P_tau} with P_tau the
/// projector onto the (unnormalized) |tau_2^2>, then Alice measures {|0><0|,
/// |1><1|} on the non-stopper branch.
ProtocolNode appendix_protocol_tree();

ProtocolNode clone_tree(const ProtocolNode& node);

}  // namespace entcert

#endif
