#include "entcert/locc.hpp"

#include <algorithm>
#include <stdexcept>

namespace entcert {

namespace {

Grouping group_vs_rest(const std::vector<int>& group, std::size_t partyCount) {
    return Grouping(group, partyCount);
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
}

}  // namespace

ApplyResult apply_node(const StateSet& states, const std::vector<int>& group, const Matrix& op) {
    Grouping g = group_vs_rest(group, states.system.party_count());
    std::size_t d = 1;
    for (int p : g.left) d *= static_cast<std::size_t>(states.system.dims[p]);
    if (op.rows() != d || op.cols() != d)
        throw std::invalid_argument("apply_node: operator dimension " + std::to_string(op.rows()) +
                                    "x" + std::to_string(op.cols()) +
                                    " does not match the group's composite dimension " +
                                    std::to_string(d));
    ApplyResult result;
    result.survivors.system = states.system;
    for (const auto& s : states.states) {
        Matrix flat = flatten(s, g);
        PureState mapped = unflatten(op * flat, states.system, g);
        mapped.label = s.label;
        if (mapped.is_zero())
            result.eliminated.push_back(s.label);
        else
            result.survivors.push(std::move(mapped));
    }
    return result;
}

LeafCheck leaf_distinguishable(const StateSet& states,
                               const std::vector<std::vector<int>>& groups) {
    LeafCheck check;
    if (states.size() <= 1) {
        check.distinguishable = true;
        return check;
    }
    for (const auto& group : groups) {
        std::vector<Matrix> reduced;
        reduced.reserve(states.size());
        for (const auto& s : states.states) reduced.push_back(reduced_density({s}, group));
        bool disjoint = true;
        for (std::size_t i = 0; i < reduced.size() && disjoint; ++i)
            for (std::size_t j = i + 1; j < reduced.size() && disjoint; ++j)
                if (!(reduced[i] * reduced[j]).is_zero()) disjoint = false;
        if (disjoint) {
            check.distinguishable = true;
            check.witnessGroup = group;
            return check;
        }
    }
    return check;
}

namespace {

std::string group_letters(const std::vector<int>& group) {
    std::string s;
    for (int p : group) s += static_cast<char>('A' + p);
    return s;
}

void walk(const StateSet& current, const Grouping& g, const ProtocolNode& node,
          std::vector<std::size_t>& path, bool orthoSoFar, DiscriminationOutcome& out) {
    if (node.outcomes.empty())
        throw std::invalid_argument("verify_tree: node with no outcomes");
    std::vector<int> group = node.group;
    std::sort(group.begin(), group.end());
    if (!subset_of(group, g.left) && !subset_of(group, g.right))
        throw std::invalid_argument("verify_tree: node group " + group_letters(group) +
                                    " straddles the bipartition " + g.name());

    std::size_t d = 1;
    for (int p : group) d *= static_cast<std::size_t>(current.system.dims[p]);
    Matrix completeness(d, d);
    for (const auto& outcome : node.outcomes) {
        if (outcome.kraus.rows() != d || outcome.kraus.cols() != d)
            throw std::invalid_argument("verify_tree: Kraus operator on group " +
                                        group_letters(group) +
                                        " does not match the group's composite dimension");
        completeness += outcome.kraus.conj_transpose() * outcome.kraus;
    }
    if (completeness != Matrix::identity(d))
        throw std::invalid_argument("verify_tree: Kraus operators on group " +
                                    group_letters(group) + " do not satisfy completeness");

    for (std::size_t k = 0; k < node.outcomes.size(); ++k) {
        const auto& outcome = node.outcomes[k];
        ApplyResult applied = apply_node(current, group, outcome.kraus);
        bool ortho = orthoSoFar &&
                     is_mutually_orthogonal(applied.survivors).mutually_orthogonal;
        path.push_back(k);
        if (outcome.child && applied.survivors.size() == 0) {
            // Every state was eliminated on this branch; the subtree below has
            // nothing left to discriminate.
            LeafReport report;
            report.path = path;
            report.distinguishable = true;
            report.orthogonalityPreserved = ortho;
            out.leaves.push_back(std::move(report));
        } else if (outcome.child) {
            walk(applied.survivors, g, *outcome.child, path, ortho, out);
        } else {
            LeafReport report;
            report.path = path;
            for (const auto& s : applied.survivors.states) report.survivors.push_back(s.label);
            LeafCheck check = leaf_distinguishable(applied.survivors, {g.left, g.right});
            report.distinguishable = check.distinguishable;
            if (check.witnessGroup) report.witnessGroup = group_letters(*check.witnessGroup);
            report.orthogonalityPreserved = ortho;
            out.orthogonalityPreserved = out.orthogonalityPreserved && ortho;
            if (!check.distinguishable) out.distinguished = false;
            out.leaves.push_back(std::move(report));
        }
        path.pop_back();
    }
}

}  // namespace

DiscriminationOutcome verify_tree(const StateSet& states, const Grouping& g,
                                  const ProtocolNode& tree) {
    states.validate();
    DiscriminationOutcome out;
    out.distinguished = true;
    out.orthogonalityPreserved = true;
    std::vector<std::size_t> path;
    walk(states, g, tree, path, true, out);
    return out;
}

ProtocolNode appendix_protocol_tree() {
    // P_tau projects onto |tau_2^2> = |00+01+10+11> on the BC pair.
    Matrix p_tau(4, 4);
    Scalar quarter(make_rational(1, 4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) p_tau(i, j) = quarter;
    Matrix p_rest = Matrix::identity(4) - p_tau;

    auto alice = std::make_unique<ProtocolNode>();
    alice->group = {0};
    Matrix a0(2, 2), a1(2, 2);
    a0(0, 0) = Scalar(1);
    a1(1, 1) = Scalar(1);
    alice->outcomes.push_back({std::move(a0), nullptr});
    alice->outcomes.push_back({std::move(a1), nullptr});

    ProtocolNode root;
    root.group = {1, 2};
    root.outcomes.push_back({std::move(p_rest), std::move(alice)});
    root.outcomes.push_back({std::move(p_tau), nullptr});
    return root;
}

ProtocolNode clone_tree(const ProtocolNode& node) {
    ProtocolNode copy;
    copy.group = node.group;
    for (const auto& outcome : node.outcomes) {
        ProtocolOutcome oc;
        oc.kraus = outcome.kraus;
        if (outcome.child) oc.child = std::make_unique<ProtocolNode>(clone_tree(*outcome.child));
        copy.outcomes.push_back(std::move(oc));
    }
    return copy;
}

}  // namespace entcert
