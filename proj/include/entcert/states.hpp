#ifndef ENTCERT_STATES_HPP
#define ENTCERT_STATES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entcert/matrix.hpp"

namespace entcert {

/// One digit per party.
using MultiIndex = std::vector<int>;

struct PartySystem {
    std::vector<int> dims;

    PartySystem() = default;
    explicit PartySystem(std::vector<int> d);

    std::size_t party_count() const { return dims.size(); }
    std::size_t total_dim() const;
    bool operator==(const PartySystem& o) const { return dims == o.dims; }
    bool operator!=(const PartySystem& o) const { return dims != o.dims; }
};

/// Unnormalized multipartite pure state: sparse coefficients over the
/// computational product basis. Integer-like rational coefficients
/// throughout; no normalization.
struct PureState {
    PartySystem system;
    std::map<MultiIndex, Scalar> coeffs;
    std::string label;

    PureState() = default;
    PureState(PartySystem sys, std::string lbl = "") : system(std::move(sys)), label(std::move(lbl)) {}

    /// Adds c to the coefficient at idx (dropping it if the sum is zero).
    void add_term(const MultiIndex& idx, const Scalar& c);
    Scalar coeff(const MultiIndex& idx) const;

    bool is_zero() const { return coeffs.empty(); }
    void validate() const;  // throws when an index is out of range or no term remains

    PureState scaled(const Scalar& c) const;
    /// Divides out the positive rational content (gcd of numerators / lcm of
    /// denominators over re and im parts). Zero states are returned as-is.
    PureState primitive() const;

    friend PureState operator+(const PureState& a, const PureState& b);
    friend PureState operator-(const PureState& a, const PureState& b);
    bool operator==(const PureState& o) const {
        return system == o.system && coeffs == o.coeffs;
    }
};

/// Bipartition of the parties into two nonempty groups, stored ascending.
struct Grouping {
    std::vector<int> left;
    std::vector<int> right;

    Grouping() = default;
    /// Builds from the left group; right is the complement. Validates both
    /// nonempty and in range.
    Grouping(std::vector<int> leftParties, std::size_t partyCount);

    std::string name() const;  // e.g. "A|BC"; tripartite cuts named A|BC, B|CA, C|AB
    Grouping swapped() const { Grouping g; g.left = right; g.right = left; return g; }
};

/// The canonical enumeration A|BC, B|CA, C|AB.
std::vector<Grouping> tripartite_groupings();

struct StateSet {
    PartySystem system;
    std::vector<PureState> states;

    std::size_t size() const { return states.size(); }
    void push(PureState s);
    void validate() const;
};

struct OrthogonalityReport {
    bool mutually_orthogonal = true;
    std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
};

/// <a|b> with conjugation on the first argument.
Scalar inner_product(const PureState& a, const PureState& b);

Rational norm_sq(const PureState& s);

/// Coefficient matrix a_kl of Eq.-(1) form for the given bipartition: row
/// index k runs over the left group's composite index, column index l over
/// the right group's. Composite indices are big-endian in ascending party
/// order (smallest party index is the most significant digit).
Matrix flatten(const PureState& s, const Grouping& g);

/// Inverse of flatten for the same grouping.
PureState unflatten(const Matrix& m, const PartySystem& system, const Grouping& g);

/// Tripartite cyclic rotation: gIdx=1 maps |abc> to |c>|a>|b>, gIdx=2 maps
/// |abc> to |b>|c>|a>. Requires equal local dimensions.
PureState cyclic_rotate(const PureState& s, int gIdx);

/// Exact rank of Tr_tracedParty( sum_i |s_i><s_i| ).
std::size_t marginal_rank(const std::vector<PureState>& states, int tracedParty);

/// The reduced operator itself (on the non-traced parties, composite index).
Matrix reduced_density(const std::vector<PureState>& states, const std::vector<int>& keptParties);

OrthogonalityReport is_mutually_orthogonal(const StateSet& set);

/// Stacks each state's coefficients as a row over the full product basis.
Matrix coefficient_matrix(const StateSet& set);

/// Row vector of a state's coefficients over the full product basis.
Vector full_coefficient_vector(const PureState& s);

std::size_t composite_index(const MultiIndex& idx, const std::vector<int>& parties,
                            const std::vector<int>& dims);

}  // namespace entcert

#endif
