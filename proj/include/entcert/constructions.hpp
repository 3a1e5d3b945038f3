#ifndef ENTCERT_CONSTRUCTIONS_HPP
#define ENTCERT_CONSTRUCTIONS_HPP

#include "entcert/states.hpp"

namespace entcert {

struct RotationTriple {
    int h = 0;
    int q = 0;
    int m = 0;

    RotationTriple() = default;
    RotationTriple(int h_, int q_, int m_);
    std::string suffix() const;  // "000", "120", ...
};

/// Stopper state tau_d^r = (|0> + ... + |d-1>)^{tensor r}: all d^r
/// coefficients equal 1.
PureState stopper(int d, int r);

/// Omega_d^r(S, |psi>) = { <psi|tau>|phi> - <phi|tau>|psi> : phi in S \ {psi} }.
/// Preconditions (checked): the set's system is d^{tensor r}, the states are
/// linearly independent, and <psi|tau> != 0. Every output is orthogonal to
/// the stopper and the outputs are linearly independent.
StateSet omega_set(const StateSet& set, std::size_t psiIdx, int d, int r);

/// The 2x2x2 construction. G is a full orthogonal basis of biseparable
/// states, Gplus = {psi_0^+, psi_1^+, eta^+}, U = (G \ Gplus) + stopper.
struct Family222 {
    StateSet G;
    StateSet Gplus;
    StateSet U;
};
Family222 family_222();

/// The 3x3x3 construction for one rotation triple. Gplus has 9 states,
/// Gminus 18; Uhqm = Gminus + stopper (19 states); gesBasis spans the
/// orthogonal complement of Uhqm (8 states, reduced to primitive integer
/// coefficients so they match the published tables).
struct Family333 {
    RotationTriple rot;
    StateSet Gplus;
    StateSet Gminus;
    StateSet Uhqm;
    StateSet gesBasis;
};
Family333 family_333(const RotationTriple& rot);

}  // namespace entcert

#endif
