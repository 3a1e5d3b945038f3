#ifndef ENTCERT_DISTILLABILITY_HPP
#define ENTCERT_DISTILLABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "entcert/entanglement.hpp"
#include "entcert/states.hpp"

namespace entcert {

/// Rank condition of the 1-distillability lemma for the projector onto the
/// span of the subset: rank(P) < max(rank Tr_right P, rank Tr_left P).
struct Lemma4Report {
    Grouping grouping;
    std::size_t projectorRank = 0;
    std::size_t leftMarginalRank = 0;
    std::size_t rightMarginalRank = 0;
    bool holds = false;
};

Lemma4Report lemma4_check(const std::vector<PureState>& subset, const Grouping& g);

/// One row of the exhaustive marginal-rank enumeration: subset bitmask over
/// the 8 basis states, traced party, exact rank, required bound
/// min(|S|+1, 9), pass flag.
struct Fact3Row {
    std::uint32_t mask = 0;
    int tracedParty = 0;
    std::size_t rank = 0;
    std::size_t bound = 0;
    bool pass = false;
};

struct Fact3Table {
    std::vector<Fact3Row> rows;  // 255 subsets x 3 traced parties
    bool all_pass = false;
    std::optional<Fact3Row> firstViolation;
};

/// Enumerates every nonempty subset of the 8-state basis and every traced
/// party; requires a 3x3x3 system and exactly 8 states.
Fact3Table fact3_enumeration(const StateSet& gesBasis);

struct DistillabilityCertificate {
    bool pass = false;
    bool preconditionOk = false;  // the basis is certified genuinely entangled
    GesCertificate ges;
    Fact3Table table;
    std::string inference;
};

/// Verdict for "1-distillable in every bipartition": the basis must certify
/// as a GES, and the marginal-rank enumeration must hold for every subset and
/// every traced party.
DistillabilityCertificate certify_one_distillable(const StateSet& gesBasis);

}  // namespace entcert

#endif
