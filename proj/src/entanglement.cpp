#include "entcert/entanglement.hpp"

#include <stdexcept>

#include "entcert/parallel.hpp"

namespace entcert {

std::vector<Matrix> product_forming_matrices(const StateSet& set, const Grouping& g) {
    if (set.states.empty()) throw std::invalid_argument("product_forming_matrices: empty set");
    const std::size_t n = set.size();
    std::vector<Matrix> flats;
    flats.reserve(n);
    for (const auto& s : set.states) flats.push_back(flatten(s, g));
    const std::size_t dL = flats.front().rows();
    const std::size_t dR = flats.front().cols();

    std::vector<Matrix> lambdas;
    lambdas.reserve(dL * (dL - 1) / 2 * dR * (dR - 1) / 2);
    for (std::size_t k = 0; k < dL; ++k)
        for (std::size_t p = k + 1; p < dL; ++p)
            for (std::size_t l = 0; l < dR; ++l)
                for (std::size_t r = l + 1; r < dR; ++r) {
                    Matrix lam(n, n);
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j)
                            lam(i, j) = flats[i](k, l) * flats[j](p, r) -
                                        flats[i](k, r) * flats[j](p, l);
                    lambdas.push_back(std::move(lam));
                }
    return lambdas;
}

std::vector<Matrix> symmetrization_matrices(std::size_t n) {
    if (n < 1) throw std::invalid_argument("symmetrization_matrices: n >= 1 required");
    std::vector<Matrix> gammas;
    gammas.reserve(n * (n - 1) / 2);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) {
            Matrix gam(n, n);
            gam(s, t) = Scalar(1);
            gam(t, s) = Scalar(-1);
            gammas.push_back(std::move(gam));
        }
    return gammas;
}

SpanCertificate span_dimension(const StateSet& set, const Grouping& g) {
    SpanCertificate cert;
    cert.grouping = g;
    cert.stateCount = set.size();
    std::vector<Matrix> family = product_forming_matrices(set, g);
    cert.lambdaCount = family.size();
    std::vector<Matrix> gammas = symmetrization_matrices(set.size());
    cert.gammaCount = gammas.size();
    for (auto& gam : gammas) family.push_back(std::move(gam));
    cert.stackedMap = column_stack(family);
    cert.spanDim = rank(cert.stackedMap);
    cert.full = cert.spanDim == set.size() * set.size();
    return cert;
}

std::optional<Grouping> product_bipartition(const PureState& s) {
    const std::size_t parties = s.system.party_count();
    // Proper bipartitions, enumerated once each: left group contains party 0.
    const std::size_t subsets = static_cast<std::size_t>(1) << (parties - 1);
    for (std::size_t bits = 0; bits + 1 < subsets; ++bits) {
        std::vector<int> left{0};
        for (std::size_t p = 1; p < parties; ++p)
            if (bits & (static_cast<std::size_t>(1) << (p - 1))) left.push_back(static_cast<int>(p));
        Grouping g(left, parties);
        if (rank(flatten(s, g)) == 1) return g;
    }
    return std::nullopt;
}

GesCertificate certify_ges(const StateSet& basis) {
    basis.validate();
    if (basis.system.party_count() != 3)
        throw std::invalid_argument("certify_ges: tripartite systems only");
    if (basis.states.empty()) throw std::invalid_argument("certify_ges: empty basis");

    GesCertificate cert;
    auto cuts = tripartite_groupings();
    cert.cuts.resize(cuts.size());
    parallel_for(cuts.size(), [&](std::size_t i) { cert.cuts[i] = span_dimension(basis, cuts[i]); });

    bool all_full = true;
    for (const auto& c : cert.cuts) all_full = all_full && c.full;
    if (all_full) {
        cert.verdict = GesVerdict::GenuinelyEntangled;
        return cert;
    }
    // A basis state that is itself a product across some cut refutes the claim
    // outright; otherwise Theorem-2 failure is only inconclusive.
    for (const auto& s : basis.states) {
        if (auto g = product_bipartition(s)) {
            cert.verdict = GesVerdict::NotGes;
            cert.detail = "basis state '" + s.label + "' is a product across " + g->name();
            return cert;
        }
    }
    cert.verdict = GesVerdict::Inconclusive;
    cert.detail = "span not full in some bipartition; the criterion is sufficient only";
    return cert;
}

StateSet orthogonal_complement_basis(const StateSet& candidate) {
    // <s|v> = 0 for all candidate states s is the kernel of the conjugated
    // coefficient matrix.
    std::vector<Vector> kernel = kernel_basis(coefficient_matrix(candidate).conj());
    StateSet out;
    out.system = candidate.system;
    for (std::size_t k = 0; k < kernel.size(); ++k) {
        PureState s(candidate.system, "complement_" + std::to_string(k));
        const auto& dims = candidate.system.dims;
        for (std::size_t idx = 0; idx < kernel[k].size(); ++idx) {
            if (kernel[k][idx].is_zero()) continue;
            MultiIndex mi(dims.size());
            std::size_t rem = idx;
            for (std::size_t p = dims.size(); p-- > 0;) {
                mi[p] = static_cast<int>(rem % static_cast<std::size_t>(dims[p]));
                rem /= static_cast<std::size_t>(dims[p]);
            }
            s.coeffs.emplace(std::move(mi), kernel[k][idx]);
        }
        out.push(s.primitive());
    }
    return out;
}

namespace {

void check_ubb_preconditions(const StateSet& candidate) {
    candidate.validate();
    auto ortho = is_mutually_orthogonal(candidate);
    if (!ortho.mutually_orthogonal) {
        auto [i, j] = *ortho.offending_pair;
        throw std::invalid_argument("certify_ubb: candidate states '" +
                                    candidate.states[i].label + "' and '" +
                                    candidate.states[j].label + "' are not orthogonal");
    }
    for (const auto& s : candidate.states)
        if (!product_bipartition(s))
            throw std::invalid_argument("certify_ubb: candidate state '" + s.label +
                                        "' is not biseparable (genuinely entangled input)");
}

UbbCertificate certify_against_complement(const StateSet& candidate, StateSet complement) {
    UbbCertificate cert;
    cert.complementDim = complement.size();
    cert.complement = std::move(complement);
    if (cert.complementDim == 0) {
        cert.verdict = UbbVerdict::NotUbb;
        cert.detail = "orthogonal complement is empty; the candidate spans the full space";
        return cert;
    }
    cert.ges = certify_ges(cert.complement);
    switch (cert.ges.verdict) {
        case GesVerdict::GenuinelyEntangled:
            cert.verdict = UbbVerdict::Ubb;
            break;
        case GesVerdict::NotGes:
            cert.verdict = UbbVerdict::NotUbb;
            cert.detail = cert.ges.detail;
            break;
        case GesVerdict::Inconclusive:
            cert.verdict = UbbVerdict::Inconclusive;
            cert.detail = cert.ges.detail;
            break;
    }
    return cert;
}

}  // namespace

UbbCertificate certify_ubb(const StateSet& candidate) {
    check_ubb_preconditions(candidate);
    return certify_against_complement(candidate, orthogonal_complement_basis(candidate));
}

UbbCertificate certify_ubb(const StateSet& candidate, const StateSet& complement) {
    check_ubb_preconditions(candidate);
    complement.validate();
    if (complement.system != candidate.system)
        throw std::invalid_argument("certify_ubb: complement system mismatch");
    for (const auto& c : complement.states)
        for (const auto& s : candidate.states)
            if (!inner_product(s, c).is_zero())
                throw std::invalid_argument("certify_ubb: supplied complement state '" + c.label +
                                            "' is not orthogonal to candidate '" + s.label + "'");
    if (rank(coefficient_matrix(complement)) != complement.size())
        throw std::invalid_argument("certify_ubb: supplied complement basis is dependent");
    std::size_t expected = candidate.system.total_dim() - candidate.size();
    if (complement.size() != expected)
        throw std::invalid_argument("certify_ubb: supplied complement basis does not span the "
                                    "orthogonal complement (got " +
                                    std::to_string(complement.size()) + " states, need " +
                                    std::to_string(expected) + ")");
    return certify_against_complement(candidate, complement);
}

}  // namespace entcert
