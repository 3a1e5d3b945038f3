#include "entcert/nonlocality.hpp"

#include <stdexcept>

#include "entcert/parallel.hpp"

namespace entcert {

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

FeatureFamily reduced_feature_matrices(const StateSet& set, const Grouping& g, Side side) {
    set.validate();
    auto ortho = is_mutually_orthogonal(set);
    if (!ortho.mutually_orthogonal) {
        auto [i, j] = *ortho.offending_pair;
        throw std::invalid_argument("reduced_feature_matrices: states '" + set.states[i].label +
                                    "' and '" + set.states[j].label + "' are not orthogonal");
    }

    const std::size_t n = set.size();
    std::vector<Matrix> flats;
    flats.reserve(n);
    for (const auto& s : set.states) flats.push_back(flatten(s, g));

    FeatureFamily fam;
    fam.grouping = g;
    fam.side = side;
    fam.activeDim = side == Side::Left ? flats.front().rows() : flats.front().cols();
    fam.matrices.reserve(n * (n - 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            // left: conj(A_i) A_j^T ; right: conj(A_i)^T A_j
            Matrix pi = side == Side::Left ? flats[i].conj() * flats[j].transpose()
                                           : flats[i].conj().transpose() * flats[j];
            fam.matrices.push_back(std::move(pi));
            fam.pairIndex.emplace_back(i, j);
        }
    return fam;
}

OplmCertificate oplm_solution_space(const FeatureFamily& fam) {
    OplmCertificate cert;
    cert.grouping = fam.grouping;
    cert.side = fam.side;
    cert.activeDim = fam.activeDim;
    // E = I solves the equations iff every Pi is traceless, which is exactly
    // orthogonality of the underlying states.
    for (const auto& pi : fam.matrices)
        if (!pi.trace().is_zero())
            throw std::invalid_argument("oplm_solution_space: input set not orthogonal");
    cert.spanDim = span_rank(fam.matrices);
    cert.solutionDim = fam.activeDim * fam.activeDim - cert.spanDim;
    cert.nontrivialExists = cert.solutionDim >= 2;
    return cert;
}

namespace {

// Row-major constraint matrix of the equations sum_kp e_kp (Pi)_kp = 0.
Matrix constraint_matrix(const FeatureFamily& fam) {
    const std::size_t d = fam.activeDim;
    Matrix c(fam.matrices.size(), d * d);
    for (std::size_t t = 0; t < fam.matrices.size(); ++t)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t p = 0; p < d; ++p) c(t, k * d + p) = fam.matrices[t](k, p);
    return c;
}

Matrix to_square(const Vector& e, std::size_t d) {
    Matrix m(d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t p = 0; p < d; ++p) m(k, p) = e[k * d + p];
    return m;
}

bool proportional_to_identity(const Matrix& m) {
    const Scalar& c = m(0, 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != (i == j ? c : Scalar(0))) return false;
    return true;
}

// Rational upper bound on the spectral radius of a Hermitian matrix:
// Gershgorin row sums with |z| <= |re z| + |im z|.
Rational spectral_radius_bound(const Matrix& m) {
    Rational best(0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row += abs(m(i, j).re);
            row += abs(m(i, j).im);
        }
        if (row > best) best = row;
    }
    return best;
}

bool satisfies_equations(const FeatureFamily& fam, const Matrix& e) {
    for (const auto& pi : fam.matrices) {
        Scalar sum;
        for (std::size_t k = 0; k < fam.activeDim; ++k)
            for (std::size_t p = 0; p < fam.activeDim; ++p) sum += e(k, p) * pi(k, p);
        if (!sum.is_zero()) return false;
    }
    return true;
}

}  // namespace

TwoOutcomeMeasurement construct_nontrivial_oplm(const FeatureFamily& fam) {
    OplmCertificate cert = oplm_solution_space(fam);
    if (!cert.nontrivialExists)
        throw std::invalid_argument("construct_nontrivial_oplm: no nontrivial OPLM exists "
                                    "(solution space is spanned by the identity)");
    const std::size_t d = fam.activeDim;
    std::vector<Vector> solutions = kernel_basis(constraint_matrix(fam));

    Matrix e_star;
    bool found = false;
    for (const auto& sol : solutions) {
        Matrix e = to_square(sol, d);
        if (proportional_to_identity(e)) continue;
        // Hermitian solutions: E + E^dagger and i(E - E^dagger) both solve the
        // equations (all ordered pairs are imposed); not both proportional to I.
        Matrix h1 = e + e.conj_transpose();
        Matrix h2 = Scalar::i() * (e - e.conj_transpose());
        Matrix pick = !h1.is_zero() && !proportional_to_identity(h1) ? h1 : h2;
        if (pick.is_zero() || proportional_to_identity(pick)) continue;
        e_star = pick;
        found = true;
        break;
    }
    if (!found)
        throw std::logic_error("construct_nontrivial_oplm: kernel basis held no usable solution");

    Rational lambda = spectral_radius_bound(e_star);
    Scalar half(make_rational(1, 2));
    Matrix scaled = Scalar(Rational(1) / lambda) * e_star;
    TwoOutcomeMeasurement out{half * (Matrix::identity(d) + scaled),
                              half * (Matrix::identity(d) - scaled)};

    // Construction guarantees, verified exactly.
    if (out.first + out.second != Matrix::identity(d))
        throw std::logic_error("construct_nontrivial_oplm: outcomes do not sum to identity");
    for (const Matrix* e : {&out.first, &out.second}) {
        if (!e->is_hermitian()) throw std::logic_error("construct_nontrivial_oplm: not Hermitian");
        if (!hermitian_psd_minor_check(*e))
            throw std::logic_error("construct_nontrivial_oplm: outcome failed the PSD check");
        if (!satisfies_equations(fam, *e))
            throw std::logic_error("construct_nontrivial_oplm: outcome breaks orthogonality");
        if (proportional_to_identity(*e))
            throw std::logic_error("construct_nontrivial_oplm: outcome is trivial");
    }
    return out;
}

OplmValidation verify_oplm(const StateSet& set, const Grouping& g, Side side,
                           const std::vector<Matrix>& outcomes) {
    if (outcomes.empty()) throw std::invalid_argument("verify_oplm: no outcomes");
    FeatureFamily fam = reduced_feature_matrices(set, g, side);
    const std::size_t d = fam.activeDim;
    OplmValidation v;
    Matrix sum(d, d);
    v.hermitian = true;
    v.psd = true;
    v.orthogonality = true;
    v.nontrivial = false;
    for (const auto& e : outcomes) {
        if (e.rows() != d || e.cols() != d)
            throw std::invalid_argument("verify_oplm: outcome dimension mismatch");
        sum += e;
        v.hermitian = v.hermitian && e.is_hermitian();
        v.psd = v.psd && hermitian_psd_minor_check(e);
        v.orthogonality = v.orthogonality && satisfies_equations(fam, e);
        v.nontrivial = v.nontrivial || !proportional_to_identity(e);
    }
    v.complete = sum == Matrix::identity(d);
    return v;
}

StrongNonlocalityCertificate certify_strong_nonlocality(const StateSet& set) {
    set.validate();
    if (set.system.party_count() != 3)
        throw std::invalid_argument("certify_strong_nonlocality: tripartite systems only");

    struct Task {
        Grouping g;
        Side side;
    };
    // The paper's presentation order AB|C, BC|A, CA|B, two-party side first.
    std::vector<Grouping> cuts{Grouping({0, 1}, 3), Grouping({1, 2}, 3), Grouping({0, 2}, 3)};
    std::vector<Task> tasks;
    for (const auto& g : cuts) {
        tasks.push_back({g, Side::Left});
        tasks.push_back({g, Side::Right});
    }

    StrongNonlocalityCertificate cert;
    cert.certificates.resize(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        FeatureFamily fam = reduced_feature_matrices(set, tasks[i].g, tasks[i].side);
        cert.certificates[i] = oplm_solution_space(fam);
    });

    cert.strongly_nonlocal = true;
    for (const auto& c : cert.certificates)
        if (c.nontrivialExists) cert.strongly_nonlocal = false;
    if (!cert.strongly_nonlocal) {
        for (const auto& c : cert.certificates) {
            if (!c.nontrivialExists) continue;
            cert.witnessGrouping = c.grouping;
            cert.witnessSide = c.side;
            cert.witness = construct_nontrivial_oplm(
                reduced_feature_matrices(set, c.grouping, c.side));
            break;
        }
    }
    return cert;
}

}  // namespace entcert
