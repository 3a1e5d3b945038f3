#include "entcert/constructions.hpp"

#include <stdexcept>

namespace entcert {

namespace {

PureState from_terms(const PartySystem& sys, const std::string& label,
                     std::initializer_list<std::pair<MultiIndex, long>> terms) {
    PureState s(sys, label);
    for (const auto& [idx, c] : terms) s.add_term(idx, Scalar(c));
    return s;
}

}  // namespace

RotationTriple::RotationTriple(int h_, int q_, int m_) : h(h_), q(q_), m(m_) {
    if (h < 0 || h > 2 || q < 0 || q > 2 || m < 0 || m > 2)
        throw std::invalid_argument("rotation triple components must lie in {0,1,2}");
}

std::string RotationTriple::suffix() const {
    return std::to_string(h) + std::to_string(q) + std::to_string(m);
}

PureState stopper(int d, int r) {
    if (d < 2 || r < 2) throw std::invalid_argument("stopper: requires d >= 2 and r >= 2");
    PartySystem sys(std::vector<int>(static_cast<std::size_t>(r), d));
    PureState tau(sys, "tau_" + std::to_string(d) + "^" + std::to_string(r));
    MultiIndex idx(static_cast<std::size_t>(r), 0);
    while (true) {
        tau.coeffs.emplace(idx, Scalar(1));
        int p = r - 1;
        while (p >= 0 && ++idx[p] == d) idx[p--] = 0;
        if (p < 0) break;
    }
    return tau;
}

StateSet omega_set(const StateSet& set, std::size_t psiIdx, int d, int r) {
    set.validate();
    if (psiIdx >= set.size()) throw std::invalid_argument("omega_set: psi index out of range");
    if (set.system.party_count() != static_cast<std::size_t>(r))
        throw std::invalid_argument("omega_set: system is not a d^r space (party count)");
    for (int dim : set.system.dims)
        if (dim != d) throw std::invalid_argument("omega_set: system is not a d^r space (dims)");

    if (rank(coefficient_matrix(set)) != set.size())
        throw std::invalid_argument("omega_set: input states are linearly dependent");

    PureState tau = stopper(d, r);
    const PureState& psi = set.states[psiIdx];
    Scalar psi_tau = inner_product(psi, tau);
    if (psi_tau.is_zero())
        throw std::invalid_argument("omega_set: anchor state is orthogonal to the stopper");

    StateSet out;
    out.system = set.system;
    for (std::size_t j = 0; j < set.size(); ++j) {
        if (j == psiIdx) continue;
        const PureState& phi = set.states[j];
        Scalar phi_tau = inner_product(phi, tau);
        PureState v = phi.scaled(psi_tau) - psi.scaled(phi_tau);
        v.label = "omega_" + std::to_string(out.size());
        if (!inner_product(tau, v).is_zero())
            throw std::invalid_argument("omega_set: output not orthogonal to the stopper");
        out.push(std::move(v));
    }
    return out;
}

Family222 family_222() {
    PartySystem sys({2, 2, 2});

    auto phi_minus = [&](int i) {
        return from_terms(sys, "phi_" + std::to_string(i) + "^-", {{{i, 0, 0}, 1}, {{i, 1, 0}, -1}});
    };
    auto psi_plus = [&](int i) {
        // |i>|i,1> + |i>|00+10>
        return from_terms(sys, "psi_" + std::to_string(i) + "^+",
                          {{{i, i, 1}, 1}, {{i, 0, 0}, 1}, {{i, 1, 0}, 1}});
    };
    auto psi_minus = [&](int i) {
        // |i>|i,1> - (1/2)|i>|00+10>, cleared to |i>(|00>+|10>-2|i,1>)
        return from_terms(sys, "psi_" + std::to_string(i) + "^-",
                          {{{i, 0, 0}, 1}, {{i, 1, 0}, 1}, {{i, i, 1}, -2}});
    };
    PureState eta_plus = from_terms(sys, "eta^+", {{{0, 1, 1}, 1}, {{1, 0, 1}, 1}});
    PureState eta_minus = from_terms(sys, "eta^-", {{{0, 1, 1}, 1}, {{1, 0, 1}, -1}});

    Family222 fam;
    fam.G.system = sys;
    fam.G.push(phi_minus(0));
    fam.G.push(phi_minus(1));
    fam.G.push(psi_plus(0));
    fam.G.push(psi_minus(0));
    fam.G.push(psi_plus(1));
    fam.G.push(psi_minus(1));
    fam.G.push(eta_plus);
    fam.G.push(eta_minus);

    fam.Gplus.system = sys;
    fam.Gplus.push(psi_plus(0));
    fam.Gplus.push(psi_plus(1));
    fam.Gplus.push(eta_plus);

    fam.U.system = sys;
    fam.U.push(phi_minus(0));
    fam.U.push(phi_minus(1));
    fam.U.push(eta_minus);
    fam.U.push(psi_minus(0));
    fam.U.push(psi_minus(1));
    fam.U.push(stopper(2, 3));
    return fam;
}

namespace {

// Base states of the 3x3x3 family at rotation 0; the (g) superscript is a
// cyclic rotation of the parties.
struct Base333 {
    PartySystem sys{{3, 3, 3}};

    PureState phi(int i, int sign) const {
        // phi_0 = |0>|01 +- 12>, phi_j = |j>|10 +- 21> for j = 1, 2.
        MultiIndex first = i == 0 ? MultiIndex{0, 0, 1} : MultiIndex{i, 1, 0};
        MultiIndex second = i == 0 ? MultiIndex{0, 1, 2} : MultiIndex{i, 2, 1};
        PureState s(sys);
        s.add_term(first, Scalar(1));
        s.add_term(second, Scalar(sign));
        return s;
    }

    MultiIndex psi_extra(int i) const { return {i, (2 * i + 2) % 3, i}; }

    PureState psi(int i, int sign) const {
        PureState s = phi(i, +1);
        // +: |i>|2i+2,i> + phi_i^+ ; -: phi_i^+ - 2|i>|2i+2,i> (integer-cleared)
        s.add_term(psi_extra(i), Scalar(sign > 0 ? 1 : -2));
        return s;
    }

    PureState eta(int i, int sign) const {
        PureState s = psi(i, +1);
        // +: |i>|ii> + psi_i^+ ; -: psi_i^+ - 3|i>|ii> (integer-cleared)
        s.add_term({i, i, i}, Scalar(sign > 0 ? 1 : -3));
        return s;
    }
};

PureState rotated(const PureState& base, int g, const std::string& name, int sign) {
    PureState s = cyclic_rotate(base, g);
    s.label = name + "^(" + std::to_string(g) + ")" + (sign > 0 ? "+" : "-");
    return s;
}

}  // namespace

Family333 family_333(const RotationTriple& rot) {
    Base333 base;
    Family333 fam;
    fam.rot = rot;

    auto others = [](int x) {
        std::vector<int> out;
        for (int g = 0; g < 3; ++g)
            if (g != x) out.push_back(g);
        return out;
    };

    // Gplus: the omega_set anchor eta_0^(q)+ is placed first so the derived
    // basis comes out in the published order.
    fam.Gplus.system = base.sys;
    fam.Gplus.push(rotated(base.eta(0, +1), rot.q, "eta_0", +1));
    fam.Gplus.push(rotated(base.psi(1, +1), rot.h, "psi_1", +1));
    fam.Gplus.push(rotated(base.eta(2, +1), rot.m, "eta_2", +1));
    for (int g : others(rot.q)) fam.Gplus.push(rotated(base.psi(0, +1), g, "psi_0", +1));
    for (int g : others(rot.h)) fam.Gplus.push(rotated(base.phi(1, +1), g, "phi_1", +1));
    for (int g : others(rot.m)) fam.Gplus.push(rotated(base.psi(2, +1), g, "psi_2", +1));

    fam.Gminus.system = base.sys;
    for (int i = 0; i < 3; ++i)
        for (int g = 0; g < 3; ++g)
            fam.Gminus.push(rotated(base.phi(i, -1), g, "phi_" + std::to_string(i), -1));
    for (int g = 0; g < 3; ++g) fam.Gminus.push(rotated(base.psi(0, -1), g, "psi_0", -1));
    for (int g = 0; g < 3; ++g) fam.Gminus.push(rotated(base.psi(2, -1), g, "psi_2", -1));
    fam.Gminus.push(rotated(base.eta(0, -1), rot.q, "eta_0", -1));
    fam.Gminus.push(rotated(base.eta(2, -1), rot.m, "eta_2", -1));
    fam.Gminus.push(rotated(base.psi(1, -1), rot.h, "psi_1", -1));

    fam.Uhqm = fam.Gminus;
    fam.Uhqm.push(stopper(3, 3));

    StateSet raw = omega_set(fam.Gplus, 0, 3, 3);
    fam.gesBasis.system = base.sys;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        PureState s = raw.states[k].primitive();
        s.label = "psi_" + std::to_string(k);
        fam.gesBasis.push(std::move(s));
    }
    return fam;
}

}  // namespace entcert
