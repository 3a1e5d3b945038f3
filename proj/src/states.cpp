#include "entcert/states.hpp"

#include <algorithm>
#include <stdexcept>

namespace entcert {

PartySystem::PartySystem(std::vector<int> d) : dims(std::move(d)) {
    for (int dim : dims)
        if (dim < 2) throw std::invalid_argument("local dimensions must be >= 2");
}

std::size_t PartySystem::total_dim() const {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    return total;
}

void PureState::add_term(const MultiIndex& idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(idx);
    if (it == coeffs.end()) {
        coeffs.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

Scalar PureState::coeff(const MultiIndex& idx) const {
    auto it = coeffs.find(idx);
    return it == coeffs.end() ? Scalar(0) : it->second;
}

void PureState::validate() const {
    if (coeffs.empty())
        throw std::invalid_argument("state '" + label + "' has no nonzero coefficient");
    for (const auto& [idx, c] : coeffs) {
        if (idx.size() != system.party_count())
            throw std::invalid_argument("state '" + label + "': index arity mismatch");
        for (std::size_t p = 0; p < idx.size(); ++p)
            if (idx[p] < 0 || idx[p] >= system.dims[p])
                throw std::invalid_argument("state '" + label + "': index digit out of range");
        if (c.is_zero())
            throw std::invalid_argument("state '" + label + "': stored zero coefficient");
    }
}

PureState PureState::scaled(const Scalar& c) const {
    PureState out(system, label);
    if (c.is_zero()) return out;
    for (const auto& [idx, v] : coeffs) out.coeffs.emplace(idx, v * c);
    return out;
}

PureState PureState::primitive() const {
    if (coeffs.empty()) return *this;
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (const auto& [idx, c] : coeffs) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.re.get_num().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.im.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.re.get_den().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.im.get_den().get_mpz_t());
    }
    Scalar factor(make_rational(den_lcm, num_gcd));
    return scaled(factor);
}

PureState operator+(const PureState& a, const PureState& b) {
    if (a.system != b.system) throw std::invalid_argument("state addition: system mismatch");
    PureState out = a;
    for (const auto& [idx, c] : b.coeffs) out.add_term(idx, c);
    return out;
}

PureState operator-(const PureState& a, const PureState& b) {
    return a + b.scaled(Scalar(-1));
}

Grouping::Grouping(std::vector<int> leftParties, std::size_t partyCount) {
    std::sort(leftParties.begin(), leftParties.end());
    left = std::move(leftParties);
    if (left.empty()) throw std::invalid_argument("grouping: empty left group");
    for (int p : left)
        if (p < 0 || static_cast<std::size_t>(p) >= partyCount)
            throw std::invalid_argument("grouping: party index out of range");
    if (std::adjacent_find(left.begin(), left.end()) != left.end())
        throw std::invalid_argument("grouping: repeated party index");
    for (std::size_t p = 0; p < partyCount; ++p)
        if (!std::binary_search(left.begin(), left.end(), static_cast<int>(p)))
            right.push_back(static_cast<int>(p));
    if (right.empty()) throw std::invalid_argument("grouping: empty right group");
}

std::string Grouping::name() const {
    // Tripartite cuts keep the paper's presentation order.
    if (left.size() + right.size() == 3) {
        if (left == std::vector<int>{0}) return "A|BC";
        if (left == std::vector<int>{1}) return "B|CA";
        if (left == std::vector<int>{2}) return "C|AB";
        if (left == std::vector<int>{1, 2}) return "BC|A";
        if (left == std::vector<int>{0, 2}) return "CA|B";
        if (left == std::vector<int>{0, 1}) return "AB|C";
    }
    auto letters = [](const std::vector<int>& parties) {
        std::string s;
        for (int p : parties) s += static_cast<char>('A' + p);
        return s;
    };
    return letters(left) + "|" + letters(right);
}

std::vector<Grouping> tripartite_groupings() {
    return {Grouping({0}, 3), Grouping({1}, 3), Grouping({2}, 3)};
}

void StateSet::push(PureState s) {
    if (states.empty() && system.dims.empty()) system = s.system;
    if (s.system != system) throw std::invalid_argument("state set: system mismatch");
    states.push_back(std::move(s));
}

void StateSet::validate() const {
    for (const auto& s : states) {
        if (s.system != system) throw std::invalid_argument("state set: system mismatch");
        s.validate();
    }
}

Scalar inner_product(const PureState& a, const PureState& b) {
    if (a.system != b.system) throw std::invalid_argument("inner product: system mismatch");
    // Walk the smaller support.
    const PureState& small = a.coeffs.size() <= b.coeffs.size() ? a : b;
    const PureState& large = a.coeffs.size() <= b.coeffs.size() ? b : a;
    const bool small_is_a = &small == &a;
    Scalar sum;
    for (const auto& [idx, c] : small.coeffs) {
        auto it = large.coeffs.find(idx);
        if (it == large.coeffs.end()) continue;
        sum += small_is_a ? c.conj() * it->second : it->second.conj() * c;
    }
    return sum;
}

Rational norm_sq(const PureState& s) {
    Rational n(0);
    for (const auto& [idx, c] : s.coeffs) n += c.norm_sq();
    return n;
}

std::size_t composite_index(const MultiIndex& idx, const std::vector<int>& parties,
                            const std::vector<int>& dims) {
    std::size_t k = 0;
    for (int p : parties) k = k * static_cast<std::size_t>(dims[p]) + static_cast<std::size_t>(idx[p]);
    return k;
}

namespace {

std::size_t group_dim(const std::vector<int>& parties, const std::vector<int>& dims) {
    std::size_t d = 1;
    for (int p : parties) d *= static_cast<std::size_t>(dims[p]);
    return d;
}

}  // namespace

Matrix flatten(const PureState& s, const Grouping& g) {
    if (g.left.size() + g.right.size() != s.system.party_count())
        throw std::invalid_argument("flatten: grouping does not match system");
    Matrix m(group_dim(g.left, s.system.dims), group_dim(g.right, s.system.dims));
    for (const auto& [idx, c] : s.coeffs) {
        std::size_t k = composite_index(idx, g.left, s.system.dims);
        std::size_t l = composite_index(idx, g.right, s.system.dims);
        m(k, l) = c;
    }
    return m;
}

PureState unflatten(const Matrix& m, const PartySystem& system, const Grouping& g) {
    PureState s(system);
    const auto& dims = system.dims;
    for (std::size_t k = 0; k < m.rows(); ++k) {
        for (std::size_t l = 0; l < m.cols(); ++l) {
            if (m(k, l).is_zero()) continue;
            MultiIndex idx(system.party_count());
            std::size_t rem = k;
            for (auto it = g.left.rbegin(); it != g.left.rend(); ++it) {
                idx[*it] = static_cast<int>(rem % dims[*it]);
                rem /= dims[*it];
            }
            rem = l;
            for (auto it = g.right.rbegin(); it != g.right.rend(); ++it) {
                idx[*it] = static_cast<int>(rem % dims[*it]);
                rem /= dims[*it];
            }
            s.coeffs.emplace(std::move(idx), m(k, l));
        }
    }
    return s;
}

PureState cyclic_rotate(const PureState& s, int gIdx) {
    if (s.system.party_count() != 3)
        throw std::invalid_argument("cyclic_rotate: tripartite systems only");
    if (s.system.dims[0] != s.system.dims[1] || s.system.dims[1] != s.system.dims[2])
        throw std::invalid_argument("cyclic_rotate: equal local dimensions required");
    if (gIdx < 0 || gIdx > 2) throw std::invalid_argument("cyclic_rotate: rotation in {0,1,2}");
    if (gIdx == 0) return s;
    PureState out(s.system, s.label);
    for (const auto& [idx, c] : s.coeffs) {
        MultiIndex rotated(3);
        if (gIdx == 1) {
            rotated = {idx[2], idx[0], idx[1]};  // |abc> -> |c>|a>|b>
        } else {
            rotated = {idx[1], idx[2], idx[0]};  // |abc> -> |b>|c>|a>
        }
        out.coeffs.emplace(std::move(rotated), c);
    }
    return out;
}

Matrix reduced_density(const std::vector<PureState>& states, const std::vector<int>& keptParties) {
    if (states.empty()) throw std::invalid_argument("reduced_density: empty state list");
    const PartySystem& system = states.front().system;
    std::vector<int> traced;
    for (std::size_t p = 0; p < system.party_count(); ++p)
        if (std::find(keptParties.begin(), keptParties.end(), static_cast<int>(p)) ==
            keptParties.end())
            traced.push_back(static_cast<int>(p));
    Grouping g;
    g.left = keptParties;
    g.right = traced;
    std::size_t d = group_dim(keptParties, system.dims);
    Matrix rho(d, d);
    for (const auto& s : states) {
        if (s.system != system) throw std::invalid_argument("reduced_density: system mismatch");
        Matrix a = flatten(s, g);
        rho += a * a.conj_transpose();
    }
    return rho;
}

std::size_t marginal_rank(const std::vector<PureState>& states, int tracedParty) {
    if (states.empty()) throw std::invalid_argument("marginal_rank: empty state list");
    const PartySystem& system = states.front().system;
    if (tracedParty < 0 || static_cast<std::size_t>(tracedParty) >= system.party_count())
        throw std::invalid_argument("marginal_rank: traced party out of range");
    std::vector<int> kept;
    for (std::size_t p = 0; p < system.party_count(); ++p)
        if (static_cast<int>(p) != tracedParty) kept.push_back(static_cast<int>(p));
    return rank(reduced_density(states, kept));
}

OrthogonalityReport is_mutually_orthogonal(const StateSet& set) {
    OrthogonalityReport report;
    for (std::size_t i = 0; i < set.states.size(); ++i)
        for (std::size_t j = i + 1; j < set.states.size(); ++j)
            if (!inner_product(set.states[i], set.states[j]).is_zero()) {
                report.mutually_orthogonal = false;
                report.offending_pair = {i, j};
                return report;
            }
    return report;
}

Vector full_coefficient_vector(const PureState& s) {
    std::vector<int> all;
    for (std::size_t p = 0; p < s.system.party_count(); ++p) all.push_back(static_cast<int>(p));
    Vector v(s.system.total_dim(), Scalar(0));
    for (const auto& [idx, c] : s.coeffs) v[composite_index(idx, all, s.system.dims)] = c;
    return v;
}

Matrix coefficient_matrix(const StateSet& set) {
    Matrix m(set.states.size(), set.system.total_dim());
    for (std::size_t i = 0; i < set.states.size(); ++i) {
        Vector row = full_coefficient_vector(set.states[i]);
        for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
    }
    return m;
}

}  // namespace entcert
