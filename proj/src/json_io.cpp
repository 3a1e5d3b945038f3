#include "entcert/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entcert {

Json scalar_to_json(const Scalar& s) {
    if (s.is_real()) return rational_to_string(s.re);
    Json j;
    j["re"] = rational_to_string(s.re);
    j["im"] = rational_to_string(s.im);
    return j;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(make_rational(j.get<long>()));
    if (j.is_object()) {
        Scalar s;
        if (j.contains("re")) s.re = parse_rational(j.at("re").get<std::string>());
        if (j.contains("im")) s.im = parse_rational(j.at("im").get<std::string>());
        return s;
    }
    throw std::invalid_argument("scalar: expected string, integer or {re, im} object");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array())
        throw std::invalid_argument("matrix: expected a non-empty array of rows");
    Matrix m(j.size(), j.front().size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j.at(i);
        if (row.size() != m.cols()) throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = scalar_from_json(row.at(k));
    }
    return m;
}

Json state_set_to_json(const StateSet& set) {
    Json j;
    j["dims"] = set.system.dims;
    Json states = Json::array();
    for (const auto& s : set.states) {
        Json state;
        state["label"] = s.label;
        Json terms = Json::array();
        for (const auto& [idx, c] : s.coeffs) {
            Json term;
            term["index"] = idx;
            term["re"] = rational_to_string(c.re);
            if (c.im != 0) term["im"] = rational_to_string(c.im);
            terms.push_back(std::move(term));
        }
        state["terms"] = std::move(terms);
        states.push_back(std::move(state));
    }
    j["states"] = std::move(states);
    return j;
}

StateSet state_set_from_json(const Json& j) {
    StateSet set;
    if (!j.contains("dims")) throw std::invalid_argument("state set: missing 'dims'");
    set.system = PartySystem(j.at("dims").get<std::vector<int>>());
    for (const Json& state : j.at("states")) {
        PureState s(set.system);
        if (state.contains("label")) s.label = state.at("label").get<std::string>();
        for (const Json& term : state.at("terms")) {
            MultiIndex idx = term.at("index").get<MultiIndex>();
            Scalar c;
            c.re = parse_rational(term.at("re").get<std::string>());
            if (term.contains("im")) c.im = parse_rational(term.at("im").get<std::string>());
            s.add_term(idx, c);
        }
        set.push(std::move(s));
    }
    set.validate();
    return set;
}

Json protocol_to_json(const ProtocolNode& node) {
    Json j;
    j["group"] = node.group;
    Json outcomes = Json::array();
    for (const auto& outcome : node.outcomes) {
        Json o;
        o["kraus"] = matrix_to_json(outcome.kraus);
        o["child"] = outcome.child ? protocol_to_json(*outcome.child) : Json("leaf");
        outcomes.push_back(std::move(o));
    }
    j["outcomes"] = std::move(outcomes);
    return j;
}

ProtocolNode protocol_from_json(const Json& j) {
    ProtocolNode node;
    node.group = j.at("group").get<std::vector<int>>();
    for (const Json& o : j.at("outcomes")) {
        ProtocolOutcome outcome;
        outcome.kraus = matrix_from_json(o.at("kraus"));
        const Json& child = o.at("child");
        if (child.is_string() && child.get<std::string>() == "leaf") {
            outcome.child = nullptr;
        } else if (child.is_object()) {
            outcome.child = std::make_unique<ProtocolNode>(protocol_from_json(child));
        } else {
            throw std::invalid_argument("protocol: 'child' must be a node object or \"leaf\"");
        }
        node.outcomes.push_back(std::move(outcome));
    }
    return node;
}

Json grouping_to_json(const Grouping& g) {
    Json j;
    j["name"] = g.name();
    j["left"] = g.left;
    j["right"] = g.right;
    return j;
}

Grouping parse_grouping(const std::string& name, std::size_t partyCount) {
    auto bar = name.find('|');
    if (bar == std::string::npos)
        throw std::invalid_argument("grouping '" + name + "': expected letters like A|BC");
    std::vector<int> left;
    for (char ch : name.substr(0, bar)) {
        char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (up < 'A' || static_cast<std::size_t>(up - 'A') >= partyCount)
            throw std::invalid_argument("grouping '" + name + "': unknown party letter");
        left.push_back(up - 'A');
    }
    Grouping g(left, partyCount);
    // The right half is redundant but must name exactly the complement.
    std::vector<int> right;
    for (char ch : name.substr(bar + 1)) {
        char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (up < 'A' || static_cast<std::size_t>(up - 'A') >= partyCount)
            throw std::invalid_argument("grouping '" + name + "': unknown party letter");
        right.push_back(up - 'A');
    }
    std::sort(right.begin(), right.end());
    if (right != g.right)
        throw std::invalid_argument("grouping '" + name + "': sides do not partition the parties");
    return g;
}

Json span_certificate_to_json(const SpanCertificate& c, bool includeStackedMap) {
    Json j;
    j["grouping"] = c.grouping.name();
    j["state_count"] = c.stateCount;
    j["lambda_count"] = c.lambdaCount;
    j["gamma_count"] = c.gammaCount;
    j["span_dim"] = c.spanDim;
    j["full"] = c.full;
    if (includeStackedMap) j["stacked_map"] = matrix_to_json(c.stackedMap);
    return j;
}

namespace {

std::string ges_verdict_name(GesVerdict v) {
    switch (v) {
        case GesVerdict::GenuinelyEntangled: return "genuinely-entangled-subspace";
        case GesVerdict::Inconclusive: return "inconclusive";
        case GesVerdict::NotGes: return "not-genuinely-entangled";
    }
    return "?";
}

std::string ubb_verdict_name(UbbVerdict v) {
    switch (v) {
        case UbbVerdict::Ubb: return "ubb";
        case UbbVerdict::Inconclusive: return "inconclusive";
        case UbbVerdict::NotUbb: return "not-ubb";
    }
    return "?";
}

}  // namespace

Json ges_certificate_to_json(const GesCertificate& c, bool includeStackedMap) {
    Json j;
    j["verdict"] = ges_verdict_name(c.verdict);
    Json cuts = Json::array();
    for (const auto& cut : c.cuts) cuts.push_back(span_certificate_to_json(cut, includeStackedMap));
    j["cuts"] = std::move(cuts);
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

Json ubb_certificate_to_json(const UbbCertificate& c, bool includeStackedMap) {
    Json j;
    j["verdict"] = ubb_verdict_name(c.verdict);
    j["complement_dim"] = c.complementDim;
    j["complement"] = state_set_to_json(c.complement);
    j["ges"] = ges_certificate_to_json(c.ges, includeStackedMap);
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

Json oplm_certificate_to_json(const OplmCertificate& c) {
    Json j;
    j["grouping"] = c.grouping.name();
    j["side"] = side_name(c.side);
    j["active_dim"] = c.activeDim;
    j["span_dim"] = c.spanDim;
    j["solution_dim"] = c.solutionDim;
    j["nontrivial_exists"] = c.nontrivialExists;
    return j;
}

Json strong_nonlocality_to_json(const StrongNonlocalityCertificate& c) {
    Json j;
    j["strongly_nonlocal"] = c.strongly_nonlocal;
    Json certs = Json::array();
    for (const auto& cert : c.certificates) certs.push_back(oplm_certificate_to_json(cert));
    j["certificates"] = std::move(certs);
    if (c.witness) {
        Json w;
        w["grouping"] = c.witnessGrouping->name();
        w["side"] = side_name(*c.witnessSide);
        w["outcomes"] = Json::array({matrix_to_json(c.witness->first),
                                     matrix_to_json(c.witness->second)});
        j["witness"] = std::move(w);
    }
    return j;
}

Json fact3_to_json(const Fact3Table& t) {
    Json j;
    j["all_pass"] = t.all_pass;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["mask"] = r.mask;
        row["traced_party"] = r.tracedParty;
        row["rank"] = r.rank;
        row["bound"] = r.bound;
        row["pass"] = r.pass;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string fact3_to_csv(const Fact3Table& t) {
    std::ostringstream out;
    out << "mask,traced_party,rank,bound,pass\n";
    for (const auto& r : t.rows)
        out << r.mask << ',' << r.tracedParty << ',' << r.rank << ',' << r.bound << ','
            << (r.pass ? 1 : 0) << '\n';
    return out.str();
}

Json distillability_to_json(const DistillabilityCertificate& c) {
    Json j;
    j["pass"] = c.pass;
    j["precondition_ok"] = c.preconditionOk;
    j["ges"] = ges_certificate_to_json(c.ges);
    if (!c.table.rows.empty()) j["fact3"] = fact3_to_json(c.table);
    j["inference"] = c.inference;
    return j;
}

Json discrimination_to_json(const DiscriminationOutcome& o) {
    Json j;
    j["distinguished"] = o.distinguished;
    j["orthogonality_preserved"] = o.orthogonalityPreserved;
    Json leaves = Json::array();
    for (const auto& leaf : o.leaves) {
        Json l;
        l["path"] = leaf.path;
        l["survivors"] = leaf.survivors;
        l["distinguishable"] = leaf.distinguishable;
        if (!leaf.witnessGroup.empty()) l["witness_group"] = leaf.witnessGroup;
        l["orthogonality_preserved"] = leaf.orthogonalityPreserved;
        leaves.push_back(std::move(l));
    }
    j["leaves"] = std::move(leaves);
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << text;
}

}  // namespace entcert
