// Python bindings for the certification toolkit. The exchange format is the
// same JSON document structure the CLI uses, passed as plain dicts/lists.

#include <pybind11/pybind11.h>

#include "entcert/constructions.hpp"
#include "entcert/distillability.hpp"
#include "entcert/entanglement.hpp"
#include "entcert/fixtures.hpp"
#include "entcert/json_io.hpp"
#include "entcert/locc.hpp"
#include "entcert/nonlocality.hpp"
#include "entcert/report.hpp"

namespace py = pybind11;
using namespace entcert;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: throw std::invalid_argument("unsupported JSON value");
    }
}

Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json arr = Json::array();
        for (const auto& item : obj) arr.push_back(py_to_json(item));
        return arr;
    }
    if (py::isinstance<py::dict>(obj)) {
        Json out = Json::object();
        for (const auto& item : obj.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    throw std::invalid_argument("unsupported python value in JSON conversion");
}

RotationTriple rot_from(const std::string& text) {
    std::string digits;
    for (char ch : text)
        if (ch != ',') digits += ch;
    if (digits.size() != 3) throw std::invalid_argument("rotation must be three digits");
    return RotationTriple(digits[0] - '0', digits[1] - '0', digits[2] - '0');
}

py::dict construct(const std::string& family, const std::string& rot) {
    StateSet set;
    if (family == "G") set = family_222().G;
    else if (family == "Gplus") set = family_222().Gplus;
    else if (family == "U") set = family_222().U;
    else if (family == "Ghqm+") set = family_333(rot_from(rot)).Gplus;
    else if (family == "Ghqm-") set = family_333(rot_from(rot)).Gminus;
    else if (family == "Uhqm") set = family_333(rot_from(rot)).Uhqm;
    else if (family == "GES") set = family_333(rot_from(rot)).gesBasis;
    else throw std::invalid_argument("unknown family '" + family + "'");
    return json_to_py(state_set_to_json(set));
}

py::dict py_stopper(int d, int r) {
    StateSet set;
    set.system = PartySystem(std::vector<int>(static_cast<std::size_t>(r), d));
    set.push(stopper(d, r));
    return json_to_py(state_set_to_json(set));
}

py::dict py_omega_set(const py::dict& stateSet, std::size_t psiIdx) {
    StateSet input = state_set_from_json(py_to_json(stateSet));
    int d = input.system.dims.at(0);
    for (int dim : input.system.dims)
        if (dim != d) throw std::invalid_argument("omega_set requires equal local dimensions");
    StateSet out = omega_set(input, psiIdx, d, static_cast<int>(input.system.party_count()));
    return json_to_py(state_set_to_json(out));
}

int py_rank(const py::list& rows) {
    return static_cast<int>(rank(matrix_from_json(py_to_json(rows))));
}

py::dict py_certify_ges(const py::dict& stateSet) {
    return json_to_py(ges_certificate_to_json(certify_ges(state_set_from_json(py_to_json(stateSet)))));
}

py::dict py_certify_ubb(const py::dict& stateSet) {
    return json_to_py(ubb_certificate_to_json(certify_ubb(state_set_from_json(py_to_json(stateSet)))));
}

py::dict py_certify_snl(const py::dict& stateSet) {
    return json_to_py(
        strong_nonlocality_to_json(certify_strong_nonlocality(state_set_from_json(py_to_json(stateSet)))));
}

py::dict py_certify_distillable(const py::dict& stateSet) {
    return json_to_py(
        distillability_to_json(certify_one_distillable(state_set_from_json(py_to_json(stateSet)))));
}

py::dict py_verify_protocol(const py::dict& stateSet, const std::string& grouping,
                            const py::object& tree) {
    StateSet set = state_set_from_json(py_to_json(stateSet));
    Grouping g = parse_grouping(grouping, set.system.party_count());
    ProtocolNode node =
        tree.is_none() ? appendix_protocol_tree() : protocol_from_json(py_to_json(tree));
    return json_to_py(discrimination_to_json(verify_tree(set, g, node)));
}

py::object py_appendix_tree() { return json_to_py(protocol_to_json(appendix_protocol_tree())); }

py::dict py_verify_fixtures() {
    auto checks = fixtures::verify_fixtures();
    Json j;
    j["all_pass"] = fixtures::all_fixtures_pass(checks);
    Json rows = Json::array();
    for (const auto& c : checks) {
        Json row;
        row["name"] = c.name;
        row["pass"] = c.pass;
        if (!c.detail.empty()) row["detail"] = c.detail;
        rows.push_back(std::move(row));
    }
    j["checks"] = std::move(rows);
    return json_to_py(j);
}

py::dict py_reproduce_paper() { return json_to_py(reproduce_json(reproduce_paper())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact certification toolkit for unextendible biseparable bases and genuinely "
              "entangled subspaces";
    m.def("construct", &construct, py::arg("family"), py::arg("rot") = "000",
          "Generate a named state family (G, Gplus, U, Ghqm+, Ghqm-, Uhqm, GES) as a dict");
    m.def("stopper", &py_stopper, py::arg("d"), py::arg("r"));
    m.def("omega_set", &py_omega_set, py::arg("state_set"), py::arg("psi_index"));
    m.def("rank", &py_rank, py::arg("rows"),
          "Exact rank of a matrix given as rows of integers or 'p/q' strings");
    m.def("certify_ges", &py_certify_ges, py::arg("state_set"));
    m.def("certify_ubb", &py_certify_ubb, py::arg("state_set"));
    m.def("certify_strong_nonlocality", &py_certify_snl, py::arg("state_set"));
    m.def("certify_distillable", &py_certify_distillable, py::arg("state_set"));
    m.def("verify_protocol", &py_verify_protocol, py::arg("state_set"), py::arg("grouping"),
          py::arg("tree") = py::none());
    m.def("appendix_protocol_tree", &py_appendix_tree);
    m.def("verify_fixtures", &py_verify_fixtures);
    m.def("reproduce_paper", &py_reproduce_paper,
          "Recompute every published number (slow: runs the full 27-triple batch)");
}
