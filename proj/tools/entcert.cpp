// Command line front end: construct the named state families, certify their
// properties, verify discrimination protocols, and regenerate the published
// numbers. Exit codes for certify: 0 pass, 1 fail, 2 inconclusive; other
// errors exit 3.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "entcert/constructions.hpp"
#include "entcert/distillability.hpp"
#include "entcert/entanglement.hpp"
#include "entcert/fixtures.hpp"
#include "entcert/json_io.hpp"
#include "entcert/locc.hpp"
#include "entcert/nonlocality.hpp"
#include "entcert/report.hpp"

namespace {

using namespace entcert;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

RotationTriple parse_rot(const std::string& text) {
    // "h,q,m" or "hqm"
    std::vector<int> vals;
    std::string digits;
    for (char ch : text)
        if (ch != ',') digits += ch;
    if (digits.size() != 3) throw std::invalid_argument("rotation must be three digits, e.g. 0,0,0");
    for (char ch : digits) {
        if (ch < '0' || ch > '2') throw std::invalid_argument("rotation digits must be 0, 1 or 2");
        vals.push_back(ch - '0');
    }
    return RotationTriple(vals[0], vals[1], vals[2]);
}

int run_verify_fixtures() {
    auto checks = fixtures::verify_fixtures();
    bool ok = fixtures::all_fixtures_pass(checks);
    for (const auto& c : checks)
        std::cout << (c.pass ? "ok   " : "FAIL ") << c.name
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    if (!ok) std::cerr << "fixture verification failed\n";
    return ok ? kExitPass : kExitFail;
}

int cmd_construct(const std::string& family, const std::string& rotText, const std::string& inPath,
                  int psiIdx, int d, int r, const std::string& outPath) {
    StateSet set;
    if (family == "G") {
        set = family_222().G;
    } else if (family == "Gplus") {
        set = family_222().Gplus;
    } else if (family == "U") {
        set = family_222().U;
    } else if (family == "Ghqm+" || family == "Ghqm-" || family == "Uhqm" || family == "GES") {
        Family333 fam = family_333(parse_rot(rotText));
        if (family == "Ghqm+") set = fam.Gplus;
        else if (family == "Ghqm-") set = fam.Gminus;
        else if (family == "Uhqm") set = fam.Uhqm;
        else set = fam.gesBasis;
    } else if (family == "stopper") {
        set.system = PartySystem(std::vector<int>(static_cast<std::size_t>(r), d));
        set.push(stopper(d, r));
    } else if (family == "omega") {
        if (inPath.empty())
            throw std::invalid_argument("construct omega requires --in <state-set.json>");
        StateSet input = state_set_from_json(read_json_file(inPath));
        int dd = input.system.dims.at(0);
        for (int dim : input.system.dims)
            if (dim != dd)
                throw std::invalid_argument("omega requires equal local dimensions");
        set = omega_set(input, static_cast<std::size_t>(psiIdx), dd,
                        static_cast<int>(input.system.party_count()));
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    std::string text = dump_json(state_set_to_json(set));
    if (outPath.empty() || outPath == "-")
        std::cout << text;
    else
        write_text_file(outPath, text);
    return kExitPass;
}

void emit_report(const Json& j, bool markdown, const std::string& title,
                 const std::vector<std::string>& lines) {
    if (markdown) {
        std::cout << "# " << title << "\n\n";
        for (const auto& line : lines) std::cout << "- " << line << "\n";
    } else {
        std::cout << dump_json(j);
    }
}

int cmd_certify(const std::string& kind, const std::string& inPath, bool markdown,
                bool withStackedMap) {
    StateSet set = state_set_from_json(read_json_file(inPath));
    if (kind == "ges") {
        GesCertificate cert = certify_ges(set);
        std::vector<std::string> lines;
        for (const auto& cut : cert.cuts)
            lines.push_back("cut " + cut.grouping.name() + ": span dim " +
                            std::to_string(cut.spanDim) + " of " +
                            std::to_string(cut.stateCount * cut.stateCount) +
                            (cut.full ? " (full)" : " (not full)"));
        lines.push_back("verdict: " + ges_certificate_to_json(cert)["verdict"].get<std::string>());
        emit_report(ges_certificate_to_json(cert, withStackedMap), markdown,
                    "Genuine-entanglement certificate", lines);
        if (cert.verdict == GesVerdict::GenuinelyEntangled) return kExitPass;
        return cert.verdict == GesVerdict::NotGes ? kExitFail : kExitInconclusive;
    }
    if (kind == "ubb") {
        UbbCertificate cert = certify_ubb(set);
        std::vector<std::string> lines;
        lines.push_back("complement dimension: " + std::to_string(cert.complementDim));
        for (const auto& cut : cert.ges.cuts)
            lines.push_back("complement span dim, " + cut.grouping.name() + ": " +
                            std::to_string(cut.spanDim));
        lines.push_back("verdict: " + ubb_certificate_to_json(cert)["verdict"].get<std::string>());
        emit_report(ubb_certificate_to_json(cert, withStackedMap), markdown, "UBB certificate",
                    lines);
        if (cert.verdict == UbbVerdict::Ubb) return kExitPass;
        return cert.verdict == UbbVerdict::NotUbb ? kExitFail : kExitInconclusive;
    }
    if (kind == "strong-nonlocality") {
        StrongNonlocalityCertificate cert = certify_strong_nonlocality(set);
        std::vector<std::string> lines;
        for (const auto& c : cert.certificates)
            lines.push_back("side " + side_name(c.side) + " of " + c.grouping.name() +
                            ": span dim " + std::to_string(c.spanDim) + ", solution dim " +
                            std::to_string(c.solutionDim) +
                            (c.nontrivialExists ? " (nontrivial OPLM exists)" : ""));
        lines.push_back(cert.strongly_nonlocal
                            ? "verdict: strongly nonlocal (locally irreducible in every bipartition)"
                            : "verdict: reducible");
        emit_report(strong_nonlocality_to_json(cert), markdown, "Strong-nonlocality certificate",
                    lines);
        return cert.strongly_nonlocal ? kExitPass : kExitFail;
    }
    if (kind == "distillable") {
        DistillabilityCertificate cert = certify_one_distillable(set);
        std::vector<std::string> lines;
        lines.push_back(cert.preconditionOk ? "precondition: basis certified genuinely entangled"
                                            : "precondition FAILED: not a certified GES");
        if (!cert.table.rows.empty()) {
            std::size_t violations = 0;
            for (const auto& r : cert.table.rows)
                if (!r.pass) ++violations;
            lines.push_back("marginal-rank table: " + std::to_string(cert.table.rows.size()) +
                            " rows, " + std::to_string(violations) + " violations");
        }
        lines.push_back(std::string("verdict: ") + (cert.pass ? "pass" : "fail"));
        emit_report(distillability_to_json(cert), markdown, "Distillability certificate", lines);
        return cert.pass ? kExitPass : kExitFail;
    }
    throw std::invalid_argument("unknown certify kind '" + kind + "'");
}

int cmd_verify_protocol(const std::string& statesPath, const std::string& groupingName,
                        const std::string& treePath, bool markdown) {
    StateSet set = state_set_from_json(read_json_file(statesPath));
    Grouping g = parse_grouping(groupingName, set.system.party_count());
    ProtocolNode tree = treePath.empty() || treePath == "builtin:appendix"
                            ? appendix_protocol_tree()
                            : protocol_from_json(read_json_file(treePath));
    DiscriminationOutcome outcome = verify_tree(set, g, tree);
    std::vector<std::string> lines;
    for (const auto& leaf : outcome.leaves) {
        std::string path;
        for (auto p : leaf.path) path += std::to_string(p);
        lines.push_back("leaf [" + path + "]: " + std::to_string(leaf.survivors.size()) +
                        " survivor(s)" +
                        (leaf.distinguishable
                             ? ", distinguishable" +
                                   (leaf.witnessGroup.empty() ? std::string()
                                                              : " by " + leaf.witnessGroup)
                             : ", NOT distinguishable"));
    }
    lines.push_back(outcome.distinguished ? "verdict: distinguished" : "verdict: not distinguished");
    emit_report(discrimination_to_json(outcome), markdown, "Protocol verification", lines);
    return outcome.distinguished ? kExitPass : kExitFail;
}

int cmd_reproduce(const std::string& outDir) {
    ReproduceReport report = reproduce_paper();
    std::filesystem::create_directories(outDir);
    write_text_file((std::filesystem::path(outDir) / "report.md").string(),
                    reproduce_markdown(report));
    write_text_file((std::filesystem::path(outDir) / "report.json").string(),
                    dump_json(reproduce_json(report)));
    std::cout << reproduce_markdown(report);
    return report.all_pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification toolkit for unextendible biseparable bases and genuinely "
                 "entangled subspaces"};
    app.require_subcommand(1);

    bool verifyFixtures = false;
    app.add_flag("--verify-fixtures", verifyFixtures,
                 "cross-check the built-in published tables against the generators first");

    std::string family, rotText = "0,0,0", outPath, inPath;
    int psiIdx = 0, dArg = 2, rArg = 3;
    auto* construct = app.add_subcommand("construct", "generate a named state family as JSON");
    construct->add_option("family", family,
                          "one of: G, Gplus, U, Ghqm+, Ghqm-, Uhqm, GES, stopper, omega")
        ->required();
    construct->add_option("--rot", rotText, "rotation triple h,q,m for the 3x3x3 families");
    construct->add_option("--d", dArg, "local dimension (stopper)");
    construct->add_option("--r", rArg, "number of parties (stopper)");
    construct->add_option("--in", inPath, "input state set (omega)");
    construct->add_option("--psi", psiIdx, "anchor state index (omega)");
    construct->add_option("-o,--out", outPath, "output path (default: stdout)");

    std::string kind, certifyIn;
    bool markdown = false, withStackedMap = false;
    auto* certify = app.add_subcommand("certify", "run a certification on a state-set file");
    certify->add_option("kind", kind, "one of: ges, ubb, strong-nonlocality, distillable")
        ->required();
    certify->add_option("input", certifyIn, "state-set JSON file")->required();
    certify->add_flag("--md", markdown, "human-readable markdown instead of JSON");
    certify->add_flag("--json", "JSON report (default)");
    certify->add_flag("--stacked-map", withStackedMap, "include the stacked maps for audit");

    std::string protoStates, protoGrouping = "A|BC", protoTree;
    bool protoMarkdown = false;
    auto* verifyProtocol =
        app.add_subcommand("verify-protocol", "verify a discrimination protocol tree");
    verifyProtocol->add_option("states", protoStates, "state-set JSON file")->required();
    verifyProtocol->add_option("--grouping", protoGrouping, "bipartition, e.g. A|BC");
    verifyProtocol->add_option("--tree", protoTree,
                               "protocol JSON file (default: builtin:appendix)");
    verifyProtocol->add_flag("--md", protoMarkdown, "human-readable markdown instead of JSON");

    std::string reproduceOut = "reproduce-out";
    auto* reproduce =
        app.add_subcommand("reproduce-paper", "recompute every published number and verdict");
    reproduce->add_option("outdir", reproduceOut, "output directory for report.md/report.json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verifyFixtures) {
            int rc = run_verify_fixtures();
            if (rc != kExitPass) return rc;
        }
        if (construct->parsed())
            return cmd_construct(family, rotText, inPath, psiIdx, dArg, rArg, outPath);
        if (certify->parsed()) return cmd_certify(kind, certifyIn, markdown, withStackedMap);
        if (verifyProtocol->parsed())
            return cmd_verify_protocol(protoStates, protoGrouping, protoTree, protoMarkdown);
        if (reproduce->parsed()) return cmd_reproduce(reproduceOut);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
