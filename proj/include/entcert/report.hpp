#ifndef ENTCERT_REPORT_HPP
#define ENTCERT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace entcert {

/// One reproduced number or verdict: expected value (from the publication),
/// computed value, pass flag.
struct ReproduceRow {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct ReproduceReport {
    std::vector<ReproduceRow> rows;
    bool all_pass = false;
};

/// Recomputes every published number and verdict: the 2x2x2 and 3x3x3 span
/// dimensions (4 and 64), the OPLM span dimension 80, UBB verdicts for all
/// 27 rotation triples via both complement routes, strong-nonlocality and
/// distillability verdicts, and the discrimination-tree outcome.
ReproduceReport reproduce_paper();

std::string reproduce_markdown(const ReproduceReport& report);
nlohmann::json reproduce_json(const ReproduceReport& report);

}  // namespace entcert

#endif
