#ifndef ENTCERT_JSON_IO_HPP
#define ENTCERT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "entcert/distillability.hpp"
#include "entcert/entanglement.hpp"
#include "entcert/locc.hpp"
#include "entcert/nonlocality.hpp"
#include "entcert/states.hpp"

namespace entcert {

using Json = nlohmann::json;

// Rationals are serialized as strings ("p" or "p/q" with q > 0, gcd-reduced);
// complex entries as {"re": ..., "im": ...} with "im" omitted when zero.

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json state_set_to_json(const StateSet& set);
StateSet state_set_from_json(const Json& j);

Json protocol_to_json(const ProtocolNode& node);
ProtocolNode protocol_from_json(const Json& j);

Json grouping_to_json(const Grouping& g);
/// Parses "A|BC"-style names (case-insensitive letters).
Grouping parse_grouping(const std::string& name, std::size_t partyCount);

Json span_certificate_to_json(const SpanCertificate& c, bool includeStackedMap = false);
Json ges_certificate_to_json(const GesCertificate& c, bool includeStackedMap = false);
Json ubb_certificate_to_json(const UbbCertificate& c, bool includeStackedMap = false);
Json oplm_certificate_to_json(const OplmCertificate& c);
Json strong_nonlocality_to_json(const StrongNonlocalityCertificate& c);
Json fact3_to_json(const Fact3Table& t);
std::string fact3_to_csv(const Fact3Table& t);
Json distillability_to_json(const DistillabilityCertificate& c);
Json discrimination_to_json(const DiscriminationOutcome& o);

/// Canonical dump: sorted keys (nlohmann default), two-space indent, trailing
/// newline. construct/parse/re-serialize round-trips are byte-identical.
std::string dump_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace entcert

#endif
