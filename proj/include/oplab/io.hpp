#pragma once

#include <string>

#include <json.hpp>

#include "oplab/frobenius.hpp"
#include "oplab/modular.hpp"
#include "oplab/multiplicity.hpp"
#include "oplab/overpartition.hpp"
#include "oplab/path.hpp"
#include "oplab/series.hpp"
#include "oplab/uplift.hpp"
#include "oplab/verify.hpp"

namespace oplab {

using json = nlohmann::json;

// Canonical encoding: nlohmann objects keep keys sorted; dump() emits no
// incidental whitespace, so equal values serialize byte-identically.
std::string canonical(const json& j);

json to_json(const Overpartition& op);
Overpartition overpartition_from_json(const json& j);

json to_json(const Superpartition& sp);
Superpartition superpartition_from_json(const json& j);

json to_json(const FrobeniusSymbol& f);
FrobeniusSymbol frobenius_from_json(const json& j);

json to_json(const LatticePath& p);
LatticePath path_from_json(const json& j);

json to_json(const MultiplicitySequence& ms);
MultiplicitySequence multiplicity_sequence_from_json(const json& j);

json to_json(const TwoModularDiagram& d);
TwoModularDiagram diagram_from_json(const json& j);

json to_json(const UpliftCertificate& c);
UpliftCertificate certificate_from_json(const json& j);

json to_json(const TruncatedSeries& s);
json to_json(const VerifyReport& r);

}  // namespace oplab
