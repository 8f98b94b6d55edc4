#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "msla/exterior.hpp"
#include "msla/g2.hpp"
#include "msla/multisym.hpp"
#include "msla/subspace.hpp"
#include "msla/verify.hpp"

namespace msla {

using Json = nlohmann::json;

// All scalar entries are exact rationals rendered as "p" or "p/q"
// strings; round trips are identities. Structural problems in a
// document (missing keys, wrong types) surface as nlohmann exceptions,
// semantic problems (bad indices, zero denominators, shape mismatches)
// as std::invalid_argument.

// {"ambient": n, "rows": [["p/q", ...], ...]} (rows may be empty).
Json subspace_to_json(const Subspace& w);
Subspace subspace_from_json(const Json& j);

// {"ambient": n, "degree": g, "terms": [{"indices": [...], "coeff": "p/q"}]}
Json form_to_json(const AlternatingForm& f);
AlternatingForm form_from_json(const Json& j);

// Same layout with "grade" in place of "degree".
Json multivector_to_json(const Multivector& x);
Multivector multivector_from_json(const Json& j);

// A form document may carry an optional "volume" form used to calibrate
// the induced metric; absent means the standard volume.
struct FormPackage {
  AlternatingForm form;
  std::optional<AlternatingForm> volume;
};
FormPackage form_package_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json classification_to_json(const G2Classification& c);
Json report_to_json(const SuiteReport& r);

}  // namespace msla
