#pragma once

#include <json.hpp>

#include <variant>

#include "zpd/builtins.hpp"
#include "zpd/decide.hpp"

namespace zpd {

using Json = nlohmann::ordered_json;

// Documents. Scalars serialize as strings ("p/q" or "n" over Q, a decimal
// residue over GF(p)); omitted bracket pairs mean zero.
Json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const Json& doc);

Json module_to_json(const LieModule& m);
/// `default_field` applies when the algebra entry is a builtin reference.
LieModule module_from_json(const Json& doc, const Field& default_field);

Json comm_algebra_to_json(const CommAlgebra& a);
CommAlgebra comm_algebra_from_json(const Json& doc);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& doc, const Field& f);

Json config_to_json(const SamplerConfig& cfg);
SamplerConfig config_from_json(const Json& doc);

Json pair_to_json(const CommutingPair& p);

// Reports. `input` is either a builtin reference string or the embedded
// input document; the effective sampler config rides inside "stats" so
// reports replay byte-for-byte.
Json zpd_report_to_json(const ZpdReport& rep, const Json& input, const SamplerConfig& cfg);
Json zad_report_to_json(const ZadReport& rep, const Json& input, const SamplerConfig& cfg);

/// Replays a report document: re-verifies certificates, re-derives witness
/// spans (exhaustive or seeded sampling) and re-checks every witness
/// invariant. Pure function of the document.
VerifyResult verify_report(const Json& report);

}  // namespace zpd
