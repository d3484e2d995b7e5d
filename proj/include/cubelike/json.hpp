#pragma once

// JSON encodings of the public value types.
//
//   Coloring          {"k": int, "colors": [int per vertex in bitmask order]}
//   HeubergerMatrix   {"m": int, "a_columns": [[0/1, ...], ...], "two_identity": true}
//   HomWitness        {"z": int, "support": [1-based ints], "images": [ints], "verified": bool}
//   PayanCertificate  see certificate_to_json
//
// Support indices are 1-based on the wire and zero-based in memory.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cubelike/coloring.hpp"
#include "cubelike/heuberger.hpp"
#include "cubelike/homomorphism.hpp"
#include "cubelike/payan.hpp"

namespace cubelike {

using Json = nlohmann::json;

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json to_json(const HeubergerMatrix& m);
HeubergerMatrix heuberger_from_json(const Json& j);

Json to_json(const HomWitness& w, bool verified);
HomWitness witness_from_json(const Json& j, const ConnectionSet& target);

Json to_json(const PayanCertificate& cert);
/// Throws SchemaError on malformed input. When trust_flags is false the
/// stored "verified" flag is ignored and witness_verified is left false.
PayanCertificate certificate_from_json(const Json& j, bool trust_flags = false);
PayanCertificate certificate_from_json(const std::string& text);

Json to_json(const SolveResult& r);
Json to_json(const SweepSummary& s);
Json to_json(const LocalCheckReport& r);

}  // namespace cubelike
