#pragma once

#include <json.hpp>

#include "albert/diagonalize.hpp"
#include "albert/split.hpp"

namespace albert {

// JSON wire formats. Parsing is strict: unknown fields, missing fields and
// wrong array sizes all raise ParseError. Serialization uses nlohmann's
// default object ordering (keys sorted), so output is stable and diffable,
// and doubles are printed with shortest round-trip formatting.
//
//   JordanElement  {"algebra": "compact"|"split", "diag": [3 reals],
//                   "x1": [8 reals], "x2": [8 reals], "x3": [8 reals]}
//   Generator      {"kind": "delta_a", "algebra": ..., "a": [8 reals]}
//                  {"kind": "rot_o3", "t": [9 reals, row-major]}
//                  {"kind": "sp3", "a": [36 reals, row-major, each entry w,x,y,z]}
//                  {"kind": "g2", "l": [49 reals, row-major]}
//   Transcript     {"input": JordanElement, "steps": [Generator...],
//                   "diagonal": [3 reals], "off_diag_residual": real,
//                   "invariant_drift": {"trace","inner","sigma","det"}}
//   Verdict        {"inner_square": real, "verdict": "obstructed"|"inconclusive"}

nlohmann::json to_json(const Octonion& o);
nlohmann::json to_json(const JordanElement& x);
nlohmann::json to_json(const Generator& g);
nlohmann::json to_json(const DiagonalizationTranscript& t);
nlohmann::json to_json(const ObstructionVerdict& v);

Algebra algebra_from_json(const nlohmann::json& j);
JordanElement jordan_from_json(const nlohmann::json& j);
Generator generator_from_json(const nlohmann::json& j);
DiagonalizationTranscript transcript_from_json(const nlohmann::json& j);

} // namespace albert
