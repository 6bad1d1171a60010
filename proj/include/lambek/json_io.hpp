#pragma once

#include <json.hpp>

#include "lambek/algebra.hpp"
#include "lambek/canonical.hpp"
#include "lambek/frame.hpp"
#include "lambek/signature.hpp"

namespace lambek {

using Json = nlohmann::json;

// Frame files: worlds, leq in full (no closure applied), R triples, O,
// modalities with per-index box/dia pair lists. All names are strings; the
// world order fixes enumeration order.
Frame frame_from_json(const Json& j);
Json frame_to_json(const Frame& f);

Model model_from_json(const Json& j);
Json model_to_json(const Model& m);

// Algebra files: elements, leq, mul triples (a*b=c), eps, box/dia tables.
// Residual tables are never read; they are emitted as ldiv/rdiv triples.
Algebra algebra_from_json(const Json& j);
Json algebra_to_json(const Algebra& a);

// Signature files; preceq pairs are closed reflexively-transitively by the
// loader.
Signature signature_from_json(const Json& j);
Json signature_to_json(const Signature& sig);

Json report_to_json(const CheckReport& rep);
Json sequent_to_json(const Sequent& s);
Json completion_to_json(const Completion& c);

Json load_json_file(const std::string& path);

}  // namespace lambek
