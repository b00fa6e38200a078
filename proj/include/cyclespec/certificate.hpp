#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cyclespec/graph.hpp"
#include "cyclespec/graph_io.hpp"
#include "cyclespec/pipeline.hpp"

// Certificate documents. Field order is fixed (ordered_json) and all numbers
// are integers or exact rational strings, so identical inputs give
// byte-identical output.
//
//   { "schema_version": "1",
//     "command": "<echoed invocation>",
//     "graph_header": { "n", "e", "format", "hash" },
//     "result": { "kind": "cycle-spectrum" | "single-cycle" | "analysis-report"
//                 | "verification-verdict" | "hypothesis-not-met", ... } }

namespace cyclespec {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

Json graph_header(const Graph& g, GraphFormat format);

Json make_document(std::string_view command, Json header, Json result);

/// Two-space indented JSON with a trailing newline.
std::string dump_document(const Json& doc);

Json spectrum_to_json(const CycleSpectrumCertificate& cert, std::string_view mode);
CycleSpectrumCertificate spectrum_from_json(const Json& result);

Json even_cycle_to_json(const EvenCycleResult& res);
EvenCycleResult even_cycle_from_json(const Json& result);

Json hypothesis_report(std::string_view reason);

/// Re-checks a whole document against `g`: header (n, e, hash) and then the
/// result, dispatched on its kind.
CycleCheck verify_document(const Graph& g, const Json& doc);

}  // namespace cyclespec
