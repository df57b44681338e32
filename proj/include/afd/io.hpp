#pragma once

// JSON bindings for the file formats: field descriptors, algebra specs,
// graph specs, exhaustions, almost-representation serialization and the
// paradoxical-pair export. All rationals serialize as exact "num/den"
// strings; no floating point appears in any report.

#include <string>

#include <json.hpp>

#include "afd/almostrep.hpp"
#include "afd/carrier.hpp"
#include "afd/exactlin.hpp"
#include "afd/folner.hpp"
#include "afd/graph.hpp"
#include "afd/paradox.hpp"

namespace afd::io {

std::string q_str(const mpq_class& q);  // canonical "num/den"

exactlin::Field field_from_json(const nlohmann::json& j);
nlohmann::ordered_json field_to_json(const exactlin::Field& f);

// {"carrier":"group","group":"Z^d","d":1} | {"carrier":"group","group":"free",
// "rank":2} | {"carrier":"free","rank":2} | {"carrier":"translation",
// "graph": <graph spec>}; an embedded "field" wins over the fallback.
carrier::Carrier algebra_from_json(const nlohmann::json& j, const exactlin::Field& fallback);

// A generator string ("tree:3,5", "grid:10", "file:PATH", a bare path) or an
// object {"type":"tree","degree":3,"radius":5}.
graphlab::GraphPtr graph_from_json(const nlohmann::json& j);

// "ball" | {"type":"ball","center":"t^2"} | {"type":"box"} | {"type":"length"}
folner::ExhaustionSpec exhaustion_from_json(const nlohmann::json& j);

nlohmann::ordered_json almostrep_to_json(const almostrep::AlmostRep& rep);
nlohmann::ordered_json pair_to_json(const graphlab::ParadoxicalPair& p);

}  // namespace afd::io
