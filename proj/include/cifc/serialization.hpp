#pragma once

#include <json.hpp>

#include "cifc/lda.hpp"

namespace cifc {

// JSON forms use 1-based user indices:
//   channel   {"K":3,"gains":[[5,3,3],[3,2,3],[5,3,2]]}
//   knowledge {"known":[[1],[2],[1,2]]} or a name ("cms", "coms", "pms", "ifc-cr", "ifc")
//   scheme    {"K":3,"m":5,"bits":[5,3,0],
//              "generators":[{"tx":1,"msg":1,"rows":["10000",...]}, ...]}
// A generator row string lists the columns left to right.

nlohmann::json to_json_value(const LdaChannel& channel);
nlohmann::json to_json_value(const KnowledgeStructure& knowledge);
nlohmann::json to_json_value(const LinearScheme& scheme);

LdaChannel channel_from_json(const nlohmann::json& j);
KnowledgeStructure knowledge_from_json(const nlohmann::json& j, int users);
/// Generators absent from the document stay zero.
LinearScheme scheme_from_json(const nlohmann::json& j, const KnowledgeStructure& knowledge);

}  // namespace cifc
