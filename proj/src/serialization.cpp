#include "cifc/serialization.hpp"

#include "cifc/errors.hpp"

namespace cifc {

using nlohmann::json;

json to_json_value(const LdaChannel& channel) { return {{"K", channel.users()}, {"gains", channel.gains()}}; }

json to_json_value(const KnowledgeStructure& knowledge) {
    json known = json::array();
    for (int j = 0; j < knowledge.users(); ++j) {
        json set = json::array();
        for (int k : knowledge.known(j)) set.push_back(k + 1);
        known.push_back(std::move(set));
    }
    return {{"known", known}};
}

json to_json_value(const LinearScheme& scheme) {
    json generators = json::array();
    for (const auto& [key, g] : scheme.generators()) {
        generators.push_back({{"tx", key.first + 1}, {"msg", key.second + 1}, {"rows", g.to_rows()}});
    }
    return {{"K", scheme.users()}, {"m", scheme.levels()}, {"bits", scheme.bits()}, {"generators", generators}};
}

LdaChannel channel_from_json(const json& j) {
    try {
        auto gains = j.at("gains").get<std::vector<std::vector<int>>>();
        if (j.contains("K") && j.at("K").get<int>() != static_cast<int>(gains.size())) {
            throw StructuralError("\"K\" does not match the number of gain rows");
        }
        return LdaChannel(std::move(gains));
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed channel JSON: ") + e.what());
    }
}

KnowledgeStructure knowledge_from_json(const json& j, int users) {
    try {
        if (j.is_string()) return KnowledgeStructure::named(j.get<std::string>(), users);
        auto known = j.at("known").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(known.size()) != users) {
            throw StructuralError("knowledge lists " + std::to_string(known.size()) + " transmitters for " +
                                  std::to_string(users) + " users");
        }
        for (auto& set : known) {
            for (int& k : set) {
                if (k < 1 || k > users) throw StructuralError("message index " + std::to_string(k) + " out of range");
                --k;
            }
        }
        return KnowledgeStructure(std::move(known));
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed knowledge JSON: ") + e.what());
    }
}

LinearScheme scheme_from_json(const json& j, const KnowledgeStructure& knowledge) {
    try {
        const int m = j.at("m").get<int>();
        LinearScheme scheme(knowledge, m, j.at("bits").get<std::vector<int>>());
        for (const auto& g : j.value("generators", json::array())) {
            const int tx = g.at("tx").get<int>() - 1;
            const int msg = g.at("msg").get<int>() - 1;
            const auto rows = g.at("rows").get<std::vector<std::string>>();
            const auto cols = static_cast<std::size_t>(scheme.bits().at(static_cast<std::size_t>(msg)));
            scheme.set_generator(tx, msg, BinaryMatrix::from_rows(rows, cols));
        }
        return scheme;
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed scheme JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw StructuralError(std::string("scheme JSON refers to an unknown message: ") + e.what());
    }
}

}  // namespace cifc
