#include <doctest.h>

#include <sstream>
#include <string>

#include "cifc/errors.hpp"
#include "cifc/lda_schemes.hpp"
#include "cifc/reports.hpp"
#include "cifc/serialization.hpp"

using cifc::GdofModel;
using cifc::Rational;
using nlohmann::json;

namespace {

std::size_t line_count(const std::string& text) {
    std::size_t n = 0;
    for (char c : text) n += c == '\n' ? 1 : 0;
    return n;
}

std::string line_at(const std::string& text, std::size_t index) {
    std::istringstream in(text);
    std::string line;
    for (std::size_t i = 0; i <= index; ++i) std::getline(in, line);
    return line;
}

}  // namespace

TEST_SUITE("reports") {
    TEST_CASE("number formatting") {
        CHECK(cifc::format_number(0.1) == "0.1");
        CHECK(cifc::format_number(-0.0) == "0");
        CHECK(cifc::format_number(Rational(1, 3)) == "0.3333333333");
        CHECK(cifc::format_number(Rational(7, 2)) == "3.5");
        CHECK(cifc::format_number(1e6) == "1000000");
    }

    TEST_CASE("regime map grid") {
        const auto rows = cifc::regime_map(2, 2, Rational(1, 4));
        CHECK(rows.size() == 81);
        CHECK(rows.front().alpha == Rational(0));
        CHECK(rows[1].beta == Rational(1, 4));
        CHECK(rows[9].alpha == Rational(1, 4));
        const auto csv = cifc::regime_map_csv(rows);
        CHECK(line_count(csv) == 82);
        CHECK(line_at(csv, 0) == "alpha,beta,label,cms_bound,ifccr_bound");
        CHECK(csv == cifc::regime_map_csv(cifc::regime_map(2, 2, Rational(1, 4))));

        bool saw_blue = false;
        bool saw_red = false;
        for (const auto& r : cifc::regime_map(2, 2, Rational(1, 10))) {
            if (r.alpha == Rational(3, 5) && r.beta == Rational(3, 10)) {
                saw_blue = r.label.regime == cifc::Regime::OuterBoundsCoincideAchievabilityOpen;
            }
            if (r.alpha == Rational(3, 2) && r.beta == Rational(1, 2)) {
                saw_red = r.label.regime == cifc::Regime::EqualAndAchievable;
            }
        }
        CHECK(saw_blue);
        CHECK(saw_red);
        for (const auto& r : cifc::regime_map(1, 1, Rational(1, 2), false)) CHECK(r.label.regime == cifc::Regime::Open);
        CHECK_THROWS_AS(cifc::regime_map(1, 1, 0), cifc::DomainError);
    }

    TEST_CASE("gDoF curves") {
        const auto rows = cifc::gdof_curves({GdofModel::CMS, GdofModel::BC}, {2, 4}, 2, Rational(1, 2));
        CHECK(rows.size() == 2u * 2u * 5u);
        const auto csv = cifc::gdof_csv(rows);
        CHECK(line_at(csv, 0) == "model,K,alpha,gdof,normalized_gdof");
        CHECK(line_at(csv, 1) == "CMS,2,0,2,1");
        // normalized CMS depends on K, normalized BC does not
        const auto& cms2 = rows[4];   // CMS, K=2, alpha=2
        const auto& cms4 = rows[9];   // CMS, K=4, alpha=2
        REQUIRE(cms2.alpha == Rational(2));
        REQUIRE(cms4.alpha == Rational(2));
        CHECK(cms2.normalized() != cms4.normalized());
        for (const auto& r : rows) {
            if (r.model == GdofModel::BC) CHECK(r.normalized() == std::max(Rational(1), r.alpha));
        }
        CHECK(csv == cifc::gdof_csv(cifc::gdof_curves({GdofModel::CMS, GdofModel::BC}, {2, 4}, 2, Rational(1, 2))));
    }

    TEST_CASE("gap sweep on a reduced grid") {
        cifc::GapSweepSpec spec;
        spec.snrs = {10.0, 1e4};
        spec.grid = cifc::RhoGrid{5, 4};
        spec.Ks = {3, 5};
        const auto rows = cifc::gap_sweep(spec);
        CHECK(rows.size() == 2u * 5u * 4u + 2u * 2u * 5u * 4u * 3u);
        int evaluated = 0;
        for (const auto& r : rows) {
            if (!r.evaluated()) continue;
            ++evaluated;
            CHECK(r.within());
        }
        CHECK(evaluated > 20);
        const auto csv = cifc::gap_sweep_csv(rows);
        CHECK(line_at(csv, 0) == "theorem,K,snr,alpha,beta,hkk_sq,status,outer,inner,gap,gap_bound,within");
        CHECK(line_count(csv) == rows.size() + 1);
        CHECK(csv == cifc::gap_sweep_csv(cifc::gap_sweep(spec)));

        cifc::GapRow blank;
        CHECK_FALSE(blank.within());
    }
}

TEST_SUITE("serialization") {
    TEST_CASE("round trip of the worked examples") {
        for (int which = 1; which <= 3; ++which) {
            const auto ex = cifc::example_scheme(which);
            const auto cj = cifc::to_json_value(ex.channel);
            const auto kj = cifc::to_json_value(ex.knowledge);
            const auto sj = cifc::to_json_value(ex.scheme);
            const auto channel = cifc::channel_from_json(json::parse(cj.dump()));
            const auto knowledge = cifc::knowledge_from_json(json::parse(kj.dump()), channel.users());
            const auto scheme = cifc::scheme_from_json(json::parse(sj.dump()), knowledge);
            CHECK(channel == ex.channel);
            CHECK(knowledge == ex.knowledge);
            CHECK(scheme == ex.scheme);
            CHECK(cifc::to_json_value(scheme).dump() == sj.dump());
        }
    }

    TEST_CASE("documented layout") {
        const auto ex1 = cifc::example_scheme(1);
        CHECK(cifc::to_json_value(ex1.channel).dump() == R"({"K":3,"gains":[[5,3,3],[3,2,3],[5,3,2]]})");
        CHECK(cifc::to_json_value(ex1.knowledge).dump() == R"({"known":[[1],[2],[1,2]]})");
        const auto sj = cifc::to_json_value(ex1.scheme);
        CHECK(sj["bits"] == json::array({5, 3, 0}));
        CHECK(sj["generators"][0]["tx"] == 1);
        CHECK(sj["generators"][0]["rows"][0] == "10000");
    }

    TEST_CASE("knowledge by name and missing generators") {
        CHECK(cifc::knowledge_from_json("coms", 3) == cifc::KnowledgeStructure::coms(3));
        const auto k = cifc::KnowledgeStructure::ifc(2);
        const auto s = cifc::scheme_from_json(json::parse(R"({"K":2,"m":2,"bits":[1,1]})"), k);
        CHECK(s.generator(0, 0).is_zero());
    }

    TEST_CASE("malformed documents") {
        CHECK_THROWS_AS(cifc::channel_from_json(json::parse(R"({"K":3,"gains":[[1]]})")), cifc::StructuralError);
        CHECK_THROWS_AS(cifc::channel_from_json(json::parse(R"({"gains":"x"})")), cifc::StructuralError);
        CHECK_THROWS_AS(cifc::knowledge_from_json(json::parse(R"({"known":[[1],[3]]})"), 2), cifc::StructuralError);
        CHECK_THROWS_AS(cifc::knowledge_from_json(json::parse(R"({"known":[[1]]})"), 2), cifc::StructuralError);
        const auto k = cifc::KnowledgeStructure::ifc(2);
        CHECK_THROWS_AS(cifc::scheme_from_json(json::parse(R"({"m":1,"bits":[1,1],"generators":[{"tx":1,"msg":2,"rows":["1"]}]})"), k),
                        cifc::StructuralError);
        CHECK_THROWS_AS(cifc::scheme_from_json(json::parse(R"({"m":1,"bits":[1,1],"generators":[{"tx":1,"msg":1,"rows":["2"]}]})"), k),
                        std::invalid_argument);
    }
}
