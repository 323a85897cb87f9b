#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <json.hpp>

#include "kmv/report.hpp"

using namespace kmv;

namespace {

std::vector<CheckResult> sample_results() {
    CheckResult a;
    a.id = "alpha.one";
    a.criterion = 1;
    a.pass = true;
    a.facts = {{"dimension", "20"}, {"matches", "true"}};
    a.seconds = 0.25;
    CheckResult b;
    b.id = "beta.two";
    b.criterion = 2;
    b.pass = false;
    b.notes = "residual nonzero";
    b.seconds = 1.5;
    return {a, b};
}

} // namespace

TEST_CASE("json report shape and determinism") {
    auto results = sample_results();
    std::string s1 = report_json(results);
    std::string s2 = report_json(results);
    CHECK(s1 == s2);

    auto j = nlohmann::json::parse(s1);
    CHECK(j["schema"] == "verification-report-v1");
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["id"] == "alpha.one");
    CHECK(j["checks"][0]["pass"] == true);
    CHECK(j["checks"][0]["facts"]["dimension"] == "20");
    CHECK_FALSE(j["checks"][0].contains("notes"));
    CHECK(j["checks"][1]["notes"] == "residual nonzero");
    CHECK(j["summary"]["total"] == 2);
    CHECK(j["summary"]["passed"] == 1);
    CHECK(j["summary"]["failed"] == 1);
    // timing only appears on request, keeping the default byte-stable
    CHECK_FALSE(j.contains("timing_seconds"));
    CHECK(s1.find("timing") == std::string::npos);

    auto jt = nlohmann::json::parse(report_json(results, true, 1.75));
    CHECK(jt.contains("timing_seconds"));
}

TEST_CASE("markdown report carries the summary line") {
    auto results = sample_results();
    std::string md = report_markdown(results, 1.75);
    CHECK(md.find("alpha.one") != std::string::npos);
    CHECK(md.find("beta.two") != std::string::npos);
    CHECK(md.find("2 checks, 1 passed, 1 failed") != std::string::npos);
}

TEST_CASE("registry ids are unique and criteria stay in range") {
    const auto& reg = check_registry();
    std::set<std::string> ids;
    for (const auto& def : reg) {
        CHECK(ids.insert(def.id).second);
        CHECK(def.criterion >= 1);
        CHECK(def.criterion <= 12);
    }
    CHECK(reg.size() >= 29);
}
