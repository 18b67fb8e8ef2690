#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "duality/duality.h"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing file ", path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Handle {
    dua_problem* p = nullptr;
    ~Handle() { dua_problem_free(p); }
};

std::string run_ok(dua_problem* p, const std::string& cmd,
                   const std::string& opts = "") {
    char* report = nullptr;
    char* err = nullptr;
    int rc = dua_run(p, cmd.c_str(), opts.empty() ? nullptr : opts.c_str(),
                     &report, &err);
    if (rc != DUA_OK) {
        std::string msg = err ? err : "?";
        dua_string_free(err);
        FAIL("dua_run failed: ", msg);
    }
    std::string out = report;
    dua_string_free(report);
    return out;
}

} // namespace

TEST_CASE("version string is present") {
    CHECK(std::string(dua_version()).find('.') != std::string::npos);
}

TEST_CASE("parse errors surface as DUA_PARSE_ERROR") {
    dua_problem* p = nullptr;
    char* err = nullptr;
    CHECK(dua_problem_parse("ring x\nwhatever", &p, &err) == DUA_PARSE_ERROR);
    CHECK(p == nullptr);
    REQUIRE(err != nullptr);
    CHECK(nlohmann::json::parse(err)["code"] == "parse-error");
    dua_string_free(err);
}

TEST_CASE("bad command and bad options are invalid arguments") {
    Handle h;
    REQUIRE(dua_problem_parse("ring x\nideal: x", &h.p, nullptr) == DUA_OK);
    char* report = nullptr;
    char* err = nullptr;
    CHECK(dua_run(h.p, "frobnicate", nullptr, &report, &err) ==
          DUA_INVALID_ARGUMENT);
    dua_string_free(err);
    err = nullptr;
    CHECK(dua_run(h.p, "resolve", "{\"bogus\": 1}", &report, &err) ==
          DUA_INVALID_ARGUMENT);
    dua_string_free(err);
}

TEST_CASE("analysis rejection carries a machine-readable reason") {
    Handle h;
    REQUIRE(dua_problem_parse("ring x, y\nideal: x*y", &h.p, nullptr) == DUA_OK);
    char* report = nullptr;
    char* err = nullptr;
    REQUIRE(dua_run(h.p, "residue", nullptr, &report, &err) == DUA_REJECTED);
    REQUIRE(err != nullptr);
    nlohmann::json j = nlohmann::json::parse(err);
    CHECK(j.contains("code"));
    CHECK(j.contains("reason"));
    dua_string_free(err);

    // noetherian without a split is likewise rejected.
    err = nullptr;
    REQUIRE(dua_run(h.p, "noetherian", nullptr, &report, &err) == DUA_REJECTED);
    CHECK(nlohmann::json::parse(err)["code"] == "missing-split");
    dua_string_free(err);
}

TEST_CASE("membership runs both routes when hints are present") {
    Handle h;
    REQUIRE(dua_problem_parse(slurp(std::string(FIXTURE_DIR) + "/zm3.ring").c_str(),
                              &h.p, nullptr) == DUA_OK);
    auto j = nlohmann::json::parse(run_ok(h.p, "membership", "{\"phi\": \"z^3\"}"));
    CHECK(j["result"]["groebner"] == true);
    CHECK(j["result"]["noetherian"] == true);
    CHECK(j["result"]["agree"] == true);
    j = nlohmann::json::parse(run_ok(h.p, "membership", "{\"phi\": \"z^2\"}"));
    CHECK(j["result"]["groebner"] == false);
    CHECK(j["result"]["agree"] == true);
}

TEST_CASE("reports are byte-identical across repeated runs") {
    for (const char* name : {"koszul2", "zm3", "xz_yz", "x2my_y2"}) {
        Handle h;
        std::string text = slurp(std::string(FIXTURE_DIR) + "/" + name + ".ring");
        REQUIRE(dua_problem_parse(text.c_str(), &h.p, nullptr) == DUA_OK);
        std::string first = run_ok(h.p, "resolve");
        for (int i = 0; i < 2; ++i) CHECK(run_ok(h.p, "resolve") == first);
    }
}

TEST_CASE("fixture reports match their golden files exactly") {
    for (const char* name :
         {"zm1", "zm2", "zm3", "zm5", "xy_sq", "xy_sq3", "ymx2sq", "parabola",
          "koszul2", "koszul3", "x2y3", "x2my_y2", "xz_yz", "x2_xy", "seg4",
          "broken_complex"}) {
        CAPTURE(name);
        std::string base = std::string(FIXTURE_DIR) + "/" + name;
        nlohmann::json expected = nlohmann::json::parse(slurp(base + ".expected.json"));
        Handle h;
        std::string text = slurp(base + ".ring");
        REQUIRE(dua_problem_parse(text.c_str(), &h.p, nullptr) == DUA_OK);
        for (auto& [cmd, want] : expected.items()) {
            CAPTURE(cmd);
            nlohmann::json got = nlohmann::json::parse(run_ok(h.p, cmd));
            CHECK(got == want);
        }
    }
}
