#include "duality/duality.h"

#include <cstdlib>
#include <cstring>

#include "core/engine.hpp"
#include "core/ext.hpp"

extern "C" {

struct dua_problem {
    duality::Problem problem;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& code, const std::string& reason) {
    if (!err) return;
    nlohmann::json j{{"code", code}, {"reason", reason}};
    *err = dup_string(j.dump());
}

} // namespace

const char* dua_version(void) { return duality::kEngineVersion; }

int dua_problem_parse(const char* text, dua_problem** out, char** err) {
    if (!text || !out) {
        set_err(err, "invalid-argument", "null argument");
        return DUA_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto* p = new dua_problem{duality::parse_problem(text)};
        *out = p;
        return DUA_OK;
    } catch (const duality::ParseError& e) {
        set_err(err, "parse-error", e.what());
        return DUA_PARSE_ERROR;
    } catch (const std::exception& e) {
        set_err(err, "internal-error", e.what());
        return DUA_INTERNAL_ERROR;
    }
}

void dua_problem_free(dua_problem* problem) { delete problem; }

int dua_run(const dua_problem* problem, const char* command,
            const char* options_json, char** report_json, char** err) {
    if (!problem || !command || !report_json) {
        set_err(err, "invalid-argument", "null argument");
        return DUA_INVALID_ARGUMENT;
    }
    *report_json = nullptr;
    try {
        duality::EngineOptions opts =
            duality::parse_options(options_json ? options_json : "");
        nlohmann::json report =
            duality::run_command(problem->problem, command, opts);
        *report_json = dup_string(report.dump(2));
        return DUA_OK;
    } catch (const duality::RejectError& e) {
        set_err(err, e.reason_code, e.what());
        return DUA_REJECTED;
    } catch (const duality::CodimZeroError& e) {
        set_err(err, "codim-zero", e.what());
        return DUA_REJECTED;
    } catch (const duality::NotAComplexError& e) {
        set_err(err, "not-a-complex", e.what());
        return DUA_REJECTED;
    } catch (const duality::ParseError& e) {
        set_err(err, "parse-error", e.what());
        return DUA_PARSE_ERROR;
    } catch (const nlohmann::json::exception& e) {
        set_err(err, "invalid-argument", e.what());
        return DUA_INVALID_ARGUMENT;
    } catch (const std::invalid_argument& e) {
        set_err(err, "invalid-argument", e.what());
        return DUA_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_err(err, "internal-error", e.what());
        return DUA_INTERNAL_ERROR;
    }
}

void dua_string_free(char* s) { std::free(s); }

} // extern "C"
