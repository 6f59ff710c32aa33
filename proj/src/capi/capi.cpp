#include "folres/folres.h"

#include <new>
#include <string>

#include "io/commands.hpp"

struct folres_session {
    folres::RunOptions opts;
};

struct folres_report {
    folres_status status = FOLRES_OK;
    std::string json;
    std::string dot;
    std::string error_code;
};

namespace {

folres_report* make_report(const folres::RunOutput& out) {
    auto* r = new folres_report;
    r->status = static_cast<folres_status>(out.exit_code);
    r->json = out.report.dump(2) + "\n";
    r->dot = out.dot;
    if (out.report.contains("error")) r->error_code = out.report["error"].value("code", "");
    return r;
}

folres_report* input_error(const std::string& what) {
    folres::RunOutput out;
    out.report = {{"status", "error"}, {"error", {{"code", "InvalidInput"}, {"category", "input"}, {"message", what}}}};
    out.exit_code = 1;
    return make_report(out);
}

}  // namespace

extern "C" {

const char* folres_version(void) { return "1.0.0"; }

const char* folres_status_name(folres_status status) {
    switch (status) {
        case FOLRES_OK: return "ok";
        case FOLRES_INPUT_ERROR: return "input-error";
        case FOLRES_INTERNAL_ERROR: return "internal-error";
        case FOLRES_BUDGET_EXCEEDED: return "budget-exceeded";
    }
    return "unknown";
}

folres_session* folres_session_create(void) { return new (std::nothrow) folres_session; }

void folres_session_destroy(folres_session* session) { delete session; }

folres_status folres_session_set_seed(folres_session* session, uint64_t seed) {
    if (!session) return FOLRES_INPUT_ERROR;
    session->opts.seed = seed;
    return FOLRES_OK;
}

folres_status folres_session_set_max_depth(folres_session* session, int max_depth) {
    if (!session || max_depth < 0) return FOLRES_INPUT_ERROR;
    session->opts.max_depth = max_depth;
    return FOLRES_OK;
}

folres_status folres_session_set_timing(folres_session* session, int enabled) {
    if (!session) return FOLRES_INPUT_ERROR;
    session->opts.timing = enabled != 0;
    return FOLRES_OK;
}

int folres_command_count(void) { return static_cast<int>(folres::command_names().size()); }

const char* folres_command_name(int i) {
    const auto& n = folres::command_names();
    if (i < 0 || static_cast<std::size_t>(i) >= n.size()) return nullptr;
    return n[static_cast<std::size_t>(i)].c_str();
}

folres_status folres_run(folres_session* session, const char* command, const char* input_json, folres_report** report) {
    if (!report) return FOLRES_INPUT_ERROR;
    *report = nullptr;
    try {
        if (!session || !command) {
            *report = input_error("session and command are required");
            return FOLRES_INPUT_ERROR;
        }
        folres::Json input = folres::Json::object();
        if (input_json) {
            try {
                input = folres::Json::parse(input_json);
            } catch (const folres::Json::parse_error& e) {
                *report = input_error(std::string("input is not valid JSON: ") + e.what());
                return FOLRES_INPUT_ERROR;
            }
        }
        *report = make_report(folres::run_command(command, input, session->opts));
        return (*report)->status;
    } catch (...) {
        // allocation failure or similar; nothing sensible to serialize
        delete *report;
        *report = nullptr;
        return FOLRES_INTERNAL_ERROR;
    }
}

folres_status folres_run_field(folres_session* session, const char* command, const char* field_spec, folres_report** report) {
    if (!field_spec) return folres_run(session, command, nullptr, report);
    const folres::Json input{{"field", field_spec}};
    return folres_run(session, command, input.dump().c_str(), report);
}

folres_status folres_report_status(const folres_report* report) { return report ? report->status : FOLRES_INPUT_ERROR; }

const char* folres_report_json(const folres_report* report) { return report ? report->json.c_str() : ""; }

const char* folres_report_dot(const folres_report* report) { return report ? report->dot.c_str() : ""; }

const char* folres_report_error_code(const folres_report* report) { return report ? report->error_code.c_str() : ""; }

void folres_report_destroy(folres_report* report) { delete report; }

}  // extern "C"
