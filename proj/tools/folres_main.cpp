// folres command-line front end; talks to the library only through folres.h.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "folres/folres.h"
#include "json.hpp"

namespace {

// write to a sibling temp file, then rename over the target
bool write_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(static_cast<long>(::getpid()));
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) return false;
        os << text;
        os.flush();
        if (!os) return false;
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

std::string commands_help() {
    std::string s;
    for (int i = 0; i < folres_command_count(); ++i) s += std::string(i ? ", " : "") + folres_command_name(i);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact reduction of singularities of plane foliations and codimension-one checks"};
    app.set_version_flag("--version", folres_version());

    std::string command, input_path, field, out_path, dot_path;
    std::uint64_t seed = 0;
    int max_depth = -1;
    bool timing = false;

    app.add_option("command", command, "One of: " + commands_help())->required();
    app.add_option("--input", input_path, "Input document (JSON)");
    app.add_option("--field", field, "Plane field as \"P=...,Q=...\" over x, y");
    app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_option("--dot", dot_path, "Write the divisor graph (resolve, cs-sum) as DOT");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for sampled searches");
    auto* depth_opt = app.add_option("--max-depth", max_depth, "Blow-up depth cap")->check(CLI::Range(0, 4096));
    app.add_flag("--timing", timing, "Include wall-clock timing in the report");

    CLI11_PARSE(app, argc, argv);

    nlohmann::json input = nlohmann::json::object();
    if (!input_path.empty()) {
        std::ifstream is(input_path);
        if (!is) {
            std::cerr << "folres: cannot read " << input_path << "\n";
            return FOLRES_INPUT_ERROR;
        }
        try {
            input = nlohmann::json::parse(is);
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "folres: " << input_path << " is not valid JSON: " << e.what() << "\n";
            return FOLRES_INPUT_ERROR;
        }
        if (!input.is_object()) {
            std::cerr << "folres: the input document must be a JSON object\n";
            return FOLRES_INPUT_ERROR;
        }
    }
    if (!field.empty()) input["field"] = field;

    // FOLRES_MAX_DEPTH replaces the default cap, not an explicit one
    if (const char* env = std::getenv("FOLRES_MAX_DEPTH")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end || v < 0 || v > 4096) {
            std::cerr << "folres: FOLRES_MAX_DEPTH must be an integer in [0, 4096]\n";
            return FOLRES_INPUT_ERROR;
        }
        if (!input.contains("options")) input["options"] = nlohmann::json::object();
        if (input["options"].is_object() && !input["options"].contains("max_depth")) input["options"]["max_depth"] = v;
    }

    folres_session* session = folres_session_create();
    if (!session) return FOLRES_INTERNAL_ERROR;
    if (*seed_opt) folres_session_set_seed(session, seed);
    if (*depth_opt) folres_session_set_max_depth(session, max_depth);
    folres_session_set_timing(session, timing ? 1 : 0);

    folres_report* report = nullptr;
    const folres_status st = folres_run(session, command.c_str(), input.dump().c_str(), &report);
    int code = st;
    if (!report) {
        std::cerr << "folres: " << folres_status_name(st) << "\n";
    } else {
        const std::string text = folres_report_json(report);
        if (out_path.empty()) {
            std::cout << text;
        } else if (!write_atomic(out_path, text)) {
            std::cerr << "folres: cannot write " << out_path << "\n";
            code = FOLRES_INPUT_ERROR;
        }
        if (!dot_path.empty() && !write_atomic(dot_path, folres_report_dot(report))) {
            std::cerr << "folres: cannot write " << dot_path << "\n";
            code = FOLRES_INPUT_ERROR;
        }
        if (st != FOLRES_OK && *folres_report_error_code(report))
            std::cerr << "folres: " << folres_report_error_code(report) << "\n";
    }
    folres_report_destroy(report);
    folres_session_destroy(session);
    return code;
}
