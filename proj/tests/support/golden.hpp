#pragma once

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace initforms::testsupport {

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    std::string expect_file;  // relative to the golden dir
    int exit_code = 0;
    bool roundtrip = false;  // re-run the embedded reproducer and compare
};

struct RunOutput {
    std::string out;
    int exit_code = -1;
};

inline std::string golden_dir() {
    if (const char* env = std::getenv("INITFORMS_GOLDEN_DIR")) return env;
    return INITFORMS_GOLDEN_DIR;
}

inline std::string cli_path() {
    if (const char* env = std::getenv("INITFORMS_CLI")) return env;
    return INITFORMS_CLI_PATH;
}

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

inline RunOutput run_cli(const std::vector<std::string>& args) {
    std::string cmd = shell_quote(cli_path());
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    RunOutput r;
    r.out = std::move(out);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Replaces the @GOLDEN@ placeholder so job paths stay relative in the manifest.
inline std::string expand(const std::string& arg) {
    const std::string token = "@GOLDEN@";
    std::string out = arg;
    auto pos = out.find(token);
    if (pos != std::string::npos) out.replace(pos, token.size(), golden_dir());
    return out;
}

inline std::vector<GoldenCase> load_manifest() {
    nlohmann::json manifest = nlohmann::json::parse(read_file(golden_dir() + "/manifest.json"));
    std::vector<GoldenCase> cases;
    for (const auto& entry : manifest) {
        GoldenCase c;
        c.name = entry.at("name").get<std::string>();
        for (const auto& a : entry.at("args")) c.args.push_back(expand(a.get<std::string>()));
        c.expect_file = entry.at("expect").get<std::string>();
        c.exit_code = entry.value("exit", 0);
        c.roundtrip = entry.value("roundtrip", false);
        cases.push_back(std::move(c));
    }
    return cases;
}

}  // namespace initforms::testsupport
