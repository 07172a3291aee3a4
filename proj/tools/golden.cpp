// Golden-file runner: executes the CLI on fixtures/<name>/input.args and compares the
// captured exit code and output byte for byte against fixtures/<name>/expected.json.
#include "CLI11.hpp"
#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

std::string render(const std::string& cli, const fs::path& dir) {
    std::string args = trim(slurp(dir / "input.args"));
    const std::string key = "{input}";
    for (auto pos = args.find(key); pos != std::string::npos; pos = args.find(key))
        args.replace(pos, key.size(), (dir / "input.json").string());

    std::string cmd = "'" + cli + "' " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    json output;
    try {
        output = json::parse(out);
    } catch (const json::parse_error&) {
        output = out;
    }
    return json{{"exit_code", code}, {"output", output}}.dump(2) + "\n";
}

bool run_golden(const std::string& cli, const fs::path& dir, bool regen) {
    std::string actual = render(cli, dir);
    fs::path expected = dir / "expected.json";
    if (regen) {
        std::ofstream(expected, std::ios::binary) << actual;
        std::cout << "regenerated " << dir.filename().string() << "\n";
        return true;
    }
    if (fs::exists(expected) && slurp(expected) == actual) {
        std::cout << "PASS " << dir.filename().string() << "\n";
        return true;
    }
    fs::path tmp = fs::temp_directory_path() / ("golden-" + dir.filename().string() + ".json");
    std::ofstream(tmp, std::ios::binary) << actual;
    std::cout << "FAIL " << dir.filename().string() << "\n" << std::flush;
    std::string diff = "diff -u '" + expected.string() + "' '" + tmp.string() + "'";
    if (std::system(diff.c_str()) == -1) std::cout << "(diff unavailable)\n";
    fs::remove(tmp);
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"golden fixture runner"};
    std::string cli, root;
    std::vector<std::string> names;
    bool regen = false;
    app.add_option("--cli", cli, "path to the hkcert binary")->required();
    app.add_option("--fixtures", root, "fixture root directory")->required();
    app.add_flag("--regen", regen, "rewrite expected.json from the current output");
    app.add_option("names", names, "fixtures to run (default: all)");
    CLI11_PARSE(app, argc, argv);

    if (names.empty())
        for (const auto& e : fs::directory_iterator(root))
            if (e.is_directory()) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());

    int failed = 0;
    for (const auto& n : names) {
        fs::path dir = fs::path(root) / n;
        if (!fs::exists(dir / "input.args")) {
            std::cout << "FAIL " << n << ": no such fixture\n";
            ++failed;
            continue;
        }
        failed += !run_golden(cli, dir, regen);
    }
    return failed == 0 ? 0 : 1;
}
