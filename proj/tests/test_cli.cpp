#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SUBDP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string asset(const std::string& name) {
    return std::string(SUBDP_ASSET_DIR) + "/" + name;
}

std::string tmp_path(const std::string& name) {
    return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/subdp_test_" +
           name;
}

// key:value lines ('#'-prefixed metadata lines included, prefix stripped)
std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0)
            line = line.substr(2);
        auto pos = line.find(": ");
        if (pos != std::string::npos)
            kv[line.substr(0, pos)] = line.substr(pos + 2);
    }
    return kv;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("cli: exact on the asset graphs") {
    auto r = run("exact " + asset("q3.g"));
    CHECK(r.exit_code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["capacity"] == "4");
    CHECK(kv["exact"] == "true");

    r = run("exact " + asset("petersen.g"));
    CHECK(r.exit_code == 0);
    kv = parse_kv(r.out);
    CHECK(kv["capacity"] == "3");
    CHECK(kv["exact"] == "true");
}

TEST_CASE("cli: bounds prints the component bounds") {
    auto r = run("bounds " + asset("q3.g"));
    CHECK(r.exit_code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["upper(degree)"] == "4");
    CHECK(kv["upper(kcore)"] == "4");
    CHECK(kv["lower(turan)"] == "2");
    CHECK(kv["upper"] == "4");
}

TEST_CASE("cli: human output matches the machine report") {
    std::string report = tmp_path("exact_report.txt");
    auto r = run("exact " + asset("c4bi.g") + " --report " + report);
    CHECK(r.exit_code == 0);
    auto human = parse_kv(r.out);
    auto machine = parse_kv(slurp(report));
    CHECK(machine["command"] == "exact");
    for (const auto& [k, v] : human) {
        INFO(k);
        CHECK(machine[k] == v);
    }
    std::remove(report.c_str());
}

TEST_CASE("cli: peel reports the trace") {
    auto r = run("peel " + asset("q3.g"));
    CHECK(r.exit_code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["steps"] == "0");
    CHECK(kv["terminal.size"] == "8");
    CHECK(kv["degenerate"] == "false");
    CHECK(kv["eps_out"] == "3/1");
}

TEST_CASE("cli: approx on a generated file") {
    auto r = run("approx " + asset("petersen.g") + " --seed 3");
    CHECK(r.exit_code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["capacity"] == "1");
    CHECK(kv["target_ell"] == "1");
    CHECK(kv["exact"] == "false");
}

TEST_CASE("cli: color then codec then simulate") {
    std::string coloring = tmp_path("q3.col");
    std::string codec = tmp_path("q3.codec");

    auto r = run("color " + asset("q3.g") + " --colors 2 --seed 4");
    CHECK(r.exit_code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["succeeded"] == "true");
    std::ofstream(coloring) << r.out;

    r = run("codec " + asset("q3.g") + " --coloring " + coloring);
    CHECK(r.exit_code == 0);
    CHECK(parse_kv(r.out)["ell"] == "2");
    std::ofstream(codec) << r.out;

    r = run("simulate " + codec + " --start 0 --messages random 500 --seed 9");
    CHECK(r.exit_code == 0);
    kv = parse_kv(r.out);
    CHECK(kv["steps"] == "500");
    CHECK(kv["decode_errors"] == "0");
    CHECK(kv["illegal_transitions"] == "0");

    std::remove(coloring.c_str());
    std::remove(codec.c_str());
}

TEST_CASE("cli: simulate from a message file") {
    std::string coloring = tmp_path("k5.col");
    std::string codec = tmp_path("k5.codec");
    std::string msgs = tmp_path("k5.msgs");

    auto r = run("color " + asset("k5.g") + " --colors 5 --seed 1");
    CHECK(r.exit_code == 0);
    std::ofstream(coloring) << r.out;
    r = run("codec " + asset("k5.g") + " --coloring " + coloring);
    CHECK(r.exit_code == 0);
    std::ofstream(codec) << r.out;
    std::ofstream(msgs) << "1 2 3 4 5 5 4 3 2 1\n";

    r = run("simulate " + codec + " --messages " + msgs);
    CHECK(r.exit_code == 0);
    CHECK(parse_kv(r.out)["steps"] == "10");

    std::remove(coloring.c_str());
    std::remove(codec.c_str());
    std::remove(msgs.c_str());
}

TEST_CASE("cli: bench table") {
    std::string report = tmp_path("bench_report.txt");
    auto r = run("bench --n-list 16,24 --alpha 0.3 --seeds 2 --seed 1 --report " + report);
    CHECK(r.exit_code == 0);
    auto kv = parse_kv(r.out);
    CHECK(kv["mode"] == "dense");
    CHECK(kv.count("row.16.mean_ell") == 1);
    CHECK(kv.count("row.24.stat") == 1);
    auto machine = parse_kv(slurp(report));
    CHECK(machine["row.16.mean_ell"] == kv["row.16.mean_ell"]);

    auto again = run("bench --n-list 16,24 --alpha 0.3 --seeds 2 --seed 1");
    CHECK(again.out == r.out); // bit-for-bit reproducible

    std::remove(report.c_str());
}

TEST_CASE("cli: exit codes") {
    // refusal: 17 nodes is past the default exact guard
    std::string big = tmp_path("big.g");
    {
        std::ofstream out(big);
        out << "digraph 17 16\n";
        for (int i = 0; i < 16; ++i)
            out << i << " " << i + 1 << "\n";
    }
    CHECK(run("exact " + big).exit_code == 1);
    CHECK(run("exact " + big + " --limit 20").exit_code == 0);
    std::remove(big.c_str());

    // parse error: 2
    std::string bad = tmp_path("bad.g");
    std::ofstream(bad) << "digraph 2 1\n0 0\n";
    CHECK(run("exact " + bad).exit_code == 2);
    std::remove(bad.c_str());

    // missing file: 2
    CHECK(run("exact " + tmp_path("nonexistent.g")).exit_code == 2);

    // impossible coloring target: 3
    CHECK(run("color " + asset("c5di.g") + " --colors 2 --seed 1 --max-rounds 100").exit_code ==
          3);
}
