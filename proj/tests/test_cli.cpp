#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("PERFNECK_BIN");
    REQUIRE_MESSAGE(p != nullptr, "PERFNECK_BIN must point at the perfneck binary");
    return p;
}

std::string golden_dir() {
    const char* p = std::getenv("PERFNECK_GOLDEN");
    REQUIRE_MESSAGE(p != nullptr, "PERFNECK_GOLDEN must point at tests/golden");
    return p;
}

CmdResult run(const std::string& args, const std::string& stdin_text = {}) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) {
        const std::string path = "/tmp/perfneck_stdin.txt";
        std::ofstream(path) << stdin_text;
        cmd = cmd + " < " + path;
    }
    CmdResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json golden(const std::string& name) {
    std::ifstream in(golden_dir() + "/" + name);
    REQUIRE_MESSAGE(in.good(), ("missing golden file " + name).c_str());
    nlohmann::json j;
    in >> j;
    return j;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    return s;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("generate") {
    CHECK(strip(run("generate --base 2 --k 2 --ordered").out) == "00011011");
    CHECK(strip(run("generate --base 2 --k 2 --r 3").out) == "00111001");
    CHECK(strip(run("generate --base 2 --k 1 --r 1").out) == "01");
    CHECK(run("generate --base 2 --k 2 --r 2").exit_code == 2);         // r not coprime
    CHECK(run("generate --base 2 --k 2 --r 1 --ordered").exit_code == 2);
    CHECK(run("generate --base 2 --k 2").exit_code == 2);
    CHECK(run("generate --base 2 --k 2 --circuit").exit_code == 2);     // missing --n
}

TEST_CASE("verify verdict exit codes") {
    CHECK(run("verify --k 2 --n 2 00011011").exit_code == 0);
    CHECK(run("verify --k 2 --n 2 00011110").exit_code == 1);
    CHECK(run("verify --k 2 --n 2 00012").exit_code == 2);
    CHECK(run("verify --k 1 --n 1 --base 3 [0,1,2]").exit_code == 0);
}

TEST_CASE("verify batch mode") {
    const CmdResult all_good = run("verify --k 2 --n 2", "00011011\n00100111\n");
    CHECK(all_good.exit_code == 0);
    CHECK(all_good.out == "perfect 00011011\nperfect 00100111\n");
    const CmdResult mixed = run("verify --k 2 --n 2", "00011011\n00011110\n");
    CHECK(mixed.exit_code == 1);
    CHECK(mixed.out.find("not-perfect 00011110") != std::string::npos);
}

TEST_CASE("generate piped into verify") {
    for (const char* flags : {"--base 2 --k 2 --ordered # 2 2", "--base 2 --k 3 --r 3 # 3 3",
                              "--base 3 --k 2 --ordered # 2 2", "--base 2 --k 3 --circuit --n 2 # 3 2",
                              "--base 3 --k 1 --circuit --n 3 # 1 3", "--base 5 --k 1 --r 2 # 1 1"}) {
        const std::string spec(flags);
        const auto hash = spec.find('#');
        const std::string gen_flags = spec.substr(0, hash);
        std::istringstream kn(spec.substr(hash + 1));
        int k, n;
        kn >> k >> n;
        std::string base_flag = gen_flags.substr(0, gen_flags.find("--k"));
        const CmdResult gen = run("generate " + gen_flags);
        REQUIRE(gen.exit_code == 0);
        const CmdResult ver = run("verify " + base_flag + " --k " + std::to_string(k) +
                                      " --n " + std::to_string(n),
                                  gen.out);
        CAPTURE(spec);
        CHECK(ver.exit_code == 0);
    }
}

TEST_CASE("count") {
    CHECK(strip(run("count --base 2 --k 2 --n 2").out) == "2");
    CHECK(strip(run("count --base 2 --k 3 --n 3").out) == "172");
    CHECK(strip(run("count --base 2 --k 3 --n 3 --brute-force").out) == "172");
    CHECK(run("count --base 2 --k 3 --n 4 --brute-force").exit_code == 1);   // budget
    const CmdResult breakdown = run("count --base 2 --k 3 --n 3 --breakdown");
    CHECK(breakdown.out.find("172") != std::string::npos);
    CHECK(breakdown.out.find("512") != std::string::npos);
    CHECK(breakdown.out.find("170") != std::string::npos);
}

TEST_CASE("circuits") {
    CHECK(strip(run("circuits --base 2 --k 3 --j 3").out) == "512");
    CHECK(strip(run("circuits --base 2 --k 3 --j 3 --count-formula").out) == "512");
    CHECK(strip(run("circuits --base 2 --k 3 --j 3 --arborescences").out) == "512");
    const CmdResult en = run("circuits --base 2 --k 2 --j 2 --enumerate");
    CHECK(en.exit_code == 0);
    CHECK(en.out.find("count: 4") != std::string::npos);
    CHECK(std::count(en.out.begin(), en.out.end(), '\n') == 5);
    CHECK(run("circuits --base 2 --k 4 --j 4 --enumerate").exit_code == 1);   // budget
}

TEST_CASE("stat-test") {
    const CmdResult reject = run("stat-test --period 00011011 --test indicator:0000");
    CHECK(reject.exit_code == 1);
    CHECK(reject.out.find("statistic: 1/16") != std::string::npos);
    CHECK(reject.out.find("verdict: REJECT") != std::string::npos);
    const CmdResult pass = run("stat-test --period 00011011 --test indicator:00");
    CHECK(pass.exit_code == 0);
    CHECK(pass.out.find("verdict: PASS") != std::string::npos);
    const CmdResult demo = run("stat-test --period 00011011 --demonstrate --k 2 --m 2");
    CHECK(demo.exit_code == 0);
    CHECK(demo.out.find("rejector: 0000") != std::string::npos);
    CHECK(run("stat-test --period 00011011 --test nonsense:00").exit_code == 2);
    CHECK(run("stat-test --period 00011110 --demonstrate --k 2 --m 2").exit_code == 1);
}

TEST_CASE("graph") {
    const CmdResult dot = run("graph --base 2 --s 1 --n 2 --dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("\"0|0\" -> \"1|1\"") != std::string::npos);
    const CmdResult plain = run("graph --base 2 --s 2 --n 3");
    CHECK(plain.out.find("nodes: 12") != std::string::npos);
    CHECK(plain.out.find("edges: 24") != std::string::npos);
}

TEST_CASE("json outputs match the golden files") {
    CHECK(nlohmann::json::parse(run("count --base 2 --k 3 --n 3 --json").out) ==
          golden("count_2_3_3.json"));
    CHECK(nlohmann::json::parse(run("verify --k 2 --n 2 --json 00011011").out) ==
          golden("verify_perfect.json"));
    CHECK(nlohmann::json::parse(run("verify --k 2 --n 2 --json 00110011").out) ==
          golden("verify_residue.json"));
    CHECK(nlohmann::json::parse(
              run("stat-test --period 00011011 --demonstrate --k 2 --m 2 --json").out) ==
          golden("demonstrate_2_2.json"));
    CHECK(nlohmann::json::parse(
              run("stat-test --period 0011 --test indicator:000 --json").out) ==
          golden("stat_indicator.json"));
    CHECK(nlohmann::json::parse(run("graph --base 2 --s 2 --n 3 --json").out) ==
          golden("graph_2_2_3.json"));
}

} // TEST_SUITE
