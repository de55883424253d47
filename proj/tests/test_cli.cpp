#include "djp/expr.hpp"
#include "djp/module_json.hpp"
#include "djp/pbw.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out, err;
};

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("djp_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// no argument in these tests contains a single quote
RunResult run(const std::vector<std::string>& args) {
    fs::path out = work_dir() / "stdout.txt", err = work_dir() / "stderr.txt";
    std::ostringstream cmd;
    cmd << "'" << DJP_CLI_PATH << "'";
    for (const auto& a : args) cmd << " '" << a << "'";
    cmd << " >'" << out.string() << "' 2>'" << err.string() << "'";
    int status = std::system(cmd.str().c_str());
    RunResult r;
    if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string chomp(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

// builds a module file through the CLI and returns its path
std::string build_file(const std::vector<std::string>& ctor, const std::string& name) {
    fs::path p = work_dir() / name;
    std::vector<std::string> args{"module", "build"};
    args.insert(args.end(), ctor.begin(), ctor.end());
    args.push_back("-o");
    args.push_back(p.string());
    RunResult r = run(args);
    REQUIRE(r.code == 0);
    return p.string();
}

} // namespace

TEST_CASE("nf agrees with the in-process normal form") {
    using djp::AlgebraElement;
    using djp::Gen;
    RunResult r = run({"nf", "v*x"});
    REQUIRE(r.code == 0);
    AlgebraElement expect =
        djp::multiply(AlgebraElement::gen(Gen::V), AlgebraElement::gen(Gen::X));
    CHECK(djp::parse_expression(chomp(r.out)) == expect);

    CHECK(chomp(run({"nf", "g*gi"}).out) == "1");
    CHECK(chomp(run({"nf", "y*x - x*y + 1/2*x^2"}).out) == "0");

    RunResult bad = run({"nf", "x*("});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("offset 3") != std::string::npos);
}

TEST_CASE("hopf-check") {
    RunResult r = run({"hopf-check", "--degree", "3", "--samples", "15", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS (") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("module build and verify across the families") {
    for (const auto& ctor : std::vector<std::vector<std::string>>{
             {"L", "3"},
             {"T", "2", "1"},
             {"S", "2", "1/3"},
             {"verma", "2", "3"},
             {"verma2", "1", "1", "0", "2"}}) {
        std::string p = build_file(ctor, "fam_" + ctor[0] + ".json");
        RunResult v = run({"module", "verify", p});
        CAPTURE(ctor[0]);
        CHECK(v.code == 0);
        CHECK(v.out.find("PASS (") != std::string::npos);
    }

    std::string s = build_file({"S", "2", "1/3"}, "s.json");
    std::string ds = build_file({"dual", s}, "ds.json");
    CHECK(run({"module", "verify", ds}).code == 0);

    std::string l1 = build_file({"L", "1"}, "l1.json");
    std::string tt = build_file({"tensor", l1, l1}, "l1l1.json");
    CHECK(run({"module", "verify", tt}).code == 0);

    RunResult direct = run({"module", "build", "L", "1"});
    CHECK(direct.code == 0);
    CHECK(djp::module_from_json(direct.out).dim == 2);
}

TEST_CASE("exit codes distinguish failure kinds") {
    // corrupt x action: relations and nilpotency break, verification fails
    std::string l1 = build_file({"L", "1"}, "broken.json");
    json j = json::parse(slurp(l1));
    j["generators"]["x"][0][0] = "1";
    std::ofstream(l1) << j.dump();
    RunResult v = run({"module", "verify", l1});
    CHECK(v.code == 1);
    CHECK(v.out.find("FAIL") != std::string::npos);

    fs::path bad = work_dir() / "bad.json";
    std::ofstream(bad) << R"({"dim": true})";
    RunResult schema = run({"module", "verify", bad.string()});
    CHECK(schema.code == 3);
    CHECK(schema.err.find("schema error") != std::string::npos);

    CHECK(run({"module", "verify", (work_dir() / "missing.json").string()}).code == 3);
    CHECK(run({"module", "build", "T", "1"}).code == 2);          // missing argument
    CHECK(run({"module", "build", "Q", "1"}).code == 2);          // unknown family
    CHECK(run({"module", "build", "L", "three"}).code == 2);      // not an integer
    CHECK(run({"ext", "L2"}).code == 2);                          // CLI11 required arg
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("hom and ext accept simple labels and files") {
    CHECK(chomp(run({"hom", "L2", "L2"}).out) == "1");
    CHECK(chomp(run({"hom", "L2", "L4"}).out) == "0");
    CHECK(chomp(run({"ext", "L2", "L0"}).out) == "1");
    CHECK(chomp(run({"ext", "L0", "L0"}).out) == "0");

    std::string l0 = build_file({"L", "0"}, "l0.json");
    CHECK(chomp(run({"ext", "L2", l0}).out) == "1");
}

TEST_CASE("structure queries") {
    std::string t22 = build_file({"T", "2", "2"}, "t22.json");
    CHECK(chomp(run({"factors", t22}).out) == "[2,4,6]");
    CHECK(json::parse(run({"hw", t22}).out) == json{{"hw", 6}, {"hw_rank", 1}});
    CHECK(chomp(run({"indec", t22}).out) == "true");

    json w = json::parse(run({"weights", t22}).out);
    CHECK(w["dim"] == 15);
    int total = 0;
    for (const auto& entry : w["weights"]) total += entry["dim"].get<int>();
    CHECK(total == 15);

    std::string t21 = build_file({"T", "2", "1"}, "t21.json");
    fs::path soc = work_dir() / "soc.json";
    CHECK(run({"socle", t21, "-o", soc.string()}).code == 0);
    CHECK(run({"module", "verify", soc.string()}).code == 0);
    CHECK(json::parse(run({"hw", soc.string()}).out) == json{{"hw", 2}, {"hw_rank", 1}});
    CHECK(chomp(run({"factors", soc.string()}).out) == "[2]");

    std::string s0 = build_file({"S", "2", "0"}, "s20.json");
    CHECK(chomp(run({"indec", s0}).out) == "false");

    std::string l1l1 = build_file({"tensor", build_file({"L", "1"}, "l1b.json"),
                                   build_file({"L", "1"}, "l1c.json")},
                                  "sq.json");
    json series = json::parse(run({"hw-series", l1l1}).out);
    REQUIRE(series.size() == 2);
    CHECK(series[0] == json{{"dim", 3}, {"hw", 2}, {"hw_rank", 1}});
    CHECK(series[1] == json{{"dim", 1}, {"hw", 0}, {"hw_rank", 1}});
}

TEST_CASE("quiver and wildness") {
    fs::path dot = work_dir() / "quiver.dot";
    RunResult q = run({"quiver", "--max", "3", "--dot", dot.string()});
    REQUIRE(q.code == 0);
    json table = json::parse(q.out);
    CHECK(table["max_n"] == 3);
    bool loop1 = false, loop0 = false;
    for (const auto& a : table["arrows"]) {
        if (a["from"] == 1 && a["to"] == 1) loop1 = a["mult"] == 1;
        if (a["from"] == 0 && a["to"] == 0) loop0 = true;
    }
    CHECK(loop1);
    CHECK(!loop0);
    CHECK(slurp(dot).find("digraph") != std::string::npos);

    RunResult forced = run({"quiver", "--max", "2", "--loop-at-zero"});
    REQUIRE(forced.code == 0);
    json ftable = json::parse(forced.out);
    bool forced_loop = false;
    for (const auto& a : ftable["arrows"])
        if (a["from"] == 0 && a["to"] == 0) forced_loop = a["mult"] == 1;
    CHECK(forced_loop);

    RunResult w = run({"wildness", "--max", "4"});
    REQUIRE(w.code == 0);
    json rep = json::parse(w.out);
    CHECK(rep["wild"] == true);
    CHECK(rep["witness"]["subset"] == json::array({0, 2, 4}));
    CHECK(rep["forced_zero_loop_witness"]["wild"] == true);
}
