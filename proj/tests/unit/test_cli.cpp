#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

const std::string kCli = CYCLESPEC_CLI_PATH;
const std::string kTmp = std::string(CYCLESPEC_TMP_DIR) + "/cli_";

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string tmp(const std::string& name) { return kTmp + name; }

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("gen writes edge lists") {
    auto r = run("gen --model hypercube --d 3 -o " + tmp("q3.txt"));
    CHECK(r.code == 0);
    auto text = read(tmp("q3.txt"));
    CHECK(text.find("# n=8 m=12") == 0);
    int lines = 0;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (!l.empty() && l[0] != '#') ++lines;
    CHECK(lines == 12);

    CHECK(run("gen --model projective --q 2 -o " + tmp("heawood.txt")).code == 0);
    auto a = nlohmann::json::parse(run("analyze --json " + tmp("heawood.txt")).out);
    CHECK(a["result"]["girth"] == 6);
    CHECK(a["result"]["n"] == 14);
    CHECK(a["result"]["e"] == 21);

    auto dm = run("gen --model cycle --n 5 --format dimacs");
    CHECK(dm.out.find("p edge 5 5\n") != std::string::npos);

    CHECK(run("gen --model nonsense").code == 2);
}

TEST_CASE("analyze") {
    run("gen --model complete-bipartite --a 3 --b 3 -o " + tmp("k33.txt"));
    auto r = run("analyze --json " + tmp("k33.txt"));
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["n"] == 6);
    CHECK(j["result"]["e"] == 9);
    CHECK(j["result"]["average_degree"] == "3");
    CHECK(j["result"]["bipartite"] == true);
    CHECK(j["result"]["girth"] == 4);
    CHECK(j["result"]["radius"] == 2);
    CHECK(j["command"] == "analyze --json " + tmp("k33.txt"));

    write(tmp("tri.txt"), "0 1\n1 2\n2 0\n");
    auto t = nlohmann::json::parse(run("analyze --json " + tmp("tri.txt")).out);
    CHECK(t["result"]["bipartite"] == false);
    CHECK(t["result"]["odd_cycle_witness"].size() == 3);

    write(tmp("empty.txt"), "");
    auto e = run("analyze --json " + tmp("empty.txt"));
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["result"]["n"] == 0);

    write(tmp("bad.txt"), "0 1\n0 0\n");
    CHECK(run("analyze " + tmp("bad.txt")).code == 2);
    CHECK(run("analyze " + tmp("missing.txt")).code == 2);

    write(tmp("tri.dimacs"), "p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n");
    auto d = nlohmann::json::parse(run("analyze --json --format dimacs " + tmp("tri.dimacs")).out);
    CHECK(d["graph_header"]["format"] == "dimacs");
    CHECK(d["graph_header"]["hash"] == t["graph_header"]["hash"]);
}

TEST_CASE("spectrum, verify and exit codes") {
    run("gen --model hypercube --d 8 -o " + tmp("q8.txt"));
    auto r = run("spectrum " + tmp("q8.txt") + " --k 2 --mode bipartite -o " + tmp("q8.json"));
    CHECK(r.code == 0);
    auto cert = nlohmann::json::parse(read(tmp("q8.json")));
    CHECK(cert["result"]["cycles"].size() >= 2);
    CHECK(run("verify " + tmp("q8.txt") + " --cert " + tmp("q8.json")).code == 0);

    auto& v = cert["result"]["cycles"][0]["vertices"];
    std::swap(v[0], v[1]);
    write(tmp("q8_bad.json"), cert.dump(2));
    auto bad = run("verify " + tmp("q8.txt") + " --cert " + tmp("q8_bad.json"));
    CHECK(bad.code == 3);
    CHECK(bad.out.find("not an edge") != std::string::npos);

    run("gen --model hypercube --d 7 -o " + tmp("q7.txt"));
    CHECK(run("verify " + tmp("q7.txt") + " --cert " + tmp("q8.json")).code == 3);

    run("gen --model complete-bipartite --a 3 --b 40 -o " + tmp("k340.txt"));
    auto k = run("spectrum " + tmp("k340.txt") + " --k 3");
    CHECK(k.code == 1);
    CHECK(k.out.find("average degree 240/43 < 12") != std::string::npos);

    run("gen --model complete --n 13 -o " + tmp("k13.txt"));
    auto p = run("spectrum " + tmp("k13.txt") + " --k 2 --mode parity");
    CHECK(p.code == 0);
    auto pj = nlohmann::json::parse(p.out);
    std::string parity = pj["result"]["parity"];
    CHECK((parity == "even" || parity == "odd" || parity == "all"));

    CHECK(run("spectrum " + tmp("q8.txt") + " --k 1").code == 2);
    CHECK(run("spectrum " + tmp("q8.txt")).code == 2);
}

TEST_CASE("evencycle") {
    run("gen --model complete --n 300 -o " + tmp("k300.txt"));
    auto r = run("evencycle " + tmp("k300.txt") + " --k 2");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["result"]["length"] == 4);

    run("gen --model complete --n 100 -o " + tmp("k100.txt"));
    CHECK(run("evencycle " + tmp("k100.txt") + " --k 2").code == 1);

    run("gen --model complete-bipartite --a 32 --b 32 -o " + tmp("k3232.txt"));
    auto b = run("evencycle " + tmp("k3232.txt") + " --k 2 --bipartite -o " + tmp("k3232.json"));
    CHECK(b.code == 0);
    CHECK(run("verify " + tmp("k3232.txt") + " --cert " + tmp("k3232.json")).code == 0);
}

TEST_CASE("oracle subcommands") {
    run("gen --model complete-bipartite --a 3 --b 3 -o " + tmp("k33o.txt"));
    auto r = run("oracle spectrum " + tmp("k33o.txt") + " --max-len 6");
    CHECK(r.code == 0);
    CHECK(r.out == "{4,6}\n");
    auto ab = run("oracle abpaths --length 6 --chord 0 3 --a-positions 0,2,4");
    CHECK(ab.code == 0);
    CHECK(ab.out.find("{1,3,5}") != std::string::npos);
    CHECK(run("oracle abpaths --length 6 --chord 0 3 --a-positions 0,1,2,3,4,5").code == 2);
}

TEST_CASE("fuzz output is ordered and reproducible") {
    auto a = run("fuzz --k 2 --trials 6 --jobs 3 --seed 11 --n-min 50 --n-max 80");
    auto b = run("fuzz --k 2 --trials 6 --jobs 1 --seed 11 --n-min 50 --n-max 80");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("trial 0 ") == 0);
    CHECK(a.out.find("trial 5 ") != std::string::npos);
}
