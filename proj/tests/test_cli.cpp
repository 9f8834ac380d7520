#include "doctest.h"

#include <charrel/wpoly.hpp>

#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

// Drives the installed binary as a subprocess. The path comes in through
// CHARREL_CLI_PATH (set by ctest to the built target); every check here is
// about the outer contract: exit codes, parseable reports, determinism,
// checkpoint recovery.

using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("CHARREL_CLI_PATH");
    REQUIRE_MESSAGE(p != nullptr, "CHARREL_CLI_PATH must point at the charrel binary");
    return p;
}

std::string scratch_file(const std::string& stem) {
    return "/tmp/charrel_test_" + std::to_string(getpid()) + "_" + stem;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stderr_file = "/dev/null") {
    const std::string cmd = "'" + cli_path() + "' " + args + " 2>" + stderr_file;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_lines(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++n;
    return n;
}

// a full functional table for dimension n: value 1 exactly on `ones`
void write_numbers_file(const std::string& path, unsigned n,
                        const std::vector<std::vector<unsigned>>& ones) {
    json doc;
    doc["n"] = n;
    json arr = json::array();
    charrel::for_each_partition(n, 1, n, [&](const std::vector<unsigned>& parts) {
        json e;
        e["partition"] = parts;
        e["value"] = 0;
        for (const auto& o : ones)
            if (parts == o) e["value"] = 1;
        arr.push_back(std::move(e));
    });
    doc["numbers"] = std::move(arr);
    std::ofstream(path) << doc.dump();
}

}  // namespace

TEST_CASE("cli: exit codes follow the obstruction contract") {
    CHECK(run_cli("rp --n 13 --target 12 --format json").exit_code == 1);
    CHECK(run_cli("rp --n 13 --target 13 --class cusp --format json").exit_code == 0);
    CHECK(run_cli("classify --n 9 --format json").exit_code == 0);
    CHECK(run_cli("cp --n 49 --target 93").exit_code == 1);
    CHECK(run_cli("cp --n 3 --target 5").exit_code == 0);
    CHECK(run_cli("dims --n 9 --k 1").exit_code == 0);
    CHECK(run_cli("binom --b 1000000 --a 4096").exit_code == 0);

    // usage and domain errors both map to 2
    CHECK(run_cli("dims --n 9").exit_code == 2);
    CHECK(run_cli("rp --n 13 --target 99").exit_code == 2);
    CHECK(run_cli("rp --n 13 --target 12 --class spiral").exit_code == 2);
    CHECK(run_cli("dims --n 9 --k 1 --format yaml").exit_code == 2);
    CHECK(run_cli("nonsense --n 9").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: landmark records carry the published values") {
    const RunResult dims = run_cli("dims --n 9 --k 1 --format json");
    const json d = json::parse(dims.out);
    CHECK(d["command"] == "dims");
    CHECK(d["quotient_dim"] == 2);
    CHECK(d["complement"][0]["x"] == 2);
    CHECK(d["complement"][1]["x"] == 4);

    const json c = json::parse(run_cli("classify --n 9 --format json").out);
    CHECK(c["class"] == "C2");
    CHECK(c["quotient_dim"] == 2);

    const json rp = json::parse(run_cli("rp --n 13 --target 12 --format json").out);
    CHECK(rp["obstructed"] == true);
    CHECK(rp["minimal_threshold"] == 6);
    bool morin_obstructed = false;
    for (const json& v : rp["verdicts"])
        if (v["map_class"] == "morin" && v["status"] == "obstructed") morin_obstructed = true;
    CHECK(morin_obstructed);

    const json cp = json::parse(run_cli("cp --n 49 --target 93 --format json").out);
    CHECK(cp["k"] == 5);
    CHECK(cp["verdicts"][0]["provenance"] == "cp-pontryagin");

    const json b = json::parse(run_cli("binom --b 14 --a 3 --format json").out);
    CHECK(b["parity"] == 0);
    CHECK(b["val2"] == 2);  // C(14,3) = 364 = 4 * 91
}

TEST_CASE("cli: json reruns are byte-identical") {
    const char* cmds[] = {
        "dims --n 128 --k 1 --format json",
        "classify --n 23 --format json",
        "rp --n 31 --target 22 --format json",
        "cp --n 49 --target 93 --format json",
        "dold-basis --n 17 --k 1 --format json",
        "sweep --n-max 40 --k auto --format json",
        "binom --b 65535 --a 256 --format json",
    };
    for (const char* c : cmds) {
        const RunResult a = run_cli(c);
        const RunResult b = run_cli(c);
        CHECK_MESSAGE(a.out == b.out, c);
        CHECK(!a.out.empty());
        CHECK(!json::parse(a.out).is_discarded());
    }

    // parallelism must not show in the record either
    const std::string j1 = run_cli("sweep --n-max 60 --k auto --jobs 1 --format json").out;
    const std::string j4 = run_cli("sweep --n-max 60 --k auto --jobs 4 --format json").out;
    CHECK(j1 == j4);
}

TEST_CASE("cli: numbers subcommand reads a functional document") {
    const std::string good = scratch_file("cn10.json");
    write_numbers_file(good, 10, {{6, 4}});
    const RunResult obstructed = run_cli("numbers --file " + good +
                                         " --k 1 --class fold --hyp 1 --format json");
    CHECK(obstructed.exit_code == 1);
    const json rep = json::parse(obstructed.out);
    CHECK(rep["verdict"]["status"] == "obstructed");
    CHECK(rep["verdict"]["provenance"] == "blowup-number-equalities");

    const std::string zero = scratch_file("cn10zero.json");
    write_numbers_file(zero, 10, {});
    CHECK(run_cli("numbers --file " + zero + " --k 1 --class fold --hyp 1").exit_code == 0);

    // value 1 under the vanishing hypothesis is a hypothesis error, exit 2
    const std::string contradicts = scratch_file("cn10bad.json");
    write_numbers_file(contradicts, 10, {{9, 1}});
    CHECK(run_cli("numbers --file " + contradicts + " --k 1 --class fold --hyp 1")
              .exit_code == 2);

    const std::string malformed = scratch_file("cn10broken.json");
    std::ofstream(malformed) << "{\"n\": 10, \"numbers\": [{\"partition\": [10]}]}";
    CHECK(run_cli("numbers --file " + malformed + " --k 1 --class fold").exit_code == 2);
    CHECK(run_cli("numbers --file /nonexistent.json --k 1 --class fold").exit_code == 2);

    std::remove(good.c_str());
    std::remove(zero.c_str());
    std::remove(contradicts.c_str());
    std::remove(malformed.c_str());
}

TEST_CASE("cli: sweep checkpoint survives a corrupt tail and resumes") {
    const std::string ck = scratch_file("ck.jsonl");
    const std::string errs = scratch_file("stderr.txt");
    std::remove(ck.c_str());

    CHECK(run_cli("sweep --n-max 30 --k 3 --checkpoint " + ck).exit_code == 0);
    const std::size_t first = count_lines(ck);
    CHECK(first == 27);  // n = 4..30

    // simulate a crash mid-append, then resume over a larger grid
    std::ofstream(ck, std::ios::app) << "{\"n\":31,\"k\":3,\"quot";
    const RunResult resumed =
        run_cli("sweep --n-max 40 --k 3 --checkpoint " + ck + " --format json", errs);
    CHECK(resumed.exit_code == 0);
    CHECK(slurp(errs).find("corrupt") != std::string::npos);
    CHECK(count_lines(ck) == 37);  // n = 4..40, no duplicates
    const json rep = json::parse(resumed.out);
    CHECK(rep["resumed"] == 27);
    CHECK(rep["tasks"] == 37);
    CHECK(rep["violations"] == 0);

    // duplicate and stale-version records are warned about and washed out
    std::ofstream(ck, std::ios::app)
        << "{\"n\":4,\"k\":3,\"quotient_dim\":0,\"complement\":[],\"elapsed_ms\":9,"
           "\"engine_version\":\"1.0.0\"}\n"
        << "{\"n\":5,\"k\":3,\"quotient_dim\":0,\"complement\":[],\"elapsed_ms\":9,"
           "\"engine_version\":\"0.0.1\"}\n";
    CHECK(run_cli("sweep --n-max 40 --k 3 --checkpoint " + ck, errs).exit_code == 0);
    const std::string warned = slurp(errs);
    CHECK(warned.find("duplicate") != std::string::npos);
    CHECK(warned.find("0.0.1") != std::string::npos);
    CHECK(count_lines(ck) == 37);

    std::remove(ck.c_str());
    std::remove(errs.c_str());
}

TEST_CASE("cli: csv and text projections") {
    const RunResult csv = run_cli("sweep --n-max 20 --k 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("n,k,quotient_dim,complement,violation\n", 0) == 0);

    const RunResult dims = run_cli("dims --n 9 --k 1 --format text");
    CHECK(dims.out.find("quotient dimension: 2") != std::string::npos);

    const RunResult rp = run_cli("rp --n 11 --target 10 --format csv");
    CHECK(rp.exit_code == 1);
    CHECK(rp.out.find("fold,obstructed,fold-sw-equalities") != std::string::npos);

    const RunResult bt = run_cli("binom --b 14 --a 12");
    CHECK(bt.out.find("C(14, 12) mod 2 = 1") != std::string::npos);
}
