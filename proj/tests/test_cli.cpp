#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code{-1};
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BOOKLIE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("classify subcommand emits the expected JSON", "[cli]") {
    const auto r = run_cli("classify --params 0,0,0,0,0,-1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("class") == "A");
    CHECK(j.at("coboundary") == true);
    CHECK(j.at("r_matrix").at("r12") == "1");

    const auto d = run_cli("classify --params 0,2,0,0,0,0.5");
    const json jd = json::parse(d.out);
    CHECK(jd.at("class") == "D");
    CHECK(jd.at("free_params").at("lambda") == "2");
    CHECK(jd.at("free_params").at("alpha") == "-1/2");

    CHECK(run_cli("classify --params 0,0,0,0,0").exit_code == 2);
    CHECK(run_cli("classify --params a,b,c,d,e,f").exit_code == 2);
}

TEST_CASE("verify passes by default and honors --only", "[cli]") {
    const std::string report = temp_path("verify.json");
    const auto r = run_cli("verify --json " + report);
    REQUIRE(r.exit_code == 0);
    std::ifstream f(report);
    REQUIRE(f.good());
    const json j = json::parse(f);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("checks").size() >= 20);
    std::remove(report.c_str());

    const auto only = run_cli("verify --only rmatrix --json " + report);
    REQUIRE(only.exit_code == 0);
    std::ifstream f2(report);
    const json j2 = json::parse(f2);
    for (const auto& chk : j2.at("checks")) CHECK(chk.at("module") == "rmatrix");
    CHECK(j2.at("checks").size() == 9);
    std::remove(report.c_str());

    CHECK(run_cli("verify --only no-such-check").exit_code == 2);
}

TEST_CASE("corrupt pathways fail exactly the targeted check", "[cli]") {
    const std::array<std::pair<const char*, const char*>, 5> targets = {{
        {"jacobi", "jacobi-group"},
        {"poisson-map", "poisson-map"},
        {"casimir", "casimir-centrality"},
        {"rhat", "rhat-form"},
        {"q-homomorphism", "q-homomorphism"},
    }};
    for (const auto& [target, check_name] : targets) {
        const std::string report = temp_path("corrupt.json");
        const auto r = run_cli(std::string("verify --corrupt ") + target + " --json " + report);
        CHECK(r.exit_code == 1);
        std::ifstream f(report);
        REQUIRE(f.good());
        const json j = json::parse(f);
        int failures = 0;
        for (const auto& chk : j.at("checks")) {
            if (chk.at("status") == "FAIL") {
                ++failures;
                CHECK(chk.at("name") == check_name);
            }
        }
        CHECK(failures == 1);
        std::remove(report.c_str());
    }
    CHECK(run_cli("verify --corrupt everything").exit_code == 2);
}

TEST_CASE("chart subcommand", "[cli]") {
    const auto r = run_cli("chart --id sl2-standard --eta 1 --check");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("max_bracket_residual").get<double>() < 1e-9);
    CHECK(j.at("casimir_relation").at("max_err").get<double>() < 1e-10);

    CHECK(run_cli("chart --id sl2-nonstandard --phi 0").exit_code == 2);
    CHECK(run_cli("chart --id not-a-structure").exit_code == 2);

    // identical config + seed give byte-identical reports
    const auto again = run_cli("chart --id sl2-standard --eta 1 --check");
    CHECK(r.out == again.out);
}

TEST_CASE("simulate emits a conserving CSV, deterministically", "[cli]") {
    const auto r = run_cli("simulate --t-end 5");
    REQUIRE(r.exit_code == 0);
    std::istringstream csv(r.out);
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line == "t,X,Y,Z,H,C,relH,relC");
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        // columns 7 and 8 are the relative drifts
        std::istringstream ls(line);
        std::string tok;
        double relH = 0, relC = 0;
        for (int col = 0; std::getline(ls, tok, ','); ++col) {
            if (col == 6) relH = std::stod(tok);
            if (col == 7) relC = std::stod(tok);
        }
        CHECK(std::abs(relH) < 1e-8);
        CHECK(std::abs(relC) < 1e-8);
    }
    CHECK(rows > 10);

    const auto again = run_cli("simulate --t-end 5");
    CHECK(r.out == again.out);  // byte-identical

    CHECK(run_cli("simulate --rtol 0").exit_code == 2);
    CHECK(run_cli("simulate --x0 1,2").exit_code == 2);
    CHECK(run_cli("simulate --x0 0,1,1").exit_code == 2);
    CHECK(run_cli("simulate --e-term z").exit_code == 2);
    CHECK(run_cli("chart --id so-q --points 0").exit_code == 2);
}

TEST_CASE("simulate metadata and gnuplot emission", "[cli]") {
    const std::string meta_path = temp_path("meta.json");
    const std::string csv_path = temp_path("run.csv");
    const std::string plt_path = temp_path("run.plt");
    const auto r = run_cli("simulate --t-end 2 --csv " + csv_path + " --json " + meta_path +
                           " --gnuplot " + plt_path);
    REQUIRE(r.exit_code == 0);
    std::ifstream meta(meta_path);
    REQUIRE(meta.good());
    const json j = json::parse(meta);
    CHECK(j.at("status") == "ok");
    CHECK(j.at("max_rel_drift_H").get<double>() < 1e-8);
    std::ifstream plt(plt_path);
    REQUIRE(plt.good());
    std::stringstream pltsrc;
    pltsrc << plt.rdbuf();
    CHECK(pltsrc.str().find(csv_path) != std::string::npos);
    std::remove(meta_path.c_str());
    std::remove(csv_path.c_str());
    std::remove(plt_path.c_str());
}

TEST_CASE("parameter sweeps run in parallel and index their outputs", "[cli]") {
    const std::string sweep_path = temp_path("sweep.json");
    {
        std::ofstream f(sweep_path);
        f << R"([{"params":{"a":0,"b":1,"c":0,"d":0,"e":0,"f":0},"t_end":1.0},)"
          << R"({"params":{"a":0,"b":2,"c":0,"d":0,"e":0,"f":0},"t_end":0.5},)"
          << R"({"params":{"a":0,"b":"1/2","c":0,"d":0,"e":0,"f":0},"t_end":2.0}])";
    }
    const std::string cmd = std::string("BOOKLIE_THREADS=2 ") + BOOKLIE_CLI_PATH +
                            " simulate --sweep " + sweep_path + " --out-dir . 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);

    const json summary = json::parse(out);
    REQUIRE(summary.size() == 3);
    for (const auto& run : summary) {
        CHECK(run.at("status") == "ok");
        std::ifstream csv(run.at("csv").get<std::string>());
        CHECK(csv.good());
    }
    std::remove(sweep_path.c_str());
    for (const char* f : {"./run_000.csv", "./run_001.csv", "./run_002.csv"}) std::remove(f);

    CHECK(run_cli("simulate --sweep missing.json").exit_code == 2);
}

TEST_CASE("run config round-trips through its JSON serialization", "[cli]") {
    const std::string meta_path = temp_path("roundtrip.json");
    const auto first = run_cli("simulate --t-end 3 --beta 1,0,0 --json " + meta_path);
    REQUIRE(first.exit_code == 0);
    const auto second = run_cli("simulate --config " + meta_path);
    REQUIRE(second.exit_code == 0);
    CHECK(first.out == second.out);

    // explicit flags override the config file
    const auto shorter = run_cli("simulate --config " + meta_path + " --t-end 1");
    CHECK(shorter.out != second.out);
    std::remove(meta_path.c_str());

    CHECK(run_cli("simulate --config does_not_exist.json").exit_code == 2);
}

TEST_CASE("qcheck subcommand", "[cli]") {
    const std::string report = temp_path("qcheck.json");
    const auto r = run_cli("qcheck --json " + report);
    REQUIRE(r.exit_code == 0);
    std::ifstream f(report);
    REQUIRE(f.good());
    const json j = json::parse(f);
    CHECK(j.at("all_pass") == true);
    std::remove(report.c_str());
}
