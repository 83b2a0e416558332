#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "specmatch/io.hpp"
#include "specmatch/models.hpp"

using namespace specmatch;

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

CliResult run_shell(const std::string& cmd_line) {
    const std::string cmd = cmd_line + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

CliResult run_cli(const std::string& args) {
    return run_shell(std::string(SPECMATCH_CLI_PATH) + " " + args);
}

CliResult run_cli_env(const std::string& env_prefix, const std::string& args) {
    return run_shell(env_prefix + " " + std::string(SPECMATCH_CLI_PATH) + " " + args);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("generate writes a readable noiseless pair") {
    const fs::path dir = fresh_dir("specmatch_cli_gen");
    const CliResult r =
        run_cli("generate --n 30 --s 1.0 --seed 3 --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "n=30"));
    CHECK(contains(r.output, "model=erdos_renyi"));
    CHECK(contains(r.output, "sigma_emp=0"));

    const Mat a = read_matrix_file((dir / "a.txt").string());
    const Mat b = read_matrix_file((dir / "b.txt").string());
    const Permutation truth = read_permutation_file((dir / "truth.txt").string());
    REQUIRE(a.rows() == 30);
    REQUIRE(truth.size() == 30);
    CHECK((a - permute_conjugate(b, truth)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("generate is deterministic in the seed") {
    const fs::path d1 = fresh_dir("specmatch_cli_det1");
    const fs::path d2 = fresh_dir("specmatch_cli_det2");
    const fs::path d3 = fresh_dir("specmatch_cli_det3");
    CHECK(run_cli("generate --n 20 --seed 11 --out " + d1.string()).exit_code == 0);
    CHECK(run_cli("generate --n 20 --seed 11 --out " + d2.string()).exit_code == 0);
    CHECK(run_cli("generate --n 20 --seed 12 --out " + d3.string()).exit_code == 0);
    CHECK(slurp(d1 / "a.txt") == slurp(d2 / "a.txt"));
    CHECK(slurp(d1 / "truth.txt") == slurp(d2 / "truth.txt"));
    CHECK(slurp(d1 / "a.txt") != slurp(d3 / "a.txt"));
}

TEST_CASE("match recovers a noiseless relabeling end to end") {
    const fs::path dir = fresh_dir("specmatch_cli_match");
    REQUIRE(run_cli("generate --n 60 --s 1.0 --seed 7 --out " + dir.string()).exit_code == 0);
    const CliResult r = run_cli("match --a " + (dir / "a.txt").string() + " --b " +
                                (dir / "b.txt").string() + " --truth " +
                                (dir / "truth.txt").string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "overlap=1\n"));
    CHECK(contains(r.output, "separated="));
    CHECK(contains(r.output, "diag_rel_err="));

    const CliResult rowqp_run = run_cli("match --method rowqp --rounder greedy --a " +
                                        (dir / "a.txt").string() + " --b " +
                                        (dir / "b.txt").string() + " --truth " +
                                        (dir / "truth.txt").string());
    CHECK(rowqp_run.exit_code == 0);
    CHECK(contains(rowqp_run.output, "overlap=1\n"));
}

TEST_CASE("match writes the map to a file when asked") {
    const fs::path dir = fresh_dir("specmatch_cli_out");
    REQUIRE(run_cli("generate --n 10 --s 1.0 --seed 2 --truth-mode identity --out " +
                    dir.string())
                .exit_code == 0);
    const fs::path map_file = dir / "map.txt";
    const CliResult r = run_cli("match --a " + (dir / "a.txt").string() + " --b " +
                                (dir / "b.txt").string() + " --out " + map_file.string());
    CHECK(r.exit_code == 0);
    std::istringstream in(slurp(map_file));
    int row = 0, target = 0, count = 0;
    while (in >> row >> target) {
        CHECK(row == count);
        CHECK(target == count);
        ++count;
    }
    CHECK(count == 10);
}

TEST_CASE("match handles a single-node instance") {
    const fs::path dir = fresh_dir("specmatch_cli_one");
    {
        std::ofstream m(dir / "one.txt");
        m << "1\n0\n";
        std::ofstream t(dir / "perm.txt");
        t << "0\n";
    }
    const CliResult r = run_cli("match --a " + (dir / "one.txt").string() + " --b " +
                                (dir / "one.txt").string() + " --truth " +
                                (dir / "perm.txt").string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "0 0\n"));
    CHECK(contains(r.output, "overlap=1\n"));
    CHECK(contains(r.output, "separated=1"));
}

TEST_CASE("missing input files exit with code 2 and name the path") {
    const fs::path dir = fresh_dir("specmatch_cli_missing");
    const std::string ghost = (dir / "ghost.txt").string();
    {
        std::ofstream m(dir / "one.txt");
        m << "1\n0\n";
    }
    const CliResult r =
        run_cli("match --a " + ghost + " --b " + (dir / "one.txt").string());
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, ghost));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("match").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("match --a x --b y --method bogus").exit_code == 2);
    CHECK(run_cli("generate --n 1").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("sweep --config /definitely/not/here.cfg").exit_code == 2);
}

TEST_CASE("sweep is reproducible across runs, workers, and the env override") {
    const fs::path dir = fresh_dir("specmatch_cli_sweep");
    const fs::path cfg = dir / "sweep.cfg";
    {
        std::ofstream out(cfg);
        out << "n = 24\nnoise_grid = 1.0, 0.9\nreps = 2\nbase_seed = 5\n";
    }
    const std::string base = "sweep --config " + cfg.string() + " --out ";
    CHECK(run_cli(base + (dir / "one.csv").string()).exit_code == 0);
    CHECK(run_cli(base + (dir / "two.csv").string() + " --workers 8").exit_code == 0);
    const CliResult env_run = run_cli("sweep --config " + cfg.string() + " --out " +
                                      (dir / "three.csv").string());
    CHECK(env_run.exit_code == 0);

    const std::string one = slurp(dir / "one.csv");
    CHECK(one == slurp(dir / "two.csv"));
    CHECK(one == slurp(dir / "three.csv"));
    CHECK(one.rfind("method,rounder,n,p,noise", 0) == 0);

    CHECK(run_cli_env("SPECMATCH_WORKERS=4", base + (dir / "four.csv").string()).exit_code ==
          0);
    CHECK(one == slurp(dir / "four.csv"));
    CHECK(run_cli_env("SPECMATCH_WORKERS=abc", base + (dir / "bad.csv").string()).exit_code ==
          2);

    CHECK(run_cli(base + (dir / "five.csv").string() + " --plot-data " +
                  (dir / "plot").string())
              .exit_code == 0);
    CHECK(fs::exists(dir / "plot_grampa_lap.dat"));
    CHECK(fs::exists(dir / "plot_rowqp_lap.dat"));
}

TEST_CASE("verify passes clean and fails under an injected defect") {
    const CliResult clean = run_cli("verify");
    CHECK(clean.exit_code == 0);
    CHECK(contains(clean.output, "PASS"));
    CHECK(!contains(clean.output, "FAIL"));

    const CliResult broken = run_cli("verify --inject-contour-sign-error");
    CHECK(broken.exit_code == 1);
    CHECK(contains(broken.output, "FAIL"));
}
