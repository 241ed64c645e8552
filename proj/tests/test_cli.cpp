#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "dlv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = dlv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "dlv_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::size_t line_count(const fs::path& p)
{
    std::ifstream in(p);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) ++n;
    return n;
}

} // namespace

TEST_CASE("cli: catalog lists solutions and profiles")
{
    const auto r = invoke({"catalog"});
    CHECK(r.code == dlv::cli::exit_pass);
    const auto j = Json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(r.out.find("S_WEIER") != std::string::npos);
    CHECK(r.out.find("fisher_front") != std::string::npos);
}

TEST_CASE("cli: certify exit codes")
{
    const auto ok = invoke({"certify", "--solution", "S_RATIONAL"});
    CHECK(ok.code == dlv::cli::exit_pass);
    CHECK(Json::parse(ok.out)["pass"] == true);

    CHECK(invoke({"certify", "--solution", "S_ZERO"}).code == dlv::cli::exit_pass);
    CHECK(invoke({"certify", "--solution", "S_TANH", "--constants", R"({"C1": 3})"}).code ==
          dlv::cli::exit_config);
    CHECK(invoke({"certify", "--solution", "NOT_A_SOLUTION"}).code == dlv::cli::exit_config);
    CHECK(invoke({"certify", "--profile", "fisher_front"}).code == dlv::cli::exit_pass);
    CHECK(invoke({"certify", "--bogus"}).code == dlv::cli::exit_config);
}

TEST_CASE("cli: certification reports are deterministic for a fixed seed")
{
    const auto a = invoke({"certify", "--solution", "S_SEC", "--seed", "7"});
    const auto b = invoke({"certify", "--solution", "S_SEC", "--seed", "7"});
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["seed"] == 7);
}

TEST_CASE("cli: DLV_SEED overrides the default seed")
{
    CHECK(dlv::cli::default_seed() == 42);
    ::setenv("DLV_SEED", "123", 1);
    CHECK(dlv::cli::default_seed() == 123);
    ::unsetenv("DLV_SEED");
}

TEST_CASE("cli: classification rows and exclusions")
{
    const auto r = invoke({"verify-classification", "case3"});
    CHECK(r.code == dlv::cli::exit_pass);
    CHECK(invoke({"verify-classification", "case7", "--params", R"({"alpha0": 0.5})"}).code ==
          dlv::cli::exit_config);
}

TEST_CASE("cli: flow with zero parameter is the identity")
{
    const auto r = invoke({"flow", "--generator", "D", "--eps", "0", "--solution", "S_RATIONAL"});
    CHECK(r.code == dlv::cli::exit_pass);
    CHECK(Json::parse(r.out)["max_change"].get<double>() == 0.0);
    CHECK(invoke({"flow", "--generator", "Q", "--eps", "0.1", "--solution", "S_RATIONAL"}).code ==
          dlv::cli::exit_config);
}

TEST_CASE("cli: simulate writes one row per node per frame")
{
    const auto dir = scratch("simulate");
    const auto cfg = dir / "run.json";
    std::ofstream(cfg) << R"({"schema": 1, "solution": "S_RATIONAL",
        "grid": {"nx": 17, "ny": 17, "x": [0.2, 1.0], "y": [0.2, 1.0]}, "t_end": 0.05, "frames": 2})";
    const auto csv = dir / "field.csv";
    const auto r = invoke({"simulate", "--config", cfg.string(), "--csv", csv.string()});
    REQUIRE(r.code == dlv::cli::exit_pass);
    CHECK(line_count(csv) == 1 + 2 * 17 * 17);
    const auto j = Json::parse(r.out);
    CHECK(j["error"]["linf"].get<double>() < 1e-4);
}

TEST_CASE("cli: malformed configurations are configuration errors")
{
    const auto dir = scratch("config");
    const auto cfg = dir / "run.json";
    std::ofstream(cfg) << R"({"schema": 1, "solution": "S_RATIONAL", "t_end": 0.05})";
    CHECK(invoke({"simulate", "--config", cfg.string()}).code == dlv::cli::exit_config);
    std::ofstream(cfg) << "{ not json";
    CHECK(invoke({"simulate", "--config", cfg.string()}).code == dlv::cli::exit_config);
    CHECK(invoke({"simulate", "--config", (dir / "missing.json").string()}).code == dlv::cli::exit_config);
}

TEST_CASE("cli: figure emits data, script and dominance verdict")
{
    const auto dir = scratch("figure");
    const auto r = invoke({"figure", "fig1", "--outdir", dir.string(), "--n", "21"});
    CHECK(r.code == dlv::cli::exit_pass);
    CHECK(fs::exists(dir / "fig1.csv"));
    CHECK(fs::exists(dir / "fig1.gp"));
    const auto j = Json::parse(r.out);
    CHECK(j["dominance"]["violations"] == 0);

    std::ifstream in(dir / "fig1.csv");
    std::string line;
    std::getline(in, line);
    bool found = false;
    while (std::getline(in, line)) {
        double t, x, y, u, v, w;
        char c;
        std::istringstream row(line);
        if (!(row >> t >> c >> x >> c >> y >> c >> u >> c >> v >> c >> w)) continue;
        if (t == 0.0 && x == 0.0 && y == 0.0) {
            CHECK(w == doctest::Approx(65.0 / 12.0).epsilon(1e-12));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("cli: no-flux runs are accepted by simulate only")
{
    const auto dir = scratch("no_flux");
    const auto cfg = dir / "run.json";
    std::ofstream(cfg) << R"({"schema": 1, "solution": "heat_kernel", "tau": 0.3, "boundary": "no_flux",
        "grid": {"nx": 17, "ny": 17, "x": [-1, 1], "y": [-1, 1]}, "t_end": 0.05})";
    CHECK(invoke({"simulate", "--config", cfg.string()}).code == dlv::cli::exit_pass);
    CHECK(invoke({"convergence", "--config", cfg.string()}).code == dlv::cli::exit_config);
    std::ofstream(cfg) << R"({"schema": 1, "solution": "heat_kernel", "boundary": "open",
        "grid": {"nx": 17, "ny": 17, "x": [-1, 1], "y": [-1, 1]}, "t_end": 0.05})";
    CHECK(invoke({"simulate", "--config", cfg.string()}).code == dlv::cli::exit_config);
}
