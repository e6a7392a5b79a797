#include <doctest.h>

#include <sstream>

#include "../tools/cli.hpp"

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = facs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("lrcoef prints the normalized value") {
    Run r = run_cli({"lrcoef", "--theta", "1", "--mu", "1", "--nu", "1", "--n", "2",
                     "--engine", "tableau", "--a", "symbolic", "--b", "symbolic"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 * a1 + 1 * a3 + -1 * b1 + -1 * b2\n");
}

TEST_CASE("engines agree through the CLI") {
    std::vector<std::string> base{"lrcoef", "--theta", "2,1", "--mu", "1", "--nu",
                                  "2,1",    "--n",     "2",   "--a",  "shifted",
                                  "--b",    "shifted"};
    std::vector<std::string> engines{"tableau", "recurrence", "hook", "oracle"};
    std::string first;
    for (const std::string& engine : engines) {
        std::vector<std::string> args = base;
        args.push_back("--engine");
        args.push_back(engine);
        Run r = run_cli(args);
        CHECK(r.code == 0);
        if (first.empty())
            first = r.out;
        else
            CHECK(r.out == first);
    }
}

TEST_CASE("schur and facschur verbs") {
    Run r = run_cli({"schur", "--lambda", "1,1", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 * x1 * x2\n");

    Run det = run_cli({"facschur", "--lambda", "2", "--n", "2", "--route", "det"});
    Run tab = run_cli({"facschur", "--lambda", "2", "--n", "2"});
    CHECK(det.code == 0);
    CHECK(det.out == tab.out);

    Run skew = run_cli({"facschur", "--lambda", "2,1/1", "--n", "2", "--a", "zero"});
    CHECK(skew.code == 0);
}

TEST_CASE("verify suite runs and exits zero") {
    Run r = run_cli({"verify", "--suite", "vanishing", "--box", "2x2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("suite vanishing: PASS") != std::string::npos);
}

TEST_CASE("table emits agreeing rows") {
    Run r = run_cli({"table", "--fs", "--box", "2x2", "--n", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
    REQUIRE(!doc["rows"].empty());
    for (const auto& row : doc["rows"]) CHECK(row["agree"] == true);
}

TEST_CASE("deterministic outputs") {
    std::vector<std::string> args{"table", "--fs",  "--box", "2x2",   "--n",
                                  "2",     "--format", "csv"};
    Run first = run_cli(args);
    Run second = run_cli(args);
    CHECK(first.out == second.out);

    std::string detail;
    CHECK(facs::cli::outputs_deterministic(&detail));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"lrcoef", "--theta", "1"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"verify", "--suite", "bogus", "--box", "2x2"}).code == 2);
    CHECK(run_cli({"lrcoef", "--theta", "1", "--mu", "1", "--nu", "1", "--n", "2", "--a",
                   "wat"})
              .code == 2);
    CHECK(run_cli({"table", "--box", "3by3", "--n", "2"}).code == 2);
}

TEST_CASE("bench produces consistent csv") {
    Run r = run_cli({"bench", "--box", "1x2", "--n", "2", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("engine,theta,mu,nu,n,micros,terms\n", 0) == 0);
    // Row sets (times excluded) are identical across runs with one seed.
    auto strip_times = [](const std::string& text) {
        std::istringstream in(text);
        std::vector<std::string> rows;
        std::string line;
        while (std::getline(in, line)) {
            std::size_t last_comma = line.rfind(',');
            std::size_t prev_comma = line.rfind(',', last_comma - 1);
            rows.push_back(line.substr(0, prev_comma) + line.substr(last_comma));
        }
        return rows;
    };
    Run again = run_cli({"bench", "--box", "1x2", "--n", "2", "--seed", "3"});
    CHECK(strip_times(r.out) == strip_times(again.out));
}

TEST_CASE("json output for lrcoef") {
    Run r = run_cli({"lrcoef", "--theta", "1", "--mu", "1", "--nu", "1", "--n", "2",
                     "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["theta"] == "1");
    CHECK(doc["engine"] == "tableau");
    CHECK(doc["value"]["terms"].size() == 4);
}
