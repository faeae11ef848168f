#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using hellmann::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    auto const r = invoke(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::vector<std::string> lines(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("bound subcommand") {
    auto r = invoke({"bound", "--A", "2", "--B", "0", "--C", "1", "--n", "1", "--l", "0"});
    CHECK(r.code == 0);
    auto const rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "A,B,C,omega,n,ell,energy,direction,minimizer_r");
    CHECK(rows[1] == "2,0,1,1,1,0,-1,exact,1");

    auto doc = invoke_json({"bound", "--A", "2", "--B", "1", "--C", "1", "--n", "1", "--l", "0"});
    CHECK(doc["rows"][0]["direction"] == "lower");
    CHECK(doc["rows"][0]["energy"].get<double>() == doctest::Approx(-0.7424).epsilon(1.5e-3));
    CHECK(doc["meta"]["schema_version"] == 1);
    CHECK(doc["meta"]["parameters"]["B"] == 1.0);
    CHECK_FALSE(doc["meta"].contains("timestamp"));

    doc = invoke_json({"bound", "--B", "-1"});
    CHECK(doc["rows"][0]["direction"] == "upper");
    CHECK(doc["rows"][0]["energy"].get<double>() == doctest::Approx(-1.5257).epsilon(1e-3));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"bound", "--A", "-1"}).code == 2);
    CHECK(invoke({"bound", "--C", "0"}).code == 2);
    CHECK(invoke({"bound", "--n", "0"}).code == 2);
    CHECK(invoke({"bound", "--l", "-1"}).code == 2);
    CHECK(invoke({"bound", "--format", "xml"}).code == 2);
    CHECK(invoke({"bound", "--A", "two"}).code == 2);
    CHECK(invoke({"solve", "--tol", "0"}).code == 2);
    CHECK(invoke({"sweep-b", "--steps", "1"}).code == 2);
    CHECK(invoke({"sweep-b", "--b-min", "1", "--b-max", "0"}).code == 2);
    CHECK(invoke({"curve", "--r-min", "2", "--r-max", "1"}).code == 2);
    auto const help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("sweep-b") != std::string::npos);
}

TEST_CASE("solve subcommand") {
    auto r = invoke({"solve", "--A", "2", "--B", "0", "--C", "1", "--n", "2", "--l", "0"});
    CHECK(r.code == 0);
    auto const rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "energy,nodes,tol,r_max,num_points");

    auto doc = invoke_json({"solve", "--n", "2"});
    CHECK(std::abs(doc["rows"][0]["energy"].get<double>() + 0.25) < 1e-8);
    CHECK(doc["rows"][0]["nodes"] == 1);

    doc = invoke_json({"solve", "--B", "-1"});
    double e = doc["rows"][0]["energy"];
    CHECK(e > -2.25);
    CHECK(e < -1.5257);
    CHECK(doc["rows"][0]["nodes"] == 0);

    doc = invoke_json({"solve", "--B", "1"});
    e = doc["rows"][0]["energy"];
    CHECK(e > -1.0);
    CHECK(e < -0.6046);

    r = invoke({"solve", "--A", "0.01", "--tol", "1e-4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("no bound state") != std::string::npos);
}

TEST_CASE("solve can dump samples") {
    auto const path = std::filesystem::temp_directory_path() / "hellmann_cli_samples.csv";
    auto const r = invoke({"solve", "--samples", path.string()});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "r,u");
    std::filesystem::remove(path);
}

TEST_CASE("sweep-b subcommand") {
    auto r = invoke({"sweep-b", "--b-min", "0", "--b-max", "0", "--steps", "2"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "B,bound,direction,oracle,gap,status");
    CHECK(rows[1] == "0,-1,exact,,,ok");

    r = invoke({"sweep-b", "--b-min", "-1", "--b-max", "1", "--steps", "3", "--with-oracle"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 4);

    r = invoke({"sweep-b", "--A", "0.01", "--b-min", "-0.001", "--b-max", "0.001", "--steps", "2",
                "--with-oracle", "--tol", "1e-4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("sweep-b: B = ") != std::string::npos);
    CHECK(r.out.find("error: ") != std::string::npos);
}

TEST_CASE("sweep-b rows agree with bound and solve bit for bit") {
    auto const sweep =
        invoke_json({"sweep-b", "--b-min", "-1", "--b-max", "1", "--steps", "3", "--with-oracle"});
    REQUIRE(sweep["rows"].size() == 3);
    for (auto const& row : sweep["rows"]) {
        auto const B = std::to_string(row["B"].get<double>());
        auto const bound = invoke_json({"bound", "--B", B});
        auto const solve = invoke_json({"solve", "--B", B});
        CHECK(row["bound"] == bound["rows"][0]["energy"]);
        CHECK(row["direction"] == bound["rows"][0]["direction"]);
        CHECK(row["oracle"] == solve["rows"][0]["energy"]);
    }
}

TEST_CASE("curve subcommand") {
    auto r = invoke({"curve", "--A", "2", "--B", "0", "--C", "1", "--steps", "20"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 21);
    CHECK(rows[0] == "r,v,energy,scaled");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].substr(rows[i].rfind(',') + 1) == "-1");
    }

    auto const doc = invoke_json({"curve", "--B", "-1", "--steps", "10", "--spacing", "linear"});
    REQUIRE(doc["rows"].size() == 10);
    double prev = 0.0;
    for (auto const& row : doc["rows"]) {
        CHECK(row["r"].get<double>() > prev);
        prev = row["r"];
    }

    r = invoke({"curve", "--A", "1", "--B", "5", "--r-min", "0.1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("at r = 0.1") != std::string::npos);
}

TEST_CASE("scale-check subcommand") {
    auto doc = invoke_json({"scale-check", "--omega", "1", "--A", "2", "--B", "1", "--C", "1"});
    CHECK(doc["rows"][0]["status"] == "pass");
    CHECK(doc["rows"][0]["full"] == doc["rows"][0]["reduced"]);

    doc = invoke_json({"scale-check", "--omega", "1", "--A", "2", "--B", "1", "--C", "2"});
    CHECK(doc["rows"][0]["status"] == "pass");
    CHECK(doc["rows"][0]["multiplier"] == 4.0);
    CHECK(doc["rows"][0]["alpha"] == 1.0);
    CHECK(doc["rows"][0]["beta"] == 0.5);

    doc = invoke_json({"scale-check", "--omega", "0.5", "--A", "1", "--B", "-2", "--C", "1"});
    CHECK(doc["rows"][0]["status"] == "pass");
    CHECK(doc["rows"][0]["alpha"] == 2.0);
    CHECK(doc["rows"][0]["beta"] == -4.0);
    CHECK(doc["rows"][0]["difference"].get<double>() <= 1e-7);
}

TEST_CASE("output is deterministic and --out writes the same bytes") {
    std::vector<std::string> args{"curve", "--B", "-1", "--steps", "7", "--format", "json"};
    auto const a = invoke(args);
    auto const b = invoke(args);
    CHECK(a.out == b.out);

    auto const path = std::filesystem::temp_directory_path() / "hellmann_cli_out.json";
    args.push_back("--out");
    args.push_back(path.string());
    auto const c = invoke(args);
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == a.out);
    std::filesystem::remove(path);

    auto const stamped = invoke_json({"bound", "--timestamp"});
    CHECK(stamped["meta"].contains("timestamp"));
}

TEST_CASE("JSON doubles round-trip exactly") {
    auto const doc = invoke_json({"curve", "--B", "1", "--steps", "5"});
    auto const again = json::parse(doc.dump());
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
        CHECK(again["rows"][i]["energy"].get<double>() == doc["rows"][i]["energy"].get<double>());
    }
}
