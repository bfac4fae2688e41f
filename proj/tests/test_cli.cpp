#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eulerian/cli.hpp"

using namespace eulerian;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("verify accepts the quadruple") {
    auto res = run({"verify", "18,3/5,8/5,224/107"});
    CHECK(res.code == 0);
    CHECK(res.out.find("status: eulerian") != std::string::npos);
    // six pair rows
    CHECK(res.out.find("(2,3)") != std::string::npos);
}

TEST_CASE("verify rejects a non-eulerian pair with exit 1") {
    auto res = run({"verify", "1,1"});
    CHECK(res.code == 1);
    CHECK(res.out.find('3') != std::string::npos);
    CHECK(res.out.find("not a square") != std::string::npos);
}

TEST_CASE("verify --squares takes the squares directly") {
    auto res = run({"verify", "--squares", "25/9,64/9,196/9"});
    CHECK(res.code == 0);
    CHECK(res.out.find("status: eulerian") != std::string::npos);
    CHECK(res.out.find("product plus third") != std::string::npos);

    // a non-square entry is a mathematical failure, not a usage error
    auto bad = run({"verify", "--squares", "2,3,5"});
    CHECK(bad.code == 1);
}

TEST_CASE("verify --json emits a stable document") {
    auto res = run({"verify", "18,3/5,8/5,224/107", "--json"});
    CHECK(res.code == 0);
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["status"] == "eulerian");
    CHECK(doc["roots"].size() == 4);
    CHECK(doc["pairs"].size() == 6);
    CHECK(doc["squares"][0] == "324");

    auto again = run({"verify", "18,3/5,8/5,224/107", "--json"});
    CHECK(again.out == res.out); // byte-identical
}

TEST_CASE("verify usage errors exit 2") {
    CHECK(run({"verify", "1,,2"}).code == 2);
    CHECK(run({"verify", "1, 2"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({"verify", "18", "--bogus"}).code == 2);
    CHECK(run({"bogus-subcommand"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("solve-triple prints the published value") {
    auto res = run({"solve-triple", "--squares", "25/9,64/9,196/9"});
    CHECK(res.code == 0);
    CHECK(res.out.find("-459818598496844787200/631629004828419699201") != std::string::npos);
    CHECK(res.out.find("digits: 21 / 21") != std::string::npos);

    auto json = run({"solve-triple", "--squares", "25/9,64/9,196/9", "--json"});
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["x"] == "-459818598496844787200/631629004828419699201");
    CHECK(doc["x_digits"][0] == 21);
    CHECK(doc["x_digits"][1] == 21);

    CHECK(run({"solve-triple", "--squares", "25/9,64/9"}).code == 2);
    CHECK(run({"solve-triple", "--squares", "2,3,5"}).code == 1);
}

TEST_CASE("triple-family emits one verified triple per line") {
    auto res = run({"triple-family", "--m", "1/2", "--gen", "245,2100", "--count", "2"});
    CHECK(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    std::vector<nlohmann::json> rows;
    while (std::getline(lines, line))
        rows.push_back(nlohmann::json::parse(line));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["k"] == 1);
    CHECK(rows[0]["n"] == "15/7");
    CHECK(rows[0]["squares"] == nlohmann::json({"4", "64/361", "441"}));
    CHECK(rows[1]["k"] == 2);
    CHECK(rows[1]["roots"][2] == "13675872/413271869");

    // a generator that is not on the curve is a mathematical failure
    CHECK(run({"triple-family", "--m", "1/2", "--gen", "245,2101", "--count", "1"}).code == 1);
}

TEST_CASE("curve subcommand prints K,J text") {
    auto res = run({"curve", "--a", "-770", "--b", "146625", "--scan", "240:250"});
    CHECK(res.code == 0);
    CHECK(res.out.find("245,2100") != std::string::npos);

    auto tors = run({"curve", "--a", "20478", "--b", "99801585", "--torsion"});
    CHECK(tors.out.find("0,0") != std::string::npos);
    CHECK(tors.out.find("-12483,0") != std::string::npos);
    CHECK(tors.out.find("-7995,0") != std::string::npos);

    auto mul = run({"curve", "--a", "-770", "--b", "146625", "--mul", "2", "--point", "245,2100"});
    CHECK(mul.out.find("187489/441,651232/9261") != std::string::npos);

    auto json = run({"curve", "--a", "-770", "--b", "146625", "--scan", "240:250", "--json"});
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["points"][0]["K"] == "245");

    // singular curve is a mathematical failure
    CHECK(run({"curve", "--a", "2", "--b", "1", "--torsion"}).code == 1);
    // malformed range is a usage error
    CHECK(run({"curve", "--a", "-770", "--b", "146625", "--scan", "240-250"}).code == 2);
}

TEST_CASE("search-quad runs end to end through the CLI") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "eulerian_cli_test";
    fs::create_directories(dir);
    const std::string out_path = (dir / "hits.jsonl").string();
    const std::string ck_path = (dir / "ck.json").string();

    auto res = run({"search-quad", "--x-max", "6", "--m-max", "4", "--k-range", "-20000:20000",
                    "--u-range", "-20000:20000", "--out", out_path, "--checkpoint", ck_path,
                    "--jobs", "2"});
    CHECK(res.code == 0);
    CHECK(res.out.find("done") != std::string::npos);

    std::ifstream hits(out_path);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(hits, line)) {
        auto doc = nlohmann::json::parse(line);
        CHECK(doc.contains("class"));
        CHECK(doc["roots"].size() == 4);
        CHECK(doc["pairs"].size() == 6);
        ++rows;
    }
    CHECK(rows > 10);

    CHECK(run({"search-quad", "--x-max", "0", "--m-max", "1", "--k-range", "0:1", "--u-range",
               "0:1", "--out", out_path}).code == 2);

    fs::remove_all(dir);
}

TEST_CASE("help exits zero") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"verify", "--help"}).code == 0);
}
