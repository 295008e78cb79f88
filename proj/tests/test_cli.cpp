#include "cage_spectra/cli.hpp"
#include "cage_spectra/errors.hpp"
#include "cage_spectra/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace cage_spectra;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

class TempFile {
public:
    explicit TempFile(const std::string& contents)
    {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path()
            / ("cage_spectra_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".g6");
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

} // namespace

TEST_CASE("moore")
{
    const auto r = invoke({"moore", "3", "6"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == "14\n");
    const auto j = json::parse(invoke({"--format", "json", "moore", "4", "6"}).out);
    CHECK(j["moore_bound"] == 26);
    CHECK(invoke({"moore", "3", "6", "--format", "csv"}).out == "k,g,moore_bound\n3,6,14\n");
    // Large values are carried as strings rather than losing digits.
    const auto big = json::parse(invoke({"--format", "json", "moore", "30", "40"}).out);
    CHECK(big["moore_bound"].is_string());
}

TEST_CASE("feasibility json")
{
    const auto r = invoke({"--format", "json", "feasibility", "4", "3", "2"});
    REQUIRE(r.code == exit_ok);
    const json j = json::parse(r.out);
    CHECK(j["verdict"] == "spectrally-admissible");
    CHECK(j["n"] == 28);
    CHECK(j["multiplicities"] == json::array({1, 7, 6, 6, 7, 1}));
    CHECK(j["moments"]["passed"] == true);
    CHECK(j["gap"].is_null());
    // The emitted document is in canonical form.
    CHECK(dump_json(j) == r.out);
    CHECK(invoke({"--format", "json", "feasibility", "4", "3", "2"}).out == r.out);
}

TEST_CASE("feasibility text and csv")
{
    const auto text = invoke({"feasibility", "4", "3", "2"});
    CHECK(text.code == exit_ok);
    CHECK(text.out.find("spectrally-admissible") != std::string::npos);
    const auto csv = lines(invoke({"--format", "csv", "feasibility", "5", "7", "2"}).out);
    REQUIRE(csv.size() == 2);
    CHECK(csv[0] == feasibility_csv_header);
    CHECK(csv[1].rfind("5,7,2,", 0) == 0);
    CHECK(csv[1].find("excluded-by-gap") != std::string::npos);
}

TEST_CASE("parameter errors exit with a usage code and a named reason")
{
    const auto odd = invoke({"feasibility", "4", "3", "3"});
    CHECK(odd.code == exit_usage);
    CHECK(odd.err.find("odd-excess") != std::string::npos);
    CHECK(invoke({"feasibility", "4", "4", "2"}).err.find("even-d:") != std::string::npos);
    CHECK(invoke({"feasibility", "3", "3", "2"}).err.find("excess-exceeds-k-minus-2") != std::string::npos);
    CHECK(invoke({"moore", "1", "6"}).code == exit_usage);
    CHECK(invoke({"poly", "Q", "4", "2"}).code == exit_usage);
}

TEST_CASE("command-line errors")
{
    CHECK(invoke({}).code == exit_usage);
    CHECK(invoke({"bogus"}).code == exit_usage);
    CHECK(invoke({"moore", "3"}).code == exit_usage);
    CHECK(invoke({"moore", "three", "6"}).code == exit_usage);
    CHECK(invoke({"--format", "xml", "moore", "3", "6"}).code == exit_usage);
    CHECK(invoke({"scan", "--k", "4..x", "--d", "7", "--e", "2"}).code == exit_usage);
    CHECK(invoke({"scan", "--k", "4", "--d", "7", "--e", "2", "--jobs", "0"}).code == exit_usage);
    const auto help = invoke({"--help"});
    CHECK(help.code == exit_ok);
    CHECK(help.out.find("feasibility") != std::string::npos);
}

TEST_CASE("scan output formats agree")
{
    const std::vector<std::string> grid{"scan", "--k", "4..10", "--d", "7,9", "--e", "2,4", "--jobs", "2"};
    auto with = [&](const std::string& format) {
        auto args = grid;
        args.insert(args.begin(), {"--format", format});
        const auto r = invoke(args);
        REQUIRE(r.code == exit_ok);
        return r.out;
    };
    const json j = json::parse(with("json"));
    const auto csv = lines(with("csv"));
    const auto text = lines(with("text"));
    REQUIRE(j.size() == 28);
    REQUIRE(csv.size() == 29);
    REQUIRE(text.size() == 28);
    CHECK(csv[0] == feasibility_csv_header);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string verdict = j[i]["verdict"];
        const bool in_regime = j[i]["e"].get<int>() <= j[i]["k"].get<int>() - 2;
        CHECK(verdict == (in_regime ? "excluded-by-gap" : "outside-regime"));
        if (in_regime)
            CHECK(j[i]["gap"]["chain"]["holds"] == true);
        CHECK(csv[i + 1].find("," + verdict + ",") != std::string::npos);
        CHECK(text[i].find(" " + verdict) != std::string::npos);
    }
    CHECK(j[0]["k"] == 4);
    CHECK(j[0]["d"] == 7);
    CHECK(j[0]["e"] == 2);
    CHECK(j[1]["verdict"] == "outside-regime");  // (4, 7, 4)
}

TEST_CASE("verify")
{
    const auto heawood = invoke({"verify", "catalog:heawood", "--k", "3", "--d", "3", "--e", "0"});
    CHECK(heawood.code == exit_ok);
    const auto j = json::parse(
        invoke({"--format", "json", "verify", "catalog:moebius_kantor", "--k", "3", "--d", "3", "--e", "2"}).out);
    CHECK(j.is_object());
    // Wrong parameters: the graph is read, the checks fail.
    CHECK(invoke({"verify", "catalog:heawood", "--k", "3", "--d", "4", "--e", "0"}).code == exit_failure);
    CHECK(invoke({"verify", "catalog:no_such_graph", "--k", "3", "--d", "3", "--e", "0"}).code == exit_usage);
    CHECK(invoke({"verify", "/nonexistent/graph.g6", "--k", "3", "--d", "3", "--e", "0"}).code == exit_usage);
}

TEST_CASE("verify reads graph6 files")
{
    // Heawood, then Petersen.
    const TempFile two("MhEGHC@AI?_PC@_G_\nIheA@GUAo\n");
    const auto r = invoke({"--format", "csv", "verify", two.path(), "--k", "3", "--d", "3", "--e", "0"});
    CHECK(r.code == exit_failure);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == verify_csv_header);
    CHECK(rows[1].find("#1,") != std::string::npos);
    CHECK(rows[1].substr(rows[1].rfind(',') + 1) == "pass");
    CHECK(rows[2].find("#2,") != std::string::npos);
    CHECK(rows[2].substr(rows[2].rfind(',') + 1) == "fail");

    const TempFile one("MhEGHC@AI?_PC@_G_\n");
    CHECK(invoke({"verify", one.path(), "--k", "3", "--d", "3", "--e", "0"}).code == exit_ok);

    const TempFile bad("M{{{\n");
    const auto malformed = invoke({"verify", bad.path(), "--k", "3", "--d", "3", "--e", "0"});
    CHECK(malformed.code == exit_usage);
    CHECK(malformed.err.find("graph6") != std::string::npos);

    const TempFile empty("");
    CHECK(invoke({"verify", empty.path(), "--k", "3", "--d", "3", "--e", "0"}).code == exit_usage);
}

TEST_CASE("poly and catalog")
{
    const auto p = json::parse(invoke({"--format", "json", "poly", "H", "5", "6"}).out);
    CHECK(p["coefficients"] == json::array({-64, 0, 96, 0, -20, 0, 1}));
    CHECK(p["degree"] == 6);
    CHECK(invoke({"poly", "F", "4", "2"}).out.find("x^2 - 4") != std::string::npos);
    const auto c = json::parse(invoke({"--format", "json", "catalog"}).out);
    REQUIRE(c.is_array());
    bool found = false;
    for (const auto& entry : c)
        if (entry["name"] == "tutte_coxeter") {
            found = true;
            CHECK(entry["order"] == 30);
            CHECK(entry["girth"] == 8);
        }
    CHECK(found);
}

TEST_CASE("integer lists")
{
    CHECK(parse_int_list("4..7") == std::vector<int>{4, 5, 6, 7});
    CHECK(parse_int_list("7,9,11") == std::vector<int>{7, 9, 11});
    CHECK(parse_int_list("2,4..5,9") == std::vector<int>{2, 4, 5, 9});
    CHECK(parse_int_list("5..4").empty());
    CHECK_THROWS_AS(parse_int_list(""), DomainError);
    CHECK_THROWS_AS(parse_int_list("1,,2"), DomainError);
    CHECK_THROWS_AS(parse_int_list("a..3"), DomainError);
    CHECK_THROWS_AS(parse_int_list("3.."), DomainError);
}
