#include "primepoly/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using primepoly::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("primepoly_test_" + name);
}

}  // namespace

TEST_CASE("fvector") {
    CHECK(call({"fvector", "--d", "3", "--e", "2"}).out == "6 12 8 1\n");
    CHECK(call({"fvector", "--d", "3", "--e", "2", "--method", "lattice"}).out == "6 12 8 1\n");
    CHECK(call({"fvector", "--d", "3", "--e", "2", "--method", "oracle", "--t", "5/2"}).out == "6 12 8 1\n");

    const auto j = json::parse(call({"fvector", "--d", "2", "--e", "3", "--format", "json"}).out);
    CHECK(j["f_vector"] == json::array({4, 4, 1}));

    const auto refused = call({"fvector", "--d", "6", "--e", "6", "--method", "oracle"});
    CHECK(refused.code == primepoly::cli::kExitUsage);
    CHECK(refused.err.find("oracle") != std::string::npos);
}

TEST_CASE("vertices and hrep formats") {
    const auto v = json::parse(call({"vertices", "--d", "3", "--e", "2", "--t", "2", "--format", "json"}).out);
    CHECK(v["t"] == "2/1");
    CHECK(v["vertices"].size() == 6);
    CHECK(v["vertices"][0]["exponents"] == json::array({0, 0, 2}));
    CHECK(v["vertices"][0]["point"] == json::array({"1/1", "1/1", "4/1"}));

    const auto cdd = call({"hrep", "--d", "3", "--e", "2", "--format", "cdd"});
    CHECK(cdd.code == 0);
    CHECK(cdd.out.find("H-representation\nbegin\n8 4 rational\n") == 0);

    const auto planar = call({"hrep", "--d", "2", "--e", "3", "--format", "cdd"});
    CHECK(planar.out.rfind("*", 0) == 0);

    const auto h = json::parse(call({"hrep", "--d", "2", "--e", "3", "--format", "json"}).out);
    CHECK(h["inequalities"].size() == 6);
    CHECK(h["inequalities"][1]["redundant"] == true);

    const auto f = json::parse(call({"facets", "--d", "3", "--e", "2", "--format", "json"}).out);
    CHECK(f["facets"].size() == 8);

    const auto faces = json::parse(call({"faces", "--d", "3", "--e", "2", "--format", "json"}).out);
    CHECK(faces["faces"].size() == 6 + 12 + 8);
    CHECK(faces["duplicates"] == 0);
}

TEST_CASE("verify and minimality") {
    const auto r = call({"verify", "--d", "3", "--e", "2", "--bases", "2,5/2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("RESULT: VERIFIED") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(call({"minimality", "--d", "2", "--e", "3"}).code == 0);
}

TEST_CASE("general and matrix") {
    const auto g = call({"general", "--n", "12", "--format", "json"});
    CHECK(g.code == 0);
    CHECK(json::parse(g.out)["vertices"].size() == 6);

    const auto path = temp_file("a2.json");
    {
        std::ofstream file(path);
        file << R"({"size": 2, "entries": [[2, -1], [-1, 2]]})";
    }
    const auto m = call({"matrix", "--file", path.string(), "--det", "1"});
    CHECK(m.code == 0);
    CHECK(m.out.find("certified vertices: 2/2") != std::string::npos);

    {
        std::ofstream file(path);
        file << R"({"size": 2, "entries": [[2, -1], [3, 2]]})";
    }
    CHECK(call({"matrix", "--file", path.string(), "--det", "1"}).code == primepoly::cli::kExitUsage);
    std::filesystem::remove(path);
    CHECK(call({"matrix", "--file", path.string(), "--det", "1"}).code == primepoly::cli::kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == primepoly::cli::kExitUsage);
    CHECK(call({"vertices", "--d", "3", "--e", "2", "--t", "1"}).code == primepoly::cli::kExitUsage);
    CHECK(call({"vertices", "--d", "3", "--e", "2", "--t", "3/0"}).code == primepoly::cli::kExitUsage);
    CHECK(call({"vertices", "--d", "1", "--e", "2"}).code == primepoly::cli::kExitUsage);
    CHECK(call({"vertices", "--d", "3"}).code == primepoly::cli::kExitUsage);
    CHECK(call({"fvector", "--d", "3", "--e", "2", "--format", "cdd"}).code == primepoly::cli::kExitUsage);
    CHECK(call({"fvector", "--d", "3", "--e", "2", "--method", "guess"}).code == primepoly::cli::kExitUsage);
    CHECK(call({"verify", "--d", "3", "--e", "2", "--bases", "2,1"}).code == primepoly::cli::kExitUsage);
    CHECK(call({"frobnicate"}).code == primepoly::cli::kExitUsage);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output is deterministic and --output writes the same bytes") {
    const std::vector<std::string> args{"faces", "--d", "4", "--e", "3", "--format", "json"};
    const auto first = call(args);
    CHECK(first.out == call(args).out);

    const auto path = temp_file("faces.json");
    auto with_file = args;
    with_file.insert(with_file.end(), {"--output", path.string()});
    const auto written = call(with_file);
    CHECK(written.code == 0);
    CHECK(written.out.empty());
    std::ifstream file(path, std::ios::binary);
    std::stringstream contents;
    contents << file.rdbuf();
    CHECK(contents.str() == first.out);
    std::filesystem::remove(path);
}
