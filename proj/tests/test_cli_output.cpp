#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "atlas/field.hpp"
#include "atlas/svgfig.hpp"

using nlohmann::json;

namespace {

int run_atlas(const std::string& args, const std::string& out_path) {
    std::string cmd = std::string(ATLAS_BIN) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return (status >> 8) & 0xff;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST_CASE("roots --json matches the documented schema") {
    REQUIRE(run_atlas("roots e6 --json", "roots_e6.json") == 0);
    json doc = json::parse(slurp("roots_e6.json"));
    CHECK(doc["name"] == "e6");
    CHECK(doc["rank"] == 6);
    REQUIRE(doc["roots"].is_array());
    CHECK(doc["roots"].size() == 72);
    for (const auto& root : doc["roots"]) {
        REQUIRE(root.is_array());
        REQUIRE(root.size() == 8);
        for (const auto& coord : root) {
            // every coordinate parses back in the exact scalar format
            atlas::FieldScalar::parse(coord.get<std::string>());
        }
    }
}

TEST_CASE("decompose --json adds a tag per root") {
    REQUIRE(run_atlas("decompose f4 --json", "dec_f4.json") == 0);
    json doc = json::parse(slurp("dec_f4.json"));
    CHECK(doc["name"] == "f4");
    REQUIRE(doc["roots"].size() == 48);
    std::map<std::string, int> tags;
    for (const auto& entry : doc["roots"]) {
        REQUIRE(entry.contains("coords"));
        REQUIRE(entry.contains("tag"));
        tags[entry["tag"].get<std::string>()]++;
    }
    CHECK(tags["outer_a2"] == 6);
    CHECK(tags["g0"] == 6);
    CHECK(tags["J(1)"] == 6);
    CHECK(tags["Jbar(3)"] == 6);
}

TEST_CASE("tits --json dumps sparse structure constants") {
    REQUIRE(run_atlas("tits 2 1 --json", "tits21.json") == 0);
    json doc = json::parse(slurp("tits21.json"));
    REQUIRE(doc.is_array());
    CHECK(doc.size() > 10);
    for (const auto& item : doc) {
        CHECK(item.contains("i"));
        CHECK(item.contains("j"));
        CHECK(item.contains("k"));
        CHECK(item["i"].get<int>() < item["j"].get<int>());
        atlas::FieldScalar::parse(item["c"].get<std::string>());
    }
}

TEST_CASE("figures are deterministic and carry the fiber multiplicities") {
    std::string first = atlas::render_figure("e8");
    std::string second = atlas::render_figure("e8");
    CHECK(first == second);

    // 13 distinct projection points: 6 hexagon, 6 Jordan, 1 center
    CHECK(count_occurrences(first, "<circle") == 13);
    CHECK(count_occurrences(first, ">27<") == 6);
    CHECK(count_occurrences(first, ">72+8<") == 1);

    std::string g2 = atlas::render_figure("g2");
    CHECK(count_occurrences(g2, "<circle") == 12);
    CHECK(count_occurrences(g2, "class=\"mult\"") == 0);  // all multiplicity one

    std::string f4 = atlas::render_figure("f4");
    CHECK(count_occurrences(f4, ">6<") == 6);
    CHECK(count_occurrences(f4, ">6+4<") == 1);

    std::string c3 = atlas::render_figure("c3");
    CHECK(count_occurrences(c3, "<circle") == 18);  // three panels of six roots

    CHECK_THROWS_AS(atlas::render_figure("a5"), std::invalid_argument);
}

TEST_CASE("figure files are written through the CLI") {
    REQUIRE(run_atlas("figure e7 --svg fig_e7.svg", "fig_out.txt") == 0);
    std::string svg = slurp("fig_e7.svg");
    CHECK(count_occurrences(svg, "<circle") == 13);
    CHECK(count_occurrences(svg, ">15<") == 6);
}

TEST_CASE("exit codes: pass, claim failure, usage error") {
    CHECK(run_atlas("roots g2 --count", "count.txt") == 0);
    CHECK(slurp("count.txt") == "12\n");
    // injected perturbation makes run-all exit nonzero
    CHECK(run_atlas("run-all C02 --perturb root", "perturbed.txt") == 1);
    CHECK(run_atlas("run-all C15", "c15.txt") == 0);
    // usage errors
    CHECK(run_atlas("roots q9", "usage1.txt") == 2);
    CHECK(run_atlas("frobnicate", "usage2.txt") == 2);
    CHECK(run_atlas("run-all NOPE", "usage3.txt") == 2);
}

TEST_CASE("filtered claims run alone") {
    REQUIRE(run_atlas("run-all C01 --json", "c01.json") == 0);
    json doc = json::parse(slurp("c01.json"));
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["id"] == "C01-ROOT-COUNTS");
    CHECK(doc[0]["pass"] == true);
}
