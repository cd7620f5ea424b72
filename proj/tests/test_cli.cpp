#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffp/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = ffp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("nq sweep: csv header, the 169 row, and success exit") {
    Run r = run_cli({"nq", "--max", "300", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("q,p,r,case,s,closed_form,brute_force,match\n", 0) == 0);
    CHECK(r.out.find("169,13,2,4,5,22,22,true") != std::string::npos);
    CHECK(r.out.find("11,11,1,2,,1,1,true") != std::string::npos);  // empty s column
    CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("nq output is byte-identical across job counts") {
    Run serial = run_cli({"nq", "--max", "500", "--jobs", "1"});
    Run parallel = run_cli({"nq", "--max", "500", "--jobs", "8"});
    CHECK(serial.code == 0);
    CHECK(parallel.code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("nq json rows carry the formula variant tag") {
    Run r = run_cli({"nq", "--max", "50", "--format", "json"});
    CHECK(r.code == 0);
    json arr = json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(!arr.empty());
    for (const auto& row : arr) {
        CHECK(row.at("match").get<bool>());
        CHECK(row.at("formula_variant") == "case5-factor2");
    }
    CHECK(arr[0].at("q") == 3);
}

TEST_CASE("classify sweep is internally consistent") {
    Run r = run_cli({"classify", "--max", "60"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("q,n,mode,covers,witness,expected\n", 0) == 0);
    // the four small coverage exceptions appear as covering rows
    CHECK(r.out.find("7,4,npotent,true") != std::string::npos);
    CHECK(r.out.find("9,5,npotent,true") != std::string::npos);
    // all-potents coverage holds exactly on the exceptional set
    CHECK(r.out.find("13,,potent,true,,true") != std::string::npos);
    CHECK(r.out.find("29,,potent,true,,true") != std::string::npos);
    CHECK(r.out.find("11,,potent,false,7,false") != std::string::npos);
}

TEST_CASE("decompose emits a verified json certificate") {
    Run r = run_cli({"decompose", "--field", "5", "--n", "2",
                     "--matrix", "3,4,1,0"});
    CHECK(r.code == 0);
    json cert = json::parse(r.out);
    CHECK(cert.at("verified").get<bool>());
    CHECK(cert.at("unit").get<bool>());
    CHECK(cert.at("exponent") == 5);
    CHECK(cert.at("field") == "5");
    CHECK(cert.at("E").size() == 2);

    Run inv = run_cli({"decompose", "--field", "7", "--n", "2",
                       "--matrix", "1,2,3,4", "--involution"});
    CHECK(inv.code == 0);
    json icert = json::parse(inv.out);
    CHECK(icert.at("verified").get<bool>());
    CHECK(icert.at("mode") == "involution+qpotent");
}

TEST_CASE("counterexample replay reports exhausted spaces") {
    Run r = run_cli({"counterexample", "--which", "f3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("exhausted-none over 472 candidates (236 idempotents x 2 signs)") !=
          std::string::npos);
    CHECK(r.out.find("minimal polynomial x^3 + 2x + 1") != std::string::npos);

    Run both = run_cli({"counterexample", "--which", "both", "--format", "json"});
    CHECK(both.code == 0);
    json arr = json::parse(both.out);
    REQUIRE(arr.size() == 2);
    CHECK(arr[0].at("outcome") == "exhausted-none");
    CHECK(arr[0].at("search_space_size") == 472);
    CHECK(arr[1].at("outcome") == "exhausted-none");
    CHECK(arr[1].at("search_space_size") == 3104);
}

TEST_CASE("zp2 coverage table and worked certificate") {
    Run table = run_cli({"zp2", "--p", "3"});
    CHECK(table.code == 0);
    CHECK(table.out.find("3,7,true,true") != std::string::npos);
    CHECK(table.out.find("3,5,false,false") != std::string::npos);

    Run cert = run_cli({"zp2", "--p", "3", "--q", "7", "--matrix", "0,2,1,5"});
    CHECK(cert.code == 0);
    json c = json::parse(cert.out);
    CHECK(c.at("verified").get<bool>());
    CHECK(c.at("ring") == "Z/9");
    CHECK(c.at("E") == json::parse("[[0,0],[1,1]]"));
    CHECK(c.at("U") == json::parse("[[0,2],[0,4]]"));
}

TEST_CASE("torsion subcommand reports the minimal exponents") {
    Run r = run_cli({"torsion", "--field", "7", "--format", "json"});
    CHECK(r.code == 0);
    json row = json::parse(r.out);
    CHECK(row.at("minimal_weakly_torsion_clean") == 6);
    CHECK(row.at("minimal_torsion_clean") == 6);

    Run w = run_cli({"torsion", "--field", "7", "--n", "3", "--format", "json"});
    CHECK(w.code == 0);
    json wrow = json::parse(w.out);
    CHECK_FALSE(wrow.at("weakly_covered").get<bool>());
    CHECK(wrow.at("weakly_witness") == 6);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"decompose", "--field", "5"}).code == 2);  // missing required
    CHECK(run_cli({"nq", "--format", "xml"}).code == 2);
    Run bad = run_cli({"decompose", "--field", "5", "--n", "2", "--matrix", "1,2,3"});
    CHECK(bad.code == 2);  // wrong entry count
}

TEST_CASE("domain errors exit with code 1") {
    // F3 is below the decomposition threshold
    Run r = run_cli({"decompose", "--field", "3", "--n", "2", "--matrix", "0,1,1,0"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") != std::string::npos);
    // hypothesis violation: 3*2 does not divide 5-1
    Run z = run_cli({"zp2", "--p", "3", "--q", "5", "--matrix", "0,2,1,5"});
    CHECK(z.code == 1);
}

TEST_CASE("help is printed on request with a zero exit") {
    Run r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("nq") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}
