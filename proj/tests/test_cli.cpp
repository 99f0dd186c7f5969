#include "doctest.h"

#include <stdexcept>

#include <sstream>

#include "gl2/cli.hpp"
#include "gl2/exact.hpp"

using namespace gl2;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("index subcommand emits the exponent report") {
    auto r = cli({"index", "--ell", "13", "--rep", "natural", "--group", "GL2",
                  "--format", "json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["malle_ind"] == 78);
    CHECK(j["lower_exponent"]["num"] == 1);
    CHECK(j["lower_exponent"]["den"] == 288);
    CHECK(j["degree"] == 168);
    // canonical output round-trips byte for byte
    CHECK(dump_json(Json::parse(r.out)) == r.out);
}

TEST_CASE("index infers the group from the representation") {
    auto r = cli({"index", "--ell", "13", "--rep", "projective", "--format", "json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["group"] == "PGL2");
    CHECK(j["lower_exponent"]["den"] == 24);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli({"index", "--ell", "4", "--rep", "natural"}).code == 2);  // not prime
    CHECK(cli({"index"}).code == 2);                                    // missing --ell
    CHECK(cli({"index", "--ell", "13", "--bogus", "1"}).code == 2);     // unknown flag
    CHECK(cli({}).code == 2);                                           // no subcommand
    CHECK(cli({"index", "--ell", "13", "--rep", "natural", "--group", "PGL2"}).code == 2);
    CHECK(cli({"index", "--ell", "13", "--rep", "natural", "--format", "yaml"}).code == 2);
    // diagnostics go to the error stream
    auto r = cli({"index", "--ell", "4", "--rep", "natural"});
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
}

TEST_CASE("domain errors exit with 1") {
    CHECK(cli({"surjective", "--A", "0", "--B", "0", "--ell", "13"}).code == 1);  // singular
    CHECK(cli({"sieve", "--A", "0", "--b-max", "5"}).code == 1);
    CHECK(cli({"surjective", "--A", "1", "--B", "1", "--ell", "3"}).code == 1);
}

TEST_CASE("surjective controls") {
    auto pos = cli({"surjective", "--A", "1", "--B", "1", "--ell", "13",
                    "--budget", "1000"});
    REQUIRE(pos.code == 0);
    Json jp = Json::parse(pos.out);
    CHECK(jp["status"] == "certified");
    CHECK(jp["witnesses"]["W2"] == 5);
    CHECK(jp["witnesses"]["W3"] == 5);

    auto neg = cli({"surjective", "--A", "0", "--B", "1", "--ell", "13",
                    "--budget", "10000"});
    REQUIRE(neg.code == 0);
    Json jn = Json::parse(neg.out);
    CHECK(jn["status"] == "not_certified");
    CHECK(jn["missing"] == Json::array({"W2"}));
}

TEST_CASE("sieve emits CSV records and a JSON summary") {
    auto csv = cli({"sieve", "--A", "1", "--b-max", "4", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "B,delta_f,squarefree\n1,31,1\n2,112,0\n3,247,1\n4,436,0\n");

    auto js = cli({"sieve", "--A", "1", "--b-max", "4", "--format", "json"});
    REQUIRE(js.code == 0);
    Json j = Json::parse(js.out);
    CHECK(j["count"] == 4);
    CHECK(j["squarefree_count"] == 2);
    CHECK(dump_json(Json::parse(js.out)) == js.out);
}

TEST_CASE("frobenius lists classified samples") {
    auto r = cli({"frobenius", "--A", "1", "--B", "1", "--ell", "13", "--budget", "5",
                  "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "p,a_p,p_mod_ell,disc_class,u\n5,-3,5,nonsquare,7\n");
}

TEST_CASE("exponent reports all three representations") {
    auto r = cli({"exponent", "--ell", "13", "--format", "json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    CHECK(j[0]["kind"] == "natural");
    CHECK(j[1]["kind"] == "projective");
    CHECK(j[2]["kind"] == "regular");
    CHECK(j[2]["lower_exponent"]["den"] == 48384);
}

TEST_CASE("family subcommand produces a full report") {
    auto r = cli({"family", "--ell", "13", "--A", "1", "--rep", "projective",
                  "--b-max", "4", "--x-grid", "31^12,247^12", "--threads", "1"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["config"]["b_max"] == 4);
    CHECK(j["counts"][0]["count"] == 1);
    CHECK(j["counts"][1]["count"] == 2);
    CHECK(j["distinctness"]["pass"] == true);
    CHECK(dump_json(Json::parse(r.out)) == r.out);
}

TEST_CASE("selfcheck passes") {
    auto r = cli({"selfcheck"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selfcheck passed") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
}
