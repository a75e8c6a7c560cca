#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qcm/cli.hpp"

using namespace qcm;
using Json = nlohmann::json;

namespace {

const std::string kData = QCM_DATA_DIR;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify subcommand") {
  auto r = run({"classify", kData + "/a2.quiver"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dynkin: A2") != std::string::npos);
  CHECK(r.out.find("equioriented_a: yes") != std::string::npos);

  auto j = run({"classify", kData + "/twoloop.quiver", "--format", "json"});
  CHECK(j.code == 0);
  auto parsed = Json::parse(j.out);
  CHECK(parsed["acyclic"] == false);
  CHECK(parsed["dynkin"] == "none");
}

TEST_CASE("roots subcommand counts") {
  for (auto [file, count] : std::vector<std::pair<std::string, int>>{
           {"a2.quiver", 3}, {"a3.quiver", 6}, {"d4.quiver", 12}, {"e6.quiver", 36},
           {"e7.quiver", 63}, {"e8.quiver", 120}}) {
    auto r = run({"roots", kData + "/" + file, "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["count"] == count);
  }
}

TEST_CASE("verify-cm on the rank-1 a2 point emits the expected json") {
  auto r = run({"verify-cm", kData + "/a2.quiver", kData + "/a2_rank1.rep", "--format", "json"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["cm"] == true);
  CHECK(j["pd"] == 1);
  CHECK(j["pd_formula"] == 1);
  CHECK(j["dim"] == 3);
  CHECK(j["cm_iff_pd_formula"] == true);
}

TEST_CASE("degen-poset dot output for a2 d=(1,1)") {
  auto r = run({"degen-poset", kData + "/a2.quiver", "--dim", "1,1", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '>') == 1);
  // determinism: byte-identical reruns
  auto again = run({"degen-poset", kData + "/a2.quiver", "--dim", "1,1", "--format", "dot"});
  CHECK(again.out == r.out);
}

TEST_CASE("homogeneous subcommand on the two-loop point") {
  auto r = run({"homogeneous", kData + "/twoloop_nilpotent.rep", "--lambda", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("not homogeneous; witness lambda=2") != std::string::npos);
  CHECK(r.out.find("isomorphic to 2*m: no") != std::string::npos);
}

TEST_CASE("pd-formula carries the non-tree caveat on the kronecker point") {
  auto r = run({"pd-formula", kData + "/kronecker_d33.rep", "--format", "json"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["l"] == 18);
  CHECK(j["end_dim"] == 4);
  CHECK(j["pd_formula"] == 4);
  CHECK(j["tree"] == false);
  CHECK(j.contains("note"));
}

TEST_CASE("decompose and enumerate subcommands") {
  auto r = run({"decompose", kData + "/a2.quiver", kData + "/a2_rank1.rep"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1,1)") != std::string::npos);

  auto e = run({"enumerate", kData + "/a2.quiver", "--dim", "2,2", "--format", "json"});
  CHECK(e.code == 0);
  CHECK(Json::parse(e.out)["count"] == 3);
}

TEST_CASE("ideal and resolve subcommands") {
  auto r = run({"ideal", kData + "/a2.quiver", kData + "/a2_rank1.rep"});
  CHECK(r.code == 0);
  CHECK(r.out.find("x_a_1_1*x_a_2_2") != std::string::npos);

  auto res = run({"resolve", kData + "/a3.quiver", kData + "/a3_zero.rep", "--format", "json"});
  CHECK(res.code == 0);
  auto j = Json::parse(res.out);
  CHECK(j["pd"] == 2);
}

TEST_CASE("hom, end, ext and orbit-dim subcommands") {
  auto h = run({"hom", kData + "/a2.quiver", kData + "/a2_rank1.rep", kData + "/a2_rank1.rep"});
  CHECK(h.code == 0);
  CHECK(h.out.find("hom_dim: 5") != std::string::npos);

  auto e = run({"end", kData + "/a2.quiver", kData + "/a2_rank1.rep"});
  CHECK(e.out.find("end_dim: 5") != std::string::npos);

  auto x = run({"ext", kData + "/a2.quiver", kData + "/a2_rank1.rep"});
  CHECK(x.out.find("ext1_dim: 1") != std::string::npos);

  auto o = run({"orbit-dim", kData + "/a2.quiver", kData + "/a2_rank1.rep"});
  CHECK(o.out.find("orbit_dim: 3") != std::string::npos);
}

TEST_CASE("exit codes: input errors give 1, guardrails give 2") {
  auto missing = run({"classify", kData + "/no_such_file.quiver"});
  CHECK(missing.code == 1);
  CHECK(missing.err.substr(0, 6) == "error:");

  auto badsub = run({"frobnicate"});
  CHECK(badsub.code == 1);

  // l = 18 > 12 triggers the guardrail
  auto guard = run({"verify-cm", kData + "/kronecker.quiver", kData + "/kronecker_d33.rep"});
  CHECK(guard.code == 2);
  CHECK(guard.err.find("error:") != std::string::npos);

  // non-equioriented ideal requests are input errors
  auto nonequi = run({"ideal", kData + "/d4.quiver", kData + "/d4_zero.rep"});
  CHECK(nonequi.code == 1);
}

TEST_CASE("json outputs are byte-identical across runs") {
  auto a = run({"survey", kData + "/a2.quiver", "--dim", "2,2", "--format", "json"});
  auto b = run({"survey", kData + "/a2.quiver", "--dim", "2,2", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("--output writes the report to a file") {
  const std::string path = "/tmp/qcm_cli_test_out.json";
  std::remove(path.c_str());
  auto r = run({"classify", kData + "/a2.quiver", "--format", "json", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(Json::parse(ss.str())["tree"] == true);
  std::remove(path.c_str());
}

TEST_CASE("--field converts integer entries and rejects fractions") {
  auto ok = run({"end", kData + "/a2.quiver", kData + "/a2_rank1.rep", "--field", "f5"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("end_dim: 5") != std::string::npos);
  auto bad = run({"end", kData + "/a2.quiver", kData + "/a2_frac.rep", "--field", "f5"});
  CHECK(bad.code == 1);
}
