#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gpsc/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int const code = gpsc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(char const* name) { return std::string(GPSC_FIXTURE_DIR) + "/" + name; }

}  // namespace

using namespace gpsc::cli;

TEST_CASE("classify exit codes follow the semicomplete verdict") {
  auto const frucht = run({"classify", fixture("frucht_z2.json")});
  CHECK(frucht.code == kYes);
  CHECK(frucht.out.rfind("semicomplete: Yes\ncomplete: Yes\n", 0) == 0);
  CHECK(run({"classify", fixture("figure3.json")}).code == kNo);

  auto const path = (std::filesystem::temp_directory_path() / "gpsc_cli_undetermined.json").string();
  std::ofstream(path) << R"j({"vertices": [{"id": "h", "group": {"non_abelian": "H"}}]})j";
  CHECK(run({"classify", path}).code == kUndetermined);

  auto const json = run({"classify", "--json", fixture("figure2.json")});
  CHECK(json.code == kYes);
  CHECK(json.out.find("\"semicomplete\": \"Yes\"") != std::string::npos);
}

TEST_CASE("input errors exit with 3") {
  auto const path = (std::filesystem::temp_directory_path() / "gpsc_cli_bad.json").string();
  std::ofstream(path) << R"j({"vertices": [{"id": "a", "group": {"torsion": [1]}}]})j";
  auto const bad = run({"classify", path});
  CHECK(bad.code == kInputError);
  CHECK(bad.err.find("vertices[0].group") != std::string::npos);
  CHECK(run({"classify", fixture("missing.json")}).code == kInputError);
  CHECK(run({}).code == kInputError);
  CHECK(run({"frobnicate"}).code == kInputError);
  CHECK(run({"check", "planarity", fixture("c5_z2.json")}).code == kInputError);
  CHECK(run({"census", "9"}).code == kInputError);
  CHECK(run({"nf", fixture("c5_z2.json"), "q"}).code == kInputError);
  CHECK(run({"aut", fixture("c5_z2.json"), "twist", "v0"}).code == kInputError);
  CHECK(run({"aut", fixture("c5_z2.json"), "factor", "v0"}).code == kInputError);
  CHECK(run({"aut", fixture("c5_z2.json"), "factor", "v0", "x"}).code == kInputError);
}

TEST_CASE("graph predicates") {
  auto const sep = run({"check", "sep-star", fixture("gamma2_z2.json")});
  CHECK(sep.code == kYes);
  CHECK(sep.out == "separating star: true\nwitness: v\n");
  auto const sil = run({"check", "sil", fixture("gamma1_z2.json")});
  CHECK(sil.out == "sil: true\nwitness: (x,y | z)\n");
  CHECK(run({"check", "sil", fixture("gamma2_z2.json")}).code == kNo);
  CHECK(run({"check", "star-containment", fixture("c5_z2.json")}).code == kNo);
  CHECK(run({"check", "link-condition", fixture("c5_z2.json")}).code == kYes);
}

TEST_CASE("expand, autgroup and census") {
  auto const ex = run({"expand", fixture("figure8.json")});
  CHECK(ex.code == kYes);
  CHECK(ex.out.find("\"c.2\"") != std::string::npos);
  auto const ag = run({"autgroup", fixture("c5_z2.json")});
  CHECK(ag.out.rfind("automorphisms: 10\n", 0) == 0);
  auto const c = run({"census", "6", "--threads", "1"});
  CHECK(c.out.find("asymmetric_classes: 8\n") != std::string::npos);
  CHECK(c.out.find("asymmetric_with_separating_star: 8\n") != std::string::npos);
}

TEST_CASE("words") {
  CHECK(run({"nf", fixture("gamma1_z2.json"), "y c x"}).out == "c y x\n");
  CHECK(run({"nf", fixture("gamma1_z2.json"), "x x"}).out == "1\n");
  CHECK(run({"eq", fixture("gamma1_z2.json"), "x c", "c x"}).code == kYes);
  CHECK(run({"eq", fixture("gamma1_z2.json"), "x y", "y x"}).code == kNo);
}

TEST_CASE("automorphism constructors from the command line") {
  auto const pc = run({"aut", fixture("c5_z2.json"), "partial-conjugation", "v0", "1", "v2,v3", "--check-ia",
                       "--find-conjugator", "3"});
  CHECK(pc.code == kYes);
  CHECK(pc.out.find("conjugator: found v0\n") != std::string::npos);

  auto const none = run({"aut", fixture("gamma1_z2.json"), "partial-conjugation", "x", "1", "y", "--find-conjugator",
                         "8"});
  CHECK(none.code == kUndetermined);
  CHECK(none.out.find("conjugator: none up to radius 8\n") != std::string::npos);

  auto const neg = run({"aut", fixture("gamma1_mixed.json"), "factor", "x", "-1", "--check-ia"});
  CHECK(neg.code == kNo);
  CHECK(neg.out.find("x -> x^-1\n") != std::string::npos);
  CHECK(neg.out.find("ia: false (witness x)\n") != std::string::npos);

  auto const negpc = run({"aut", fixture("gamma1_mixed.json"), "partial-conjugation", "x", "-1", "y"});
  CHECK(negpc.code == kYes);
  CHECK(negpc.out.find("y -> x^-1 y x\n") != std::string::npos);

  CHECK(run({"aut", fixture("gamma1_z2.json"), "dominated-transvection", "x", "c", "--check-ia"}).code == kNo);
  CHECK(run({"aut", fixture("gamma1_mixed.json"), "commutator-transvection", "x", "y", "z", "--check-ia"}).code ==
        kYes);
  CHECK(run({"aut", fixture("c5_z2.json"), "graph", "v1:v4,v4:v1,v2:v3,v3:v2"}).code == kYes);
  CHECK(run({"aut", fixture("c5_z2.json"), "graph", "v1:v2,v2:v1"}).code == kInputError);
  CHECK(run({"aut", fixture("c5_z2.json"), "inner", "v0 v1", "--check-ia"}).code == kYes);
}

TEST_CASE("exit codes match the reported verdict on every fixture") {
  for (auto const& entry : std::filesystem::directory_iterator(GPSC_FIXTURE_DIR)) {
    auto const first = run({"classify", entry.path().string()});
    auto const again = run({"classify", entry.path().string()});
    CAPTURE(entry.path().string());
    CHECK(first.out == again.out);
    auto const line = first.out.substr(0, first.out.find('\n'));
    int const expected = line == "semicomplete: Yes" ? kYes : line == "semicomplete: No" ? kNo : kUndetermined;
    CHECK(first.code == expected);
    CHECK(run({"expand", entry.path().string()}).code == (first.out.find("expansion: none") == std::string::npos
                                                              ? kYes
                                                              : kInputError));
  }
}

TEST_CASE("census output does not depend on the thread count") {
  CHECK(run({"census", "5", "--threads", "1", "--json"}).out == run({"census", "5", "--threads", "3", "--json"}).out);
}
