#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "colnum/cli.hpp"
#include "colnum/io.hpp"
#include "doctest.h"

using namespace colnum;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("colnum-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("examples") {
  Run z = invoke({"zm", "--m", "5", "--mode", "exact"});
  CHECK(z.code == 0);
  CHECK(z.out.rfind("119/120\n", 0) == 0);

  Run t = invoke({"threshold", "--delta", "100000000"});
  CHECK(t.code == 0);
  CHECK(t.out == "true\n");
  Run f = invoke({"threshold", "--delta", "10000"});
  CHECK(f.code == 1);
  CHECK(f.out == "false\n");

  Run c = invoke({"claims", "--which", "type3", "--d", "3"});
  CHECK(c.code == 0);
  CHECK(io::json::parse(c.out).at("solutions_found") == 0);
  Run r = invoke({"claims", "--which", "type3", "--d", "4", "--relax", "delta2"});
  CHECK(r.code == 0);
  CHECK(io::json::parse(r.out).at("solutions_found").get<int>() > 0);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"nope"}).code == 2);
  CHECK(invoke({"zm"}).code == 2);
  CHECK(invoke({"claims", "--which", "type3", "--d", "5"}).code == 2);
  CHECK(invoke({"family", "--kind", "F2", "--delta", "6"}).code == 2);
  CHECK(invoke({"oracle", "--delta", "40"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("files, reduction exit codes and manifests") {
  TempDir dir;
  std::string cols = dir / "cols.json", mab = dir / "mab.json", man = dir / "man.json";
  REQUIRE(invoke({"family", "--kind", "F3", "--delta", "14", "--emit", "columns", "--out", cols}).code == 0);
  ColumnSet A = io::column_set_from_json(io::json::parse(slurp(cols)));
  CHECK(A.size() == 18);

  Run ok = invoke({"--manifest", man, "reduce", "--input", cols, "--delta", "14", "--output", mab});
  CHECK(ok.code == 0);
  TypedMatrix M = io::typed_matrix_from_json(io::json::parse(slurp(mab)));
  CHECK(column_count(M) >= 18);
  io::json manifest = io::json::parse(slurp(man));
  CHECK(manifest.at("command") == "reduce");
  CHECK(manifest.at("artifacts").size() == 1);
  CHECK(manifest.at("artifacts")[0].at("sha256") == cli::sha256_file(mab));

  // Delta below the largest minor is a precondition violation.
  CHECK(invoke({"reduce", "--input", cols, "--delta", "10"}).code == 1);

  // Identical arguments give identical files.
  std::string s1 = dir / "s1.csv", s2 = dir / "s2.csv";
  REQUIRE(invoke({"sweep", "--from", "4", "--to", "60", "--out", s1}).code == 0);
  REQUIRE(invoke({"--jobs", "2", "sweep", "--from", "4", "--to", "60", "--out", s2}).code == 0);
  std::string first = slurp(s1);
  CHECK(first.rfind("m,bound_num,bound_den,solved,eps_num,eps_den,wall_ms\n4,35,36,1,,,0\n", 0) == 0);
  REQUIRE(invoke({"sweep", "--from", "4", "--to", "60", "--out", s2}).code == 0);
  CHECK(cli::sha256_file(s1) == cli::sha256_file(s2));

  Run low = invoke({"sweep", "--from", "5", "--to", "6", "--w", "99/100"});
  CHECK(low.code == 1);

  std::string win = dir / "window.csv";
  CHECK(invoke({"numtheory", "check-lemma21", "--eps", "0.001", "--from", "1880", "--to", "1900", "--out", win}).code == 0);
  std::string csv = slurp(win);
  CHECK(csv.rfind("x,lhs1,rhs1,lhs2,rhs2,pass\n1880,", 0) == 0);
  CHECK(invoke({"numtheory", "check-lemma21", "--eps", "0.001", "--from", "100", "--to", "110"}).code == 1);
}

TEST_CASE("certificate round trip") {
  TempDir dir;
  std::string cert = dir / "cert.json";
  REQUIRE(invoke({"zm", "--m", "6", "--emit", cert}).code == 0);
  lp::DualCertificate c = io::certificate_from_json(io::json::parse(slurp(cert)));
  CHECK(c.objective == make_rational(29, 30));
  CHECK(lp::check_dual_feasible(c));

  std::string ac = dir / "analytic.json";
  Run a = invoke({"analytic", "--m", "400", "--c", "6", "--emit", ac});
  CHECK(a.out.rfind("feasible\n", 0) == 0);
  lp::DualCertificate r = io::certificate_from_json(io::json::parse(slurp(ac)));
  CHECK(r.rectangles.size() == 3);
  CHECK(lp::check_dual_feasible(r));
  CHECK(invoke({"analytic", "--m", "400", "--c", "1"}).code == 1);
}

TEST_CASE("json helpers") {
  TypedMatrix M({0, 5}, {8, 11});
  CHECK(io::typed_matrix_from_json(io::to_json(M)) == M);
  CHECK_THROWS(io::typed_matrix_from_json(io::json{{"m", 3}, {"a", {0}}, {"b", {1}}}));
  ColumnSet A({{1, 0}, {0, 1}, {1, 1}});
  CHECK(io::column_set_from_json(io::to_json(A)) == A);
  CHECK(io::rational_from_json(io::to_json(make_rational(-7, 3))) == make_rational(-7, 3));
}
