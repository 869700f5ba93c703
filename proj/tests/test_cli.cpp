// Drives the installed binary end to end through a shell pipe; expectations
// are frozen values already certified by the unit suites, so anything that
// fails here is plumbing: argument handling, serialization, exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace {

using nlohmann::json;

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + std::string(HAMSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<json> parse_lines(const std::string& out) {
  std::vector<json> recs;
  size_t start = 0;
  while (start < out.size()) {
    size_t end = out.find('\n', start);
    if (end == std::string::npos) end = out.size();
    if (end > start) recs.push_back(json::parse(out.substr(start, end - start)));
    start = end + 1;
  }
  return recs;
}

}  // namespace

TEST_CASE("hamming-min reports the frozen minimum") {
  auto r = run_cli("hamming-min --n 6 --j 2");
  REQUIRE(r.code == 0);
  auto recs = parse_lines(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["lambda_min"] == "-3");
  CHECK(recs[0]["argmin_w"] == 3);
  CHECK(recs[0]["n"] == 6);
  CHECK(recs[0]["j"] == 2);
}

TEST_CASE("krawtchouk point and column modes") {
  auto point = run_cli("krawtchouk --n 8 --j 4 --x 2");
  REQUIRE(point.code == 0);
  auto recs = parse_lines(point.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["value"] == "-10");
  CHECK(recs[0]["w"] == 2);

  auto column = run_cli("krawtchouk --n 6 --j 2");
  REQUIRE(column.code == 0);
  auto rows = parse_lines(column.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0]["value"] == "15");
  CHECK(rows[3]["value"] == "-3");
  for (size_t w = 0; w < rows.size(); ++w) CHECK(rows[w]["w"] == static_cast<int>(w));
}

TEST_CASE("qpoly emits identical coefficients on both routes") {
  const std::vector<std::string> expected = {"15", "0", "-8/3", "0", "1/24"};
  for (const char* extra : {"", " --closed-form"}) {
    auto r = run_cli("qpoly --n 12 --j 4" + std::string(extra));
    REQUIRE(r.code == 0);
    auto recs = parse_lines(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["coefficients"] == json(expected));
  }
}

TEST_CASE("chiq report for the tight quaternary graph") {
  auto r = run_cli("chiq --family z4 --r 4 --s 2");
  REQUIRE(r.code == 0);
  auto recs = parse_lines(r.out);
  REQUIRE(recs.size() == 1);
  const auto& rep = recs[0];
  CHECK(rep["spectral_lower_bound"] == "12");
  CHECK(rep["lambda_min"] == "-18900");
  CHECK(rep["lambda_max"] == "207900");
  REQUIRE(rep["upper_bounds"].size() == 1);
  CHECK(rep["upper_bounds"][0]["value"] == 12.0);
  bool meet = false;
  for (const auto& note : rep["notes"])
    if (note == "lower and upper bounds meet") meet = true;
  CHECK(meet);
}

TEST_CASE("table-compare matches every pinned row") {
  auto r = run_cli("table-compare");
  REQUIRE(r.code == 0);
  auto rows = parse_lines(r.out);
  REQUIRE(rows.size() == 17);
  CHECK(rows[0]["alpha"] == 0.01);
  CHECK(rows[0]["l"] == 1.062);
  CHECK(rows[0]["u"] == 1.961);
  CHECK(rows[16]["l"] == 1.353);
  CHECK(rows[16]["u"] == 1.456);
  for (const auto& row : rows) CHECK(row["match"] == true);
}

TEST_CASE("z4-min output is independent of the thread count") {
  auto base = run_cli("z4-min --r 2 --s 1");
  REQUIRE(base.code == 0);
  auto again = run_cli("z4-min --r 2 --s 1");
  CHECK(base.out == again.out);
  auto threaded = run_cli("z4-min --r 2 --s 1", "HAMMING_SPECTRA_THREADS=3 ");
  REQUIRE(threaded.code == 0);
  CHECK(base.out == threaded.out);
  auto recs = parse_lines(base.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["lambda_min"] == "-36");
  CHECK(recs[0]["matches_formula"] == true);
}

TEST_CASE("csv mode carries a header and plain rows") {
  auto r = run_cli("krawtchouk --n 6 --j 2 --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n,j,w,value\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);

  auto tc = run_cli("table-compare --format csv");
  REQUIRE(tc.code == 0);
  CHECK(tc.out.rfind("alpha,l,l_ref,u,u_ref,match\n", 0) == 0);
  CHECK(std::count(tc.out.begin(), tc.out.end(), '\n') == 18);
}

TEST_CASE("verify quick level passes through the binary") {
  auto r = run_cli("verify --level quick");
  REQUIRE(r.code == 0);
  auto recs = parse_lines(r.out);
  REQUIRE(recs.size() == 7);
  for (const auto& rec : recs) CHECK(rec["passed"] == true);
}

TEST_CASE("usage and domain errors exit with 2") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("krawtchouk --n 8 --j 20").code == 2);
  CHECK(run_cli("hamming-min --n 6 --j 2 --format csv").code == 2);
  CHECK(run_cli("z4-spectrum --r 1 --s 1 --type 1,1,1").code == 2);
  CHECK(run_cli("verify --oracle-cap 2").code == 2);
  CHECK(run_cli("chiq --family z4").code == 2);
}
