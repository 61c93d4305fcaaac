#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless `merge_stderr`.
Run run(const std::string& args, bool merge_stderr = false, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(PGKAPPA_BIN) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("kappa subcommand") {
  const auto r150 = run("kappa 150");
  CHECK(r150.exit_code == 0);
  CHECK(r150.out ==
        "{\"n\":150,\"kappa\":52,\"method\":\"nr2-min-alpha-beta\",\"alpha\":60,\"beta\":52,"
        "\"gamma\":75}\n");

  const auto r7 = run("kappa 7");
  CHECK(r7.exit_code == 0);
  CHECK(r7.out == "{\"n\":7,\"kappa\":6,\"method\":\"complete-graph\"}\n");

  const auto r420 = run("kappa 420 --method closed", true);
  CHECK(r420.exit_code == 3);
  CHECK(r420.out.find("no closed form") != std::string::npos);
  CHECK(r420.out.find("r≥4, n_r=1, non-squarefree, 2φ(rad/p_r)<rad/p_r") != std::string::npos);

  const auto w = run("kappa 30 --witness --method quotient");
  CHECK(w.exit_code == 0);
  CHECK(w.out.find("\"witness\":[") != std::string::npos);
  CHECK(w.out.find("\"kappa\":12") != std::string::npos);

  CHECK(run("kappa 420 --method naive").out.find("\"method\":\"naive-oracle\"") !=
        std::string::npos);
}

TEST_CASE("kappa input errors exit 2") {
  CHECK(run("kappa 1").exit_code == 2);
  CHECK(run("kappa 0").exit_code == 2);
  CHECK(run("kappa abc").exit_code == 2);
  CHECK(run("kappa 12x").exit_code == 2);
  CHECK(run("kappa 30 --method fastest").exit_code == 2);
  CHECK(run("kappa").exit_code == 2);
  CHECK(run("frobnicate 3").exit_code == 2);
  CHECK(run("kappa 99999999999999999999").exit_code == 2);
}

TEST_CASE("explicit cap override from the environment") {
  CHECK(run("kappa 420 --method naive", false, "KAPPA_EXPLICIT_CAP=100").exit_code == 2);
  CHECK(run("kappa 60 --method naive", false, "KAPPA_EXPLICIT_CAP=100").exit_code == 0);
  CHECK(run("kappa 60", false, "KAPPA_EXPLICIT_CAP=zero").exit_code == 2);
}

TEST_CASE("bounds subcommand") {
  const auto b30 = run("bounds 30");
  CHECK(b30.exit_code == 0);
  CHECK(b30.out.find("\"alpha_j\":[15,14,12],\"beta_j\":[15,14,12]") != std::string::npos);
  CHECK(b30.out.find("\"gamma\":15") != std::string::npos);

  const auto b150 = run("bounds 150");
  CHECK(b150.exit_code == 0);
  CHECK(b150.out.find("\"alpha\":60,\"beta\":52") != std::string::npos);
  CHECK(b150.out.find("\"beta_below_gamma\":true") != std::string::npos);

  CHECK(run("bounds 4").exit_code == 2);
}

TEST_CASE("quotient subcommand") {
  const auto q = run("quotient 4");
  CHECK(q.exit_code == 0);
  CHECK(q.out ==
        "{\"n\":4,\"nodes\":[{\"d\":1,\"phi\":1,\"neighbors\":[2,4]},"
        "{\"d\":2,\"phi\":1,\"neighbors\":[1,4]},{\"d\":4,\"phi\":2,\"neighbors\":[1,2]}]}\n");
}

TEST_CASE("cutset subcommand") {
  const auto x = run("cutset 30 --which X:2,3");
  CHECK(x.exit_code == 0);
  CHECK(x.out ==
        "{\"n\":30,\"classes\":[1,6,10,30],\"size\":15,\"which\":\"X:2,3\",\"verdict\":\"cut\","
        "\"components\":[[2],[3,5,15]]}\n");

  const auto opt = run("cutset 30 --which optimal");
  CHECK(opt.exit_code == 0);
  CHECK(opt.out.find("\"classes\":[1,2,3,30],\"size\":12") != std::string::npos);

  const auto x12 = run("cutset 30 --which X:1,2");
  CHECK(x12.exit_code == 0);
  CHECK(x12.out.find("\"size\":21") != std::string::npos);
  CHECK(x12.out.find("\"verdict\":\"cut\"") != std::string::npos);

  const auto z = run("cutset 12 --which Z:1");
  CHECK(z.out.find("\"classes\":[1,6,12],\"size\":7") != std::string::npos);

  CHECK(run("cutset 12 --which X:1,2").exit_code == 2);
  CHECK(run("cutset 30 --which Y:4").exit_code == 2);
  CHECK(run("cutset 30 --which W:1").exit_code == 2);
  CHECK(run("cutset 8 --which optimal").exit_code == 2);
  CHECK(run("cutset 420 --which optimal").exit_code == 0);
}

TEST_CASE("sweep subcommand") {
  const auto full = run("sweep 2 200 --check-oracle-cap 200");
  CHECK(full.exit_code == 0);
  CHECK(count_lines(full.out) == 200);  // header + 199 rows
  CHECK(full.out.find("false") == std::string::npos);

  const auto one = run("sweep 10 10");
  CHECK(one.exit_code == 0);
  CHECK(one.out ==
        "n\tr\texps\talpha\tbeta\tgamma\tkappa\tmethod\tok_closed\tok_naive\n"
        "10\t2\t1,1\t5\t5\tNA\t5\ttwo-primes\ttrue\ttrue\n");

  CHECK(run("sweep 0 5").exit_code == 2);
  CHECK(run("sweep 5 4").exit_code == 2);
  CHECK(run("sweep 2 10 --format xml").exit_code == 2);

  const auto serial = run("sweep 2 300 --check-oracle-cap 80 --format jsonl --jobs 1");
  const auto parallel = run("sweep 2 300 --check-oracle-cap 80 --format jsonl --jobs 4");
  CHECK(serial.exit_code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(count_lines(serial.out) == 299);

  const auto summary = run("sweep 2 20", true);
  CHECK(summary.out.find("rows=19") != std::string::npos);
  CHECK(summary.out.find("disagreements=0") != std::string::npos);
}
