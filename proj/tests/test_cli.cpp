#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "crflag/error.hpp"
#include "crflag/report.hpp"

using namespace crflag;

namespace {

const std::string kCli = CRFLAG_CLI_PATH;
const std::string kData = CRFLAG_TEST_DATA;

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = "'" + kCli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const std::string& f) { return "'" + kData + "/" + f + "'"; }

nlohmann::json doc(const std::string& text) { return nlohmann::json::parse(text); }

ErrorKind kind_of(const nlohmann::json& j) {
  try {
    parse_document(j);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document was accepted");
  return ErrorKind::Consistency;
}

} // namespace

TEST_CASE("document parsing errors are input errors") {
  auto base = R"({"dynkin": "A2", "real_form": "su21", "phi": [1]})";
  CHECK_NOTHROW(parse_document(doc(base)));
  CHECK(kind_of(doc(R"({"dynkin": "A2", "real_form": "su21", "phi": [1], "extra": 1})")) ==
        ErrorKind::Input);
  CHECK(kind_of(doc(R"({"schema_version": 2, "dynkin": "A2", "real_form": "su21", "phi": [1]})")) ==
        ErrorKind::Input);
  CHECK(kind_of(doc(R"({"dynkin": "A3", "real_form": "su21", "phi": [1]})")) == ErrorKind::Input);
  CHECK(kind_of(doc(R"({"dynkin": "B2", "real_form": "so32", "flag": [1]})")) == ErrorKind::Input);
  CHECK(kind_of(doc(R"({"dynkin": "A2", "real_form": "su21", "phi": [3]})")) == ErrorKind::Input);
  CHECK(kind_of(doc(R"({"dynkin": "A2", "real_form": "sl3R", "phi": [1], "cayley": [[1, 0], [0, 1]]})")) ==
        ErrorKind::Input);
  CHECK(kind_of(doc(R"({"dynkin": "A2", "real_form": "sl3R", "phi": [1], "cayley": ["e1 - e9"]})")) ==
        ErrorKind::Input);
  CHECK(kind_of(doc(R"({"dynkin": "A2", "real_form": "nope", "phi": [1]})")) ==
        ErrorKind::CatalogGap);
  CHECK(kind_of(doc(R"({"dynkin": "A2", "real_form": "su21"})")) == ErrorKind::Input);
}

TEST_CASE("flag notation and explicit phi agree in type A") {
  auto a = parse_document(doc(R"({"dynkin": "A6", "real_form": "sl7R", "flag": [2, 3]})"));
  auto b = parse_document(doc(R"({"dynkin": "A6", "real_form": "sl7R", "phi": [2, 3]})"));
  CHECK(a.q == b.q);
}

TEST_CASE("chamber vectors select the chamber of phi") {
  // v = -2 a1 + a2 pairs to -5, 4, -1 with a1, a2, a1+a2.
  auto a = parse_document(doc(R"({"dynkin": "A2", "real_form": "sl3R", "phi": [1], "chamber": [-2, 1]})"));
  auto rs = a.rs;
  CHECK(a.chamber.positive(rs->require({-1, 0})));
  CHECK(a.chamber.positive(rs->require({0, 1})));
  CHECK(a.chamber.positive(rs->require({-1, -1})));
  CHECK(a.q == parabolic_from_phi(a.chamber, {0}));
  CHECK(kind_of(doc(R"({"dynkin": "A2", "real_form": "sl3R", "phi": [1], "chamber": [1, -1]})")) ==
        ErrorKind::Input);
}

TEST_CASE("labels") {
  auto rs = build_root_system("A6");
  CHECK(root_label(*rs, {1, 1, 1, 1, 1, 1}) == "e1 - e7");
  CHECK(flag_label(*rs, {0, 1, 3, 5}) == "F^7_{1,2,4,6}");
  CHECK(flag_label(*build_root_system("B2"), {0}) == "Phi{1}");
}

TEST_CASE("analyze: the two-Cayley-root document") {
  Run r = run("analyze --json " + data("kf.json"));
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  const auto& trace = j["real_core"]["trace"];
  CHECK(trace[1]["phi"] == nlohmann::json({2, 4}));
  CHECK(trace[3]["phi"] == nlohmann::json({1, 3, 5, 6}));
  CHECK(j["real_core"]["flag"] == nlohmann::json({1, 2, 4, 6}));
  CHECK(j["real_core"]["iterations"] == 2);
  CHECK(j["pi1"]["core"]["invariants"] == nlohmann::json({2, 2, 2, 2}));
  CHECK(j["pi1"]["orbit"]["generators"] == nlohmann::json({"x1", "x2*x4*x6"}));
  CHECK(j["pi1"]["orbit"]["index"] == 4);
  CHECK(j["pi1"]["orbit"]["image_invariants"] == nlohmann::json({2, 2}));
  CHECK(j["pi1"]["fiber_components"] == 4);
  CHECK(j["arc"]["flag"] == nlohmann::json({1, 4, 6}));
  CHECK(j["arc"]["relation"] == "core_strict_subset_arc");
  CHECK(j["euler"]["ambient"] == 5040);
  CHECK(j["consistency"]["passed"] == true);
  CHECK(validate_report(j, 6).empty());
}

TEST_CASE("analyze: the one-Cayley-root document") {
  Run r = run("analyze --json " + data("kg.json"));
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["real_core"]["flag"] == nlohmann::json({1, 4}));
  CHECK(j["real_core"]["iterations"] == 1);
  CHECK(j["arc"]["flag"] == nlohmann::json({1, 2, 4}));
  CHECK(j["arc"]["relation"] == "arc_strict_subset_core");
}

TEST_CASE("output is deterministic and the text form is produced") {
  Run a = run("analyze --json " + data("kf.json"));
  Run b = run("analyze --json " + data("kf.json"));
  CHECK(a.out == b.out);
  Run t = run("analyze " + data("kf.json"));
  CHECK(t.status == 0);
  CHECK(t.out.find("F^7_{1,2,4,6}") != std::string::npos);
  Run s = run("core --json - < " + data("kg.json"));
  CHECK(s.status == 0);
  CHECK(nlohmann::json::parse(s.out)["real_core"]["iterations"] == 1);
  for (const char* sub : {"reduce", "pi1", "arc"}) CHECK(run(std::string(sub) + " " + data("kf.json")).status == 0);
}

TEST_CASE("validator flags inconsistent reports") {
  Run a = run("analyze --json " + data("kf.json"));
  auto j = nlohmann::json::parse(a.out);
  ojson o = ojson::parse(a.out);
  o["real_core"]["trace"].back()["tag"] = "weakening";
  CHECK(!validate_report(o, 6).empty());
  ojson p = ojson::parse(a.out);
  p["pi1"]["fiber_components"] = 3;
  CHECK(!validate_report(p, 6).empty());
  ojson q = ojson::parse(a.out);
  q["arc"]["relation"] = "equal";
  CHECK(!validate_report(q, 6).empty());
}

TEST_CASE("exit codes") {
  CHECK(run("analyze " + data("compact_a2.json")).status == 0);
  CHECK(run("analyze " + data("corrupted.json")).status == 2);
  CHECK(run("analyze " + data("unknown_form.json")).status == 3);
  CHECK(run("analyze " + data("phi_and_flag.json")).status == 2);
  CHECK(run("analyze " + data("missing.json")).status == 2);
  CHECK(run("oracle " + data("rank5.json") + " --check reductions").status == 4);
  CHECK(run("oracle --corrupted-fixture").status == 5);
  CHECK(run("oracle " + data("corrupted.json")).status == 5);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("oracle " + data("compact_a2.json") + " --check nonsense").status == 2);
}

TEST_CASE("oracle and catalog commands") {
  Run o = run("oracle " + data("compact_a2.json"));
  CHECK(o.status == 0);
  CHECK(o.out.find("PASS reductions") != std::string::npos);
  Run f = run("oracle --corrupted-fixture");
  CHECK(f.out.find("involution at [1,0]") != std::string::npos);
  Run c = run("catalog --check");
  CHECK(c.status == 0);
  CHECK(c.out.find("94 entries valid") != std::string::npos);
  Run e = run("catalog su21 --json");
  CHECK(e.status == 0);
  CHECK(nlohmann::json::parse(e.out)["name"] == "su21");
  CHECK(run("catalog nope").status == 3);
}
