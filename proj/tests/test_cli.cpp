#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const std::string kCorpus = LSC_CORPUS_DIR;

Run run(const std::string& args) {
  const std::string cmd = std::string(LSCALG_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& f) { return kCorpus + "/" + f; }

fs::path scratch(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "lscalg_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check-lsc and its exit codes") {
  CHECK(run("check-lsc " + corpus("a_c.lsc")).code == 0);
  auto bad = scratch("alpha2.lsc", "param c;\nalgebra A { basis a; product a a = (D + 2*L + c) a; }\n");
  Run r = run("check-lsc " + bad.string());
  CHECK(r.code == 1);
  CHECK(contains(r.out, "(a, a, a): (D*L1 - D*M + 2*L1^2 + L1*c - 2*M^2 - M*c) a"));
  r = run("check-lsc " + corpus("malformed/mu_in_product.lsc"));
  CHECK(r.code == 2);
  CHECK(contains(r.out, "mu_in_product.lsc:4:16:"));
  CHECK(run("check-lsc /nonexistent/file.lsc").code == 2);
  CHECK(run("no-such-command x").code == 2);
}

TEST_CASE("json and text agree on pass/fail") {
  auto bad = scratch("alpha2.lsc", "param c;\nalgebra A { basis a; product a a = (D + 2*L + c) a; }\n");
  for (const std::string& file : {corpus("a_c.lsc"), bad.string()}) {
    Run text = run("check-lsc " + file);
    Run js = run("check-lsc --json " + file);
    auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["command"] == "check-lsc");
    CHECK(doc["exit_code"] == js.code);
    CHECK(js.code == text.code);
    CHECK(doc["pass"].get<bool>() == (text.code == 0));
    CHECK(doc["checks"][0]["name"] == "left-symmetry");
  }
  auto doc = nlohmann::json::parse(run("check-lsc --json " + bad.string()).out);
  CHECK(doc["checks"][0]["residuals"][0]["indices"] == nlohmann::json::array({"a", "a", "a"}));
}

TEST_CASE("sub-adjacent bracket is printed as a table") {
  Run r = run("sub-adjacent " + corpus("a_c.lsc"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "a a = (D + 2*L) a;"));
}

TEST_CASE("T* extension prints the table and the form") {
  Run r = run("tstar-extend " + corpus("a_c.lsc") + " --omega " + corpus("zero.coch"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "a a = (D + L + c) a;"));
  CHECK(contains(r.out, "a a* = (D - c) a*;"));
  CHECK(contains(r.out, "a a* = 1;"));
  CHECK(contains(r.out, "a* a = 1;"));
  auto w = scratch("omega_L.coch", "cochain 2\n  a a = L1 a*;\n");
  r = run("tstar-extend " + corpus("a_c.lsc") + " --omega " + w.string());
  CHECK(r.code == 1);
  CHECK(contains(r.out, "check cocycle: FAIL"));
  // a cocycle that is not invariant
  r = run("tstar-extend " + corpus("a_c.lsc") + " --omega " + corpus("omega_theta.coch"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "check cocycle: pass"));
  CHECK(contains(r.out, "check omega-invariant: FAIL"));
}

TEST_CASE("equivalence of T* extensions") {
  Run r = run("tstar-equiv --json " + corpus("a_c.lsc") + " --theta " + corpus("theta_dual.map") + " --omega1 " +
              corpus("omega_theta.coch") + " --omega2 " + corpus("zero.coch"));
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["equivalent"] == true);
  CHECK(doc["isometric"] == false);
  CHECK(contains(doc["tables"]["beta"].get<std::string>(), "a a = 1;"));
}

TEST_CASE("module commands") {
  CHECK(run("check-module " + corpus("module_c1c2.lsc")).code == 0);
  Run r = run("semidirect " + corpus("module_c1c2.lsc"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "a m = (L*c1 + D + c2) m;"));
  r = run("coadjoint " + corpus("a_c.lsc"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "laction"));
  auto bad = scratch("badmod.lsc",
                     "param c;\nalgebra A { basis a; product a a = (D + L + c) a; }\n"
                     "module V { basis m; laction a m = (D + L) m; raction a m = m; }\n");
  CHECK(run("check-module " + bad.string()).code == 1);
}

TEST_CASE("cochain commands") {
  auto eta = scratch("eta.coch", "cochain 1\n  a = D a;\n");
  Run r = run("delta " + corpus("a_c.lsc") + " --cochain " + eta.string());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "cochain 2"));
  CHECK(run("is-cocycle " + corpus("a_c.lsc") + " --cochain " + eta.string()).code == 0);
  auto w = scratch("omega_L.coch", "cochain 2\n  a a = L1 a;\n");
  CHECK(run("is-cocycle " + corpus("a_c.lsc") + " --cochain " + w.string()).code == 1);
  CHECK(run("solve-coboundary " + corpus("a_c.lsc") + " --cochain " + corpus("planted_thetas.coch")).code == 0);
  CHECK(run("solve-coboundary " + corpus("a_c.lsc") + " --cochain " + w.string()).code == 1);
  r = run("h-dim --json " + corpus("a_c.lsc") + " --degree 1 --degree-z 2");
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["dim_z"] == 1);
  CHECK(run("phi-diagram " + corpus("current_idempotents.lsc") + " --samples 3 --seed 7").code == 0);
  CHECK(run("d-lie " + corpus("virasoro.lsc") + " --cochain " + scratch("v.coch", "cochain 1 v = D v;").string())
            .code == 0);
}

TEST_CASE("deformation commands") {
  CHECK(run("nijenhuis " + corpus("a_c.lsc") + " --map " + corpus("kappa.map")).code == 0);
  auto d = scratch("d.map", "map\n  a = D a;\n");
  CHECK(run("nijenhuis " + corpus("a_c.lsc") + " --map " + d.string()).code == 1);
  Run r = run("trivial-equiv " + corpus("a_c.lsc") + " --map " + d.string());
  CHECK(r.code == 1);
  CHECK(contains(r.out, "check order-t2: FAIL"));
  r = run("formal-normalize " + corpus("a_c.lsc") + " --thetas " + corpus("planted_thetas.coch"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "trivialized: true"));
  CHECK(run("formal-check " + corpus("a_c.lsc") + " --thetas " + corpus("planted_thetas.coch") + " --order 3").code ==
        0);
  auto w = scratch("omega_id.coch", "cochain 2\n  a a = a;\n");
  CHECK(run("check-deformation " + corpus("a_c.lsc") + " --omega " + w.string()).code == 0);
  r = run("tilde-omega " + corpus("a_c.lsc") + " --omega " + w.string());
  CHECK(r.code == 0);
}

TEST_CASE("bilinear forms and isometries") {
  CHECK(run("check-bilinear " + corpus("tstar_a_c.lsc")).code == 0);
  auto id = scratch("id.map", "map\n  a = a;\n  a* = a*;\n");
  CHECK(run("check-isometry " + corpus("tstar_a_c.lsc") + " --map " + id.string()).code == 0);
  auto twice = scratch("twice.map", "map\n  a = 2 a;\n  a* = a*;\n");
  CHECK(run("check-isometry " + corpus("tstar_a_c.lsc") + " --map " + twice.string()).code == 1);
}

TEST_CASE("render output parses back to the same text") {
  for (const std::string f : {"a_c.lsc", "module_c1c2.lsc", "tstar_a_c.lsc", "virasoro.lsc"}) {
    Run once = run("render " + corpus(f));
    CHECK(once.code == 0);
    auto copy = scratch("copy_" + f, once.out);
    CHECK(run("render " + copy.string()).out == once.out);
  }
}

TEST_CASE("malformed corpus files") {
  int n = 0;
  for (const auto& e : fs::directory_iterator(kCorpus + "/malformed")) {
    Run r = run("check-lsc " + e.path().string());
    CAPTURE(r.out);
    CHECK(r.code == 2);
    CHECK(contains(r.out, e.path().filename().string() + ":"));
    ++n;
  }
  CHECK(n == 3);
}
