#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + SHIFTLAB_BIN + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
  const Run r = run("--format json " + args);
  CHECK(r.code == expect_code);
  return nlohmann::json::parse(r.out);
}

std::string data(const std::string& name) { return std::string(SHIFTLAB_DATA_DIR) + "/" + name; }

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("shiftlab_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& contents = "") const {
    const auto p = (path / name).string();
    if (!contents.empty()) std::ofstream(p) << contents;
    return p;
  }
};

}  // namespace

TEST_CASE("info on the two-triangle complex") {
  const Run r = run("info " + data("two_triangles.txt"));
  CHECK(r.code == 0);
  CHECK(r.out.find("f_vector: 1 5 6 2") != std::string::npos);
  const auto j = run_json("info " + data("two_triangles.json"));
  CHECK(j["n"] == 5);
  CHECK(j["order"] == nlohmann::json::parse("[1,2,3,4,5]"));
  CHECK(j["facets"] == nlohmann::json::parse("[[1,2,3],[1,4,5]]"));
  CHECK(j["f_vector"] == nlohmann::json::parse("[1,5,6,2]"));
  CHECK(j["verdict"] == "ok");
}

TEST_CASE("depth and vertex decomposability") {
  const auto j = run_json("depth " + data("two_triangles.txt"));
  CHECK(j["depth"] == 1);
  CHECK(j["verdict"] == "not-cohen-macaulay");
  CHECK(j["witness"]["face"] == nlohmann::json::parse("[1]"));
  CHECK(j["witness"]["index"] == 0);
  const auto p = run_json("depth " + data("path4.txt"));
  CHECK(p["verdict"] == "cohen-macaulay");
  const auto v = run_json("vd " + data("path4.txt"));
  CHECK(v["verdict"] == "decomposable");
  CHECK(v["certificate_verified"] == true);
}

TEST_CASE("shifting the path") {
  const auto alg = run_json("shift --mode alg " + data("path4.txt"));
  CHECK(alg["facets"] == nlohmann::json::parse("[[1,2],[1,3],[1,4]]"));
  CHECK(alg["unanimous"] == true);
  CHECK(alg["seeds_used"] == nlohmann::json::parse("[1,2,3]"));
  const auto seeded = run_json("shift --mode alg " + data("path4.txt"), 0);
  CHECK(seeded["facets"] == alg["facets"]);
  const Run env = run("--format json shift " + data("path4.txt"), "SHIFTLAB_SEED=40");
  CHECK(nlohmann::json::parse(env.out)["seeds_used"] == nlohmann::json::parse("[40,41,42]"));
  const auto comb = run_json("shift --mode comb --pair 1,4 " + data("path4.txt"));
  CHECK(comb["facets"] == nlohmann::json::parse("[[1,2],[1,3],[2,3],[4]]"));
  CHECK(comb["reclosed"] == false);
  const auto full = run_json("shift --mode comb " + data("path4.txt"));
  CHECK(full["is_shifted"] == true);
}

TEST_CASE("EKR exit codes") {
  TempDir tmp;
  const std::string simplex = tmp.file("s7.txt");
  CHECK(run("gen simplex --n 7 --out " + simplex).code == 0);
  const auto j = run_json("ekr --r 3 --strict " + simplex);
  CHECK(j["strict"] == true);
  CHECK(j["verdict"] == "holds");
  const std::string bad = tmp.file("bad.txt", "1 2\n1 3\n2 3\n4 5\n");
  const auto v = run_json("ekr --r 2 " + bad, 1);
  CHECK(v["verdict"] == "violated");
  CHECK(v["witness"].is_array());
  const auto ns = run_json("ekr --r 3 --strict " + tmp.file("s6.txt", "1 2 3 4 5 6\n"), 1);
  CHECK(ns["verdict"] == "not-strict");
}

TEST_CASE("theorem verifiers") {
  TempDir tmp;
  const std::string s7 = tmp.file("s7.txt", "1 2 3 4 5 6 7\n");
  const auto hm = run_json("hm --r 2 " + s7);
  CHECK(hm["verdict"] == "holds");
  CHECK(run_json("hm --r 2 " + data("path4.txt"), 2)["verdict"] == "error");
  CHECK(run_json("hm --r 2 --unchecked " + data("path4.txt"))["verdict"] == "unchecked");
  const std::string s6 = tmp.file("s6.txt", "1 2 3 4 5 6\n");
  CHECK(run_json("cross --r 2 " + s6)["verdict"] == "holds");
  CHECK(run_json("cross --r 2 --shadow " + s6)["verdict"] == "holds");
  const auto hibi = run_json("hibi --s 2 --r 3 " + data("two_triangles.txt"));
  CHECK(hibi["verdict"] == "no-injection");
  CHECK(hibi["witness"]["left"].size() > hibi["witness"]["neighbourhood"].size());
  CHECK(run_json("hibi --s 1 --r 2 " + data("two_triangles.txt"))["verdict"] == "injection");
}

TEST_CASE("reduction trace") {
  TempDir tmp;
  const std::string c = tmp.file("s5.txt", "0 1 2 3 4\n");
  const std::string f = tmp.file("f.txt", "!r 2\n1 2\n1 3\n2 3\n");
  const auto j = run_json("reduce " + c + " " + f + " --apex 0");
  CHECK(j["outcome"] == "boundary-spanned");
  CHECK(j["boundary_witness"] == nlohmann::json::parse("[0,2,3]"));
  CHECK(j["verdict"] == "verified");
  const std::string star = tmp.file("star.txt", "!r 2\n1 2\n1 3\n");
  CHECK(run_json("reduce " + c + " " + star + " --apex 0", 2)["verdict"] == "error");
}

TEST_CASE("input errors and limits") {
  CHECK(run("info /nonexistent/complex.txt").code == 2);
  TempDir tmp;
  CHECK(run("info " + tmp.file("empty.txt", "# nothing\n")).code == 2);
  CHECK(run("info " + tmp.file("dup.txt", "1 1\n")).code == 2);
  CHECK(run("--prime 100 info " + data("path4.txt")).code == 2);
  CHECK(run("bogus").code == 2);
  const std::string s9 = tmp.file("s9.txt", "1 2 3 4 5 6 7 8 9\n");
  const auto j = run_json("--budget 10 ekr --r 4 --strict " + s9, 3);
  CHECK(j["error"] == "ResourceLimit");
  CHECK(run("--limit-faces 3 ekr --r 2 " + s9).code == 3);
}

TEST_CASE("generated complexes round-trip") {
  TempDir tmp;
  const std::vector<std::string> gens{"chordal --n 6 --isolated 1 --seed 3", "union --parts path:3,cycle:4,complete:1",
                                      "threshold --word iddid", "matroid --n 5 --k 3 --coloops 1",
                                      "borg --t 2 --sizes 3,2", "random --n 6 --dim 2 --density 0.5 --seed 9",
                                      "boundary --n 5"};
  for (const auto& g : gens) {
    for (const char* fmt : {"text", "json"}) {
      const std::string out = tmp.file(std::string("g.") + fmt);
      REQUIRE(run(std::string("--format ") + fmt + " gen " + g + " --out " + out).code == 0);
      const auto info = run_json("info " + out);
      const Run direct = run("--format json gen " + g);
      const auto gj = nlohmann::json::parse(direct.out);
      CHECK_MESSAGE(info["facets"] == gj["facets"], g);
      CHECK(info["order"] == gj["order"]);
      CHECK(gj.contains("metadata"));
    }
  }
  const std::string base = tmp.file("base.txt", "a b\nc\n");
  const auto cone = run_json("gen cone --t 2 --input " + base);
  CHECK(cone["facets"].size() == 2);
  CHECK(cone["order"][0] == "c0");
}
