#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "alphaspec/families.hpp"
#include "alphaspec/hypergraph.hpp"
#include "cli.hpp"
#include "emit.hpp"

using namespace alphaspec;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = fs::temp_directory_path() / ("alphaspec_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("radius") {
    auto g = temp_file("edge.txt", "3 3 1\n0 1 2\n");
    auto r = call({"radius", "--graph", g, "--alpha", "0.5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("rho = 1.000000000000\n", 0) == 0);

    auto j = call({"radius", "--graph", g, "--alpha", "0.5", "--json"});
    CHECK(nlohmann::json::parse(j.out).at("rho").get<double>() == doctest::Approx(1.0));

    CHECK(call({"radius", "--graph", "/nonexistent/file", "--alpha", "0"}).code == cli::kExitUsage);
    auto bad = temp_file("bad.txt", "3 3 1\n0 1\n");
    CHECK(call({"radius", "--graph", bad, "--alpha", "0"}).code == cli::kExitUsage);
    CHECK(call({"radius", "--graph", g, "--alpha", "1.5"}).code == cli::kExitUsage);
    auto t = temp_file("t124.txt", write_text(t_supertree(1, 2, 4, 3).graph));
    CHECK(call({"radius", "--graph", t, "--alpha", "0.5", "--max-iter", "2"}).code == cli::kExitNumerical);
  }

  TEST_CASE("usage errors") {
    CHECK(call({}).code == cli::kExitUsage);
    CHECK(call({"frobnicate"}).code == cli::kExitUsage);
    CHECK(call({"order", "--k", "3"}).code == cli::kExitUsage);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("family writes hypergraph text") {
    auto r = call({"family", "star", "2", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "5 3 2\n0 1 2\n0 3 4\n");
    auto t = call({"family", "tsup", "1", "2", "9"});
    CHECK(isomorphic_supertrees(read_text(t.out), t_supertree(1, 2, 9, 3).graph));
    auto b = call({"family", "bfs", "10", "3", "2"});
    CHECK(isomorphic_supertrees(read_text(b.out), t_supertree(1, 2, 9, 3).graph));
    CHECK(call({"family", "dstar", "1"}).code == cli::kExitUsage);
  }

  TEST_CASE("certify") {
    auto g = temp_file("cert_graph.txt", "3 3 1\n0 1 2\n");
    auto c = temp_file("cert.txt", "0 0 1.0\n1 0 0.5\n2 0 3.0\n");
    auto r = call({"certify", "--graph", g, "--cert", c, "--alpha", "0", "--rho", "2.0", "--mode", "subnormal"});
    CHECK(r.code == 1);
    CHECK(r.out.find("classification = none") != std::string::npos);

    auto ok = temp_file("cert_ok.txt", "rho 1\n0 0 1\n1 0 1\n2 0 1\n");
    CHECK(call({"certify", "--graph", g, "--cert", ok, "--alpha", "0"}).code == 0);

    auto tg = temp_file("t129.txt", write_text(t_supertree(1, 2, 9, 3).graph));
    auto perron = call({"certify", "--graph", tg, "--alpha", "0.5", "--json"});
    CHECK(perron.code == 0);
    auto report = nlohmann::json::parse(perron.out);
    CHECK(report.at("classification") == "normal");
    CHECK(report.at("vertex_sums").size() == 27);

    auto incomplete = temp_file("cert_partial.txt", "0 0 1\n");
    CHECK(call({"certify", "--graph", g, "--cert", incomplete, "--alpha", "0", "--rho", "1"}).code ==
          cli::kExitUsage);
  }

  TEST_CASE("lemma-cert") {
    auto r = call({"lemma-cert", "--case", "L41-T11m3-super", "--m", "13", "--k", "3", "--alpha", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classification = strictly-supernormal") != std::string::npos);
    CHECK(call({"lemma-cert", "--case", "bogus", "--m", "13", "--alpha", "0"}).code == cli::kExitUsage);

    auto path = (fs::temp_directory_path() / "alphaspec_test_lemma.cert").string();
    CHECK(call({"lemma-cert", "--case", "L42-T12m4-sub", "--m", "13", "--alpha", "0.5", "--write-cert", path})
              .code == 0);
    auto g = temp_file("lemma_graph.txt", write_text(t_supertree(1, 2, 9, 3).graph));
    auto back = call({"certify", "--graph", g, "--cert", path, "--alpha", "0.5", "--mode", "subnormal"});
    CHECK(back.code == 0);
    CHECK(back.out.find("strictly-subnormal") != std::string::npos);
  }

  TEST_CASE("order and bound") {
    auto r = call({"order", "--m", "13", "--k", "3", "--alpha", "0", "--csv", "-"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "m,k,alpha,check,verdict,min_margin,entries,runtime_ms");
    CHECK(row.rfind("13,3,0,chain,true,", 0) == 0);

    auto table = call({"order", "--m", "9", "--alpha", "0.3"});
    CHECK(table.out.find("T(1:2:5)") != std::string::npos);
    CHECK(table.out.find("S(4:4)") != std::string::npos);

    auto j = call({"bound", "--m", "9", "--alpha", "0.3", "--json"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("verdict") == true);
    CHECK(parsed.at("classes") == 22);
  }

  TEST_CASE("sweep and enum") {
    auto r = call({"sweep", "--m", "13", "--k", "3,4", "--alpha", "0.3", "--checks", "chain,bound"});
    CHECK(r.code == 0);
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 5);

    auto empty = call({"sweep", "--m", "13", "--k", "3", "--alpha", ""});
    CHECK(empty.out == "m,k,alpha,check,verdict,min_margin,entries,runtime_ms\n");
    CHECK(call({"sweep", "--m", "13", "--k", "3", "--alpha", "0", "--checks", "nope"}).code == cli::kExitUsage);

    auto classes = call({"enum", "--m", "4"});
    CHECK(classes.out == "# 3 degree classes with m=4\nT*[4]\nT*[3:2]\nT*[2:2:2]\n");
    auto trees = call({"enum", "--m", "3", "--supertrees"});
    CHECK(trees.out.rfind("# 2 supertrees", 0) == 0);
  }

  TEST_CASE("emitters") {
    OrderingReport report;
    report.check = "chain";
    report.entries = {{"A", 2.0}, {"B", 1.0}};
    auto table = cli::emit(report, cli::Format::Table);
    CHECK(table.find("  A ") != std::string::npos);
    CHECK(table.find("  B ") != std::string::npos);
    CHECK(cli::emit(std::vector<SweepRow>{}, cli::Format::Csv) ==
          "m,k,alpha,check,verdict,min_margin,entries,runtime_ms\n");
  }
}
