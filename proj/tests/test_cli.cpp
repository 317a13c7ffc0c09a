#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "doctest.h"
#include "secant/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = secant::cli::main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hilbert golden") {
  const auto r = run({"hilbert", "--genus", "0", "--degree", "4", "--order", "1", "--format",
                      "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\n  \"coefficients\": [\n    \"1\",\n    \"2\",\n    \"3/2\",\n    \"1/2\"\n"
                 "  ]\n}\n");
  CHECK(r.err.empty());
}

TEST_CASE("scalar commands") {
  CHECK(run({"generators", "--genus", "0", "--degree", "4", "--order", "1"}).out == "1\n");
  CHECK(run({"degree", "--genus", "1", "--degree", "9", "--order", "2"}).out == "30\n");
  CHECK(run({"hilbert", "--genus", "2", "--degree", "9", "--order", "1", "--twist", "3"}).out ==
        "twist: 3\nvalue: 108\n");
  CHECK(run({"hilbert", "--genus", "0", "--degree", "3", "--order", "1"}).code == 0);
}

TEST_CASE("domain errors exit 2 with one line") {
  const auto r = run({"hilbert", "--genus", "0", "--degree", "2", "--order", "1"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err == "error[DomainError]: degree 2 violates d >= 2g+2k+1 = 3\n");

  const auto s = run({"tangent-cone", "--genus", "0", "--degree", "4", "--order", "1",
                      "--stratum", "2"});
  CHECK(s.code == 2);
  CHECK(s.err.rfind("error[StratumOutOfRange]: ", 0) == 0);

  const auto a = run({"coh-line", "--family", "N", "--points", "2", "--genus", "2", "--degree",
                      "1"});
  CHECK(a.code == 2);
  CHECK(a.err.rfind("error[AmbiguousBundle]: ", 0) == 0);

  const auto g = run({"generators", "--genus", "0", "--degree", "3", "--order", "1"});
  CHECK(g.code == 2);
  CHECK(g.err.rfind("error[GeneratorDegreeUnknown]: ", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"hilbert", "--genus", "0", "--degree", "4"}).code == 2);
  CHECK(run({"hilbert", "--genus", "0", "--degree", "4", "--order", "1", "--bogus", "1"}).code ==
        2);
  CHECK(run({"hilbert", "--genus", "0", "--degree", "4", "--order", "1", "--format", "xml"})
            .code == 2);
  CHECK(run({"sweep", "--genus", "3:1", "--degree", "3", "--order", "0"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("tangent-cone") != std::string::npos);
}

TEST_CASE("special bundles accept supplied h1") {
  const auto r = run({"coh-line", "--family", "N", "--points", "2", "--genus", "2", "--degree",
                      "1", "--h1-of-L", "1", "--format", "csv"});
  CHECK(r.code == 0);
  // wedge^{2-i} H^0 (x) S^i H^1 with h0 = h1 = 1
  CHECK(r.out == "i,l,dim\n0,,0\n1,,1\n2,,1\n");
  CHECK(run({"coh-line", "--family", "N", "--points", "2", "--genus", "2", "--degree", "9",
             "--h1-of-L", "1"})
            .code == 2);
}

TEST_CASE("tangent-cone and cone") {
  const auto all = run({"tangent-cone", "--genus", "0", "--degree", "4", "--order", "1",
                        "--format", "json"});
  CHECK(all.code == 0);
  const auto doc = secant::Json::parse(all.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 2);
  CHECK(doc[0]["multiplicity"] == "2");
  CHECK(doc[1]["base"].is_null());
  const auto cone = run({"cone", "--genus", "0", "--degree", "4", "--order", "1",
                         "--vertex-count", "1", "--format", "json"});
  CHECK(secant::Json::parse(cone.out)["series"]["krull_dim"] == 5);
}

TEST_CASE("sweep skips invalid cells and stays ordered") {
  const auto r = run({"sweep", "--genus", "0:1", "--degree", "3:5", "--order", "0:1",
                      "--invariant", "degree", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = secant::Json::parse(r.out);
  CHECK(doc["skipped"].size() == 2);
  CHECK(r.err.find("skip: ") != std::string::npos);
  std::vector<std::tuple<int, int, int>> keys;
  for (const auto& c : doc["cells"]) keys.emplace_back(c["genus"], c["degree"], c["order"]);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(run({"sweep", "--genus", "3", "--degree", "3", "--order", "0"}).code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args = {"sweep", "--genus", "0:3", "--degree", "3:14",
                                         "--order", "0:3", "--invariant", "hilbert",
                                         "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("--out writes the document to a file") {
  const std::string path = "secant_cli_out_test.json";
  const auto r = run({"series", "--genus", "0", "--degree", "4", "--order", "1", "--format",
                      "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(secant::Json::parse(buf.str())["krull_dim"] == 4);
  std::remove(path.c_str());
}
