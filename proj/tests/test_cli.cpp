#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"

namespace fs = std::filesystem;
using ultracheck::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_matrix(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "ultracheck_cli_tests";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path) << text;
  return path;
}

const fs::path& unipotent() {
  static const fs::path p =
      write_matrix("unipotent.json", R"({"prime": 5, "dim": 2, "entries": [["1/1", "1/1"], ["0/1", "1/1"]]})");
  return p;
}

const fs::path& fifth() {
  static const fs::path p = write_matrix("fifth.json", R"({"prime": 5, "dim": 1, "entries": [["1/5"]]})");
  return p;
}

const fs::path& zero() {
  static const fs::path p =
      write_matrix("zero.json", R"({"prime": 3, "dim": 2, "entries": [["0/1", "0/1"], ["0/1", "0/1"]]})");
  return p;
}

} // namespace

TEST_CASE("check: contraction") {
  const Run r = run({"check", "--matrix", unipotent().string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("contraction, criterion holds") != std::string::npos);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == true);
  CHECK(doc["agreement"] == true);
  CHECK(doc["records"].size() == 12 * 6);
  CHECK(doc["power_check"]["verdict"] == true);
}

TEST_CASE("check: non-contraction with witness") {
  const Run r = run({"check", "--matrix", fifth().string(), "--prime", "5"});
  CHECK(r.code == 0);
  CHECK(r.err.find("non-contraction, witness (k=1, v=2)") != std::string::npos);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["summary"] == "non-contraction, witness (k=1, v=2)");
}

TEST_CASE("check: input errors") {
  const auto bad = write_matrix("bad.json", R"({"prime": 5, "dim": 1, "entries": [["1/0"]]})");
  CHECK(run({"check", "--matrix", bad.string()}).code == ultracheck::kExitInput);
  CHECK(run({"check", "--matrix", unipotent().string(), "--prime", "3"}).code == ultracheck::kExitInput);
  CHECK(run({"check", "--matrix", unipotent().string(), "--dim", "3"}).code == ultracheck::kExitInput);
  CHECK(run({"check", "--matrix", "/nonexistent/file.json"}).code == ultracheck::kExitInput);
  CHECK(run({"check"}).code == ultracheck::kExitInput);
  CHECK(run({"frobnicate"}).code == ultracheck::kExitInput);
  CHECK(run({"check", "--matrix", fifth().string(), "--mu-valuations", "1..3"}).code == ultracheck::kExitInput);
  CHECK(run({"check", "--matrix", fifth().string(), "--mu-valuations", "3..1"}).code == ultracheck::kExitInput);
  CHECK(run({"scan", "--matrix", fifth().string(), "--format", "yaml"}).code == ultracheck::kExitInput);
}

TEST_CASE("check: precision shortfall exits with the precision code") {
  const Run r = run({"check", "--matrix", unipotent().string(), "--precision", "6"});
  CHECK(r.code == ultracheck::kExitPrecision);
  CHECK(r.err.find("achievable exponent") != std::string::npos);
}

TEST_CASE("verify-identities") {
  const Run ok = run({"verify-identities", "--matrix", unipotent().string(), "--mmax", "4", "--kmax", "4"});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("identity,checks,max_residual_exponent,min_certificate,holds\n", 0) == 0);
  CHECK(ok.out.find("false") == std::string::npos);

  const Run z = run({"verify-identities", "--matrix", zero().string()});
  CHECK(z.code == 0);
  std::istringstream lines(z.out);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    CHECK(line.find(",inf_valuation,exact,true") != std::string::npos);
  }

  const Run faulty = run({"verify-identities", "--matrix", unipotent().string(), "--inject-fault"});
  CHECK(faulty.code != 0);
  CHECK(faulty.code == ultracheck::kExitEngineFault);
}

TEST_CASE("scan examples") {
  const Run uni = run({"scan", "--matrix", unipotent().string(), "--kmax", "3", "--mu-valuations", "1..2"});
  CHECK(uni.code == 0);
  CHECK(uni.out ==
        "k,v_mu,lhs_exponent,rhs_exponent,pass\n"
        "1,1,-1,-1,true\n1,2,-2,-2,true\n2,1,-2,-2,true\n2,2,-4,-4,true\n3,1,-3,-3,true\n3,2,-6,-6,true\n");

  const Run f = run({"scan", "--matrix", fifth().string(), "--kmax", "2", "--mu-valuations", "2..2"});
  CHECK(f.code == 0);
  CHECK(f.out == "k,v_mu,lhs_exponent,rhs_exponent,pass\n1,2,-1,-2,false\n2,2,-2,-4,false\n");

  const Run z = run({"scan", "--matrix", zero().string(), "--kmax", "2"});
  CHECK(z.code == 0);
  std::istringstream lines(z.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.find(",inf_valuation,") != std::string::npos);
    ++rows;
  }
  CHECK(rows == 12);
}

TEST_CASE("scan is deterministic across runs and thread counts") {
  const auto m = write_matrix(
      "dense.json", R"({"prime": 3, "dim": 3, "entries": [["1/1", "2/1", "0/1"], ["3/1", "1/2", "1/1"], ["0/1", "9/1", "4/1"]]})");
  const Run a = run({"scan", "--matrix", m.string(), "--kmax", "6"});
  const Run b = run({"scan", "--matrix", m.string(), "--kmax", "6"});
  const Run c = run({"scan", "--matrix", m.string(), "--kmax", "6", "--threads", "4"});
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const Run js1 = run({"scan", "--matrix", m.string(), "--kmax", "4", "--format", "structured"});
  const Run js2 = run({"scan", "--matrix", m.string(), "--kmax", "4", "--format", "structured", "--threads", "3"});
  CHECK(js1.out == js2.out);
}

TEST_CASE("--out writes the report to a file") {
  const fs::path out = fs::temp_directory_path() / "ultracheck_cli_tests" / "scan.csv";
  fs::remove(out);
  const Run r = run({"scan", "--matrix", unipotent().string(), "--kmax", "1", "--mu-valuations", "1", "--out",
                     out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "k,v_mu,lhs_exponent,rhs_exponent,pass\n1,1,-1,-1,true\n");
}

TEST_CASE("selftest") {
  const Run ok = run({"selftest"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("selftest: all suites passed") != std::string::npos);

  const Run other = run({"selftest", "--seed", "2"});
  CHECK(other.code == 0);
  // Same suite sizes for every seed.
  auto counts = [](const std::string& text) {
    std::vector<std::string> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const auto colon = line.find(": ");
      if (colon != std::string::npos && line.find("passed") != std::string::npos) {
        out.push_back(line);
      }
    }
    return out;
  };
  CHECK(counts(ok.out) == counts(other.out));

  const Run tight = run({"selftest", "--target", "500", "--precision", "40"});
  CHECK(tight.code == ultracheck::kExitPrecision);
  CHECK(tight.out.find("precision error") != std::string::npos);

  const Run faulty = run({"selftest", "--inject-fault"});
  CHECK(faulty.code == ultracheck::kExitEngineFault);
}
