#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "e6char/report.hpp"
#include "nlohmann/json.hpp"

using namespace e6char;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// run the installed command-line binary and capture stdout (+stderr)
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(E6CHAR_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("configuration validation accepts the surface and rejects junk") {
  RunConfig cfg;
  std::string why;
  REQUIRE(validate_config(cfg, &why));
  cfg.case_filter = "e6";
  REQUIRE(validate_config(cfg, &why));
  cfg.case_filter = "2e6";
  REQUIRE(validate_config(cfg, &why));
  REQUIRE(cfg.wants(true));
  REQUIRE_FALSE(cfg.wants(false));

  RunConfig bad;
  bad.case_filter = "e7";
  REQUIRE_FALSE(validate_config(bad, &why));
  REQUIRE_FALSE(why.empty());

  bad = RunConfig{};
  bad.format = "xml";
  REQUIRE_FALSE(validate_config(bad, &why));

  bad = RunConfig{};
  bad.q_samples = {3, 10};
  REQUIRE_FALSE(validate_config(bad, &why));
  bad.q_samples = {};
  REQUIRE_FALSE(validate_config(bad, &why));
  bad.q_samples = {1};
  REQUIRE_FALSE(validate_config(bad, &why));

  bad = RunConfig{};
  bad.jobs = 0;
  REQUIRE_FALSE(validate_config(bad, &why));
}

TEST_CASE("hash primitive matches the published test vectors") {
  REQUIRE(fnv1a64_bytes("") == 0xcbf29ce484222325ull);
  REQUIRE(fnv1a64_bytes("a") == 0xaf63dc4c8601ec8cull);
  REQUIRE(hex64(0xcbf29ce484222325ull) == "cbf29ce484222325");
  REQUIRE(hex64(0) == "0000000000000000");
  std::string path = "/tmp/e6char_digest_probe.bin";
  {
    std::ofstream f(path, std::ios::binary);
    f << "a";
  }
  REQUIRE(fnv1a64_file(path) == fnv1a64_bytes("a"));
  std::remove(path.c_str());
  REQUIRE_THROWS(fnv1a64_file("/tmp/e6char_absent.bin"));
}

TEST_CASE("every section passes on the shipped configuration") {
  const Workspace& ws = Workspace::instance();
  for (auto section : {&check_root_datum, &check_weyl, &check_fourier}) {
    for (const CheckRecord& r : section(ws)) {
      INFO(r.name, ": ", r.details);
      REQUIRE(r.status == "pass");
    }
  }
  for (bool tw : {false, true})
    for (const CheckRecord& r : check_witness(ws, tw)) {
      INFO(r.name, ": ", r.details);
      REQUIRE(r.status == "pass");
    }
}

TEST_CASE("the per-case pipeline ends with a positive sign and full table") {
  const Workspace& ws = Workspace::instance();
  RunConfig cfg;
  for (bool tw : {false, true}) {
    CaseOutcome oc = run_case_pipeline(ws, tw, cfg);
    REQUIRE(oc.case_name == (tw ? "2e6" : "e6"));
    REQUIRE(oc.witness_ok);
    REQUIRE(oc.all_passed());
    REQUIRE(oc.solution.ok);
    REQUIRE(oc.solution.xi == 1);
    REQUIRE(oc.table.size() == 30);
  }
}

TEST_CASE("full report aggregates everything and serializes stably") {
  const Workspace& ws = Workspace::instance();
  RunConfig cfg;
  FullReport a = run_full_report(ws, cfg);
  REQUIRE(a.all_passed());
  REQUIRE(a.digests.size() == 4);
  REQUIRE(a.outcomes.size() == 2);
  FullReport b = run_full_report(ws, cfg);
  REQUIRE(a.to_json() == b.to_json());

  nlohmann::json doc = nlohmann::json::parse(a.to_json());
  REQUIRE(doc["tool"]["name"] == kToolName);
  REQUIRE(doc["summary"]["status"] == "pass");
  REQUIRE(doc["summary"]["checks_failed"] == 0);
  REQUIRE(doc["cases"].size() == 2);
  for (const auto& c : doc["cases"]) {
    REQUIRE(c["xi"] == 1);
    REQUIRE(c["values"].size() == 30);
    REQUIRE(c["m_polynomial"].is_string());
  }
}

TEST_CASE("value table serialization carries exact values and specializations") {
  const Workspace& ws = Workspace::instance();
  RunConfig cfg;
  CaseOutcome oc = run_case_pipeline(ws, false, cfg);
  std::string tsv = value_table_tsv(oc.table);
  std::istringstream in(tsv);
  std::string line;
  int rows = 0;
  bool saw_unit = false, saw_cuspidal = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++rows;
    if (line.find("phi_1_0\t1\t1") == 0) saw_unit = true;
    if (line.find("E6[theta]\t1/3*q^3\t9") == 0) saw_cuspidal = true;
  }
  REQUIRE(rows == 30);
  REQUIRE(saw_unit);
  REQUIRE(saw_cuspidal);
  std::string js = checks_json(oc.records);
  nlohmann::json doc = nlohmann::json::parse(js);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == oc.records.size());
}

TEST_CASE("command line: full report round-trips and exits zero") {
  RunResult r = run_cli("full-report");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["summary"]["status"] == "pass");
  // identical configuration twice gives identical bytes
  RunResult r2 = run_cli("full-report");
  REQUIRE(r2.exit_code == 0);
  REQUIRE(r2.out == r.out);
}

TEST_CASE("command line: sign determination for a single form") {
  RunResult r = run_cli("determine-xi --case 2e6");
  REQUIRE(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["case"] == "2e6");
  REQUIRE(doc["xi"] == 1);
}

TEST_CASE("command line: usage errors exit with the usage code") {
  REQUIRE(run_cli("determine-xi --case e8").exit_code == 2);
  REQUIRE(run_cli("full-report --q-samples 3,10").exit_code == 2);
  REQUIRE(run_cli("no-such-subcommand").exit_code == 2);
  REQUIRE(run_cli("").exit_code == 2);
}

TEST_CASE("command line: corrupted data is reported with a failing exit") {
  // copy the shipped data, then bend one exponent without touching q -> 1
  std::string dir = "/tmp/e6char_baddata";
  std::string cmd = "rm -rf " + dir + " && mkdir -p " + dir + " && cp " +
                    default_data_dir() + "/*.tsv " + dir;
  REQUIRE(std::system(cmd.c_str()) == 0);
  {
    std::ifstream in(dir + "/hecke_e6.tsv");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto pos = text.find("phi_20_10\t");
    REQUIRE(pos != std::string::npos);
    auto qpos = text.find("1*q^3", pos);
    REQUIRE(qpos != std::string::npos);
    text.replace(qpos, 5, "1*q^5");
    std::ofstream out(dir + "/hecke_e6.tsv");
    out << text;
  }
  RunResult r = run_cli("full-report --data-dir " + dir);
  REQUIRE(r.exit_code == 1);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["summary"]["status"] == "fail");
  // the twisted case is untouched and still concludes
  bool e6_failed = false;
  for (const auto& c : doc["cases"]) {
    if (c["case"] == "e6") {
      e6_failed = true;
      REQUIRE(c["xi"].is_null());
    }
    if (c["case"] == "2e6") REQUIRE(c["xi"] == 1);
  }
  REQUIRE(e6_failed);
  REQUIRE(std::system(("rm -rf " + dir).c_str()) == 0);
}

TEST_CASE("command line: value tables in data form") {
  RunResult r = run_cli("unipotent-values --case e6");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("# case: e6") != std::string::npos);
  REQUIRE(r.out.find("phi_1_0\t1\t1") != std::string::npos);
  REQUIRE(r.out.find("E6[theta2]\t1/3*q^3\t9") != std::string::npos);
  REQUIRE(r.out.find("phi_90_8\t-2/3*q^3\t-18") != std::string::npos);
}
