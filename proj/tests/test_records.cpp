#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "simsat/records.hpp"

using namespace simsat;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("simsat_records_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

RunRecord sample_record() {
  RunRecord r;
  r.experiment_id = "bilinear, \"curved\"";
  r.config_hash = "00aabbccddeeff11";
  r.lambda = 64.0;
  r.norm = 0.012345678901234567;
  r.exponent_target = -1.0;
  r.slope = -0.987654321098765432;
  r.pass = true;
  r.slack = 0.15;
  r.shells.push_back({0, 3, 1.25e-3, 0.5, 0.0625});
  return r;
}

}  // namespace

TEST_CASE("empty record list produces a header-only CSV") {
  TempDir dir;
  const auto path = dir.file("empty.csv");
  write_records_csv({}, path);
  std::ifstream is(path);
  std::string line;
  std::getline(is, line);
  CHECK(line == "experiment_id,lambda,norm,exponent_target,slope,pass");
  CHECK_FALSE(std::getline(is, line));
  CHECK(read_records_csv(path).empty());
}

TEST_CASE("CSV round-trip is field-exact, quoting included") {
  TempDir dir;
  const auto path = dir.file("records.csv");
  auto a = sample_record();
  RunRecord b;
  b.experiment_id = "plain";
  b.lambda = 16.0;
  b.norm = 1.0 / 3.0;
  b.exponent_target = -0.25;
  b.slope = -0.25000000000000011;
  b.pass = false;
  write_records_csv({a, b}, path);
  const auto back = read_records_csv(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].experiment_id == a.experiment_id);
  CHECK(back[0].lambda == a.lambda);
  CHECK(back[0].norm == a.norm);
  CHECK(back[0].exponent_target == a.exponent_target);
  CHECK(back[0].slope == a.slope);
  CHECK(back[0].pass == a.pass);
  CHECK(back[1].norm == b.norm);
  CHECK(back[1].slope == b.slope);
  CHECK(back[1].pass == b.pass);
}

TEST_CASE("malformed CSV reports the offending line") {
  TempDir dir;
  const auto path = dir.file("bad.csv");
  {
    std::ofstream os(path);
    os << "experiment_id,lambda,norm,exponent_target,slope,pass\n";
    os << "ok,16,0.5,-1,-0.9,1\n";
    os << "bad,sixteen,0.5,-1,-0.9,1\n";
  }
  try {
    read_records_csv(path);
    FAIL("expected a parse exception");
  } catch (const RecordParseException& e) {
    CHECK(e.error().line == 3);
  }

  {
    std::ofstream os(path);
    os << "wrong,header\n";
  }
  try {
    read_records_csv(path);
    FAIL("expected a parse exception");
  } catch (const RecordParseException& e) {
    CHECK(e.error().line == 1);
  }
}

TEST_CASE("manifest round-trip keeps shells and config") {
  TempDir dir;
  const auto path = dir.file("manifest.json");
  const auto rec = sample_record();
  const std::string config = R"({"d":2,"k":2,"seed":7})";
  write_manifest({rec}, config, path);
  const auto m = read_manifest(path);
  REQUIRE(m.records.size() == 1);
  CHECK(m.records[0].experiment_id == rec.experiment_id);
  CHECK(m.records[0].config_hash == rec.config_hash);
  CHECK(m.records[0].lambda == rec.lambda);
  CHECK(m.records[0].norm == rec.norm);
  CHECK(m.records[0].slope == rec.slope);
  CHECK(m.records[0].slack == rec.slack);
  REQUIRE(m.records[0].shells.size() == 1);
  CHECK(m.records[0].shells[0].net_size == 3);
  CHECK(m.records[0].shells[0].omega_estimate == rec.shells[0].omega_estimate);
  CHECK(m.config_json.find("\"seed\":7") != std::string::npos);
}

TEST_CASE("fnv hash is stable and content-sensitive") {
  CHECK(fnv1a_hex("abc") == fnv1a_hex("abc"));
  CHECK(fnv1a_hex("abc") != fnv1a_hex("abd"));
  CHECK(fnv1a_hex("").size() == 16);
}
