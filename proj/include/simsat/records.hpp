#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simsat {

/// Per-shell outcome of the packing/bound analysis at one lambda.
struct ShellStat {
  int shell = 0;
  std::uint64_t net_size = 0;
  double omega_estimate = 0.0;  // net_size * vol(ball of radius lambda^{-1+eps})
  double lower_l = 0.0;         // 2^{-(i+1)/k} * sup^{1/k}
  double fitted_c = 0.0;        // N^{1-eps} (L_i / B)^{2M/(M-1)}
};

/// One experiment outcome. The CSV carries the six fixed columns; shell
/// stats and tolerances ride in the manifest.
struct RunRecord {
  std::string experiment_id;
  std::string config_hash;
  double lambda = 0.0;
  double norm = 0.0;
  double exponent_target = 0.0;
  double slope = 0.0;
  bool pass = false;
  double slack = 0.0;
  std::vector<ShellStat> shells;
};

struct ParseError {
  std::string message;
  int line = 0;
};

class RecordParseException : public std::exception {
public:
  explicit RecordParseException(ParseError err)
      : err_(std::move(err)),
        what_(err_.message + " (line " + std::to_string(err_.line) + ")") {}
  const ParseError& error() const { return err_; }
  const char* what() const noexcept override { return what_.c_str(); }

private:
  ParseError err_;
  std::string what_;
};

/// CSV with the fixed header
/// experiment_id,lambda,norm,exponent_target,slope,pass (RFC-4180 quoting,
/// doubles printed round-trip exact).
void write_records_csv(const std::vector<RunRecord>& records,
                       const std::string& path);
std::vector<RunRecord> read_records_csv(const std::string& path);

/// JSON manifest: full config echo plus every record with shell stats.
void write_manifest(const std::vector<RunRecord>& records,
                    const std::string& config_json, const std::string& path);

struct Manifest {
  std::string config_json;
  std::vector<RunRecord> records;
};

Manifest read_manifest(const std::string& path);

/// FNV-1a over a canonical string; used as the config hash.
std::string fnv1a_hex(const std::string& text);

}  // namespace simsat
