#include "simsat/records.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace simsat {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Splits one CSV line honouring RFC-4180 quoting.
std::vector<std::string> csv_split(const std::string& line, int line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      if (!cur.empty())
        throw RecordParseException({"stray quote inside unquoted field", line_no});
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw RecordParseException({"unterminated quoted field", line_no});
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s, int line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size())
      throw RecordParseException({"trailing characters in numeric field", line_no});
    return v;
  } catch (const RecordParseException&) {
    throw;
  } catch (const std::exception&) {
    throw RecordParseException({"malformed numeric field '" + s + "'", line_no});
  }
}

constexpr const char* kHeader = "experiment_id,lambda,norm,exponent_target,slope,pass";

nlohmann::json shell_to_json(const ShellStat& s) {
  return {{"shell", s.shell},
          {"net_size", s.net_size},
          {"omega_estimate", s.omega_estimate},
          {"lower_l", s.lower_l},
          {"fitted_c", s.fitted_c}};
}

ShellStat shell_from_json(const nlohmann::json& j) {
  ShellStat s;
  s.shell = j.at("shell").get<int>();
  s.net_size = j.at("net_size").get<std::uint64_t>();
  s.omega_estimate = j.at("omega_estimate").get<double>();
  s.lower_l = j.at("lower_l").get<double>();
  s.fitted_c = j.at("fitted_c").get<double>();
  return s;
}

}  // namespace

void write_records_csv(const std::vector<RunRecord>& records,
                       const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << kHeader << '\n';
  for (const auto& r : records)
    os << csv_quote(r.experiment_id) << ',' << format_double(r.lambda) << ','
       << format_double(r.norm) << ',' << format_double(r.exponent_target) << ','
       << format_double(r.slope) << ',' << (r.pass ? "1" : "0") << '\n';
}

std::vector<RunRecord> read_records_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  int line_no = 0;
  std::vector<RunRecord> records;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kHeader)
        throw RecordParseException({"bad header, expected '" + std::string(kHeader) + "'",
                                    line_no});
      continue;
    }
    if (line.empty()) continue;
    const auto fields = csv_split(line, line_no);
    if (fields.size() != 6)
      throw RecordParseException(
          {"expected 6 fields, got " + std::to_string(fields.size()), line_no});
    RunRecord r;
    r.experiment_id = fields[0];
    r.lambda = parse_double(fields[1], line_no);
    r.norm = parse_double(fields[2], line_no);
    r.exponent_target = parse_double(fields[3], line_no);
    r.slope = parse_double(fields[4], line_no);
    if (fields[5] != "0" && fields[5] != "1")
      throw RecordParseException({"pass field must be 0 or 1", line_no});
    r.pass = fields[5] == "1";
    records.push_back(std::move(r));
  }
  if (line_no == 0) throw RecordParseException({"empty file", 0});
  return records;
}

void write_manifest(const std::vector<RunRecord>& records,
                    const std::string& config_json, const std::string& path) {
  nlohmann::json j;
  j["config"] = nlohmann::json::parse(config_json);
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json jr{{"experiment_id", r.experiment_id},
                      {"config_hash", r.config_hash},
                      {"lambda", r.lambda},
                      {"norm", r.norm},
                      {"exponent_target", r.exponent_target},
                      {"slope", r.slope},
                      {"pass", r.pass},
                      {"slack", r.slack}};
    jr["shells"] = nlohmann::json::array();
    for (const auto& s : r.shells) jr["shells"].push_back(shell_to_json(s));
    j["records"].push_back(std::move(jr));
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << j.dump(2) << '\n';
}

Manifest read_manifest(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  nlohmann::json j;
  is >> j;
  Manifest m;
  m.config_json = j.at("config").dump();
  for (const auto& jr : j.at("records")) {
    RunRecord r;
    r.experiment_id = jr.at("experiment_id").get<std::string>();
    r.config_hash = jr.at("config_hash").get<std::string>();
    r.lambda = jr.at("lambda").get<double>();
    r.norm = jr.at("norm").get<double>();
    r.exponent_target = jr.at("exponent_target").get<double>();
    r.slope = jr.at("slope").get<double>();
    r.pass = jr.at("pass").get<bool>();
    r.slack = jr.at("slack").get<double>();
    for (const auto& js : jr.at("shells")) r.shells.push_back(shell_from_json(js));
    m.records.push_back(std::move(r));
  }
  return m;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace simsat
