#pragma once

// Serialization helpers for the command-line front end: flat key=value
// configs, experiment CSV and sorted-key JSON.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace delange_cli {

// A run's effective settings, keyed by long flag name.
using RunConfig = std::map<std::string, std::string>;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// key=value per line; blank lines and '#' comments skipped, whitespace
// around keys and values trimmed.
RunConfig parse_config(std::istream& in);
RunConfig read_config_file(const std::string& path);

// Shortest decimal that round-trips, independent of the C locale.
std::string format_double(double v);
double parse_double(const std::string& s);

struct CsvRecord {
  std::string family;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  int N = 0;
  double exact_re = 0.0;
  double exact_im = 0.0;
  double predicted_re = 0.0;
  double predicted_im = 0.0;
  double remainder_bound = 0.0;
  double rel_error = 0.0;

  bool operator==(const CsvRecord&) const = default;
};

inline constexpr const char* kCsvHeader =
    "family,x,y,N,exact_re,exact_im,predicted_re,predicted_im,remainder_bound,rel_error";

// Config as a "# key=value" preamble, then the header and one row per record.
void write_csv(std::ostream& out, const RunConfig& config, std::span<const CsvRecord> records);
std::pair<RunConfig, std::vector<CsvRecord>> read_csv(std::istream& in);

nlohmann::json config_json(const RunConfig& config);
// Two-space indent, sorted keys, trailing newline.
void write_json(std::ostream& out, const nlohmann::json& doc);

// Runs writer on stdout for "" or "-", otherwise on the named file.
void emit(const std::string& path, const std::function<void(std::ostream&)>& writer);

}  // namespace delange_cli
