#include "cli_support.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace delange_cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

template <class T>
T parse_integer(const std::string& s, const char* what) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw FormatError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw FormatError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(t.substr(0, eq));
    if (key.starts_with("--")) key = key.substr(2);
    if (key.empty()) throw FormatError("config line " + std::to_string(lineno) + ": empty key");
    cfg[key] = trim(t.substr(eq + 1));
  }
  return cfg;
}

RunConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw FormatError("cannot format number");
  return std::string(buf, p);
}

double parse_double(const std::string& s) {
  const std::string t = trim(s);
  if (t == "nan") return std::nan("");
  if (t == "inf") return INFINITY;
  if (t == "-inf") return -INFINITY;
  double v = 0.0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) throw FormatError("bad number '" + s + "'");
  return v;
}

void write_csv(std::ostream& out, const RunConfig& config, std::span<const CsvRecord> records) {
  for (const auto& [k, v] : config) out << "# " << k << '=' << v << '\n';
  out << kCsvHeader << '\n';
  for (const CsvRecord& r : records) {
    out << r.family << ',' << r.x << ',' << r.y << ',' << r.N << ',' << format_double(r.exact_re) << ','
        << format_double(r.exact_im) << ',' << format_double(r.predicted_re) << ','
        << format_double(r.predicted_im) << ',' << format_double(r.remainder_bound) << ','
        << format_double(r.rel_error) << '\n';
  }
}

std::pair<RunConfig, std::vector<CsvRecord>> read_csv(std::istream& in) {
  std::stringstream preamble;
  std::vector<CsvRecord> records;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header) {
      if (line.starts_with("#")) {
        preamble << line.substr(1) << '\n';
        continue;
      }
      if (line != kCsvHeader) throw FormatError("unexpected CSV header '" + line + "'");
      header = true;
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) throw FormatError("CSV row has " + std::to_string(f.size()) + " fields");
    CsvRecord r;
    r.family = f[0];
    r.x = parse_integer<std::uint64_t>(f[1], "x");
    r.y = parse_integer<std::uint64_t>(f[2], "y");
    r.N = parse_integer<int>(f[3], "N");
    r.exact_re = parse_double(f[4]);
    r.exact_im = parse_double(f[5]);
    r.predicted_re = parse_double(f[6]);
    r.predicted_im = parse_double(f[7]);
    r.remainder_bound = parse_double(f[8]);
    r.rel_error = parse_double(f[9]);
    records.push_back(std::move(r));
  }
  if (!header) throw FormatError("missing CSV header");
  return {parse_config(preamble), std::move(records)};
}

nlohmann::json config_json(const RunConfig& config) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : config) j[k] = v;
  return j;
}

void write_json(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << '\n'; }

void emit(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  writer(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace delange_cli
