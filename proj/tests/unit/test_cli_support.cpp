#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "cli_support.hpp"

using namespace delange_cli;

TEST_CASE("config parsing") {
  std::istringstream in("# run\nfamily = divisor:2\n--x=1e7\n\n  theta=0.8  \n");
  const RunConfig c = parse_config(in);
  CHECK(c.size() == 3);
  CHECK(c.at("family") == "divisor:2");
  CHECK(c.at("x") == "1e7");
  CHECK(c.at("theta") == "0.8");
  std::istringstream bad("family divisor\n");
  CHECK_THROWS_AS(parse_config(bad), FormatError);
  CHECK_THROWS_AS(read_config_file("/nonexistent/run.cfg"), IoError);
}

TEST_CASE("double formatting round trips") {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, 1.7976931348623157e308}) {
    CAPTURE(v);
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(std::isnan(parse_double("nan")));
  CHECK(parse_double("-inf") == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(parse_double("1.5x"), FormatError);
  CHECK_THROWS_AS(parse_double(""), FormatError);
}

TEST_CASE("csv round trip") {
  const RunConfig cfg = {{"family", "divisor:2"}, {"theta", "0.8"}, {"subcommand", "experiment"}};
  std::vector<CsvRecord> recs = {
      {"divisor:2", 100000, 10000, 1, 123456.0, 0.0, 123400.5, -0.0, 0.031, 4.5e-4},
      {"divisor:2", 1000000, 63096, 1, 1.0 / 3.0, 1e-300, 2.0 / 3.0, 0.25, 1e-12, 0.5},
  };
  std::stringstream io;
  write_csv(io, cfg, recs);
  const auto [cfg2, recs2] = read_csv(io);
  CHECK(cfg2 == cfg);
  CHECK(recs2 == recs);
}

TEST_CASE("csv edge cases") {
  const RunConfig cfg = {{"family", "one"}};
  std::stringstream empty;
  write_csv(empty, cfg, {});
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(empty, line)) lines.push_back(line);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "# family=one");
  CHECK(lines[1] == kCsvHeader);

  std::stringstream single;
  const CsvRecord r{"one", 10000, 1000, 0, 1000.0, 0.0, 1000.0, 0.0, 0.1, 0.0};
  write_csv(single, cfg, std::span<const CsvRecord>(&r, 1));
  const auto parsed = read_csv(single);
  REQUIRE(parsed.second.size() == 1);
  CHECK(parsed.second[0] == r);

  std::istringstream wrong("family,x\none,1\n");
  CHECK_THROWS_AS(read_csv(wrong), FormatError);
  std::istringstream short_row(std::string(kCsvHeader) + "\none,1,2\n");
  CHECK_THROWS_AS(read_csv(short_row), FormatError);
}

TEST_CASE("json output is sorted with a trailing newline") {
  nlohmann::json doc;
  doc["zeta"] = 1;
  doc["alpha"] = {1.5, 2.5};
  std::ostringstream out;
  write_json(out, doc);
  const std::string s = out.str();
  CHECK(s.back() == '\n');
  CHECK(s.find("alpha") < s.find("zeta"));
  CHECK(nlohmann::json::parse(s) == doc);
  CHECK(config_json({{"x", "10"}}).at("x") == "10");
}
