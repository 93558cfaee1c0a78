#pragma once

// The thetakit command-line front end: argument parsing, output rendering,
// the verify-all suite runner and SVG plots.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace thetakit::cli {

using Json = nlohmann::ordered_json;

enum class Format { table, json, csv };

/// Knobs shared by every subcommand. Flags win over the THETAKIT_* environment.
struct Settings {
  Format format = Format::table;
  std::uint64_t budget = 100'000'000;
  int density_precision = 0;  // 0 selects N = a + 1
  long long heegner_terms = 2000;
  double heegner_tolerance = 1e-3;
  bool lenient_heegner = false;
  bool timing = true;
};

/// Parses argv and dispatches. Returns 0 on success, 1 when a verification or
/// computation fails, 2 on a usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// One command result: the JSON document plus its tabular rendering.
struct Output {
  Json json = Json::object();
  std::vector<Table> tables;
  std::vector<std::string> notes;
};

void render(const Output& output, Format format, std::ostream& os);

enum class Provenance { paper, trivial, derived };
enum class Status { pass, fail, warn };

std::string to_string(Provenance p);
std::string to_string(Status s);

struct Case {
  std::string id;
  Json inputs = Json::object();
  std::string expected;
  std::string actual;
  Status status = Status::fail;
  Provenance provenance = Provenance::derived;
  double elapsed_ms = 0.0;
};

struct Suite {
  std::string name;
  std::vector<Case> cases;
};

struct RunReport {
  std::vector<Suite> suites;
  std::size_t count(Status s) const;
  /// No case failed (warnings allowed).
  bool ok() const { return count(Status::fail) == 0; }
};

/// Runs every acceptance suite.
RunReport verify_all(const Settings& settings);

Json to_json(const RunReport& report, const Settings& settings);
Output to_output(const RunReport& report, const Settings& settings);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// Writes a line chart of the series to path as SVG. Throws DomainError when
/// there is nothing to plot and IoError when path cannot be written.
void emit_plot(const std::vector<PlotSeries>& series, const std::string& path, const std::string& title);

}  // namespace thetakit::cli
