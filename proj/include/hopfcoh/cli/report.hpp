#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hopfcoh/cli/definitions.hpp"
#include "hopfcoh/gs/gs.hpp"

namespace hopfcoh::cli {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct VerdictLine {
  std::string name;
  bool ok = true;
  std::string residual;  // "0", or the first failing entry
};

struct Report {
  std::string command;
  std::vector<Source> inputs;
  std::vector<Table> tables;
  std::vector<VerdictLine> verdicts;
  std::optional<double> seconds;  // only with --timing, to keep reports reproducible

  bool ok() const;
  void add_verdict(const std::string& prefix, const Verdict& v);
  void add_flag(const std::string& name, bool ok, const std::string& detail = "");
};

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s);

// degree, cochain dim, free rank, torsion invariants, bidegree breakdown
Table cohomology_table(const gs::CohomologyReport& r);

void render(const Report& r, Format f, std::ostream& out);

}  // namespace hopfcoh::cli
