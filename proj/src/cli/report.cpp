#include "hopfcoh/cli/report.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "hopfcoh/errors.hpp"

namespace hopfcoh::cli {

using json = nlohmann::ordered_json;

bool Report::ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const VerdictLine& v) { return v.ok; });
}

void Report::add_verdict(const std::string& prefix, const Verdict& v) {
  for (const auto& c : v.checks)
    verdicts.push_back({prefix.empty() ? c.name : prefix + ": " + c.name, c.ok, c.ok ? "0" : c.detail});
}

void Report::add_flag(const std::string& name, bool ok, const std::string& detail) {
  verdicts.push_back({name, ok, ok ? "0" : detail});
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw InputError("unknown format '" + s + "'");
}

Table cohomology_table(const gs::CohomologyReport& r) {
  Table t{r.name + " over " + r.ring.tag(), {"degree", "cochain_dim", "free_rank", "torsion", "bidegrees"}, {}};
  for (const auto& d : r.degrees) {
    std::string tors, bi;
    for (const auto& z : d.torsion) tors += (tors.empty() ? "" : " ") + z.get_str();
    for (const auto& [mn, dim] : d.bidegrees)
      bi += (bi.empty() ? "" : " ") + ("(" + std::to_string(mn.first) + "," + std::to_string(mn.second) + "):" +
                                       std::to_string(dim));
    t.rows.push_back({std::to_string(d.degree), std::to_string(d.cochain_dim), std::to_string(d.free_rank), tors, bi});
  }
  return t;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void render_text(const Report& r, std::ostream& out) {
  out << "command: " << r.command << "\n";
  for (const auto& s : r.inputs) out << "input: " << s.ref << " [" << s.digest << "]\n";
  for (const auto& t : r.tables) {
    out << "\n" << t.name << "\n";
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t c = 0; c < w.size(); ++c) {
      w[c] = t.columns[c].size();
      for (const auto& row : t.rows) w[c] = std::max(w[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string l;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        l += cells[c];
        if (c + 1 < cells.size()) l += std::string(w[c] - cells[c].size() + 2, ' ');
      }
      while (!l.empty() && l.back() == ' ') l.pop_back();
      out << "  " << l << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  std::size_t failed = 0;
  for (const auto& v : r.verdicts) failed += !v.ok;
  out << "\nchecks: " << r.verdicts.size() - failed << "/" << r.verdicts.size() << " passed\n";
  for (const auto& v : r.verdicts)
    if (!v.ok) out << "  FAIL " << v.name << ": " << v.residual << "\n";
  if (r.seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *r.seconds);
    out << "time: " << buf << " s\n";
  }
  out << "status: " << (r.ok() ? "ok" : "failed") << "\n";
}

void render_json(const Report& r, std::ostream& out) {
  json j;
  j["command"] = r.command;
  j["inputs"] = json::array();
  for (const auto& s : r.inputs) j["inputs"].push_back({{"ref", s.ref}, {"digest", s.digest}});
  j["tables"] = json::array();
  for (const auto& t : r.tables) j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["verdicts"] = json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back({{"name", v.name}, {"ok", v.ok}, {"residual", v.residual}});
  if (r.seconds) j["seconds"] = *r.seconds;
  j["status"] = r.ok() ? "ok" : "failed";
  out << j.dump(2) << "\n";
}

void render_csv(const Report& r, std::ostream& out) {
  auto row = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_field(cells[c]);
    out << "\n";
  };
  for (const auto& t : r.tables) {
    out << "# " << t.name << "\n";
    row(t.columns);
    for (const auto& x : t.rows) row(x);
  }
  out << "# checks\n";
  row({"name", "ok", "residual"});
  for (const auto& v : r.verdicts) row({v.name, v.ok ? "true" : "false", v.residual});
}

}  // namespace

void render(const Report& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Text:
      render_text(r, out);
      break;
    case Format::Json:
      render_json(r, out);
      break;
    case Format::Csv:
      render_csv(r, out);
      break;
  }
}

}  // namespace hopfcoh::cli
