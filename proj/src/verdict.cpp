#include "hopfcoh/verdict.hpp"

#include <sstream>

#include "hopfcoh/exactla/linalg.hpp"

namespace hopfcoh {

std::string CheckResult::describe() const {
  std::ostringstream os;
  os << name << ": " << (ok ? "ok" : "FAIL");
  if (!detail.empty()) os << " (" << detail << ")";
  return os.str();
}

bool Verdict::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

void Verdict::add(const std::string& name, const exactla::Matrix& residual, const exactla::Ring& ring) {
  CheckResult c;
  c.name = name;
  c.residual = exactla::reduce(residual, ring);
  std::size_t i = 0, j = 0;
  exactla::Rational v;
  if (c.residual.first_nonzero(i, j, v)) {
    c.ok = false;
    std::ostringstream os;
    os << "residual[" << i << "," << j << "] = " << v;
    c.detail = os.str();
  }
  checks.push_back(std::move(c));
}

void Verdict::add_flag(const std::string& name, bool ok, const std::string& detail) {
  CheckResult c;
  c.name = name;
  c.ok = ok;
  c.detail = detail;
  checks.push_back(std::move(c));
}

void Verdict::merge(const std::string& prefix, const Verdict& other) {
  for (auto c : other.checks) {
    c.name = prefix.empty() ? c.name : prefix + "/" + c.name;
    checks.push_back(std::move(c));
  }
}

std::vector<std::string> Verdict::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(c.name);
  return out;
}

const CheckResult* Verdict::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

std::string Verdict::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) os << c.describe() << "\n";
  return os.str();
}

}  // namespace hopfcoh
