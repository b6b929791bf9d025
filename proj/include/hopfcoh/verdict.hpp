#pragma once

#include <string>
#include <vector>

#include "hopfcoh/exactla/matrix.hpp"
#include "hopfcoh/exactla/ring.hpp"

namespace hopfcoh {

// Outcome of one identity: the residual is the difference of the two sides,
// reduced into the ground ring. ok exactly when the residual is zero.
struct CheckResult {
  std::string name;
  bool ok = true;
  exactla::Matrix residual;
  std::string detail;  // first nonzero residual entry, or a message

  std::string describe() const;
};

struct Verdict {
  std::vector<CheckResult> checks;

  bool ok() const;
  void add(const std::string& name, const exactla::Matrix& residual, const exactla::Ring& ring);
  void add_flag(const std::string& name, bool ok, const std::string& detail = "");
  void merge(const std::string& prefix, const Verdict& other);
  std::vector<std::string> failures() const;
  const CheckResult* first_failure() const;
  std::string summary() const;
};

}  // namespace hopfcoh
