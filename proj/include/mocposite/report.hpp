#pragma once

#include <string>
#include <vector>

#include "mocposite/complex_core.hpp"

namespace mocposite {

// One named check: a computed value held against an expected value at a
// tolerance.  Scalar results are stored with a zero imaginary part.
struct VerificationRecord {
  std::string name;
  Complex computed;
  Complex expected;
  double abs_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

VerificationRecord make_record(std::string name, Complex computed, Complex expected,
                               double tol);

struct VerificationReport {
  std::vector<VerificationRecord> records;
  int total = 0;
  int passed = 0;
  long long wall_time_ms = 0;
};

// Sorts records by name and recomputes the summary counts.  Record names must
// be unique so the sorted order is total and output stays deterministic.
void finalize(VerificationReport& report);

}  // namespace mocposite
