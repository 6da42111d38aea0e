#include "mocposite/report.hpp"

#include <algorithm>
#include <cmath>

namespace mocposite {

VerificationRecord make_record(std::string name, Complex computed, Complex expected,
                               double tol) {
  VerificationRecord rec;
  rec.name = std::move(name);
  rec.computed = computed;
  rec.expected = expected;
  rec.abs_err = std::abs(computed - expected);
  rec.tol = tol;
  rec.pass = std::isfinite(rec.abs_err) && rec.abs_err <= tol;
  return rec;
}

void finalize(VerificationReport& report) {
  std::sort(report.records.begin(), report.records.end(),
            [](const VerificationRecord& a, const VerificationRecord& b) {
              return a.name < b.name;
            });
  report.total = static_cast<int>(report.records.size());
  report.passed = 0;
  for (const auto& rec : report.records)
    if (rec.pass) ++report.passed;
}

}  // namespace mocposite
