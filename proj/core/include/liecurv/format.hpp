#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "liecurv/curvature.hpp"

namespace liecurv {

/// Shortest decimal string that round-trips to the same double ("nan", "inf", "-inf" otherwise).
std::string format_number(double v);

enum class OutputFormat { Csv, Jsonl };
OutputFormat parse_format(const std::string& name);

/// -1, 0 or +1 with a zero band |k| <= zero_tol.
int curvature_sign(double k, double zero_tol);
char sign_char(int sign);

struct ScanRecord {
  std::size_t plane_id = 0;
  CurvatureBreakdown breakdown;
  int sign = 0;
};

struct ScanSummary {
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;
  double min_sectional = 0.0;
  double max_sectional = 0.0;
};

struct ScanReport {
  std::vector<ScanRecord> records;
  ScanSummary summary;
  double zero_tol = 1e-12;
};

/// Records must already be in plane-id order.
ScanReport make_scan_report(std::vector<CurvatureBreakdown> breakdowns, double zero_tol);

/// Columns: plane_id, numerator, denominator, sectional, sign, then one column per term label.
void write_csv(std::ostream& out, const ScanReport& report);
/// One JSON object per record with the CSV fields (terms as an object), then a summary object.
void write_jsonl(std::ostream& out, const ScanReport& report);
void write_summary(std::ostream& out, const ScanSummary& summary);

}  // namespace liecurv
