#include "liecurv/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "liecurv/errors.hpp"

namespace liecurv {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "jsonl") return OutputFormat::Jsonl;
  throw ConfigError("unknown output format '" + name + "' (expected csv or jsonl)");
}

int curvature_sign(double k, double zero_tol) {
  if (std::isnan(k) || std::abs(k) <= zero_tol) return 0;
  return k > 0 ? 1 : -1;
}

char sign_char(int sign) { return sign < 0 ? '-' : (sign > 0 ? '+' : '0'); }

ScanReport make_scan_report(std::vector<CurvatureBreakdown> breakdowns, double zero_tol) {
  ScanReport report;
  report.zero_tol = zero_tol;
  report.records.reserve(breakdowns.size());
  for (std::size_t i = 0; i < breakdowns.size(); ++i) {
    const double k = breakdowns[i].sectional;
    const int s = curvature_sign(k, zero_tol);
    auto& sum = report.summary;
    if (s < 0) ++sum.negative;
    if (s == 0) ++sum.zero;
    if (s > 0) ++sum.positive;
    if (i == 0) {
      sum.min_sectional = sum.max_sectional = k;
    } else {
      sum.min_sectional = std::min(sum.min_sectional, k);
      sum.max_sectional = std::max(sum.max_sectional, k);
    }
    report.records.push_back({i, std::move(breakdowns[i]), s});
  }
  return report;
}

void write_csv(std::ostream& out, const ScanReport& report) {
  out << "plane_id,numerator,denominator,sectional,sign";
  if (!report.records.empty())
    for (const auto& t : report.records.front().breakdown.terms) out << ',' << t.label;
  out << '\n';
  for (const auto& r : report.records) {
    const auto& b = r.breakdown;
    out << r.plane_id << ',' << format_number(b.numerator) << ',' << format_number(b.denominator) << ','
        << format_number(b.sectional) << ',' << sign_char(r.sign);
    for (const auto& t : b.terms) out << ',' << format_number(t.value);
    out << '\n';
  }
}

namespace {

std::string json_number(double v) {
  // JSON has no nan/inf literals.
  return std::isfinite(v) ? format_number(v) : "null";
}

}  // namespace

void write_jsonl(std::ostream& out, const ScanReport& report) {
  for (const auto& r : report.records) {
    const auto& b = r.breakdown;
    out << "{\"plane_id\":" << r.plane_id << ",\"numerator\":" << json_number(b.numerator)
        << ",\"denominator\":" << json_number(b.denominator) << ",\"sectional\":" << json_number(b.sectional)
        << ",\"sign\":\"" << sign_char(r.sign) << "\",\"terms\":{";
    for (std::size_t i = 0; i < b.terms.size(); ++i)
      out << (i ? "," : "") << '"' << b.terms[i].label << "\":" << json_number(b.terms[i].value);
    out << "}}\n";
  }
  const auto& s = report.summary;
  out << "{\"summary\":{\"count\":" << report.records.size() << ",\"negative\":" << s.negative
      << ",\"zero\":" << s.zero << ",\"positive\":" << s.positive << ",\"min_sectional\":"
      << json_number(s.min_sectional) << ",\"max_sectional\":" << json_number(s.max_sectional)
      << ",\"zero_tol\":" << json_number(report.zero_tol) << "}}\n";
}

void write_summary(std::ostream& out, const ScanSummary& s) {
  out << "negative " << s.negative << " zero " << s.zero << " positive " << s.positive << " min_K "
      << format_number(s.min_sectional) << " max_K " << format_number(s.max_sectional) << '\n';
}

}  // namespace liecurv
