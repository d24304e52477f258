#include "zetaverify/report.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

namespace zv {

namespace {

// 17 significant digits: enough to round-trip any binary64 exactly.
std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

IdentityReport make_identity_report(
    std::string name, std::vector<std::pair<std::string, double>> params,
    const Complex& lhs, const Complex& rhs, double tolerance,
    double tail_bound, double elapsed_ms) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_error = std::abs(lhs - rhs);
  r.rel_error = r.abs_error / std::max(std::abs(rhs), 1e-300);
  r.tolerance = tolerance;
  r.tail_bound = tail_bound;
  r.elapsed_ms = elapsed_ms;
  r.pass = std::abs(rhs) > 1e-9 ? r.rel_error <= tolerance
                                : r.abs_error <= tolerance;
  return r;
}

std::string to_json_line(const IdentityReport& r) {
  std::string out = "{\"name\":\"" + json_escape(r.name) + "\",\"params\":{";
  bool first = true;
  for (const auto& [key, value] : r.params) {
    if (!first) out += ",";
    first = false;
    out += "\"" + json_escape(key) + "\":" + num17(value);
  }
  out += "},\"lhs_re\":" + num17(r.lhs.real()) +
         ",\"lhs_im\":" + num17(r.lhs.imag()) +
         ",\"rhs_re\":" + num17(r.rhs.real()) +
         ",\"rhs_im\":" + num17(r.rhs.imag()) +
         ",\"abs_error\":" + num17(r.abs_error) +
         ",\"rel_error\":" + num17(r.rel_error) +
         ",\"tail_bound\":" + num17(r.tail_bound) +
         ",\"tolerance\":" + num17(r.tolerance) +
         ",\"elapsed_ms\":" + num17(r.elapsed_ms) +
         ",\"pass\":" + (r.pass ? "true" : "false") + "}";
  return out;
}

std::string csv_header() {
  return "name,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,rel_error,"
         "tail_bound,tolerance,elapsed_ms,pass";
}

std::string to_csv_row(const IdentityReport& r) {
  std::string params;
  for (const auto& [key, value] : r.params) {
    if (!params.empty()) params += ";";
    params += key + "=" + num17(value);
  }
  return r.name + "," + params + "," + num17(r.lhs.real()) + "," +
         num17(r.lhs.imag()) + "," + num17(r.rhs.real()) + "," +
         num17(r.rhs.imag()) + "," + num17(r.abs_error) + "," +
         num17(r.rel_error) + "," + num17(r.tail_bound) + "," +
         num17(r.tolerance) + "," + num17(r.elapsed_ms) + "," +
         (r.pass ? "true" : "false");
}

std::string table_header() {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-18s %-26s %13s %13s %9s %8s %9s %5s",
                "check", "params", "lhs", "rhs", "rel_err", "tol", "ms",
                "ok");
  std::string line(buf);
  return line + "\n" + std::string(line.size(), '-');
}

std::string to_table_row(const IdentityReport& r) {
  std::string params;
  for (const auto& [key, value] : r.params) {
    if (!params.empty()) params += " ";
    char kb[48];
    std::snprintf(kb, sizeof(kb), "%s=%.4g", key.c_str(), value);
    params += kb;
  }
  if (params.size() > 26) params = params.substr(0, 23) + "...";
  char buf[220];
  std::snprintf(buf, sizeof(buf),
                "%-18s %-26s %13.6g %13.6g %9.2e %8.1e %9.1f %5s",
                r.name.c_str(), params.c_str(), r.lhs.real(), r.rhs.real(),
                r.rel_error, r.tolerance, r.elapsed_ms,
                r.pass ? "PASS" : "FAIL");
  return buf;
}

}  // namespace zv
