#pragma once

// Machine-readable verification reports. The writer is hand-rolled so the
// byte layout is fully deterministic: fixed key order, floats at 17
// significant digits, no timestamps.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "renorm/version.hpp"

namespace renorm {

struct Check {
  std::string name;
  std::string law;  // which composition/inequality law the check instantiates
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct InputDigest {
  std::string path;
  std::string digest;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::vector<InputDigest> inputs;
  std::optional<std::uint64_t> seed;
  double tolerance = 0.0;
  std::string error;  // non-empty for verdict "error"

  bool pass() const {
    if (!error.empty()) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string verdict() const { return error.empty() ? (pass() ? "pass" : "fail") : "error"; }
};

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

// FNV-1a over the file bytes; enough to pin inputs in the provenance block.
inline std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "fnv1a:%016" PRIx64, h);
  return buf;
}

inline void write_report(std::ostream& os, const Report& r) {
  using detail::format_double;
  using detail::json_escape;
  os << "{\n";
  os << "  \"command\": \"" << json_escape(r.command) << "\",\n";
  os << "  \"verdict\": \"" << r.verdict() << "\",\n";
  if (!r.error.empty()) os << "  \"error\": \"" << json_escape(r.error) << "\",\n";
  os << "  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const Check& c = r.checks[i];
    os << (i ? ",\n" : "\n");
    os << "    {\"name\": \"" << json_escape(c.name) << "\", \"law\": \"" << json_escape(c.law)
       << "\", \"expected\": " << format_double(c.expected)
       << ", \"actual\": " << format_double(c.actual)
       << ", \"tolerance\": " << format_double(c.tolerance) << ", \"status\": \""
       << (c.pass ? "pass" : "fail") << "\"";
    if (!c.note.empty()) os << ", \"note\": \"" << json_escape(c.note) << "\"";
    os << "}";
  }
  os << (r.checks.empty() ? "]" : "\n  ]") << ",\n";
  os << "  \"provenance\": {\n";
  os << "    \"tool\": \"" << kToolVersion << "\",\n";
  os << "    \"tolerance\": " << format_double(r.tolerance) << ",\n";
  if (r.seed) os << "    \"seed\": " << *r.seed << ",\n";
  os << "    \"inputs\": [";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    os << (i ? ", " : "") << "{\"path\": \"" << json_escape(r.inputs[i].path)
       << "\", \"digest\": \"" << r.inputs[i].digest << "\"}";
  }
  os << "]\n  }\n}\n";
}

}  // namespace renorm
