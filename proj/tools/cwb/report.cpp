#include "report.hpp"

#include <sstream>

namespace cwb::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalar(const Json& arr) {
  for (const auto& v : arr)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

void emit(const Json& obj, int indent, std::ostringstream& out);

void emit_value(const std::string& key, const Json& v, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    emit(v, indent + 2, out);
  } else if (v.is_array() && all_scalar(v)) {
    out << pad << key << ":";
    for (const auto& x : v) out << ' ' << scalar(x);
    out << "\n";
  } else if (v.is_array()) {
    out << pad << key << ":\n";
    for (const auto& x : v) {
      if (x.is_object()) {
        out << pad << "  -\n";
        emit(x, indent + 4, out);
      } else {
        out << pad << "  - " << scalar(x) << "\n";
      }
    }
  } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
    out << pad << key << ":\n";
    std::istringstream lines(v.get<std::string>());
    for (std::string line; std::getline(lines, line);) out << pad << "  " << line << "\n";
  } else {
    out << pad << key << ": " << scalar(v) << "\n";
  }
}

void emit(const Json& obj, int indent, std::ostringstream& out) {
  for (const auto& [key, v] : obj.items()) emit_value(key, v, indent, out);
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  emit(report, 0, out);
  return out.str();
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  return render_text(report);
}

}  // namespace cwb::cli
