#include <sstream>
#include <string>

#include "bdc_cli/cli.hpp"

namespace bdc::cli {
namespace {

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !flat(x))) return false;
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void emit(std::ostringstream& out, const Json& j, int indent);

void emit_entry(std::ostringstream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (flat(v)) {
    out << pad << key << ": " << scalar(v) << '\n';
    return;
  }
  if (v.is_array() && v.empty()) {
    out << pad << key << ": (none)\n";
    return;
  }
  out << pad << key << ":\n";
  emit(out, v, indent + 2);
}

void emit(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) emit_entry(out, k, v, indent);
    return;
  }
  // array of objects or nested arrays: numbered items
  std::size_t i = 0;
  for (const auto& x : j) {
    if (flat(x)) {
      out << pad << "- " << scalar(x) << '\n';
    } else {
      out << pad << "[" << i << "]\n";
      emit(out, x, indent + 2);
    }
    ++i;
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  out << "bdc " << report.value("command", std::string("?")) << '\n';
  if (report.contains("error")) {
    const Json& e = report["error"];
    out << "error: " << e.value("code", std::string("?")) << '\n' << e.value("message", std::string()) << '\n';
    return out.str();
  }
  for (const auto& [k, v] : report.items()) {
    if (k == "bdc_report" || k == "command") continue;
    emit_entry(out, k, v, 0);
  }
  return out.str();
}

}  // namespace bdc::cli
