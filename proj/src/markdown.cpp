#include <algorithm>
#include <sstream>

#include "lclab/report.hpp"

namespace lclab {

namespace {

std::string scalar_text(const ReportJson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

bool is_scalar(const ReportJson& v) { return !v.is_object() && !v.is_array(); }

bool is_flat_array(const ReportJson& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (!is_scalar(e) && !is_flat_array(e)) return false;
  return true;
}

bool is_table(const ReportJson& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& e : v)
    if (!e.is_object()) return false;
  return true;
}

std::string cell_text(const ReportJson& v) {
  std::string s = is_scalar(v) ? scalar_text(v) : v.dump();
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

void render_table(std::ostringstream& os, const ReportJson& rows) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, _] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  os << "|";
  for (const auto& c : columns) os << " " << c << " |";
  os << "\n|";
  for (std::size_t k = 0; k < columns.size(); ++k) os << " --- |";
  os << "\n";
  for (const auto& row : rows) {
    os << "|";
    for (const auto& c : columns) os << " " << (row.contains(c) ? cell_text(row[c]) : "") << " |";
    os << "\n";
  }
  os << "\n";
}

void render_object(std::ostringstream& os, const ReportJson& obj, int level) {
  const std::string hashes(static_cast<std::size_t>(std::min(level, 6)), '#');
  bool bullets = false;
  for (const auto& [key, v] : obj.items()) {
    if (is_scalar(v) || is_flat_array(v)) {
      os << "- **" << key << "**: " << (is_scalar(v) ? scalar_text(v) : v.dump()) << "\n";
      bullets = true;
    }
  }
  if (bullets) os << "\n";
  for (const auto& [key, v] : obj.items()) {
    if (is_scalar(v) || is_flat_array(v)) continue;
    if (v.is_object()) {
      os << hashes << " " << key << "\n\n";
      render_object(os, v, level + 1);
    } else if (is_table(v) && key != "checks" && key != "tasks") {
      os << hashes << " " << key << "\n\n";
      render_table(os, v);
    } else {
      std::size_t k = 0;
      for (const auto& e : v) {
        std::string title = key + " " + std::to_string(++k);
        if (e.is_object() && e.contains("name")) title = scalar_text(e["name"]);
        else if (e.is_object() && e.contains("task")) title = scalar_text(e["task"]);
        os << hashes << " " << title << "\n\n";
        if (e.is_object()) render_object(os, e, level + 1);
        else os << "```\n" << e.dump(2) << "\n```\n\n";
      }
    }
  }
}

}  // namespace

std::string render_json(const ReportJson& report) { return report.dump(2) + "\n"; }

std::string render_markdown(const ReportJson& report) {
  std::ostringstream os;
  os << "# lclab " << report.value("command", std::string("report")) << "\n\n";
  if (report.contains("checks")) {
    os << "| check | status | instances |\n| --- | --- | --- |\n";
    for (const auto& c : report["checks"])
      os << "| " << scalar_text(c["name"]) << " | " << scalar_text(c["status"]) << " | " << c["instances"].dump() << " |\n";
    os << "\n";
  }
  if (report.contains("tasks")) {
    os << "| task | status |\n| --- | --- |\n";
    for (const auto& t : report["tasks"]) os << "| " << scalar_text(t["task"]) << " | " << scalar_text(t["status"]) << " |\n";
    os << "\n";
  }
  ReportJson body = report;
  body.erase("problem");
  render_object(os, body, 2);
  return os.str();
}

}  // namespace lclab
