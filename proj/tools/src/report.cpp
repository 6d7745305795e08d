#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace dyncx::cli {
namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void print_table(std::ostream& out, const Json& rows) {
  if (!rows.is_array() || rows.empty() || !rows.front().is_object()) return;
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? cell(row[cols[c]]) : "-");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << (c ? "  " : "");
      if (c + 1 < line.size()) {
        out << std::left << std::setw(static_cast<int>(width[c])) << line[c];
      } else {
        out << line[c];
      }
    }
    out << '\n';
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

}  // namespace

bool Report::ok() const {
  return std::all_of(flags_.begin(), flags_.end(), [](const auto& f) { return f.second; });
}

Json Report::to_json(const Options& opt) const {
  Json j;
  j["schema"] = 1;
  j["command"] = command_;
  j["seed"] = opt.seed;
  for (const auto& [k, v] : body_.items()) j[k] = v;
  Json flags = Json::object();
  for (const auto& [name, ok] : flags_) flags[name] = ok;
  j["flags"] = flags;
  j["pass"] = ok();
  if (opt.timing && wall_ms_ >= 0) j["wall_ms"] = wall_ms_;
  return j;
}

void Report::print(std::ostream& out, const Options& opt) const {
  if (!opt.table) {
    out << to_json(opt).dump(2) << '\n';
    return;
  }
  out << "# " << command_ << " (seed " << opt.seed << ")\n";
  for (const auto& [k, v] : body_.items()) {
    if (v.is_array() || v.is_object()) continue;
    out << k << ": " << cell(v) << '\n';
  }
  for (const auto& [k, v] : body_.items()) {
    if (!v.is_array()) continue;
    out << '\n';
    print_table(out, v);
  }
  out << '\n';
  for (const auto& [name, ok] : flags_) out << (ok ? "PASS " : "FAIL ") << name << '\n';
  if (opt.timing && wall_ms_ >= 0) out << "wall_ms: " << wall_ms_ << '\n';
}

}  // namespace dyncx::cli
