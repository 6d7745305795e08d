#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dyncx::cli {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = 1;
  bool table = false;
  bool timing = false;
};

// One command's output. `body` holds command-specific fields; a "steps"
// array of flat objects becomes the table in --table mode.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json& body() { return body_; }
  void flag(const std::string& name, bool ok) { flags_.emplace_back(name, ok); }
  bool ok() const;
  void set_wall_ms(double ms) { wall_ms_ = ms; }

  Json to_json(const Options& opt) const;
  void print(std::ostream& out, const Options& opt) const;

 private:
  std::string command_;
  Json body_ = Json::object();
  std::vector<std::pair<std::string, bool>> flags_;
  double wall_ms_ = -1;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace dyncx::cli
