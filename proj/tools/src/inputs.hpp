#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "dyncx/connectivity/graph.hpp"
#include "dyncx/framework/errors.hpp"
#include "dyncx/framework/update.hpp"

namespace dyncx::cli {

// Reported as "<path>:<line>:<col>: msg" with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

// Runs `parse` on the file text, prefixing ParseError positions with the
// path.
template <class F>
auto parse_file(const std::string& path, F&& parse) {
  std::string text = read_file(path);
  try {
    return parse(std::string_view(text));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Where the update stream comes from: a file, or N random updates.
struct StreamSource {
  std::string path;
  std::size_t random = 0;
};

UpdateStream load_stream(const StreamSource& src);

// Random generators used with --random.
UpdateStream random_flips(std::size_t vars, std::size_t count, std::mt19937_64& rng);
UpdateStream random_colors(std::size_t nodes, std::size_t count, std::mt19937_64& rng);
// Toggles random node pairs of a copy of g (insert when absent, delete
// when present).
UpdateStream random_edge_toggles(conn::DynamicGraph g, std::size_t count, std::mt19937_64& rng);

}  // namespace dyncx::cli
