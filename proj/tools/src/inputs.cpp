#include "inputs.hpp"

#include <fstream>
#include <sstream>

namespace dyncx::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

UpdateStream load_stream(const StreamSource& src) {
  if (!src.path.empty()) {
    return parse_file(src.path, [](std::string_view text) { return parse_update_stream(text); });
  }
  return {};
}

UpdateStream random_flips(std::size_t vars, std::size_t count, std::mt19937_64& rng) {
  UpdateStream out;
  if (vars == 0) return out;
  std::uniform_int_distribution<std::size_t> var(0, vars - 1);
  std::bernoulli_distribution bit(0.5);
  for (std::size_t i = 0; i < count; ++i) out.push_back(VarSet{var(rng), bit(rng)});
  return out;
}

UpdateStream random_colors(std::size_t nodes, std::size_t count, std::mt19937_64& rng) {
  UpdateStream out;
  if (nodes == 0) return out;
  std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
  std::bernoulli_distribution white(0.5);
  for (std::size_t i = 0; i < count; ++i) out.push_back(ColorSet{node(rng), color_from_bit(white(rng))});
  return out;
}

UpdateStream random_edge_toggles(conn::DynamicGraph g, std::size_t count, std::mt19937_64& rng) {
  UpdateStream out;
  const std::size_t n = g.num_nodes();
  if (n < 2) return out;
  std::uniform_int_distribution<std::size_t> node(0, n - 1);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t u = node(rng), v = node(rng);
    while (v == u) v = node(rng);
    Edge e = Edge{u, v}.normalized();
    const bool insert = !g.contains(e);
    if (insert) {
      g.insert(e);
    } else {
      g.erase(e);
    }
    out.push_back(EdgeUpdate{insert, e.u, e.v});
  }
  return out;
}

}  // namespace dyncx::cli
