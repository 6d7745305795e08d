#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dyncx {

enum class Color : std::uint8_t { kWhite, kBlack };

inline Color color_from_bit(bool white) { return white ? Color::kWhite : Color::kBlack; }
inline bool is_white(Color c) { return c == Color::kWhite; }

// Undirected edge, stored with u <= v once normalized.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge normalized() const { return u <= v ? *this : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// `f <var> <bit>`: set a variable (or vector entry, or set-membership bit).
struct VarSet {
  std::size_t var = 0;
  bool bit = false;
  friend bool operator==(const VarSet&, const VarSet&) = default;
};

// `e + u v` / `e - u v`.
struct EdgeUpdate {
  bool insert = true;
  std::size_t u = 0;
  std::size_t v = 0;
  friend bool operator==(const EdgeUpdate&, const EdgeUpdate&) = default;
};

// `c <node> <W|B>`.
struct ColorSet {
  std::size_t node = 0;
  Color color = Color::kWhite;
  friend bool operator==(const ColorSet&, const ColorSet&) = default;
};

// `q`: a step that leaves the instance unchanged.
struct QueryMarker {
  friend bool operator==(const QueryMarker&, const QueryMarker&) = default;
};

using Update = std::variant<VarSet, EdgeUpdate, ColorSet, QueryMarker>;
using UpdateStream = std::vector<Update>;

// One protocol step. std::nullopt is the preprocessing step t = 0.
using Step = std::optional<Update>;

std::string format_update(const Update& update);

// Parses a single token line. `line_no` only feeds error messages.
Update parse_update(std::string_view line, std::size_t line_no = 1);

// Blank lines and lines starting with '#' are skipped.
UpdateStream parse_update_stream(std::istream& in);
UpdateStream parse_update_stream(std::string_view text);
void write_update_stream(std::ostream& out, const UpdateStream& stream);

}  // namespace dyncx
