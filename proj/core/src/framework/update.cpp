#include "dyncx/framework/update.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "dyncx/util/text.hpp"

namespace dyncx {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Update parse_tokens(const text::LineTokens& t) {
  std::string_view kind = t.token(0);
  if (kind == "f") {
    t.expect_size(3);
    return VarSet{t.index(1), t.bit(2)};
  }
  if (kind == "e") {
    t.expect_size(4);
    std::string_view sign = t.token(1);
    if (sign != "+" && sign != "-") t.fail(1, "expected '+' or '-'");
    return EdgeUpdate{sign == "+", t.index(2), t.index(3)};
  }
  if (kind == "c") {
    t.expect_size(3);
    std::string_view c = t.token(2);
    if (c != "W" && c != "B") t.fail(2, "expected W or B");
    return ColorSet{t.index(1), c == "W" ? Color::kWhite : Color::kBlack};
  }
  if (kind == "q") {
    t.expect_size(1);
    return QueryMarker{};
  }
  t.fail(0, "unknown update token '" + std::string(kind) + "'");
}

}  // namespace

std::string format_update(const Update& update) {
  return std::visit(
      Overloaded{
          [](const VarSet& u) { return "f " + std::to_string(u.var) + (u.bit ? " 1" : " 0"); },
          [](const EdgeUpdate& u) {
            return std::string(u.insert ? "e + " : "e - ") + std::to_string(u.u) + " " + std::to_string(u.v);
          },
          [](const ColorSet& u) {
            return "c " + std::to_string(u.node) + (is_white(u.color) ? " W" : " B");
          },
          [](const QueryMarker&) { return std::string("q"); },
      },
      update);
}

Update parse_update(std::string_view line, std::size_t line_no) {
  text::LineTokens tokens{std::string(line), line_no};
  if (tokens.empty()) throw ParseError(line_no, 1, "empty update line");
  return parse_tokens(tokens);
}

UpdateStream parse_update_stream(std::istream& in) {
  UpdateStream stream;
  text::LineReader reader(in);
  text::LineTokens tokens;
  while (reader.next(tokens)) stream.push_back(parse_tokens(tokens));
  return stream;
}

UpdateStream parse_update_stream(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_update_stream(in);
}

void write_update_stream(std::ostream& out, const UpdateStream& stream) {
  for (const Update& u : stream) out << format_update(u) << '\n';
}

}  // namespace dyncx
