#include "dyncx/equiv/io.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "dyncx/util/text.hpp"

namespace dyncx::equiv {
namespace {

struct Header {
  std::size_t a = 0;
  std::size_t b = 0;
};

Header read_header(text::LineReader& reader, std::string_view format) {
  text::LineTokens t;
  std::string expect = "expected 'p " + std::string(format) + " <a> <b>' header";
  if (!reader.next(t)) throw ParseError(reader.line_no() + 1, 1, "missing 'p " + std::string(format) + "' header");
  if (t.token(0) != "p") t.fail(0, expect);
  t.expect_size(4);
  if (t.token(1) != format) t.fail(1, expect);
  return {t.index(2), t.index(3)};
}

// Sorted, duplicate-free index list from tokens [first, size).
std::vector<std::size_t> index_list(const text::LineTokens& t, std::size_t first, std::size_t bound,
                                    const char* what) {
  std::vector<std::size_t> out;
  std::set<std::size_t> seen;
  for (std::size_t i = first; i < t.size(); ++i) {
    std::size_t v = t.index(i);
    if (v >= bound) t.fail(i, std::string(what) + " " + std::to_string(v) + " out of range 0.." + std::to_string(bound - 1));
    if (!seen.insert(v).second) t.fail(i, std::string(what) + " " + std::to_string(v) + " repeated");
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_index_token(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

template <class T, class F>
T parse_text(std::string_view text, F f) {
  std::istringstream in{std::string(text)};
  return f(in);
}

}  // namespace

AllWhiteInstance parse_aw(std::istream& in) {
  text::LineReader reader(in);
  Header h = read_header(reader, "aw");
  AllWhiteInstance aw;
  aw.left = h.a;
  aw.right = h.b;
  aw.colors.assign(aw.left, Color::kWhite);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  text::LineTokens t;
  while (reader.next(t)) {
    std::string_view head = t.token(0);
    if (head == "e") {
      t.expect_size(3);
      std::size_t l = t.index(1), r = t.index(2);
      if (l >= aw.left) t.fail(1, "left node " + std::to_string(l) + " out of range");
      if (r >= aw.right) t.fail(2, "right node " + std::to_string(r) + " out of range");
      if (!seen.emplace(l, r).second) t.fail(0, "duplicate edge");
      aw.edges.emplace_back(l, r);
    } else if (head == "c") {
      t.expect_size(3);
      std::size_t l = t.index(1);
      if (l >= aw.left) t.fail(1, "left node " + std::to_string(l) + " out of range");
      std::string_view c = t.token(2);
      if (c == "W") {
        aw.colors[l] = Color::kWhite;
      } else if (c == "B") {
        aw.colors[l] = Color::kBlack;
      } else {
        t.fail(2, "color must be W or B");
      }
    } else {
      t.fail(0, "unknown line type '" + std::string(head) + "'");
    }
  }
  return aw;
}

AllWhiteInstance parse_aw(std::string_view text) {
  return parse_text<AllWhiteInstance>(text, [](std::istream& in) { return parse_aw(in); });
}

SparseOvInstance parse_ov(std::istream& in) {
  text::LineReader reader(in, "c");
  Header h = read_header(reader, "ov");
  SparseOvInstance ov;
  ov.dim = h.a;
  ov.u.assign(ov.dim, false);
  bool have_u = false;
  text::LineTokens t;
  while (reader.next(t)) {
    std::string_view head = t.token(0);
    if (head == "u") {
      if (have_u) t.fail(0, "duplicate 'u' line");
      std::vector<bool> bits = t.bits_from(1);
      if (bits.size() != ov.dim) t.fail_line("u has " + std::to_string(bits.size()) + " bits, expected " + std::to_string(ov.dim));
      ov.u = std::move(bits);
      have_u = true;
    } else if (head == "v" || is_index_token(head)) {
      if (ov.columns.size() == h.b) t.fail(0, "more columns than the header declares");
      ov.columns.push_back(index_list(t, head == "v" ? 1 : 0, ov.dim, "row"));
    } else {
      t.fail(0, "unknown line type '" + std::string(head) + "'");
    }
  }
  if (ov.columns.size() != h.b) {
    throw ParseError(reader.line_no() + 1, 1, "expected " + std::to_string(h.b) + " columns, got " + std::to_string(ov.columns.size()));
  }
  return ov;
}

SparseOvInstance parse_ov(std::string_view text) {
  return parse_text<SparseOvInstance>(text, [](std::istream& in) { return parse_ov(in); });
}

HypergraphInstance parse_hg(std::istream& in) {
  text::LineReader reader(in, "c");
  Header h = read_header(reader, "hg");
  HypergraphInstance hg;
  hg.num_nodes = h.a;
  hg.in_set.assign(hg.num_nodes, false);
  bool have_s = false;
  text::LineTokens t;
  while (reader.next(t)) {
    std::string_view head = t.token(0);
    if (head == "s") {
      if (have_s) t.fail(0, "duplicate 's' line");
      std::vector<bool> bits = t.bits_from(1);
      if (bits.size() != hg.num_nodes) t.fail_line("s has " + std::to_string(bits.size()) + " bits, expected " + std::to_string(hg.num_nodes));
      hg.in_set = std::move(bits);
      have_s = true;
    } else if (head == "e" || is_index_token(head)) {
      if (hg.edges.size() == h.b) t.fail(0, "more hyperedges than the header declares");
      std::size_t first = head == "e" ? 1 : 0;
      if (first >= t.size()) t.fail_line("empty hyperedge");
      hg.edges.push_back(index_list(t, first, hg.num_nodes, "node"));
    } else {
      t.fail(0, "unknown line type '" + std::string(head) + "'");
    }
  }
  if (hg.edges.size() != h.b) {
    throw ParseError(reader.line_no() + 1, 1, "expected " + std::to_string(h.b) + " hyperedges, got " + std::to_string(hg.edges.size()));
  }
  return hg;
}

HypergraphInstance parse_hg(std::string_view text) {
  return parse_text<HypergraphInstance>(text, [](std::istream& in) { return parse_hg(in); });
}

void write_aw(std::ostream& out, const AllWhiteInstance& aw) {
  out << "p aw " << aw.left << ' ' << aw.right << '\n';
  for (const auto& [l, r] : aw.edges) out << "e " << l << ' ' << r << '\n';
  for (std::size_t l = 0; l < aw.left; ++l) {
    if (aw.colors[l] == Color::kBlack) out << "c " << l << " B\n";
  }
}

void write_ov(std::ostream& out, const SparseOvInstance& ov) {
  out << "p ov " << ov.dim << ' ' << ov.columns.size() << '\n';
  for (const auto& col : ov.columns) {
    out << 'v';
    for (std::size_t r : col) out << ' ' << r;
    out << '\n';
  }
  out << "u " << text::bits_to_string(ov.u) << '\n';
}

void write_hg(std::ostream& out, const HypergraphInstance& h) {
  out << "p hg " << h.num_nodes << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    out << 'e';
    for (std::size_t v : e) out << ' ' << v;
    out << '\n';
  }
  out << "s " << text::bits_to_string(h.in_set) << '\n';
}

}  // namespace dyncx::equiv
