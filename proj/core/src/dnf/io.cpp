#include "dyncx/dnf/io.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "dyncx/util/text.hpp"

namespace dyncx::dnf {

FirstDnfInstance DnfFile::first_instance() const {
  FirstDnfInstance f{instance, {}};
  if (order) {
    f.order = *order;
  } else {
    f.order.resize(instance.clauses.size());
    std::iota(f.order.begin(), f.order.end(), std::size_t{0});
  }
  return f;
}

DnfFile parse_dnf(std::istream& in) {
  text::LineReader reader(in, "c");
  text::LineTokens t;
  if (!reader.next(t)) throw ParseError(reader.line_no() + 1, 1, "missing 'p dnf' header");
  if (t.token(0) != "p") t.fail(0, "expected 'p dnf <n> <m> <w>' header");
  t.expect_size(5);
  if (t.token(1) != "dnf") t.fail(1, "expected format 'dnf'");

  DnfFile file;
  const std::size_t n = t.index(2);
  const std::size_t m = t.index(3);
  file.declared_width = t.index(4);
  file.instance.num_vars = n;
  file.instance.assignment.assign(n, false);

  bool have_assignment = false;
  while (reader.next(t)) {
    std::string_view head = t.token(0);
    if (head == "a") {
      if (have_assignment) t.fail(0, "duplicate assignment line");
      std::vector<bool> bits = t.bits_from(1);
      if (bits.size() != n) t.fail_line("assignment has " + std::to_string(bits.size()) + " bits, expected " + std::to_string(n));
      file.instance.assignment = std::move(bits);
      have_assignment = true;
    } else if (head == "o") {
      if (file.order) t.fail(0, "duplicate order line");
      std::vector<std::size_t> order;
      std::vector<bool> seen(m, false);
      for (std::size_t i = 1; i < t.size(); ++i) {
        std::size_t c = t.index(i);
        if (c == 0 || c > m) t.fail(i, "clause number out of range 1.." + std::to_string(m));
        if (seen[c - 1]) t.fail(i, "clause listed twice in order");
        seen[c - 1] = true;
        order.push_back(c - 1);
      }
      if (order.size() != m) t.fail_line("order must list all " + std::to_string(m) + " clauses");
      file.order = std::move(order);
    } else {
      if (file.instance.clauses.size() == m) t.fail(0, "more clause lines than the header declares");
      Clause clause;
      std::vector<bool> used(n, false);
      bool terminated = false;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (terminated) t.fail(i, "tokens after clause terminator 0");
        std::int64_t lit = t.integer(i);
        if (lit == 0) {
          terminated = true;
          continue;
        }
        std::size_t var = static_cast<std::size_t>(std::llabs(lit));
        if (var > n) t.fail(i, "variable " + std::to_string(var) + " exceeds n=" + std::to_string(n));
        if (used[var - 1]) t.fail(i, "variable " + std::to_string(var) + " repeated in clause");
        used[var - 1] = true;
        clause.push_back(Literal{static_cast<std::uint32_t>(var - 1), lit > 0});
      }
      if (!terminated) t.fail(t.size(), "clause line must end with 0");
      if (clause.size() > file.declared_width) {
        t.fail_line("clause has " + std::to_string(clause.size()) + " literals, declared width is " +
                    std::to_string(file.declared_width));
      }
      file.instance.clauses.push_back(std::move(clause));
    }
  }
  if (file.instance.clauses.size() != m) {
    throw ParseError(reader.line_no(), 1,
                     "header declares " + std::to_string(m) + " clauses, found " +
                         std::to_string(file.instance.clauses.size()));
  }
  return file;
}

DnfFile parse_dnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dnf(in);
}

void write_dnf(std::ostream& out, const DnfInstance& inst, std::size_t declared_width,
               const std::vector<std::size_t>* order) {
  out << "p dnf " << inst.num_vars << ' ' << inst.clauses.size() << ' ' << declared_width << '\n';
  for (const Clause& c : inst.clauses) {
    for (const Literal& l : c) out << (l.positive ? "" : "-") << (l.var + 1) << ' ';
    out << "0\n";
  }
  if (inst.num_vars > 0) out << "a " << text::bits_to_string(inst.assignment) << '\n';
  if (order) {
    out << 'o';
    for (std::size_t j : *order) out << ' ' << (j + 1);
    out << '\n';
  }
}

}  // namespace dyncx::dnf
