#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "lawmeas/theory.hpp"

namespace lawmeas {

namespace {

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// One comment-stripped source line with position tracking. Columns are
// 1-based bytes into the original line, so diagnostics point at the file.
struct LineCursor {
  std::string_view text;
  int line = 0;
  std::size_t pos = 0;

  [[noreturn]] void fail(const char* kind, const std::string& msg,
                         std::size_t at) const {
    throw ParseError(kind, line, static_cast<int>(at) + 1, msg);
  }
  [[noreturn]] void fail(const char* kind, const std::string& msg) const {
    fail(kind, msg, pos);
  }

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return at_end() ? '\0' : text[pos]; }

  void skip_spaces() {
    while (!at_end() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) {
      fail("lexical", "expected '" + std::string(1, c) + "' " + what);
    }
  }

  std::string_view parse_name() {
    if (!name_start(peek())) fail("lexical", "expected a name");
    const std::size_t start = pos;
    while (!at_end() && name_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  int parse_number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("lexical", "expected a number");
    }
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) fail("lexical", "arity out of range");
      ++pos;
    }
    return static_cast<int>(v);
  }

  void expect_end() {
    skip_spaces();
    if (!at_end()) fail("lexical", "unexpected trailing characters");
  }
};

// Variable naming scope of a single equation: first appearance across the
// left side fixes indices; names new to the right side are unbound.
struct VarScope {
  std::vector<std::string> names;
  bool rhs = false;

  int lookup(std::string_view name, LineCursor& cur, std::size_t at) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
      if (names[i] == name) return i;
    }
    if (rhs) {
      cur.fail("unbound variable",
               "variable '" + std::string(name) + "' does not appear on the left side",
               at);
    }
    names.emplace_back(name);
    return static_cast<int>(names.size()) - 1;
  }
};

Term parse_term(LineCursor& cur, const TheoryPresentation& th, VarScope& vars) {
  cur.skip_spaces();
  const std::size_t name_at = cur.pos;
  const std::string_view name = cur.parse_name();

  if (cur.peek() == '(') {
    const auto op = th.op_index(name);
    if (!op) {
      cur.fail("unknown operation", "operation '" + std::string(name) +
               "' is not declared", name_at);
    }
    cur.consume('(');
    std::vector<Term> args;
    args.push_back(parse_term(cur, th, vars));
    cur.skip_spaces();
    while (cur.consume(',')) {
      args.push_back(parse_term(cur, th, vars));
      cur.skip_spaces();
    }
    cur.expect(')', "to close the argument list");
    const int arity = th.ops[*op].arity;
    if (static_cast<int>(args.size()) != arity) {
      cur.fail("arity mismatch",
               "operation '" + std::string(name) + "' expects " +
                   std::to_string(arity) + " argument(s), got " +
                   std::to_string(args.size()),
               name_at);
    }
    return Term::app(*op, std::move(args));
  }

  if (const auto op = th.op_index(name)) {
    if (th.ops[*op].arity != 0) {
      cur.fail("arity mismatch",
               "operation '" + std::string(name) + "' of arity " +
                   std::to_string(th.ops[*op].arity) + " used without arguments",
               name_at);
    }
    return Term::app(*op, {});
  }
  return Term::var(vars.lookup(name, cur, name_at));
}

// Comment-stripped nonblank lines with original line numbers.
std::vector<LineCursor> significant_lines(std::string_view text,
                                          std::vector<std::string>& storage) {
  std::vector<std::pair<int, std::string>> kept;
  int line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    if (raw.find_first_not_of(" \t") != std::string_view::npos) {
      kept.emplace_back(line, std::string(raw));
    }
    if (end == text.size()) break;
    start = end + 1;
    ++line;
  }
  std::vector<LineCursor> cursors;
  storage.reserve(kept.size());
  for (auto& [num, content] : kept) {
    storage.push_back(std::move(content));
    cursors.push_back(LineCursor{storage.back(), num, 0});
  }
  return cursors;
}

}  // namespace

TheoryPresentation parse_theory(std::string_view text) {
  std::vector<std::string> storage;
  std::vector<LineCursor> lines = significant_lines(text, storage);
  int last_line = 0;
  for (const auto& l : lines) last_line = std::max(last_line, l.line);

  auto missing = [&](const char* what) -> ParseError {
    return ParseError("lexical", last_line + 1, 1, std::string("expected ") + what);
  };
  if (lines.empty()) throw missing("a 'theory' header");

  TheoryPresentation th;
  std::size_t at = 0;

  {
    LineCursor& cur = lines[at++];
    cur.skip_spaces();
    const std::size_t kw_at = cur.pos;
    if (cur.parse_name() != "theory") {
      cur.fail("lexical", "expected the 'theory' header", kw_at);
    }
    cur.skip_spaces();
    th.name = std::string(cur.parse_name());
    cur.expect_end();
  }

  if (at >= lines.size()) throw missing("an 'ops:' line");
  {
    LineCursor& cur = lines[at++];
    cur.skip_spaces();
    const std::size_t kw_at = cur.pos;
    if (cur.parse_name() != "ops") cur.fail("lexical", "expected 'ops:'", kw_at);
    cur.expect(':', "after 'ops'");
    cur.skip_spaces();
    while (!cur.at_end()) {
      const std::size_t name_at = cur.pos;
      OpSymbol op;
      op.name = std::string(cur.parse_name());
      cur.expect('/', "between operation name and arity");
      op.arity = cur.parse_number();
      if (th.op_index(op.name)) {
        cur.fail("lexical", "duplicate operation '" + op.name + "'", name_at);
      }
      th.ops.push_back(std::move(op));
      cur.skip_spaces();
      if (cur.at_end()) break;
      cur.expect(',', "between operations");
      cur.skip_spaces();
    }
  }

  while (at < lines.size()) {
    LineCursor& cur = lines[at++];
    cur.skip_spaces();
    const std::size_t kw_at = cur.pos;
    if (cur.parse_name() != "eq") cur.fail("lexical", "expected 'eq:'", kw_at);
    cur.expect(':', "after 'eq'");

    Equation eq;
    VarScope vars;
    eq.lhs = parse_term(cur, th, vars);
    cur.skip_spaces();
    cur.expect('=', "between the two sides of the equation");
    vars.rhs = true;
    eq.rhs = parse_term(cur, th, vars);
    cur.expect_end();

    eq.var_count = static_cast<int>(vars.names.size());
    eq.var_names = std::move(vars.names);
    eq.label = "eq" + std::to_string(th.equations.size() + 1);
    th.equations.push_back(std::move(eq));
  }

  return th;
}

namespace {

void print_term(const Term& t, const TheoryPresentation& th,
                const std::vector<std::string>& var_names, std::string& out) {
  if (t.kind == Term::Kind::Var) {
    if (t.index < static_cast<int>(var_names.size())) {
      out += var_names[t.index];
    } else {
      out += "v" + std::to_string(t.index);
    }
    return;
  }
  out += th.ops[t.index].name;
  if (t.args.empty()) return;
  out += "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ", ";
    print_term(t.args[i], th, var_names, out);
  }
  out += ")";
}

}  // namespace

std::string print_theory(const TheoryPresentation& th) {
  std::string out = "theory " + th.name + "\n";
  if (th.ops.empty()) {
    out += "ops:\n";
  } else {
    out += "ops: ";
    for (std::size_t i = 0; i < th.ops.size(); ++i) {
      if (i) out += ", ";
      out += th.ops[i].name + "/" + std::to_string(th.ops[i].arity);
    }
    out += "\n";
  }
  for (const auto& eq : th.equations) {
    out += "eq: ";
    print_term(eq.lhs, th, eq.var_names, out);
    out += " = ";
    print_term(eq.rhs, th, eq.var_names, out);
    out += "\n";
  }
  return out;
}

}  // namespace lawmeas
