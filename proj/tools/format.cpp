#include "format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace taylor::cli {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

using Line = std::vector<Token>;

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    Line line;
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (c == '#') break;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r' && raw[i] != '#') ++i;
      line.push_back({raw.substr(start, i - start), line_no, start + 1});
    }
    if (!line.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Cursor {
 public:
  Cursor(std::vector<Line> lines, std::string source) : lines_(std::move(lines)), source_(std::move(source)) {}

  bool at_end() const { return row_ >= lines_.size(); }
  const Line& line() const { return lines_[row_]; }
  void next_line() { ++row_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(source_, t.line, t.column, message);
  }
  [[noreturn]] void fail_eof(const std::string& message) const {
    const std::size_t line = lines_.empty() ? 1 : lines_.back().back().line + 1;
    throw ParseError(source_, line, 1, message);
  }

  /// Current line, which must start with `keyword` and have `args` more tokens.
  const Line& expect(const std::string& keyword, std::size_t args) {
    if (at_end()) fail_eof("expected '" + keyword + "'");
    const Line& l = line();
    if (l[0].text != keyword) fail(l[0], "expected '" + keyword + "', found '" + l[0].text + "'");
    if (l.size() != args + 1)
      fail(l[0], "'" + keyword + "' takes " + std::to_string(args) + " argument" + (args == 1 ? "" : "s"));
    return l;
  }

  std::size_t number(const Token& t) const {
    std::size_t value = 0;
    const char* end = t.text.data() + t.text.size();
    const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end) fail(t, "expected a non-negative integer, found '" + t.text + "'");
    return value;
  }

 private:
  std::vector<Line> lines_;
  std::string source_;
  std::size_t row_ = 0;
};

bool is_keyword(const std::string& s) {
  return s == "algebra" || s == "size" || s == "op" || s == "end" || s == "instance" || s == "var" ||
         s == "constraint";
}

FiniteAlgebra parse_algebra_block(Cursor& cur) {
  const std::string name = cur.expect("algebra", 1)[1].text;
  cur.next_line();
  const Line& size_line = cur.expect("size", 1);
  const std::size_t n = cur.number(size_line[1]);
  if (n == 0) cur.fail(size_line[1], "the carrier must be nonempty");
  if (n > 255) cur.fail(size_line[1], "carrier size above 255 is not supported");
  cur.next_line();
  std::vector<OperationTable> ops;
  while (true) {
    if (cur.at_end()) cur.fail_eof("algebra '" + name + "' is missing 'end'");
    const Line& head = cur.line();
    if (head[0].text == "end") {
      if (head.size() != 1) cur.fail(head[1], "unexpected token after 'end'");
      cur.next_line();
      break;
    }
    const Line& op_line = cur.expect("op", 2);
    const Token sym = op_line[1];
    const std::size_t arity = cur.number(op_line[2]);
    if (arity == 0) cur.fail(op_line[2], "operations must have positive arity");
    if (arity > 8) cur.fail(op_line[2], "arity above 8 is not supported");
    for (const auto& op : ops)
      if (op.symbol() == sym.text) cur.fail(sym, "duplicate operation symbol '" + sym.text + "'");
    const std::size_t length = int_pow(n, static_cast<unsigned>(arity));
    cur.next_line();
    std::vector<Elem> table;
    table.reserve(length);
    while (table.size() < length) {
      if (cur.at_end()) cur.fail_eof("table of '" + sym.text + "' ends early");
      const Line& row = cur.line();
      if (is_keyword(row[0].text))
        cur.fail(row[0], "table of '" + sym.text + "' has " + std::to_string(table.size()) + " of " +
                             std::to_string(length) + " entries");
      for (const Token& t : row) {
        if (table.size() == length) cur.fail(t, "too many entries in the table of '" + sym.text + "'");
        const std::size_t v = cur.number(t);
        if (v >= n) cur.fail(t, "value " + t.text + " outside the carrier of size " + std::to_string(n));
        table.push_back(static_cast<Elem>(v));
      }
      cur.next_line();
    }
    ops.emplace_back(sym.text, static_cast<unsigned>(arity), std::move(table));
  }
  return FiniteAlgebra(name, n, std::move(ops));
}

std::string join_tuple(const Tuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
  return s;
}

}  // namespace

std::vector<FiniteAlgebra> parse_algebras(const std::string& text, const std::string& source) {
  Cursor cur(tokenize(text), source);
  std::vector<FiniteAlgebra> out;
  if (cur.at_end()) cur.fail_eof("no algebra block");
  while (!cur.at_end()) out.push_back(parse_algebra_block(cur));
  return out;
}

std::string emit_algebra(const FiniteAlgebra& alg) {
  std::ostringstream os;
  os << "algebra " << alg.name() << "\n";
  os << "size " << alg.size() << "\n";
  for (const auto& op : alg.ops()) {
    os << "op " << op.symbol() << " " << op.arity() << "\n";
    const auto& t = op.table();
    for (std::size_t i = 0; i < t.size(); ++i) os << t[i] << ((i + 1) % alg.size() == 0 ? "\n" : " ");
  }
  os << "end\n";
  return os.str();
}

std::string emit_algebras(const std::vector<FiniteAlgebra>& algs) {
  std::string out;
  for (std::size_t i = 0; i < algs.size(); ++i) out += (i ? "\n" : "") + emit_algebra(algs[i]);
  return out;
}

NamedInstance parse_instance(const std::string& text, const std::vector<FiniteAlgebra>& library,
                             const std::string& source) {
  Cursor cur(tokenize(text), source);
  NamedInstance out;
  while (!cur.at_end() && cur.line()[0].text == "algebra") {
    const Token at = cur.line()[1 % cur.line().size()];
    FiniteAlgebra a = parse_algebra_block(cur);
    for (const auto& b : out.algebras)
      if (b.name() == a.name()) cur.fail(at, "algebra '" + a.name() + "' declared twice");
    out.algebras.push_back(std::move(a));
  }
  out.name = cur.expect("instance", 1)[1].text;
  cur.next_line();
  auto resolve = [&](const Token& t) -> const FiniteAlgebra& {
    for (const auto& a : out.algebras)
      if (a.name() == t.text) return a;
    for (const auto& a : library)
      if (a.name() == t.text) return a;
    cur.fail(t, "unknown algebra '" + t.text + "'");
  };
  while (true) {
    if (cur.at_end()) cur.fail_eof("instance '" + out.name + "' is missing 'end'");
    const Line& head = cur.line();
    const std::string& kw = head[0].text;
    if (kw == "end") {
      if (head.size() != 1) cur.fail(head[1], "unexpected token after 'end'");
      cur.next_line();
      break;
    }
    if (kw == "var") {
      const Line& l = cur.expect("var", 2);
      if (out.instance.find_variable(l[1].text) != out.instance.variable_count())
        cur.fail(l[1], "variable '" + l[1].text + "' declared twice");
      out.instance.add_variable(l[1].text, resolve(l[2]));
      cur.next_line();
      continue;
    }
    if (kw != "constraint") cur.fail(head[0], "expected 'var', 'constraint' or 'end', found '" + kw + "'");
    const Line header = head;
    if (header.size() == 1) cur.fail(header[0], "a constraint needs at least one variable");
    std::vector<std::size_t> scope;
    for (std::size_t i = 1; i < header.size(); ++i) {
      const std::size_t v = out.instance.find_variable(header[i].text);
      if (v == out.instance.variable_count()) cur.fail(header[i], "unknown variable '" + header[i].text + "'");
      scope.push_back(v);
    }
    cur.next_line();
    std::vector<Tuple> tuples;
    while (true) {
      if (cur.at_end()) cur.fail_eof("constraint is missing 'end'");
      const Line& row = cur.line();
      if (row[0].text == "end") {
        if (row.size() != 1) cur.fail(row[1], "unexpected token after 'end'");
        cur.next_line();
        break;
      }
      if (row.size() != scope.size())
        cur.fail(row[0], "tuple has " + std::to_string(row.size()) + " values for a scope of " +
                             std::to_string(scope.size()));
      Tuple t;
      for (std::size_t i = 0; i < row.size(); ++i) {
        const std::size_t v = cur.number(row[i]);
        if (v >= out.instance.domain(scope[i]).size())
          cur.fail(row[i], "value " + row[i].text + " outside the domain of " + out.instance.name(scope[i]));
        t.push_back(static_cast<Elem>(v));
      }
      tuples.push_back(std::move(t));
      cur.next_line();
    }
    out.instance.add_constraint(std::move(scope), std::move(tuples));
  }
  if (!cur.at_end()) cur.fail(cur.line()[0], "unexpected content after the instance");
  return out;
}

std::string emit_instance(const std::string& name, const Instance& inst, const std::vector<FiniteAlgebra>& library) {
  std::ostringstream os;
  std::vector<const FiniteAlgebra*> emitted;
  for (std::size_t v = 0; v < inst.variable_count(); ++v) {
    const FiniteAlgebra& d = inst.domain(v);
    bool known = false;
    for (const auto& a : library) known = known || a == d;
    for (const auto* a : emitted) known = known || *a == d;
    if (known) continue;
    for (const auto* a : emitted)
      if (a->name() == d.name()) throw PreconditionViolated("two different domains are both named " + d.name());
    emitted.push_back(&d);
    os << emit_algebra(d) << "\n";
  }
  os << "instance " << name << "\n";
  for (std::size_t v = 0; v < inst.variable_count(); ++v)
    os << "var " << inst.name(v) << " " << inst.domain(v).name() << "\n";
  for (const auto& c : inst.constraints()) {
    os << "constraint";
    for (std::size_t v : c.scope) os << " " << inst.name(v);
    os << "\n";
    for (const auto& t : c.tuples) os << join_tuple(t) << "\n";
    os << "end\n";
  }
  os << "end\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace taylor::cli
