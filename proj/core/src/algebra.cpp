#include "ualg/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "ualg/lattice.hpp"

namespace ualg {

Signature::Signature(std::vector<OpSymbol> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].arity < 0) throw std::invalid_argument("negative arity");
    if (symbols_[i].name.empty()) throw std::invalid_argument("empty operation name");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[j].name == symbols_[i].name)
        throw std::invalid_argument("duplicate operation name: " + symbols_[i].name);
  }
}

int Signature::index_of(std::string_view name) const {
  for (int i = 0; i < op_count(); ++i)
    if (symbols_[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

// n^arity with overflow guard; table lengths stay well below this.
std::uint64_t table_length(int n, int arity) {
  std::uint64_t len = 1;
  for (int i = 0; i < arity; ++i) {
    len *= static_cast<std::uint64_t>(n);
    if (len > (1u << 30)) throw std::invalid_argument("operation table too large");
  }
  return len;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature signature,
                             std::vector<std::vector<Element>> tables)
    : name_(std::move(name)),
      size_(size),
      signature_(std::move(signature)),
      tables_(std::move(tables)) {
  if (size_ <= 0) throw std::invalid_argument("algebra size must be positive");
  if (tables_.size() != static_cast<std::size_t>(signature_.op_count()))
    throw std::invalid_argument("one table per operation symbol required");
  for (int op = 0; op < op_count(); ++op) {
    const auto& t = tables_[static_cast<std::size_t>(op)];
    if (t.size() != table_length(size_, arity(op)))
      throw std::invalid_argument("table length mismatch for " + op_name(op));
    for (Element v : t)
      if (v < 0 || v >= size_)
        throw std::invalid_argument("table entry out of range for " + op_name(op));
  }
}

Element FiniteAlgebra::eval(int op, std::span<const Element> args) const {
  const int m = arity(op);
  if (static_cast<int>(args.size()) != m)
    throw std::invalid_argument("arity mismatch for " + op_name(op));
  std::size_t idx = 0;
  for (Element a : args) {
    if (a < 0 || a >= size_) throw std::invalid_argument("argument out of range");
    idx = idx * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
  }
  return tables_[static_cast<std::size_t>(op)][idx];
}

Element FiniteAlgebra::eval(std::string_view symbol, std::span<const Element> args) const {
  int op = signature_.index_of(symbol);
  if (op < 0) throw std::invalid_argument("unknown operation symbol: " + std::string(symbol));
  return eval(op, args);
}

Tuple FiniteAlgebra::eval_componentwise(int op, std::span<const Tuple> args) const {
  const int m = arity(op);
  if (static_cast<int>(args.size()) != m)
    throw std::invalid_argument("arity mismatch for " + op_name(op));
  std::size_t k = args.empty() ? 0 : args[0].size();
  for (const Tuple& t : args)
    if (t.size() != k) throw std::invalid_argument("mixed tuple arities");
  if (m == 0) throw std::invalid_argument("componentwise arity 0 needs explicit length");
  Tuple out(k);
  std::vector<Element> slot(static_cast<std::size_t>(m));
  for (std::size_t c = 0; c < k; ++c) {
    for (int i = 0; i < m; ++i) slot[static_cast<std::size_t>(i)] = args[static_cast<std::size_t>(i)][c];
    out[c] = eval(op, slot);
  }
  return out;
}

Tuple FiniteAlgebra::eval_componentwise(std::string_view symbol,
                                        std::span<const Tuple> args) const {
  int op = signature_.index_of(symbol);
  if (op < 0) throw std::invalid_argument("unknown operation symbol: " + std::string(symbol));
  return eval_componentwise(op, args);
}

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  std::string cur;
  int cur_line = 1;
  bool in_comment = false;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, cur_line});
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      ++line;
      continue;
    }
    if (in_comment) continue;
    if (c == '#') {
      flush();
      in_comment = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      continue;
    }
    if (cur.empty()) cur_line = line;
    cur += c;
  }
  flush();
  return out;
}

int parse_int(const Token& tok, const char* what) {
  const std::string& s = tok.text;
  std::size_t pos = 0;
  long long value = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
  if (pos == s.size()) throw ParseError(tok.line, std::string("expected ") + what);
  for (; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9')
      throw ParseError(tok.line, std::string("expected ") + what + ", got '" + s + "'");
    value = value * 10 + (s[pos] - '0');
    if (value > (1ll << 40)) throw ParseError(tok.line, "integer too large");
  }
  return static_cast<int>(neg ? -value : value);
}

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
  std::vector<Token> toks = tokenize(text);
  std::size_t pos = 0;
  auto need = [&](const char* what) -> const Token& {
    if (pos >= toks.size()) {
      int line = toks.empty() ? 1 : toks.back().line;
      throw ParseError(line, std::string("unexpected end of input, expected ") + what);
    }
    return toks[pos++];
  };

  const Token& kw_algebra = need("'algebra'");
  if (kw_algebra.text != "algebra")
    throw ParseError(kw_algebra.line, "expected 'algebra <name>' header");
  std::string name = need("algebra name").text;

  const Token& kw_size = need("'size'");
  if (kw_size.text != "size") throw ParseError(kw_size.line, "expected 'size <n>'");
  const Token& size_tok = need("size value");
  int n = parse_int(size_tok, "size value");
  if (n <= 0) throw ParseError(size_tok.line, "size must be positive");

  std::vector<OpSymbol> symbols;
  std::vector<std::vector<Element>> tables;
  while (pos < toks.size()) {
    const Token& kw_op = need("'op'");
    if (kw_op.text != "op") throw ParseError(kw_op.line, "expected 'op <name> <arity>'");
    std::string op_name = need("operation name").text;
    const Token& arity_tok = need("operation arity");
    int arity = parse_int(arity_tok, "operation arity");
    if (arity < 0) throw ParseError(arity_tok.line, "arity must be non-negative");
    for (const OpSymbol& s : symbols)
      if (s.name == op_name) throw ParseError(kw_op.line, "duplicate operation: " + op_name);

    std::uint64_t len;
    try {
      len = table_length(n, arity);
    } catch (const std::invalid_argument&) {
      throw ParseError(arity_tok.line, "operation table too large for " + op_name);
    }
    std::vector<Element> table;
    table.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) {
      if (pos < toks.size() && toks[pos].text == "op")
        throw ParseError(toks[pos].line,
                         "table for " + op_name + " too short (expected " +
                             std::to_string(len) + " entries)");
      const Token& entry = need("table entry");
      int v = parse_int(entry, "table entry");
      if (v < 0 || v >= n)
        throw ParseError(entry.line, "table entry " + std::to_string(v) +
                                         " out of range [0, " + std::to_string(n) + ")");
      table.push_back(v);
    }
    symbols.push_back({std::move(op_name), arity});
    tables.push_back(std::move(table));
  }

  return FiniteAlgebra(std::move(name), n, Signature(std::move(symbols)), std::move(tables));
}

std::string serialize_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "algebra " << a.name() << "\n";
  out << "size " << a.size() << "\n";
  for (int op = 0; op < a.op_count(); ++op) {
    out << "op " << a.op_name(op) << " " << a.arity(op) << "\n";
    std::span<const Element> table = a.table(op);
    if (a.arity(op) <= 1) {
      for (std::size_t i = 0; i < table.size(); ++i)
        out << (i ? " " : "") << table[i];
      out << "\n";
    } else {
      // One row per value of the leftmost argument block.
      std::size_t row = table.size() / static_cast<std::size_t>(a.size());
      for (std::size_t i = 0; i < table.size(); ++i) {
        out << table[i];
        out << ((i % row == row - 1) ? "\n" : " ");
      }
    }
  }
  return out.str();
}

FiniteAlgebra quotient_algebra(const FiniteAlgebra& a, const Partition& theta) {
  if (theta.size() != a.size()) throw std::invalid_argument("partition size mismatch");
  if (!is_congruence(a, theta))
    throw std::invalid_argument("quotient by a non-congruence");

  // Class index = rank of the sorted minimal representative.
  std::vector<Element> reps;
  for (int x = 0; x < a.size(); ++x)
    if (theta.rep(x) == x) reps.push_back(x);
  std::vector<int> class_of(static_cast<std::size_t>(a.size()), -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (int x = 0; x < a.size(); ++x)
      if (theta.rep(x) == reps[i]) class_of[static_cast<std::size_t>(x)] = static_cast<int>(i);

  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<Element>> tables;
  for (int op = 0; op < a.op_count(); ++op) {
    const int arity = a.arity(op);
    std::vector<Element> table(table_length(m, arity));
    std::vector<Element> args(static_cast<std::size_t>(arity), 0);
    std::vector<Element> lifted(static_cast<std::size_t>(arity));
    for (std::size_t idx = 0;; ++idx) {
      for (int i = 0; i < arity; ++i)
        lifted[static_cast<std::size_t>(i)] = reps[static_cast<std::size_t>(args[static_cast<std::size_t>(i)])];
      table[idx] = class_of[static_cast<std::size_t>(a.eval(op, lifted))];
      int i = arity - 1;
      while (i >= 0 && args[static_cast<std::size_t>(i)] == m - 1) args[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++args[static_cast<std::size_t>(i)];
    }
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(a.name() + "/theta", m, a.signature(), std::move(tables));
}

namespace {

FiniteAlgebra make_cyclic(int k) {
  std::vector<Element> plus(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      plus[static_cast<std::size_t>(x * k + y)] = (x + y) % k;
  std::vector<Element> neg(static_cast<std::size_t>(k));
  for (int x = 0; x < k; ++x) neg[static_cast<std::size_t>(x)] = (k - x) % k;
  return FiniteAlgebra("cyclic-" + std::to_string(k), k,
                       Signature({{"+", 2}, {"-", 1}, {"0", 0}}),
                       {std::move(plus), std::move(neg), {0}});
}

FiniteAlgebra make_klein4() {
  // Elements are bit pairs; the group operation is xor.
  std::vector<Element> plus(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      plus[static_cast<std::size_t>(x * 4 + y)] = x ^ y;
  return FiniteAlgebra("klein4", 4, Signature({{"+", 2}, {"-", 1}, {"0", 0}}),
                       {std::move(plus), {0, 1, 2, 3}, {0}});
}

FiniteAlgebra make_paper_z6() {
  std::vector<Element> plus(36);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      plus[static_cast<std::size_t>(x * 6 + y)] = (x + y) % 6;
  return FiniteAlgebra("paper-z6", 6, Signature({{"+", 2}, {"s", 1}, {"c", 0}}),
                       {std::move(plus), {0, 3, 3, 0, 3, 3}, {3}});
}

FiniteAlgebra make_paper_b() {
  // The two-element subalgebra on {0,3}, re-indexed to {0,1}.
  return FiniteAlgebra("paper-b", 2, Signature({{"+", 2}, {"s", 1}, {"c", 0}}),
                       {{0, 1, 1, 0}, {0, 0}, {1}});
}

}  // namespace

FiniteAlgebra builtin_algebra(std::string_view name) {
  if (name == "paper-z6") return make_paper_z6();
  if (name == "paper-b") return make_paper_b();
  if (name == "klein4") return make_klein4();
  constexpr std::string_view prefix = "cyclic-";
  if (name.substr(0, prefix.size()) == prefix) {
    int k = 0;
    for (char c : name.substr(prefix.size())) {
      if (c < '0' || c > '9') { k = 0; break; }
      k = k * 10 + (c - '0');
    }
    if (k >= 1 && k <= 32) return make_cyclic(k);
  }
  throw std::invalid_argument("unknown builtin algebra: " + std::string(name));
}

}  // namespace ualg
