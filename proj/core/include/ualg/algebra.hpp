#ifndef UALG_ALGEBRA_HPP
#define UALG_ALGEBRA_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/partition.hpp"

namespace ualg {

/// Tuple of elements of a fixed algebra; the arity is the length.
using Tuple = std::vector<Element>;

struct OpSymbol {
  std::string name;
  int arity = 0;
  bool operator==(const OpSymbol&) const = default;
};

/// Ordered list of operation symbols. Names are unique, arities >= 0.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> symbols);

  int op_count() const { return static_cast<int>(symbols_.size()); }
  const OpSymbol& symbol(int op) const { return symbols_[static_cast<std::size_t>(op)]; }
  const std::vector<OpSymbol>& symbols() const { return symbols_; }
  int index_of(std::string_view name) const;  // -1 when absent

  bool operator==(const Signature&) const = default;

 private:
  std::vector<OpSymbol> symbols_;
};

/// Raised by the algebra file parser; carries the 1-based input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// A finite algebra: universe {0..n-1} plus one flat table per operation
/// symbol, row-major with the leftmost argument varying slowest. Values are
/// immutable after construction, so instances are safe to share.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, int size, Signature signature,
                std::vector<std::vector<Element>> tables);

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  const Signature& signature() const { return signature_; }
  int op_count() const { return signature_.op_count(); }
  int arity(int op) const { return signature_.symbol(op).arity; }
  const std::string& op_name(int op) const { return signature_.symbol(op).name; }
  std::span<const Element> table(int op) const { return tables_[static_cast<std::size_t>(op)]; }

  /// Table lookup by operation index; arguments must be in range.
  Element eval(int op, std::span<const Element> args) const;

  /// Table lookup by symbol name; throws on unknown symbol or arity mismatch.
  Element eval(std::string_view symbol, std::span<const Element> args) const;

  /// Componentwise application to tuples of a common arity.
  Tuple eval_componentwise(int op, std::span<const Tuple> args) const;
  Tuple eval_componentwise(std::string_view symbol, std::span<const Tuple> args) const;

  bool operator==(const FiniteAlgebra&) const = default;

 private:
  std::string name_;
  int size_ = 0;
  Signature signature_;
  std::vector<std::vector<Element>> tables_;
};

/// Parses the algebra file format:
///
///   # comment lines start with '#'
///   algebra <name>
///   size <n>
///   op <name> <arity>
///   <n^arity whitespace-separated integers>
///   ... (more op blocks)
FiniteAlgebra parse_algebra(std::string_view text);

/// Canonical text form; parse_algebra(serialize_algebra(a)) == a.
std::string serialize_algebra(const FiniteAlgebra& a);

/// Quotient by a congruence. Classes are indexed 0..m-1 by their sorted
/// minimal representatives. Throws when `theta` is not a congruence.
FiniteAlgebra quotient_algebra(const FiniteAlgebra& a, const Partition& theta);

/// Named constructions: "paper-z6", "paper-b", "cyclic-<k>" (1 <= k <= 32),
/// "klein4". Throws on unknown names.
FiniteAlgebra builtin_algebra(std::string_view name);

}  // namespace ualg

#endif  // UALG_ALGEBRA_HPP
