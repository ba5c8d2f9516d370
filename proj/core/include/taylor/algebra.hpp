#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taylor/subset.hpp"

namespace taylor {

/// Flat value table of a k-ary operation, indexed row-major by argument
/// tuples in lexicographic order with the leftmost argument most significant.
class OperationTable {
 public:
  OperationTable() = default;
  OperationTable(std::string symbol, unsigned arity, std::vector<Elem> table)
      : symbol_(std::move(symbol)), arity_(arity), table_(std::move(table)) {}

  const std::string& symbol() const noexcept { return symbol_; }
  unsigned arity() const noexcept { return arity_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  Elem operator()(std::span<const Elem> args) const { return table_[index_of(args)]; }
  Elem at(std::size_t flat_index) const { return table_[flat_index]; }

  std::size_t index_of(std::span<const Elem> args) const {
    std::size_t idx = 0;
    for (Elem a : args) idx = idx * base_ + a;
    return idx;
  }
  /// Number of carrier elements the table was built for; set by FiniteAlgebra.
  std::size_t base() const noexcept { return base_; }

  friend bool operator==(const OperationTable& a, const OperationTable& b) {
    return a.symbol_ == b.symbol_ && a.arity_ == b.arity_ && a.table_ == b.table_;
  }

 private:
  friend class FiniteAlgebra;
  std::string symbol_;
  unsigned arity_ = 0;
  std::vector<Elem> table_;
  std::size_t base_ = 0;
};

using Signature = std::vector<std::pair<std::string, unsigned>>;

/// A finite algebra on {0, ..., size-1}. Construction does not validate; use
/// validate_algebra() on untrusted input.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(std::string name, std::size_t size, std::vector<OperationTable> ops);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return size_; }
  const std::vector<OperationTable>& ops() const noexcept { return ops_; }
  const OperationTable& op(std::size_t i) const { return ops_[i]; }
  std::size_t op_count() const noexcept { return ops_.size(); }

  Signature signature() const;
  bool same_signature(const FiniteAlgebra& other) const { return signature() == other.signature(); }
  /// Index of the operation with the given symbol, or op_count() if absent.
  std::size_t find_op(const std::string& symbol) const;

  FiniteAlgebra renamed(std::string name) const {
    FiniteAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.name_ == b.name_ && a.size_ == b.size_ && a.ops_ == b.ops_;
  }

 private:
  std::string name_;
  std::size_t size_ = 0;
  std::vector<OperationTable> ops_;
};

std::size_t int_pow(std::size_t base, unsigned exp);

struct ValidationIssue {
  enum class Kind { TableLength, OutOfRange, NotIdempotent, DuplicateSymbol, ZeroArity, EmptyCarrier };
  Kind kind;
  std::string symbol;
  /// Offending element (NotIdempotent) or flat table index (OutOfRange).
  std::size_t where = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const noexcept { return issues.empty(); }
  bool idempotent() const noexcept;
};

ValidationReport validate_algebra(const FiniteAlgebra& alg);

/// Throws Error with the first issue if the algebra is invalid.
void require_valid(const FiniteAlgebra& alg);

}  // namespace taylor
