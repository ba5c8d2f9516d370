#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "taylor/algebra.hpp"

namespace taylor {

struct TermNode;
/// Terms are immutable DAGs; subterms are shared, never copied.
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  enum class Kind { Variable, Apply };
  Kind kind = Kind::Variable;
  unsigned variable = 0;  // 0-based, printed as x1, x2, ...
  std::string symbol;
  std::vector<Term> args;
};

Term variable(unsigned index);
Term apply(std::string symbol, std::vector<Term> args);

/// Replaces variable i by subs[i]. Shared subterms stay shared.
Term substitute(const Term& t, const std::vector<Term>& subs);

/// One more than the largest variable index (0 for ground terms).
unsigned term_arity(const Term& t);
/// Number of distinct DAG nodes.
std::size_t term_size(const Term& t);
/// Prefix rendering, e.g. "f(x1,x2,x2)"; long terms are elided after `max_len` characters.
std::string to_string(const Term& t, std::size_t max_len = 240);

/// Value of `t` at `args`. Throws ArityMismatch for unknown symbols, wrong
/// operation arity, or too few arguments.
Elem evaluate(const Term& t, const FiniteAlgebra& alg, std::span<const Elem> args);

/// A k-ary operation on an n-element set as a flat table, optionally carrying
/// the term it was computed from.
class TermOperation {
 public:
  TermOperation() = default;
  TermOperation(unsigned arity, std::size_t n, std::vector<Elem> table, Term term = nullptr);

  static TermOperation projection(std::size_t n, unsigned arity, unsigned i);

  unsigned arity() const noexcept { return arity_; }
  std::size_t base() const noexcept { return n_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  const Term& term() const noexcept { return term_; }
  bool has_term() const noexcept { return term_ != nullptr; }

  Elem operator()(std::span<const Elem> args) const { return table_[index_of(args)]; }
  Elem operator()(std::initializer_list<Elem> args) const {
    return (*this)(std::span<const Elem>(args.begin(), args.size()));
  }
  Elem at(std::size_t flat) const { return table_[flat]; }
  std::size_t index_of(std::span<const Elem> args) const {
    std::size_t idx = 0;
    for (Elem a : args) idx = idx * n_ + a;
    return idx;
  }

  bool is_idempotent() const;
  bool is_cyclic() const;
  bool is_essential(unsigned position) const;
  /// Restriction to a subset that must be closed under this operation,
  /// renumbered in ascending order.
  TermOperation restricted(const std::vector<Elem>& elems) const;

  OperationTable as_table(std::string symbol) const { return OperationTable(std::move(symbol), arity_, table_); }

  friend bool operator==(const TermOperation& a, const TermOperation& b) {
    return a.arity_ == b.arity_ && a.n_ == b.n_ && a.table_ == b.table_;
  }
  friend bool operator<(const TermOperation& a, const TermOperation& b) { return a.table_ < b.table_; }

 private:
  unsigned arity_ = 0;
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  Term term_;
};

/// outer(inner_1, ..., inner_k); all inner operations share an arity m.
TermOperation compose(const TermOperation& outer, const std::vector<TermOperation>& inner);

/// (s ◁ t)(x_1..x_mn) = s(t(x_1..x_n), t(x_{n+1}..x_2n), ..., t(x_{(m-1)n+1}..x_mn)).
TermOperation full_composition(const TermOperation& s, const TermOperation& t);
Term full_composition(const Term& s, unsigned s_arity, const Term& t, unsigned t_arity);

/// Table of `t` as an `arity`-ary operation of `alg`, computed bottom-up over
/// the DAG. Throws ArityMismatch as evaluate().
TermOperation realize(const Term& t, const FiniteAlgebra& alg, unsigned arity);

/// The basic operation `op_index` of `alg` as a term operation.
TermOperation basic_operation(const FiniteAlgebra& alg, std::size_t op_index);

}  // namespace taylor
