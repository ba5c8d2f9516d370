#include "taylor/algebra.hpp"

#include <set>
#include <sstream>

#include "taylor/error.hpp"

namespace taylor {

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Elem e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::size_t int_pow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::size_t size, std::vector<OperationTable> ops)
    : name_(std::move(name)), size_(size), ops_(std::move(ops)) {
  for (auto& op : ops_) op.base_ = size_;
}

Signature FiniteAlgebra::signature() const {
  Signature sig;
  sig.reserve(ops_.size());
  for (const auto& op : ops_) sig.emplace_back(op.symbol(), op.arity());
  return sig;
}

std::size_t FiniteAlgebra::find_op(const std::string& symbol) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].symbol() == symbol) return i;
  return ops_.size();
}

bool ValidationReport::idempotent() const noexcept {
  for (const auto& issue : issues)
    if (issue.kind == ValidationIssue::Kind::NotIdempotent) return false;
  return true;
}

ValidationReport validate_algebra(const FiniteAlgebra& alg) {
  using Kind = ValidationIssue::Kind;
  ValidationReport report;
  const std::size_t n = alg.size();
  if (n == 0) {
    report.issues.push_back({Kind::EmptyCarrier, "", 0, "algebra has no elements"});
    return report;
  }
  std::set<std::string> seen;
  for (const auto& op : alg.ops()) {
    if (!seen.insert(op.symbol()).second)
      report.issues.push_back({Kind::DuplicateSymbol, op.symbol(), 0, "duplicate symbol " + op.symbol()});
    if (op.arity() == 0) {
      report.issues.push_back({Kind::ZeroArity, op.symbol(), 0, "operation " + op.symbol() + " has arity 0"});
      continue;
    }
    const std::size_t expected = int_pow(n, op.arity());
    if (op.table().size() != expected) {
      std::ostringstream msg;
      msg << "operation " << op.symbol() << " has " << op.table().size() << " entries, expected " << expected;
      report.issues.push_back({Kind::TableLength, op.symbol(), op.table().size(), msg.str()});
      continue;
    }
    bool range_ok = true;
    for (std::size_t i = 0; i < expected; ++i) {
      if (op.table()[i] >= n) {
        std::ostringstream msg;
        msg << "operation " << op.symbol() << " entry " << i << " = " << op.table()[i] << " out of range";
        report.issues.push_back({Kind::OutOfRange, op.symbol(), i, msg.str()});
        range_ok = false;
        break;
      }
    }
    if (!range_ok) continue;
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> args(op.arity(), a);
      Elem v = op(args);
      if (v != a) {
        std::ostringstream msg;
        msg << "operation " << op.symbol() << " is not idempotent at " << a << " (gives " << v << ")";
        report.issues.push_back({Kind::NotIdempotent, op.symbol(), a, msg.str()});
        break;
      }
    }
  }
  return report;
}

void require_valid(const FiniteAlgebra& alg) {
  auto report = validate_algebra(alg);
  if (!report.valid()) throw Error(alg.name() + ": " + report.issues.front().message);
}

}  // namespace taylor
