#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "taylor/algebra.hpp"
#include "taylor/csp.hpp"
#include "taylor/error.hpp"

namespace taylor::cli {

/// Malformed input, with a 1-based position in the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An input file could not be read.
class InputError : public Error {
  using Error::Error;
};

/// Algebra blocks:
///   algebra <name>
///   size <n>
///   op <symbol> <arity>
///   <n^arity integers, leftmost argument most significant>
///   end
/// `#` starts a comment. Tables are validated while parsing.
std::vector<FiniteAlgebra> parse_algebras(const std::string& text, const std::string& source = "<input>");

/// One block per algebra, one table row of `size` values per line.
std::string emit_algebra(const FiniteAlgebra& alg);
std::string emit_algebras(const std::vector<FiniteAlgebra>& algs);

struct NamedInstance {
  std::string name;
  Instance instance;
  /// Algebra blocks declared in the same file, before the instance.
  std::vector<FiniteAlgebra> algebras;
};

/// Optional algebra blocks followed by
///   instance <name>
///   var <vname> <algebra-name>
///   constraint <v1> ... <vk>
///   <k integers per line>
///   end
///   end
/// Algebra names resolve to blocks in the file, then to `library`.
NamedInstance parse_instance(const std::string& text, const std::vector<FiniteAlgebra>& library,
                             const std::string& source = "<input>");

/// Emits the algebra blocks of `inst` not found in `library`, then the instance.
std::string emit_instance(const std::string& name, const Instance& inst,
                          const std::vector<FiniteAlgebra>& library = {});

std::string read_file(const std::string& path);

}  // namespace taylor::cli
