#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solv/liealg.hpp"
#include "solv/structure.hpp"

namespace solv {

/// One summand of a bracket right-hand side, kept symbolically so that
/// printing and re-parsing reproduces the document field-for-field.
struct BracketTerm {
  int sign = 1;                       // from the +/- chain
  std::optional<Rat> number;          // literal coefficient, absent = 1
  std::optional<std::string> param;   // parameter coefficient
  std::size_t label = 0;              // basis index

  bool operator==(const BracketTerm&) const = default;
};

struct BracketLine {
  std::size_t i = 0, j = 0;  // as written, i != j
  std::vector<BracketTerm> terms;

  bool operator==(const BracketLine&) const = default;
};

struct AlgebraDocument {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, Rat>> params;  // declaration order
  std::vector<BracketLine> brackets;
  std::vector<std::pair<std::string, std::string>> meta;  // key, rest of line

  bool operator==(const AlgebraDocument&) const = default;

  std::optional<Rat> param_value(const std::string& name) const;
  /// Structure constants with parameters substituted.
  LieAlgebra to_algebra() const;
};

struct Diagnostic {
  std::size_t line = 0, column = 0;  // 1-based
  std::string message;

  std::string str() const;
};

struct ParseResult {
  std::optional<AlgebraDocument> doc;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return doc.has_value() && diagnostics.empty(); }
};

/// Line-oriented parser for the `.lie` format:
///   algebra <name> dim <n>
///   param <ident> = <rational>
///   basis <label> ...
///   [<label>, <label>] = <term> (+|-) <term> ...
///   meta <key> <value...>
/// Rationals only; a decimal literal is an error with a fix-it hint.
ParseResult parse(const std::string& text);

/// Canonical printer; parse(print(doc)).doc == doc.
std::string print(const AlgebraDocument& doc);

/// Convenience: parse a file from disk. A missing/unreadable file is a
/// diagnostic on line 0.
ParseResult parse_file(const std::string& path);

}  // namespace solv
