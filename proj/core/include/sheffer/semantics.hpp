#pragma once

// Truth-functional semantics: evaluation, truth tables laid out with the
// all-ones row first, and the tautology / contradiction / parallel /
// perpendicular decisions built on them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sheffer/formula.hpp"

namespace sheffer {

using Assignment = std::map<std::string, bool>;

/// Largest atom count accepted by any table-based operation (2^24 rows).
inline constexpr std::size_t kMaxTableAtoms = 24;

/// Output of `op` for inputs (x, y).
bool apply_op(Op op, bool x, bool y);

/// Throws MissingAtomError if `a` has no value for some atom of f.
bool evaluate(const Formula& f, const Assignment& a);

/// Row `row` of a table over `atoms`: atom k gets bit (n-1-k) of (2^n - 1 - row).
Assignment row_assignment(const std::vector<std::string>& atoms, std::size_t row);

struct TruthColumn {
  Path path;
  std::vector<std::uint8_t> values;  // one 0/1 per row
};

struct TruthTable {
  std::vector<std::string> atom_order;
  std::vector<Assignment> rows;
  /// One column per subformula occurrence in reading order: a negation
  /// precedes its operand, a binary node sits between its operands.
  std::vector<TruthColumn> columns;
  std::size_t final_index = 0;

  const TruthColumn& final_column() const { return columns[final_index]; }
  std::size_t row_count() const { return rows.size(); }
};

/// Throws TooManyAtomsError above kMaxTableAtoms.
TruthTable truth_table(const Formula& f);

/// One printed column per atom occurrence or binary connective, in reading
/// order. A run of negations in front of a token is folded into that token:
/// the column shows the value of the outermost negation.
struct TokenColumn {
  std::string label;         // atom name or connective symbol, prefixed by its negations
  std::size_t column_index;  // into TruthTable::columns
};

std::vector<TokenColumn> token_layout(const Formula& f, const TruthTable& table,
                                      bool unicode = true);

bool is_tautology(const Formula& f);
bool is_contradiction(const Formula& f);

struct RelationVerdict {
  bool holds = true;
  std::optional<Assignment> witness;  // first row in table order where the relation fails
};

/// Atoms of a, then the atoms of b not already present.
std::vector<std::string> combined_atoms(const Formula& a, const Formula& b);

/// Same final analysis on every assignment of the combined atoms.
RelationVerdict is_parallel(const Formula& a, const Formula& b);

/// Complementary final analysis on every assignment of the combined atoms.
RelationVerdict is_perpendicular(const Formula& a, const Formula& b);

}  // namespace sheffer
