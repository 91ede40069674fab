#pragma once

// Formulas over the fundamental (FO) and non-fundamental (NFO) binary
// connectives, plus negation.

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sheffer/error.hpp"

namespace sheffer {

enum class Op : std::uint8_t {
  Or,
  And,
  Imp,
  Iff,
  Nor,
  Nand,
  Nimp,  // ¬(p → q), written ←
  Xor,
  Updown,  // ↕, the replacement operator for a root ⊕; same table as Iff
};

inline constexpr std::array<Op, 9> kAllOps = {Op::Or,  Op::And,  Op::Imp,
                                              Op::Iff, Op::Nor,  Op::Nand,
                                              Op::Nimp, Op::Xor, Op::Updown};

enum class OpClass : std::uint8_t { FO, NFO };

OpClass op_class(Op op);

/// FO <-> NFO partner. Throws NoDualError for Updown.
Op dual(Op op);

/// Upper-case name used in proof files and JSON ("NOR", "UPDOWN", ...).
std::string_view op_name(Op op);
std::optional<Op> op_from_name(std::string_view name);

enum class Step : std::uint8_t { Left, Right, Child };

/// Selects one subformula occurrence, root first.
struct Path {
  std::vector<Step> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  Path then(Step s) const;

  /// "L"/"R"/"C" characters; the root path is ".".
  std::string to_string() const;
  static Path from_string(std::string_view text);

  friend bool operator==(const Path&, const Path&) = default;
};

class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Not, Binary };

  static Formula atom(std::string name);
  static Formula negation(Formula child);
  static Formula binary(Op op, Formula left, Formula right);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_not() const { return kind() == Kind::Not; }
  bool is_binary() const { return kind() == Kind::Binary; }
  bool is_binary(Op op) const;

  // Accessors below require the matching kind.
  const std::string& name() const;
  Op op() const;
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;

  std::size_t hash() const;
  /// Number of nodes.
  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  Op op = Op::Or;
  std::string name;
  std::vector<Formula> children;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 1;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline bool Formula::is_binary(Op op) const { return is_binary() && node_->op == op; }
inline const std::string& Formula::name() const { return node_->name; }
inline Op Formula::op() const { return node_->op; }
inline const Formula& Formula::child() const { return node_->children[0]; }
inline const Formula& Formula::left() const { return node_->children[0]; }
inline const Formula& Formula::right() const { return node_->children[1]; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::size_t Formula::size() const { return node_->size; }
inline std::size_t Formula::depth() const { return node_->depth; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Construction shorthands.
Formula atom(std::string name);
Formula neg(Formula f);
Formula bin(Op op, Formula l, Formula r);
Formula lor(Formula l, Formula r);
Formula land(Formula l, Formula r);
Formula imp(Formula l, Formula r);
Formula iff(Formula l, Formula r);

bool is_valid_atom_name(std::string_view name);

enum class Language : std::uint8_t { FoOnly, NfoOnly, Mixed, Atomic };
std::string_view language_name(Language lang);

/// Language class from the binary operators only; negation never matters.
Language language_of(const Formula& f);

/// Distinct atom names in order of first occurrence (preorder, left to right).
std::vector<std::string> atoms_of(const Formula& f);

/// Throws PathError if the path does not apply to f.
const Formula& subformula_at(const Formula& f, const Path& path);
bool is_valid_path(const Formula& f, const Path& path);
Formula replace_at(const Formula& f, const Path& path, Formula replacement);

/// Every valid path in f, preorder.
std::vector<Path> all_paths(const Formula& f);

}  // namespace sheffer
