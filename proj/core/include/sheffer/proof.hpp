#pragma once

// Hilbert-Ackermann proof kernel over ¬ and ∨.
//
// Axiom schemas (X → Y abbreviates ¬X ∨ Y):
//   AX1  (A ∨ A) → A
//   AX2  A → (A ∨ B)
//   AX3  (A ∨ B) → (B ∨ A)
//   AX4  (B → C) → ((A ∨ B) → (A ∨ C))
// Rules: modus ponens, and single definitional rewrites (DEF) that unfold or
// fold one defined connective at a path of the preceding line:
//   IMP     a → b   ≡  ¬a ∨ b
//   AND     a ∧ b   ≡  ¬(¬a ∨ ¬b)
//   IFF     a ↔ b   ≡  (a → b) ∧ (b → a)
//   NOR     a ↓ b   ≡  ¬(a ∨ b)
//   NAND    a ↑ b   ≡  ¬(a ∧ b)
//   NIMP    a ← b   ≡  ¬(a → b)
//   XOR     a ⊕ b   ≡  ¬(a ↔ b)
//   UPDOWN  a ↕ b   ≡  a ↔ b

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sheffer/error.hpp"
#include "sheffer/formula.hpp"
#include "sheffer/semantics.hpp"

namespace sheffer {

/// Metavariable ("A", "B", "C") -> formula.
using Substitution = std::map<std::string, Formula>;

enum class DefDirection { Unfold, Fold };

struct AxiomStep {
  int schema = 1;
  Substitution subst;
};

struct MpStep {
  std::size_t major = 0;  // line holding F → G (or ¬F ∨ G)
  std::size_t minor = 0;  // line holding F
};

struct DefStep {
  Op name = Op::Imp;
  Path path;
  DefDirection direction = DefDirection::Unfold;
};

/// Reserved; never valid in a theorem proof.
struct PremiseStep {};

using Justification = std::variant<AxiomStep, MpStep, DefStep, PremiseStep>;

struct ProofLine {
  std::size_t index = 0;  // 1-based, dense
  Formula formula;
  Justification just;
};

struct Proof {
  Formula goal;
  std::vector<ProofLine> lines;
};

class MissingMetavariableError : public Error {
 public:
  using Error::Error;
};

class NotATautologyError : public Error {
 public:
  explicit NotATautologyError(Assignment counterexample);
  const Assignment& counterexample() const { return counterexample_; }

 private:
  Assignment counterexample_;
};

class ProofTooLargeError : public Error {
 public:
  using Error::Error;
};

/// Metavariables used by each schema.
std::vector<std::string> axiom_metavariables(int schema);

/// The instance of AX<schema> under `subst`, spelled with IMP nodes.
Formula axiom_instance(int schema, const Substitution& subst);

/// The defining formula for a node `a <name> b`. Throws Error for OR.
Formula definiens(Op name, const Formula& left, const Formula& right);

enum class RejectReason {
  NotAnAxiomInstance,
  BadMPReference,
  MPShapeMismatch,
  DefMismatch,
  GoalMismatch,
  BadLineIndex,
  UnsupportedJustification,
};

std::string_view reject_reason_name(RejectReason reason);

struct CheckResult {
  bool accepted = true;
  std::size_t line = 0;  // offending line when rejected; 0 if the proof is empty
  std::optional<RejectReason> reason;
  std::string message;

  explicit operator bool() const { return accepted; }
};

/// Checks every line in order and the final line against the goal.
CheckResult check_proof(const Proof& proof);

inline constexpr std::size_t kMaxProofAtoms = 10;
inline constexpr std::size_t kMaxProofLines = 1'000'000;

/// Kalmár-style construction of a checkable proof of a tautology. Throws
/// NotATautologyError, TooManyAtomsError or ProofTooLargeError.
Proof prove_tautology(const Formula& f);

/// Goals (a)-(d): the pseudo-associativity and pseudo-distributivity
/// equivalences for ↓ and ↑.
std::array<Formula, 4> main_result_goals();

std::array<Proof, 4> prove_main_results();

}  // namespace sheffer
