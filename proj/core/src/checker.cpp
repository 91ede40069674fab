// Proof checker. Kept free of any dependency on the generator: definitional
// expansions are spelled out again here so a bug in one cannot hide in both.

#include <algorithm>

#include "sheffer/parser.hpp"
#include "sheffer/proof.hpp"

namespace sheffer {

namespace {

std::optional<Formula> expand(Op name, const Formula& a, const Formula& b) {
  switch (name) {
    case Op::Imp: return bin(Op::Or, neg(a), b);
    case Op::And: return neg(bin(Op::Or, neg(a), neg(b)));
    case Op::Iff: return bin(Op::And, bin(Op::Imp, a, b), bin(Op::Imp, b, a));
    case Op::Nor: return neg(bin(Op::Or, a, b));
    case Op::Nand: return neg(bin(Op::And, a, b));
    case Op::Nimp: return neg(bin(Op::Imp, a, b));
    case Op::Xor: return neg(bin(Op::Iff, a, b));
    case Op::Updown: return bin(Op::Iff, a, b);
    case Op::Or: return std::nullopt;
  }
  return std::nullopt;
}

// Rewrites the `name` node at `path` of `f` into its definiens.
std::optional<Formula> unfold_at(const Formula& f, const Path& path, Op name) {
  if (!is_valid_path(f, path)) return std::nullopt;
  const Formula& node = subformula_at(f, path);
  if (!node.is_binary(name)) return std::nullopt;
  auto body = expand(name, node.left(), node.right());
  if (!body) return std::nullopt;
  return replace_at(f, path, *body);
}

// Antecedent and consequent of F → G or ¬F ∨ G.
std::optional<std::pair<Formula, Formula>> split_implication(const Formula& f) {
  if (f.is_binary(Op::Imp)) return std::pair{f.left(), f.right()};
  if (f.is_binary(Op::Or) && f.left().is_not()) return std::pair{f.left().child(), f.right()};
  return std::nullopt;
}

CheckResult reject(std::size_t line, RejectReason reason, std::string message) {
  return CheckResult{false, line, reason, std::move(message)};
}

}  // namespace

CheckResult check_proof(const Proof& proof) {
  const auto& lines = proof.lines;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t k = i + 1;
    const ProofLine& line = lines[i];
    if (line.index != k) {
      return reject(k, RejectReason::BadLineIndex,
                    "expected line number " + std::to_string(k) + ", found " +
                        std::to_string(line.index));
    }

    if (const auto* ax = std::get_if<AxiomStep>(&line.just)) {
      if (ax->schema < 1 || ax->schema > 4) {
        return reject(k, RejectReason::NotAnAxiomInstance,
                      "no axiom schema AX" + std::to_string(ax->schema));
      }
      for (const auto& [name, value] : ax->subst) {
        auto used = axiom_metavariables(ax->schema);
        if (std::find(used.begin(), used.end(), name) == used.end()) {
          return reject(k, RejectReason::NotAnAxiomInstance,
                        "AX" + std::to_string(ax->schema) + " has no metavariable " + name);
        }
      }
      std::optional<Formula> instance;
      try {
        instance = axiom_instance(ax->schema, ax->subst);
      } catch (const MissingMetavariableError& e) {
        return reject(k, RejectReason::NotAnAxiomInstance, e.what());
      }
      if (!(*instance == line.formula)) {
        return reject(k, RejectReason::NotAnAxiomInstance,
                      "formula is not the stated instance " + render(*instance));
      }
    } else if (const auto* mp = std::get_if<MpStep>(&line.just)) {
      if (mp->major < 1 || mp->major >= k || mp->minor < 1 || mp->minor >= k) {
        return reject(k, RejectReason::BadMPReference,
                      "MP cites " + std::to_string(mp->major) + "," + std::to_string(mp->minor) +
                          "; premises must be earlier lines");
      }
      auto parts = split_implication(lines[mp->major - 1].formula);
      if (!parts) {
        return reject(k, RejectReason::MPShapeMismatch,
                      "line " + std::to_string(mp->major) + " is not an implication");
      }
      if (!(parts->first == lines[mp->minor - 1].formula)) {
        return reject(k, RejectReason::MPShapeMismatch,
                      "line " + std::to_string(mp->minor) +
                          " is not the antecedent of line " + std::to_string(mp->major));
      }
      if (!(parts->second == line.formula)) {
        return reject(k, RejectReason::MPShapeMismatch,
                      "formula is not the consequent of line " + std::to_string(mp->major));
      }
    } else if (const auto* def = std::get_if<DefStep>(&line.just)) {
      if (k == 1) {
        return reject(k, RejectReason::DefMismatch, "DEF needs a preceding line");
      }
      const Formula& prev = lines[i - 1].formula;
      const bool unfold = def->direction == DefDirection::Unfold;
      // FOLD is checked by unfolding the current line back to the previous one.
      const Formula& source = unfold ? prev : line.formula;
      const Formula& target = unfold ? line.formula : prev;
      auto rewritten = unfold_at(source, def->path, def->name);
      if (!rewritten || !(*rewritten == target)) {
        return reject(k, RejectReason::DefMismatch,
                      std::string("not a single ") + (unfold ? "UNFOLD" : "FOLD") + " of " +
                          std::string(op_name(def->name)) + " at " + def->path.to_string() +
                          " of line " + std::to_string(k - 1));
      }
    } else {
      return reject(k, RejectReason::UnsupportedJustification,
                    "premises are not allowed in a theorem proof");
    }
  }

  if (lines.empty()) {
    return reject(0, RejectReason::GoalMismatch, "proof has no lines");
  }
  if (!(lines.back().formula == proof.goal)) {
    return reject(lines.size(), RejectReason::GoalMismatch,
                  "last line does not state the goal " + render(proof.goal));
  }
  return CheckResult{true, 0, std::nullopt, "accepted"};
}

}  // namespace sheffer
