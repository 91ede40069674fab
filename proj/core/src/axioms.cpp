#include "sheffer/parser.hpp"
#include "sheffer/proof.hpp"

namespace sheffer {

namespace {

std::string describe(const Assignment& a) {
  std::string out;
  for (const auto& [name, value] : a) {
    if (!out.empty()) out += ", ";
    out += name + "=" + (value ? "1" : "0");
  }
  return out;
}

const Formula& metavariable(const Substitution& subst, int schema, const std::string& name) {
  auto it = subst.find(name);
  if (it == subst.end()) {
    throw MissingMetavariableError("AX" + std::to_string(schema) + " needs a value for " + name);
  }
  return it->second;
}

}  // namespace

NotATautologyError::NotATautologyError(Assignment counterexample)
    : Error("not a tautology; false under {" + describe(counterexample) + "}"),
      counterexample_(std::move(counterexample)) {}

std::vector<std::string> axiom_metavariables(int schema) {
  switch (schema) {
    case 1: return {"A"};
    case 2:
    case 3: return {"A", "B"};
    case 4: return {"A", "B", "C"};
    default: throw Error("unknown axiom schema AX" + std::to_string(schema));
  }
}

Formula axiom_instance(int schema, const Substitution& subst) {
  axiom_metavariables(schema);
  const Formula& a = metavariable(subst, schema, "A");
  switch (schema) {
    case 1:
      return imp(lor(a, a), a);
    case 2:
      return imp(a, lor(a, metavariable(subst, schema, "B")));
    case 3: {
      const Formula& b = metavariable(subst, schema, "B");
      return imp(lor(a, b), lor(b, a));
    }
    default: {
      const Formula& b = metavariable(subst, schema, "B");
      const Formula& c = metavariable(subst, schema, "C");
      return imp(imp(b, c), imp(lor(a, b), lor(a, c)));
    }
  }
}

Formula definiens(Op name, const Formula& left, const Formula& right) {
  switch (name) {
    case Op::Imp: return lor(neg(left), right);
    case Op::And: return neg(lor(neg(left), neg(right)));
    case Op::Iff: return land(imp(left, right), imp(right, left));
    case Op::Nor: return neg(lor(left, right));
    case Op::Nand: return neg(land(left, right));
    case Op::Nimp: return neg(imp(left, right));
    case Op::Xor: return neg(iff(left, right));
    case Op::Updown: return iff(left, right);
    case Op::Or: break;
  }
  throw Error("OR is primitive and has no definition");
}

std::string_view reject_reason_name(RejectReason reason) {
  switch (reason) {
    case RejectReason::NotAnAxiomInstance: return "NotAnAxiomInstance";
    case RejectReason::BadMPReference: return "BadMPReference";
    case RejectReason::MPShapeMismatch: return "MPShapeMismatch";
    case RejectReason::DefMismatch: return "DefMismatch";
    case RejectReason::GoalMismatch: return "GoalMismatch";
    case RejectReason::BadLineIndex: return "BadLineIndex";
    case RejectReason::UnsupportedJustification: return "UnsupportedJustification";
  }
  return "?";
}

std::array<Formula, 4> main_result_goals() {
  return {
      parse("(p ↓ ¬(q ↓ r)) ↔ (¬(p ↓ q) ↓ r)"),
      parse("(p ↑ ¬(q ↑ r)) ↔ (¬(p ↑ q) ↑ r)"),
      parse("(p ↓ ¬(q ↑ r)) ↔ (¬(p ↓ q) ↑ ¬(p ↓ r))"),
      parse("(p ↑ ¬(q ↓ r)) ↔ (¬(p ↑ q) ↓ ¬(p ↑ r))"),
  };
}

}  // namespace sheffer
