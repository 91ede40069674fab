#include <gtest/gtest.h>

#include <random>

#include "mutate.hpp"
#include "oracle.hpp"
#include "random_formula.hpp"
#include "printers.hpp"
#include "sheffer/parser.hpp"
#include "sheffer/proof.hpp"
#include "sheffer/semantics.hpp"
#include "sheffer/transforms.hpp"

using namespace sheffer;

namespace {

Formula P(const char* text) { return parse(text); }

ProofLine ax(std::size_t i, const char* f, int schema, Substitution s) {
  return {i, P(f), AxiomStep{schema, std::move(s)}};
}
ProofLine mp(std::size_t i, const char* f, std::size_t major, std::size_t minor) {
  return {i, P(f), MpStep{major, minor}};
}
ProofLine def(std::size_t i, const char* f, Op name, const char* path, DefDirection d) {
  return {i, P(f), DefStep{name, Path::from_string(path), d}};
}

// |- p -> p from the four schemas.
Proof identity_proof() {
  return Proof{
      P("p imp p"),
      {
          ax(1, "((p or p) imp p) imp ((!p or (p or p)) imp (!p or p))", 4,
             {{"A", P("!p")}, {"B", P("p or p")}, {"C", P("p")}}),
          ax(2, "(p or p) imp p", 1, {{"A", P("p")}}),
          mp(3, "(!p or (p or p)) imp (!p or p)", 1, 2),
          ax(4, "p imp (p or p)", 2, {{"A", P("p")}, {"B", P("p")}}),
          def(5, "!p or (p or p)", Op::Imp, ".", DefDirection::Unfold),
          mp(6, "!p or p", 3, 5),
          def(7, "p imp p", Op::Imp, ".", DefDirection::Fold),
      }};
}

void expect_reject(const Proof& proof, std::size_t line, RejectReason reason) {
  CheckResult r = check_proof(proof);
  EXPECT_FALSE(r.accepted);
  EXPECT_EQ(r.line, line) << r.message;
  ASSERT_TRUE(r.reason.has_value());
  EXPECT_EQ(*r.reason, reason) << r.message;
}

}  // namespace

TEST(Axioms, Instances) {
  Formula a = P("p"), b = P("!q"), c = P("(r nor s)");
  EXPECT_EQ(axiom_instance(1, {{"A", a}}), P("(p or p) imp p"));
  EXPECT_EQ(axiom_instance(2, {{"A", a}, {"B", b}}), P("p imp (p or !q)"));
  EXPECT_EQ(axiom_instance(3, {{"A", a}, {"B", b}}), P("(p or !q) imp (!q or p)"));
  EXPECT_EQ(axiom_instance(4, {{"A", a}, {"B", b}, {"C", c}}),
            P("(!q imp (r nor s)) imp ((p or !q) imp (p or (r nor s)))"));
  EXPECT_THROW(axiom_instance(4, {{"A", a}}), MissingMetavariableError);
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(oracle::tautology(desugar(axiom_instance(
      k, {{"A", a}, {"B", b}, {"C", c}}))));
}

TEST(Axioms, Definitions) {
  Formula a = P("p"), b = P("q");
  EXPECT_EQ(definiens(Op::Imp, a, b), P("!p or q"));
  EXPECT_EQ(definiens(Op::And, a, b), P("!(!p or !q)"));
  EXPECT_EQ(definiens(Op::Iff, a, b), P("(p imp q) and (q imp p)"));
  EXPECT_EQ(definiens(Op::Nor, a, b), P("!(p or q)"));
  EXPECT_EQ(definiens(Op::Nand, a, b), P("!(p and q)"));
  EXPECT_EQ(definiens(Op::Nimp, a, b), P("!(p imp q)"));
  EXPECT_EQ(definiens(Op::Xor, a, b), P("!(p iff q)"));
  EXPECT_EQ(definiens(Op::Updown, a, b), P("p iff q"));
  EXPECT_THROW(definiens(Op::Or, a, b), Error);
}

TEST(Axioms, DefinitionsPreserveTables) {
  std::mt19937 rng(41);
  for (int i = 0; i < 1000; ++i) {
    Formula f = testgen::random_formula(rng);
    for (const Path& p : all_paths(f)) {
      const Formula& node = subformula_at(f, p);
      if (!node.is_binary() || node.op() == Op::Or) continue;
      Formula g = replace_at(f, p, definiens(node.op(), node.left(), node.right()));
      ASSERT_TRUE(is_parallel(f, g).holds) << render(f) << " @ " << p.to_string();
    }
  }
}

TEST(Checker, AcceptsHandProof) {
  CheckResult r = check_proof(identity_proof());
  EXPECT_TRUE(r.accepted) << r.message;
}

TEST(Checker, MajorPremiseMayBeUnfolded) {
  Proof proof = identity_proof();
  proof.lines.insert(proof.lines.begin() + 3,
                     def(4, "!((!p or (p or p))) or (!p or p)", Op::Imp, ".", DefDirection::Unfold));
  for (std::size_t i = 4; i < proof.lines.size(); ++i) proof.lines[i].index = i + 1;
  proof.lines[6].just = MpStep{4, 6};
  CheckResult r = check_proof(proof);
  EXPECT_TRUE(r.accepted) << r.message;
}

TEST(Checker, RejectionReasons) {
  Proof bad_axiom = identity_proof();
  bad_axiom.lines[1].formula = P("(p or p) imp !p");
  expect_reject(bad_axiom, 2, RejectReason::NotAnAxiomInstance);

  Proof extra_var = identity_proof();
  std::get<AxiomStep>(extra_var.lines[1].just).subst.emplace("B", P("q"));
  expect_reject(extra_var, 2, RejectReason::NotAnAxiomInstance);

  Proof no_schema = identity_proof();
  std::get<AxiomStep>(no_schema.lines[1].just).schema = 5;
  expect_reject(no_schema, 2, RejectReason::NotAnAxiomInstance);

  Proof forward = identity_proof();
  std::get<MpStep>(forward.lines[2].just).minor = 3;
  expect_reject(forward, 3, RejectReason::BadMPReference);

  Proof zero = identity_proof();
  std::get<MpStep>(zero.lines[5].just).major = 0;
  expect_reject(zero, 6, RejectReason::BadMPReference);

  Proof swapped = identity_proof();
  std::swap(std::get<MpStep>(swapped.lines[5].just).major,
            std::get<MpStep>(swapped.lines[5].just).minor);
  expect_reject(swapped, 6, RejectReason::MPShapeMismatch);

  Proof wrong_consequent = identity_proof();
  wrong_consequent.lines[5].formula = P("p or !p");
  expect_reject(wrong_consequent, 6, RejectReason::MPShapeMismatch);

  Proof wrong_path = identity_proof();
  std::get<DefStep>(wrong_path.lines[4].just).path = Path::from_string("R");
  expect_reject(wrong_path, 5, RejectReason::DefMismatch);

  Proof wrong_name = identity_proof();
  std::get<DefStep>(wrong_name.lines[6].just).name = Op::And;
  expect_reject(wrong_name, 7, RejectReason::DefMismatch);

  Proof first_def = identity_proof();
  first_def.lines[0].just = DefStep{Op::Imp, Path{}, DefDirection::Unfold};
  expect_reject(first_def, 1, RejectReason::DefMismatch);

  Proof goal = identity_proof();
  goal.goal = P("q imp q");
  expect_reject(goal, 7, RejectReason::GoalMismatch);

  Proof numbering = identity_proof();
  numbering.lines[3].index = 9;
  expect_reject(numbering, 4, RejectReason::BadLineIndex);

  Proof premise = identity_proof();
  premise.lines[3].just = PremiseStep{};
  expect_reject(premise, 4, RejectReason::UnsupportedJustification);

  expect_reject(Proof{P("p"), {}}, 0, RejectReason::GoalMismatch);
}

TEST(Prover, SmallTautologies) {
  for (const char* text : {"p or !p", "p imp p", "!(p and !p)", "(p and q) imp p", "p iff !!p",
                           "((p imp q) and (q imp r)) imp (p imp r)", "(p nor q) iff !(p or q)",
                           "(p xor q) xiff !(p iff q)", "!(p xor p)"}) {
    Proof proof = prove_tautology(P(text));
    EXPECT_EQ(proof.goal, P(text));
    CheckResult r = check_proof(proof);
    EXPECT_TRUE(r.accepted) << text << ": line " << r.line << ": " << r.message;
  }
}

TEST(Prover, RandomTautologies) {
  std::mt19937 rng(43);
  testgen::Shape shape;
  shape.max_atoms = 3;
  shape.max_depth = 4;
  int proved = 0;
  while (proved < 40) {
    Formula f = testgen::random_formula(rng, shape);
    if (!oracle::tautology(f)) f = bin(Op::Or, f, neg(f));
    Proof proof = prove_tautology(f);
    CheckResult r = check_proof(proof);
    ASSERT_TRUE(r.accepted) << render(f) << ": line " << r.line << ": " << r.message;
    ++proved;
  }
}

TEST(Prover, RejectsNonTautology) {
  try {
    prove_tautology(P("p imp q"));
    FAIL();
  } catch (const NotATautologyError& e) {
    EXPECT_FALSE(evaluate(P("p imp q"), e.counterexample()));
  }
}

TEST(Prover, AtomLimit) {
  std::string big = "a0";
  for (int i = 1; i <= 10; ++i) big = "(" + big + " or a" + std::to_string(i) + ")";
  Formula f = bin(Op::Or, P(big.c_str()), neg(P(big.c_str())));
  EXPECT_THROW(prove_tautology(f), TooManyAtomsError);
}

TEST(Prover, MainResults) {
  auto goals = main_result_goals();
  EXPECT_EQ(goals[0], P("(p ↓ ¬(q ↓ r)) ↔ (¬(p ↓ q) ↓ r)"));
  EXPECT_EQ(goals[2], P("(p ↓ ¬(q ↑ r)) ↔ (¬(p ↓ q) ↑ ¬(p ↓ r))"));
  auto proofs = prove_main_results();
  for (std::size_t i = 0; i < proofs.size(); ++i) {
    EXPECT_EQ(proofs[i].goal, goals[i]);
    EXPECT_TRUE(oracle::tautology(desugar(goals[i])));
    CheckResult r = check_proof(proofs[i]);
    EXPECT_TRUE(r.accepted) << i << ": line " << r.line << ": " << r.message;
  }
}

TEST(Checker, MutantsRejectedAtTheirLine) {
  Proof base = prove_tautology(P("(p and q) imp (q and p)"));
  ASSERT_TRUE(check_proof(base).accepted);
  std::mt19937 rng(47);
  for (int i = 0; i < 60; ++i) {
    mutate::Mutant m = i % 3 == 0   ? mutate::swap_operator(base, rng)
                       : i % 3 == 1 ? mutate::dangling_mp(base, rng)
                                    : mutate::wrong_def_path(base, rng);
    CheckResult r = check_proof(m.proof);
    EXPECT_FALSE(r.accepted) << m.kind;
    EXPECT_EQ(r.line, m.expected_line) << m.kind << ": " << r.message;
  }
}
