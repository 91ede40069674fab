#include <gtest/gtest.h>

#include <random>

#include "random_formula.hpp"
#include "printers.hpp"
#include "sheffer/formula.hpp"
#include "sheffer/parser.hpp"

using namespace sheffer;

TEST(Ops, ClassesAndDuals) {
  for (Op op : {Op::Or, Op::And, Op::Imp, Op::Iff}) {
    EXPECT_EQ(op_class(op), OpClass::FO);
    EXPECT_EQ(op_class(dual(op)), OpClass::NFO);
    EXPECT_EQ(dual(dual(op)), op);
  }
  EXPECT_EQ(dual(Op::Or), Op::Nor);
  EXPECT_EQ(dual(Op::And), Op::Nand);
  EXPECT_EQ(dual(Op::Imp), Op::Nimp);
  EXPECT_EQ(dual(Op::Iff), Op::Xor);
  EXPECT_EQ(op_class(Op::Updown), OpClass::NFO);
  EXPECT_THROW(dual(Op::Updown), NoDualError);
}

TEST(Ops, NamesRoundTrip) {
  for (Op op : kAllOps) EXPECT_EQ(op_from_name(op_name(op)), op);
  EXPECT_EQ(op_name(Op::Updown), "UPDOWN");
  EXPECT_FALSE(op_from_name("NOT").has_value());
}

TEST(Language, ExampleFormulas) {
  EXPECT_EQ(language_of(parse("(p ↓ ¬(q ↓ r)) ⊕ (¬(p ↓ q) ↓ r)")), Language::NfoOnly);
  EXPECT_EQ(language_of(parse("(p ∨ (q ∨ r)) ↔ ((p ∨ q) ∨ r)")), Language::FoOnly);
  EXPECT_EQ(language_of(parse("(p ∨ q) ↓ r")), Language::Mixed);
  EXPECT_EQ(language_of(parse("¬¬p")), Language::Atomic);
  EXPECT_EQ(language_of(parse("(p ↕ q)")), Language::NfoOnly);
}

TEST(Atoms, FirstOccurrenceOrder) {
  auto atoms = atoms_of(parse("((r or p) and (q or r))"));
  EXPECT_EQ(atoms, (std::vector<std::string>{"r", "p", "q"}));
}

TEST(Paths, StringForm) {
  EXPECT_EQ(Path{}.to_string(), ".");
  EXPECT_TRUE(Path::from_string(".").empty());
  Path p = Path::from_string("LRC");
  EXPECT_EQ(p.steps, (std::vector<Step>{Step::Left, Step::Right, Step::Child}));
  EXPECT_EQ(p.to_string(), "LRC");
  EXPECT_THROW(Path::from_string("LX"), PathError);
}

TEST(Paths, SubformulaAndReplace) {
  Formula f = parse("!(p nor q)");
  EXPECT_EQ(subformula_at(f, Path::from_string("CL")), atom("p"));
  EXPECT_THROW(subformula_at(f, Path::from_string("L")), PathError);
  EXPECT_FALSE(is_valid_path(f, Path::from_string("CLL")));
  EXPECT_EQ(replace_at(f, Path::from_string("CR"), atom("s")), parse("!(p nor s)"));
  EXPECT_EQ(replace_at(f, Path{}, atom("s")), atom("s"));
}

TEST(Paths, ReplaceWithOwnSubformulaIsIdentity) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Formula f = testgen::random_formula(rng);
    auto paths = all_paths(f);
    EXPECT_EQ(paths.size(), f.size());
    for (const Path& p : paths) {
      ASSERT_TRUE(is_valid_path(f, p));
      EXPECT_EQ(replace_at(f, p, subformula_at(f, p)), f);
    }
  }
}

TEST(Formula, StructuralEquality) {
  EXPECT_EQ(parse("(p and q)"), land(atom("p"), atom("q")));
  EXPECT_FALSE(parse("(p and q)") == parse("(q and p)"));
  EXPECT_FALSE(parse("!p") == parse("p"));
  Formula f = parse("((p nor q) xor !r)");
  EXPECT_EQ(f.size(), 6u);
  EXPECT_EQ(f.depth(), 3u);
}

TEST(Formula, AtomNames) {
  EXPECT_TRUE(is_valid_atom_name("p1"));
  EXPECT_TRUE(is_valid_atom_name("Xy2"));
  EXPECT_FALSE(is_valid_atom_name("x_y"));
  EXPECT_FALSE(is_valid_atom_name("or"));
  EXPECT_FALSE(is_valid_atom_name("1p"));
  EXPECT_FALSE(is_valid_atom_name(""));
  EXPECT_THROW(atom("and"), Error);
}
