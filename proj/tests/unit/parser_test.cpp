#include <gtest/gtest.h>

#include <random>

#include "random_formula.hpp"
#include "printers.hpp"
#include "sheffer/parser.hpp"

using namespace sheffer;

namespace {

ParseErrorKind kind_of(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseErrorKind::EmptyInput;
}

}  // namespace

TEST(Parser, ContradictionA1Prime) {
  Formula f = parse("(p ↓ ¬(q ↓ r)) ⊕ (¬(p ↓ q) ↓ r)");
  Formula p = atom("p"), q = atom("q"), r = atom("r");
  Formula expected = bin(Op::Xor, bin(Op::Nor, p, neg(bin(Op::Nor, q, r))),
                         bin(Op::Nor, neg(bin(Op::Nor, p, q)), r));
  EXPECT_EQ(f, expected);
}

TEST(Parser, RenderUnicodeA2Prime) {
  Formula f = parse("(p nand !(q nand r)) xor (!(p nand q) nand r)");
  EXPECT_EQ(render(f, Dialect::Unicode), "((p ↑ ¬(q ↑ r)) ⊕ (¬(p ↑ q) ↑ r))");
  EXPECT_EQ(render(f, Dialect::Ascii), "((p nand !(q nand r)) xor (!(p nand q) nand r))");
}

TEST(Parser, OuterParensOptional) {
  EXPECT_EQ(parse("p or q"), parse("(p or q)"));
  EXPECT_EQ(parse("((p))"), atom("p"));
}

TEST(Parser, NegationBindsTighter) {
  EXPECT_EQ(parse("!p and q"), land(neg(atom("p")), atom("q")));
  EXPECT_EQ(parse("not p and q"), parse("¬p ∧ q"));
}

TEST(Parser, ArrowSpellings) {
  EXPECT_EQ(parse("p -> q"), imp(atom("p"), atom("q")));
  EXPECT_EQ(parse("p <-> q"), iff(atom("p"), atom("q")));
  EXPECT_EQ(parse("p → q"), parse("p imp q"));
  EXPECT_EQ(parse("p ↕ q"), parse("p xiff q"));
  EXPECT_EQ(parse("p ← q"), parse("p nimp q"));
}

TEST(Parser, DialectsMix) {
  EXPECT_EQ(parse("(p ↓ q) nand ¬r"), parse("(p nor q) nand !r"));
}

TEST(Parser, Errors) {
  EXPECT_EQ(kind_of(""), ParseErrorKind::EmptyInput);
  EXPECT_EQ(kind_of("   "), ParseErrorKind::EmptyInput);
  EXPECT_EQ(kind_of("p $ q"), ParseErrorKind::UnknownToken);
  EXPECT_EQ(kind_of("(p or q"), ParseErrorKind::UnbalancedParens);
  EXPECT_EQ(kind_of("p or q)"), ParseErrorKind::UnbalancedParens);
  EXPECT_EQ(kind_of("p or q or r"), ParseErrorKind::AmbiguousChain);
  EXPECT_EQ(kind_of("(p ↓ q ↓ r)"), ParseErrorKind::AmbiguousChain);
  EXPECT_EQ(kind_of("p or"), ParseErrorKind::UnexpectedToken);
  EXPECT_EQ(kind_of("p q"), ParseErrorKind::UnexpectedToken);
  EXPECT_EQ(kind_of("()"), ParseErrorKind::UnexpectedToken);
}

TEST(Parser, ErrorPosition) {
  try {
    parse("p or q or r");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(Parser, RoundTripRandom) {
  std::mt19937 rng(5);
  for (int i = 0; i < 2000; ++i) {
    Formula f = testgen::random_formula(rng);
    ASSERT_EQ(parse(render(f, Dialect::Ascii)), f);
    ASSERT_EQ(parse(render(f, Dialect::Unicode)), f);
  }
}

TEST(Parser, RenderIsCanonical) {
  Formula f = parse("  ( p   nor !!q ) ");
  EXPECT_EQ(render(f), "(p nor !!q)");
  EXPECT_EQ(render(parse(render(f))), render(f));
}
