// Proof generation by Kalmár's construction.
//
// The goal is first unfolded to a ¬/∨ formula P. Inside the generator
// "X → Y" always means the primitive ¬X ∨ Y; every axiom line is followed by
// DEF lines that unfold its IMP nodes, so modus ponens always sees ¬F ∨ G.
//
// For an assignment v over atoms p1..pn let l_i be p_i or ¬p_i, and
//   C = ¬l1 ∨ (¬l2 ∨ (... ∨ ¬ln)),  H = ¬C.
// For each subformula G of P we derive H → G^v (G^v is G when v makes G
// true, ¬G otherwise). H → P is then curried into l1 → (l2 → ... → P), and
// the atoms are discharged outermost first with excluded middle.

#include <unordered_map>

#include "sheffer/parser.hpp"
#include "sheffer/proof.hpp"
#include "sheffer/transforms.hpp"

namespace sheffer {

namespace {

using Line = std::size_t;

Formula implies(const Formula& a, const Formula& b) { return lor(neg(a), b); }

// Parts of a primitive implication ¬A ∨ B.
const Formula& antecedent(const Formula& f) { return f.left().child(); }
const Formula& consequent(const Formula& f) { return f.right(); }

struct Rewrite {
  Op name;
  Path path;
};

std::optional<Path> first_defined(const Formula& f) {
  for (const Path& p : all_paths(f)) {
    const Formula& g = subformula_at(f, p);
    if (g.is_binary() && g.op() != Op::Or) return p;
  }
  return std::nullopt;
}

// Outermost-first unfolding of every defined connective.
std::vector<Rewrite> unfolding_chain(const Formula& f, Formula& primitive) {
  std::vector<Rewrite> chain;
  primitive = f;
  while (auto path = first_defined(primitive)) {
    const Formula& node = subformula_at(primitive, *path);
    chain.push_back({node.op(), *path});
    primitive = replace_at(primitive, *path, definiens(node.op(), node.left(), node.right()));
  }
  return chain;
}

class Builder {
 public:
  const Formula& formula(Line l) const { return lines_[l - 1].formula; }
  std::size_t size() const { return lines_.size(); }
  std::vector<ProofLine> take() { return std::move(lines_); }

  std::optional<Line> find(const Formula& f) const {
    auto it = proven_.find(f);
    if (it == proven_.end()) return std::nullopt;
    return it->second;
  }

  Line push(Formula f, Justification just) {
    if (lines_.size() >= kMaxProofLines) {
      throw ProofTooLargeError("proof exceeds " + std::to_string(kMaxProofLines) + " lines");
    }
    const Line index = lines_.size() + 1;
    proven_.emplace(f, index);
    lines_.push_back(ProofLine{index, std::move(f), std::move(just)});
    return index;
  }

  Line axiom(int schema, Substitution subst) {
    Formula instance = axiom_instance(schema, subst);
    Formula primitive = instance;
    auto chain = unfolding_chain(instance, primitive);
    if (auto cached = find(primitive)) return *cached;
    Line cur = push(instance, AxiomStep{schema, std::move(subst)});
    for (const Rewrite& step : chain) {
      const Formula& prev = formula(cur);
      const Formula& node = subformula_at(prev, step.path);
      Formula next = replace_at(prev, step.path, definiens(step.name, node.left(), node.right()));
      cur = push(std::move(next), DefStep{step.name, step.path, DefDirection::Unfold});
    }
    return cur;
  }

  Line mp(Line major, Line minor) {
    const Formula& m = formula(major);
    if (!m.is_binary(Op::Or) || !m.left().is_not() || !(antecedent(m) == formula(minor))) {
      throw std::logic_error("generator produced a malformed modus ponens");
    }
    if (auto cached = find(consequent(m))) return *cached;
    return push(consequent(m), MpStep{major, minor});
  }

 private:
  std::vector<ProofLine> lines_;
  std::unordered_map<Formula, Line, FormulaHash> proven_;
};

// Derived rules of the ¬/∨ system. Each returns the line of its conclusion.
class Lemmas {
 public:
  explicit Lemmas(Builder& b) : b_(b) {}

  Builder& builder() { return b_; }

  Line ax1(const Formula& a) { return b_.axiom(1, {{"A", a}}); }
  Line ax2(const Formula& a, const Formula& b) { return b_.axiom(2, {{"A", a}, {"B", b}}); }
  Line ax3(const Formula& a, const Formula& b) { return b_.axiom(3, {{"A", a}, {"B", b}}); }
  Line ax4(const Formula& a, const Formula& b, const Formula& c) {
    return b_.axiom(4, {{"A", a}, {"B", b}, {"C", c}});
  }

  // A → B, B → C  ⊢  A → C
  Line syll(Line ab, Line bc) {
    const Formula a = antecedent(b_.formula(ab));
    const Formula b = consequent(b_.formula(ab));
    const Formula c = consequent(b_.formula(bc));
    if (auto l = b_.find(implies(a, c))) return *l;
    Line s = ax4(neg(a), b, c);
    return b_.mp(b_.mp(s, bc), ab);
  }

  // B → C  ⊢  A ∨ B → A ∨ C
  Line sum_left(Line bc, const Formula& a) {
    const Formula f = b_.formula(bc);
    return b_.mp(ax4(a, antecedent(f), consequent(f)), bc);
  }

  // B → C  ⊢  B ∨ A → C ∨ A
  Line sum_right(Line bc, const Formula& a) {
    const Formula b = antecedent(b_.formula(bc));
    const Formula c = consequent(b_.formula(bc));
    if (auto l = b_.find(implies(lor(b, a), lor(c, a)))) return *l;
    Line inner = syll(ax3(b, a), sum_left(bc, a));
    return syll(inner, ax3(a, c));
  }

  // A → C, B → C  ⊢  A ∨ B → C
  Line cases(Line ac, Line bc) {
    const Formula a = antecedent(b_.formula(ac));
    const Formula b = antecedent(b_.formula(bc));
    const Formula c = consequent(b_.formula(ac));
    if (auto l = b_.find(implies(lor(a, b), c))) return *l;
    Line widened = syll(sum_right(ac, b), sum_left(bc, c));
    return syll(widened, ax1(c));
  }

  Line identity(const Formula& a) {
    if (auto l = b_.find(implies(a, a))) return *l;
    return syll(ax2(a, a), ax1(a));
  }

  // A ∨ ¬A
  Line excluded_middle(const Formula& a) {
    if (auto l = b_.find(lor(a, neg(a)))) return *l;
    return b_.mp(ax3(neg(a), a), identity(a));
  }

  // A → ¬¬A is literally ¬A ∨ ¬¬A.
  Line double_neg_intro(const Formula& a) { return excluded_middle(neg(a)); }

  // ¬¬A → A
  Line double_neg_elim(const Formula& a) {
    const Formula nnn = neg(neg(neg(a)));
    if (auto l = b_.find(implies(neg(neg(a)), a))) return *l;
    Line widened = sum_left(double_neg_intro(neg(a)), a);
    Line flipped = b_.mp(widened, excluded_middle(a));
    return b_.mp(ax3(a, nnn), flipped);
  }

  // A → B ∨ A
  Line add_right(const Formula& a, const Formula& b) {
    if (auto l = b_.find(implies(a, lor(b, a)))) return *l;
    return syll(ax2(a, b), ax3(a, b));
  }

  // A ∨ (B ∨ C) → (A ∨ B) ∨ C
  Line assoc(const Formula& a, const Formula& b, const Formula& c) {
    const Formula ab = lor(a, b);
    const Formula target = lor(ab, c);
    if (auto l = b_.find(implies(lor(a, lor(b, c)), target))) return *l;
    Line from_a = syll(ax2(a, b), ax2(ab, c));
    Line from_b = syll(add_right(b, a), ax2(ab, c));
    Line from_c = add_right(c, ab);
    return cases(from_a, cases(from_b, from_c));
  }

  // (A ∨ B) ∨ C → A ∨ (B ∨ C)
  Line assoc_rev(const Formula& a, const Formula& b, const Formula& c) {
    const Formula bc = lor(b, c);
    if (auto l = b_.find(implies(lor(lor(a, b), c), lor(a, bc)))) return *l;
    Line from_a = ax2(a, bc);
    Line from_b = syll(ax2(b, c), add_right(bc, a));
    Line from_c = syll(add_right(c, b), add_right(bc, a));
    return cases(cases(from_a, from_b), from_c);
  }

  // A → B  ⊢  ¬B → ¬A
  Line contrapose(Line ab) {
    const Formula a = antecedent(b_.formula(ab));
    const Formula b = consequent(b_.formula(ab));
    Line swapped = b_.mp(ax3(neg(a), b), ab);
    return b_.mp(sum_right(double_neg_intro(b), neg(a)), swapped);
  }

  // Closed X → Y applied under the curried prefix l1 → (l2 → ... → X).
  Line under_prefix(Line line, Line closed, const std::vector<Formula>& prefix) {
    Line lifted = closed;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
      lifted = sum_left(lifted, neg(*it));
    }
    return b_.mp(lifted, line);
  }

 private:
  Builder& b_;
};

class Kalmar {
 public:
  Kalmar(Lemmas& lemmas, const std::vector<std::string>& atoms, const Assignment& v)
      : lm_(lemmas),
        b_(lemmas.builder()),
        v_(v),
        literals_(make_literals(atoms, v)),
        clauses_(make_clauses(literals_)),
        hyp_(neg(clauses_.front())) {
    for (std::size_t i = 0; i < atoms.size(); ++i) literal_of_[atoms[i]] = i;
  }

  // H → G^v
  Line derive(const Formula& g) {
    switch (g.kind()) {
      case Formula::Kind::Atom:
        return hypothesis(literal_of_.at(g.name()));
      case Formula::Kind::Not: {
        const Formula& k = g.child();
        Line inner = derive(k);
        if (!evaluate(k, v_)) return inner;  // H → ¬K is already H → G
        return lm_.syll(inner, lm_.double_neg_intro(k));
      }
      case Formula::Kind::Binary: {
        if (g.op() != Op::Or) throw std::logic_error("derive expects a ¬/∨ formula");
        const Formula& k = g.left();
        const Formula& m = g.right();
        if (evaluate(k, v_)) return lm_.syll(derive(k), lm_.ax2(k, m));
        if (evaluate(m, v_)) return lm_.syll(derive(m), lm_.add_right(m, k));
        // From H → ¬K and H → ¬M: K → ¬H, M → ¬H, so K ∨ M → ¬H.
        Line k_refutes = b_.mp(lm_.ax3(neg(hyp_), neg(k)), derive(k));
        Line m_refutes = b_.mp(lm_.ax3(neg(hyp_), neg(m)), derive(m));
        Line both = lm_.cases(k_refutes, m_refutes);
        return b_.mp(lm_.ax3(neg(g), neg(hyp_)), both);
      }
    }
    throw std::logic_error("unreachable");
  }

  // Turns H → P into l1 → (l2 → ... → (ln → P)).
  Line curry(Line line, const Formula& p) {
    std::vector<Formula> prefix;
    for (std::size_t j = 0; j < literals_.size(); ++j) {
      const Formula& lit = literals_[j];
      if (j + 1 == literals_.size()) {
        // ¬¬l → P  to  l → P
        Line closed = lm_.sum_right(lm_.double_neg_elim(neg(lit)), p);
        line = lm_.under_prefix(line, closed, prefix);
      } else {
        const Formula& c = clauses_[j];
        const Formula& rest = clauses_[j + 1];
        line = lm_.under_prefix(line, lm_.sum_right(lm_.double_neg_elim(c), p), prefix);
        line = lm_.under_prefix(line, lm_.assoc_rev(neg(lit), rest, p), prefix);
        Line reneg = lm_.sum_left(lm_.sum_right(lm_.double_neg_intro(rest), p), neg(lit));
        line = lm_.under_prefix(line, reneg, prefix);
      }
      prefix.push_back(lit);
    }
    return line;
  }

 private:
  static std::vector<Formula> make_literals(const std::vector<std::string>& atoms,
                                            const Assignment& v) {
    std::vector<Formula> out;
    for (const auto& name : atoms) out.push_back(v.at(name) ? atom(name) : neg(atom(name)));
    return out;
  }

  // clauses[i] = ¬l_i ∨ (¬l_{i+1} ∨ ... ∨ ¬l_n)
  static std::vector<Formula> make_clauses(const std::vector<Formula>& literals) {
    std::vector<Formula> reversed{neg(literals.back())};
    for (std::size_t i = literals.size() - 1; i-- > 0;) {
      reversed.push_back(lor(neg(literals[i]), reversed.back()));
    }
    return {reversed.rbegin(), reversed.rend()};
  }

  // ¬l_i → C by walking down the clause, then contraposed to H → l_i.
  Line hypothesis(std::size_t i) {
    if (auto l = b_.find(implies(hyp_, literals_[i]))) return *l;
    Line in_clause = member(i, 0);
    return lm_.syll(lm_.contrapose(in_clause), lm_.double_neg_elim(literals_[i]));
  }

  // ¬l_i → clauses_[start]
  Line member(std::size_t i, std::size_t start) {
    const Formula nl = neg(literals_[i]);
    if (start == i) {
      if (start + 1 == literals_.size()) return lm_.identity(nl);
      return lm_.ax2(nl, clauses_[start + 1]);
    }
    return lm_.syll(member(i, start + 1), lm_.add_right(clauses_[start + 1], neg(literals_[start])));
  }

  Lemmas& lm_;
  Builder& b_;
  const Assignment& v_;
  std::vector<Formula> literals_;
  std::vector<Formula> clauses_;
  Formula hyp_;
  std::unordered_map<std::string, std::size_t> literal_of_;
};

// A line whose formula equals that of `line`, placed last in the proof.
Line restate_last(Lemmas& lm, Line line) {
  Builder& b = lm.builder();
  if (line == b.size()) return line;
  const Formula f = b.formula(line);
  Line id = lm.identity(f);
  return b.push(f, MpStep{id, line});
}

}  // namespace

Proof prove_tautology(const Formula& f) {
  const auto atoms = atoms_of(f);
  if (atoms.size() > kMaxProofAtoms) throw TooManyAtomsError(atoms.size(), kMaxProofAtoms);

  const Formula fo = desugar(f);
  const std::size_t rows = std::size_t{1} << atoms.size();
  for (std::size_t row = 0; row < rows; ++row) {
    Assignment a = row_assignment(atoms, row);
    if (!evaluate(fo, a)) throw NotATautologyError(std::move(a));
  }

  Formula primitive = f;
  const auto chain = unfolding_chain(f, primitive);

  Builder builder;
  Lemmas lemmas(builder);

  // Index bit k holds the value of atoms[k].
  const std::size_t n = atoms.size();
  std::vector<Line> curried(rows);
  for (std::size_t mask = 0; mask < rows; ++mask) {
    Assignment v;
    for (std::size_t k = 0; k < n; ++k) v[atoms[k]] = ((mask >> k) & 1U) != 0;
    Kalmar kalmar(lemmas, atoms, v);
    Line line = kalmar.derive(primitive);
    curried[mask] = kalmar.curry(line, primitive);
  }

  // Discharge atoms[0], then atoms[1], ...: (p → X) and (¬p → X) give X.
  for (std::size_t k = 0; k < n; ++k) {
    const Formula p = atom(atoms[k]);
    std::vector<Line> next(curried.size() / 2);
    for (std::size_t rest = 0; rest < next.size(); ++rest) {
      Line pos = curried[(rest << 1) | 1U];
      Line negc = curried[rest << 1];
      Line split = lemmas.cases(pos, negc);
      next[rest] = builder.mp(split, lemmas.excluded_middle(p));
    }
    curried = std::move(next);
  }

  Line last = restate_last(lemmas, curried.front());
  std::vector<Formula> stages{f};
  for (const Rewrite& step : chain) {
    const Formula& g = stages.back();
    const Formula& node = subformula_at(g, step.path);
    stages.push_back(replace_at(g, step.path, definiens(step.name, node.left(), node.right())));
  }
  for (std::size_t i = chain.size(); i-- > 0;) {
    last = builder.push(stages[i], DefStep{chain[i].name, chain[i].path, DefDirection::Fold});
  }
  (void)last;

  return Proof{f, builder.take()};
}

std::array<Proof, 4> prove_main_results() {
  auto goals = main_result_goals();
  return {prove_tautology(goals[0]), prove_tautology(goals[1]), prove_tautology(goals[2]),
          prove_tautology(goals[3])};
}

}  // namespace sheffer
