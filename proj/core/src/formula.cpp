#include "sheffer/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace sheffer {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

OpClass op_class(Op op) {
  switch (op) {
    case Op::Or:
    case Op::And:
    case Op::Imp:
    case Op::Iff:
      return OpClass::FO;
    default:
      return OpClass::NFO;
  }
}

Op dual(Op op) {
  switch (op) {
    case Op::Or: return Op::Nor;
    case Op::And: return Op::Nand;
    case Op::Imp: return Op::Nimp;
    case Op::Iff: return Op::Xor;
    case Op::Nor: return Op::Or;
    case Op::Nand: return Op::And;
    case Op::Nimp: return Op::Imp;
    case Op::Xor: return Op::Iff;
    case Op::Updown: break;
  }
  throw NoDualError("UPDOWN has no dual operator");
}

std::string_view op_name(Op op) {
  switch (op) {
    case Op::Or: return "OR";
    case Op::And: return "AND";
    case Op::Imp: return "IMP";
    case Op::Iff: return "IFF";
    case Op::Nor: return "NOR";
    case Op::Nand: return "NAND";
    case Op::Nimp: return "NIMP";
    case Op::Xor: return "XOR";
    case Op::Updown: return "UPDOWN";
  }
  return "?";
}

std::optional<Op> op_from_name(std::string_view name) {
  for (Op op : kAllOps) {
    if (op_name(op) == name) return op;
  }
  return std::nullopt;
}

Path Path::then(Step s) const {
  Path p = *this;
  p.steps.push_back(s);
  return p;
}

std::string Path::to_string() const {
  if (steps.empty()) return ".";
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) {
    out += s == Step::Left ? 'L' : s == Step::Right ? 'R' : 'C';
  }
  return out;
}

Path Path::from_string(std::string_view text) {
  Path p;
  if (text == "." || text.empty()) return p;
  for (char c : text) {
    switch (c) {
      case 'L': p.steps.push_back(Step::Left); break;
      case 'R': p.steps.push_back(Step::Right); break;
      case 'C': p.steps.push_back(Step::Child); break;
      default:
        throw PathError("invalid path character '" + std::string(1, c) + "' in \"" +
                        std::string(text) + "\"");
    }
  }
  return p;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw Error("invalid atom name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->hash = mix(0x51ed27, std::hash<std::string>{}(name));
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula child) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->hash = mix(0xa11ce, child.hash());
  node->size = child.size() + 1;
  node->depth = child.depth() + 1;
  node->children.push_back(std::move(child));
  return Formula(std::move(node));
}

Formula Formula::binary(Op op, Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Binary;
  node->op = op;
  node->hash = mix(mix(static_cast<std::size_t>(op) + 17, left.hash()), right.hash());
  node->size = left.size() + right.size() + 1;
  node->depth = std::max(left.depth(), right.depth()) + 1;
  node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.name() == b.name();
    case Formula::Kind::Not:
      return a.child() == b.child();
    case Formula::Kind::Binary:
      return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

Formula atom(std::string name) { return Formula::atom(std::move(name)); }
Formula neg(Formula f) { return Formula::negation(std::move(f)); }
Formula bin(Op op, Formula l, Formula r) {
  return Formula::binary(op, std::move(l), std::move(r));
}
Formula lor(Formula l, Formula r) { return bin(Op::Or, std::move(l), std::move(r)); }
Formula land(Formula l, Formula r) { return bin(Op::And, std::move(l), std::move(r)); }
Formula imp(Formula l, Formula r) { return bin(Op::Imp, std::move(l), std::move(r)); }
Formula iff(Formula l, Formula r) { return bin(Op::Iff, std::move(l), std::move(r)); }

bool is_valid_atom_name(std::string_view name) {
  static const std::unordered_set<std::string_view> reserved = {
      "not", "or", "and", "imp", "iff", "nor", "nand", "nimp", "xor", "xiff"};
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (name.empty() || !alpha(name.front())) return false;
  if (!std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || digit(c); })) {
    return false;
  }
  return !reserved.contains(name);
}

std::string_view language_name(Language lang) {
  switch (lang) {
    case Language::FoOnly: return "FO_ONLY";
    case Language::NfoOnly: return "NFO_ONLY";
    case Language::Mixed: return "MIXED";
    case Language::Atomic: return "ATOMIC";
  }
  return "?";
}

Language language_of(const Formula& f) {
  bool fo = false;
  bool nfo = false;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    switch (g->kind()) {
      case Formula::Kind::Atom:
        break;
      case Formula::Kind::Not:
        stack.push_back(&g->child());
        break;
      case Formula::Kind::Binary:
        (op_class(g->op()) == OpClass::FO ? fo : nfo) = true;
        stack.push_back(&g->right());
        stack.push_back(&g->left());
        break;
    }
  }
  if (fo && nfo) return Language::Mixed;
  if (fo) return Language::FoOnly;
  if (nfo) return Language::NfoOnly;
  return Language::Atomic;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    switch (g->kind()) {
      case Formula::Kind::Atom:
        if (seen.insert(g->name()).second) out.push_back(g->name());
        break;
      case Formula::Kind::Not:
        stack.push_back(&g->child());
        break;
      case Formula::Kind::Binary:
        stack.push_back(&g->right());
        stack.push_back(&g->left());
        break;
    }
  }
  return out;
}

namespace {

const Formula* step_into(const Formula& f, Step s) {
  switch (s) {
    case Step::Child:
      return f.is_not() ? &f.child() : nullptr;
    case Step::Left:
      return f.is_binary() ? &f.left() : nullptr;
    case Step::Right:
      return f.is_binary() ? &f.right() : nullptr;
  }
  return nullptr;
}

Formula replace_from(const Formula& f, const Path& path, std::size_t i, Formula replacement) {
  if (i == path.size()) return replacement;
  const Formula* next = step_into(f, path.steps[i]);
  if (next == nullptr) {
    throw PathError("path " + path.to_string() + " is not valid at step " + std::to_string(i));
  }
  Formula inner = replace_from(*next, path, i + 1, std::move(replacement));
  switch (path.steps[i]) {
    case Step::Child: return neg(std::move(inner));
    case Step::Left: return bin(f.op(), std::move(inner), f.right());
    case Step::Right: return bin(f.op(), f.left(), std::move(inner));
  }
  return f;
}

void collect_paths(const Formula& f, Path& current, std::vector<Path>& out) {
  out.push_back(current);
  if (f.is_not()) {
    current.steps.push_back(Step::Child);
    collect_paths(f.child(), current, out);
    current.steps.pop_back();
  } else if (f.is_binary()) {
    current.steps.push_back(Step::Left);
    collect_paths(f.left(), current, out);
    current.steps.back() = Step::Right;
    collect_paths(f.right(), current, out);
    current.steps.pop_back();
  }
}

}  // namespace

const Formula& subformula_at(const Formula& f, const Path& path) {
  const Formula* g = &f;
  for (std::size_t i = 0; i < path.size(); ++i) {
    g = step_into(*g, path.steps[i]);
    if (g == nullptr) {
      throw PathError("path " + path.to_string() + " is not valid at step " +
                      std::to_string(i));
    }
  }
  return *g;
}

bool is_valid_path(const Formula& f, const Path& path) {
  const Formula* g = &f;
  for (Step s : path.steps) {
    g = step_into(*g, s);
    if (g == nullptr) return false;
  }
  return true;
}

Formula replace_at(const Formula& f, const Path& path, Formula replacement) {
  return replace_from(f, path, 0, std::move(replacement));
}

std::vector<Path> all_paths(const Formula& f) {
  std::vector<Path> out;
  Path current;
  collect_paths(f, current, out);
  return out;
}

}  // namespace sheffer
