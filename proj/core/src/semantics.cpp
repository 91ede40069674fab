#include "sheffer/semantics.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "sheffer/parser.hpp"

namespace sheffer {

namespace {

// Outputs for inputs (1,1), (1,0), (0,1), (0,0).
struct OpTable {
  Op op;
  std::uint8_t out[4];
};

constexpr OpTable kTables[] = {
    {Op::Or, {1, 1, 1, 0}},   {Op::And, {1, 0, 0, 0}},  {Op::Imp, {1, 0, 1, 1}},
    {Op::Iff, {1, 0, 0, 1}},  {Op::Nor, {0, 0, 0, 1}},  {Op::Nand, {0, 1, 1, 1}},
    {Op::Nimp, {0, 1, 0, 0}}, {Op::Xor, {0, 1, 1, 0}},  {Op::Updown, {1, 0, 0, 1}},
};

void check_atom_count(std::size_t n) {
  if (n > kMaxTableAtoms) throw TooManyAtomsError(n, kMaxTableAtoms);
}

// Evaluates f on a dense vector of atom values indexed via `slot`.
bool eval_slots(const Formula& f, const std::unordered_map<std::string, std::size_t>& slot,
                const std::vector<std::uint8_t>& values) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return values[slot.at(f.name())] != 0;
    case Formula::Kind::Not:
      return !eval_slots(f.child(), slot, values);
    case Formula::Kind::Binary:
      return apply_op(f.op(), eval_slots(f.left(), slot, values),
                      eval_slots(f.right(), slot, values));
  }
  return false;
}

// Fills `column` for every row and returns the column index of f.
std::size_t fill_columns(const Formula& f, const Path& path,
                         const std::vector<std::vector<std::uint8_t>>& atom_bits,
                         const std::unordered_map<std::string, std::size_t>& slot,
                         std::vector<TruthColumn>& columns) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      columns.push_back({path, atom_bits[slot.at(f.name())]});
      return columns.size() - 1;
    }
    case Formula::Kind::Not: {
      std::size_t self = columns.size();
      columns.push_back({path, {}});
      std::size_t c = fill_columns(f.child(), path.then(Step::Child), atom_bits, slot, columns);
      std::vector<std::uint8_t> values(columns[c].values.size());
      for (std::size_t r = 0; r < values.size(); ++r) values[r] = columns[c].values[r] ^ 1;
      columns[self].values = std::move(values);
      return self;
    }
    case Formula::Kind::Binary: {
      std::size_t l = fill_columns(f.left(), path.then(Step::Left), atom_bits, slot, columns);
      std::size_t self = columns.size();
      columns.push_back({path, {}});
      std::size_t r = fill_columns(f.right(), path.then(Step::Right), atom_bits, slot, columns);
      std::vector<std::uint8_t> values(columns[l].values.size());
      for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = apply_op(f.op(), columns[l].values[i] != 0, columns[r].values[i] != 0);
      }
      columns[self].values = std::move(values);
      return self;
    }
  }
  return 0;
}

// Final-analysis column only, over the given atom order.
std::vector<std::uint8_t> final_values(const Formula& f, const std::vector<std::string>& atoms) {
  check_atom_count(atoms.size());
  std::unordered_map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < atoms.size(); ++i) slot[atoms[i]] = i;
  const std::size_t n = atoms.size();
  const std::size_t rows = std::size_t{1} << n;
  std::vector<std::uint8_t> values(n);
  std::vector<std::uint8_t> out(rows);
  for (std::size_t row = 0; row < rows; ++row) {
    std::size_t bits = rows - 1 - row;
    for (std::size_t k = 0; k < n; ++k) values[k] = (bits >> (n - 1 - k)) & 1U;
    out[row] = eval_slots(f, slot, values) ? 1 : 0;
  }
  return out;
}

RelationVerdict compare(const Formula& a, const Formula& b, bool complement) {
  auto atoms = combined_atoms(a, b);
  auto va = final_values(a, atoms);
  auto vb = final_values(b, atoms);
  RelationVerdict verdict;
  for (std::size_t row = 0; row < va.size(); ++row) {
    bool expected = complement ? !va[row] : va[row] != 0;
    if ((vb[row] != 0) != expected) {
      verdict.holds = false;
      verdict.witness = row_assignment(atoms, row);
      break;
    }
  }
  return verdict;
}

}  // namespace

bool apply_op(Op op, bool x, bool y) {
  const std::size_t idx = (x ? 0 : 2) + (y ? 0 : 1);
  for (const OpTable& t : kTables) {
    if (t.op == op) return t.out[idx] != 0;
  }
  return false;
}

bool evaluate(const Formula& f, const Assignment& a) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = a.find(f.name());
      if (it == a.end()) throw MissingAtomError(f.name());
      return it->second;
    }
    case Formula::Kind::Not:
      return !evaluate(f.child(), a);
    case Formula::Kind::Binary:
      return apply_op(f.op(), evaluate(f.left(), a), evaluate(f.right(), a));
  }
  return false;
}

Assignment row_assignment(const std::vector<std::string>& atoms, std::size_t row) {
  const std::size_t n = atoms.size();
  const std::size_t bits = ((std::size_t{1} << n) - 1) - row;
  Assignment a;
  for (std::size_t k = 0; k < n; ++k) a[atoms[k]] = ((bits >> (n - 1 - k)) & 1U) != 0;
  return a;
}

TruthTable truth_table(const Formula& f) {
  TruthTable table;
  table.atom_order = atoms_of(f);
  const std::size_t n = table.atom_order.size();
  check_atom_count(n);
  const std::size_t rows = std::size_t{1} << n;

  std::unordered_map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) slot[table.atom_order[i]] = i;
  std::vector<std::vector<std::uint8_t>> atom_bits(n, std::vector<std::uint8_t>(rows));
  table.rows.reserve(rows);
  for (std::size_t row = 0; row < rows; ++row) {
    table.rows.push_back(row_assignment(table.atom_order, row));
    std::size_t bits = rows - 1 - row;
    for (std::size_t k = 0; k < n; ++k) atom_bits[k][row] = (bits >> (n - 1 - k)) & 1U;
  }
  table.final_index = fill_columns(f, Path{}, atom_bits, slot, table.columns);
  return table;
}

std::vector<TokenColumn> token_layout(const Formula& f, const TruthTable& table, bool unicode) {
  std::unordered_map<std::string, std::size_t> by_path;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    by_path[table.columns[i].path.to_string()] = i;
  }
  const Dialect d = unicode ? Dialect::Unicode : Dialect::Ascii;
  std::vector<TokenColumn> out;
  // `shown` is the path of the outermost negation in front of the current node.
  std::function<void(const Formula&, const Path&, const Path&, std::string)> walk =
      [&](const Formula& g, const Path& path, const Path& shown, std::string prefix) {
        switch (g.kind()) {
          case Formula::Kind::Atom:
            out.push_back({prefix + g.name(), by_path.at(shown.to_string())});
            break;
          case Formula::Kind::Not:
            walk(g.child(), path.then(Step::Child), shown, prefix + std::string(not_symbol(d)));
            break;
          case Formula::Kind::Binary: {
            Path l = path.then(Step::Left);
            Path r = path.then(Step::Right);
            walk(g.left(), l, l, "");
            out.push_back({prefix + std::string(op_symbol(g.op(), d)),
                           by_path.at(shown.to_string())});
            walk(g.right(), r, r, "");
            break;
          }
        }
      };
  walk(f, Path{}, Path{}, "");
  return out;
}

bool is_tautology(const Formula& f) {
  for (std::uint8_t v : final_values(f, atoms_of(f))) {
    if (v == 0) return false;
  }
  return true;
}

bool is_contradiction(const Formula& f) {
  for (std::uint8_t v : final_values(f, atoms_of(f))) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<std::string> combined_atoms(const Formula& a, const Formula& b) {
  auto atoms = atoms_of(a);
  for (auto& name : atoms_of(b)) {
    if (std::find(atoms.begin(), atoms.end(), name) == atoms.end()) atoms.push_back(name);
  }
  return atoms;
}

RelationVerdict is_parallel(const Formula& a, const Formula& b) { return compare(a, b, false); }

RelationVerdict is_perpendicular(const Formula& a, const Formula& b) {
  return compare(a, b, true);
}

}  // namespace sheffer
