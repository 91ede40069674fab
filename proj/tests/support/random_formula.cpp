#include "random_formula.hpp"

namespace testgen {

using sheffer::Formula;
using sheffer::Op;

namespace {

const char* kAtoms[] = {"p", "q", "r", "s", "t", "u", "v", "w"};

Formula grow(std::mt19937& rng, const Shape& shape, std::size_t depth) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick_atom(0, shape.max_atoms - 1);
  if (depth <= 1 || unit(rng) < 0.2) return sheffer::atom(kAtoms[pick_atom(rng)]);
  if (unit(rng) < shape.not_bias) return sheffer::neg(grow(rng, shape, depth - 1));
  const auto& ops = shape.ops;
  Op op;
  if (ops.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, sheffer::kAllOps.size() - 1);
    op = sheffer::kAllOps[pick(rng)];
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
    op = ops[pick(rng)];
  }
  return sheffer::bin(op, grow(rng, shape, depth - 1), grow(rng, shape, depth - 1));
}

}  // namespace

Formula random_formula(std::mt19937& rng, const Shape& shape) {
  return grow(rng, shape, shape.max_depth);
}

Formula random_nfo_formula(std::mt19937& rng, std::size_t max_depth) {
  Shape shape;
  shape.max_atoms = 3;
  shape.max_depth = max_depth;
  shape.ops = {Op::Nor, Op::Nand, Op::Xor, Op::Nimp, Op::Updown};
  shape.not_bias = 0.45;
  return random_formula(rng, shape);
}

}  // namespace testgen
