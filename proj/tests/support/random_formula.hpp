#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "sheffer/formula.hpp"

namespace testgen {

struct Shape {
  std::size_t max_atoms = 4;
  std::size_t max_depth = 6;
  std::vector<sheffer::Op> ops;  // empty means every operator
  double not_bias = 0.25;
};

/// Random formula over atoms p, q, r, s, ... (first `max_atoms`).
sheffer::Formula random_formula(std::mt19937& rng, const Shape& shape = {});

/// Random formula that also tends to produce Υ-eligible negations.
sheffer::Formula random_nfo_formula(std::mt19937& rng, std::size_t max_depth);

}  // namespace testgen
