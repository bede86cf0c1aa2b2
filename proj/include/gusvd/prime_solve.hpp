#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gusvd/matrix.hpp"

namespace gusvd {

struct Shape {
  std::size_t rows, cols;
};

using MatrixTuple = std::vector<Matrix>;
using LinearMap = std::function<MatrixTuple(const MatrixTuple&)>;

// Basis of {X : map(X) = 0} where X ranges over tuples of matrices of the given
// shapes and map is GF(p)-linear (but not necessarily GF(q^2)-linear, e.g. it
// may involve conjugation). Works in coordinates over the prime field.
std::vector<MatrixTuple> prime_field_kernel(const FieldPtr& field, const std::vector<Shape>& shapes,
                                            const LinearMap& map);

// Uniform random GF(p)-combination of a kernel basis.
MatrixTuple random_combination(const FieldPtr& field, const std::vector<Shape>& shapes,
                               const std::vector<MatrixTuple>& basis, std::mt19937_64& rng);

}  // namespace gusvd
