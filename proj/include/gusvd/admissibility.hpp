#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gusvd/field.hpp"
#include "gusvd/matrix.hpp"
#include "gusvd/partition.hpp"
#include "gusvd/pencil.hpp"

namespace gusvd {

// gamma(alpha, beta): the parts alpha_i = beta_i > 0, split into maximal runs
// whose consecutive parts differ by at most one.
struct GammaDecomposition {
  struct Run {
    std::vector<int> parts;
    bool contains_one = false;
    std::size_t length() const { return parts.size(); }
  };
  Partition gamma;
  std::vector<Run> components;
};

GammaDecomposition gamma_decomposition(const Partition& alpha, const Partition& beta);

// |lambda_i - mu_i| <= 1 for every i (zero padded).
bool flanders_admissible(const Partition& lambda, const Partition& mu);
// Flanders' condition plus: every component of gamma without a part 1 has even length.
bool star_admissible(const Partition& alpha, const Partition& beta);
// Same predicate; for A A^T over an arbitrary field it is only a necessary condition.
bool transpose_admissible(const Partition& alpha, const Partition& beta);

// Indecomposables of a (A, A*) pencil realizing the pair, found by peeling
// the largest parts with backtracking. Throws DomainError if none exists.
std::vector<IndecomposableLabel> star_labels(const Partition& alpha, const Partition& beta);

// A with AA* nilpotent, Jordan type of AA* = alpha and of A*A = beta.
Matrix star_witness(const Partition& alpha, const Partition& beta, const FieldPtr& field, std::uint64_t seed = 0);

// (A, B) with AB nilpotent of type lambda and BA of type mu; no unitary constraint.
std::pair<Matrix, Matrix> flanders_witness(const Partition& lambda, const Partition& mu, const FieldPtr& field);

// T with T*T similar to b, for b invertible with entries in GF(q).
Matrix invertible_witness(const Matrix& b, std::uint64_t seed = 0);

}  // namespace gusvd
