#pragma once

#include <cstdint>
#include <random>

#include "gusvd/matrix.hpp"

namespace gusvd {

// (A*)_{ij} = conj(A_{ji}).
Matrix conj_transpose(const Matrix& a);
bool is_hermitian(const Matrix& a);

/// Hermitian form on GF(q^2)^n given by its Gram matrix: <v, w> = v* G w.
///
/// Forms are nondegenerate unless constructed with allow_degenerate; only
/// factor_gram accepts degenerate ones.
class HermitianForm {
 public:
  explicit HermitianForm(Matrix gram, bool allow_degenerate = false);
  static HermitianForm standard(const FieldPtr& field, std::size_t n);

  const Matrix& gram() const { return gram_; }
  std::size_t dimension() const { return gram_.rows(); }
  bool nondegenerate() const { return nondegenerate_; }

 private:
  Matrix gram_;
  bool nondegenerate_;
};

// A^# = G_V^{-1} A* G_W for A : (V, form_v) -> (W, form_w), A of shape dim W x dim V.
Matrix adjoint(const Matrix& a, const HermitianForm& form_v, const HermitianForm& form_w);

// X with X* G X = I.
Matrix orthonormalize(const HermitianForm& form);

// X of shape rank(G) x n with X* X = G. For nondegenerate G this is the
// inverse of orthonormalize(G).
Matrix factor_gram(const HermitianForm& form);

// Hermitian H similar to b, where b has entries in GF(q). Finds an invertible
// symmetric S over GF(q) with S b = b^T S, writes S = Y* Y and returns Y b Y^{-1}.
Matrix hermitian_similar_to(const Matrix& b, std::uint64_t seed = 0);

// Hermitian matrices are GU-conjugate exactly when they are similar.
bool gu_conjugacy_test(const Matrix& h1, const Matrix& h2);

// A random element of GU_n(q) for the standard form.
Matrix random_unitary(const FieldPtr& field, std::size_t n, std::mt19937_64& rng);
Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Matrix random_invertible(const FieldPtr& field, std::size_t n, std::mt19937_64& rng);

}  // namespace gusvd
