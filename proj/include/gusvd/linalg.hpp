#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gusvd/matrix.hpp"
#include "gusvd/partition.hpp"
#include "gusvd/polynomial.hpp"

namespace gusvd {

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns form a basis of the null space; cols - rank(m) of them.
Matrix kernel_basis(const Matrix& m);
// Columns form a basis of the column space (a subset of m's columns).
Matrix image_basis(const Matrix& m);

// X with a X = b, if the system is consistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
// Throws DomainError for singular input.
Matrix inverse(const Matrix& m);
bool invertible(const Matrix& m);

// rank(m^0), ..., rank(m^upto).
std::vector<std::size_t> matrix_power_ranks(const Matrix& m, std::size_t upto);

// Jordan type of a nilpotent matrix from the rank drops of its powers.
Partition nilpotent_jordan_type(const Matrix& n);
bool is_nilpotent(const Matrix& n);

// Similarity invariants f_1 | f_2 | ... | f_k (monic, nonconstant), from the
// Smith normal form of xI - m over the polynomial ring.
std::vector<Poly> invariant_factors(const Matrix& m);

// Companion matrix: ones on the subdiagonal, -f_0..-f_{d-1} in the last column.
Matrix companion(const Poly& f);

// Matrix of the restriction of m to the m-invariant subspace spanned by the
// columns of basis (full column rank).
Matrix restrict_to(const Matrix& m, const Matrix& basis);

}  // namespace gusvd
