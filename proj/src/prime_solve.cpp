#include "gusvd/prime_solve.hpp"

#include "gusvd/errors.hpp"

namespace gusvd {

namespace {

MatrixTuple zero_tuple(const FieldPtr& field, const std::vector<Shape>& shapes) {
  MatrixTuple t;
  for (auto s : shapes) t.emplace_back(field, s.rows, s.cols);
  return t;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a;
  for (std::uint32_t k = p - 2; k; k >>= 1) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::vector<MatrixTuple> prime_field_kernel(const FieldPtr& field, const std::vector<Shape>& shapes,
                                            const LinearMap& map) {
  const Field& f = *field;
  const std::uint32_t p = f.p(), deg = f.degree();

  // one unknown per (matrix, entry, prime-field coordinate)
  struct Coord {
    std::size_t mat, entry;
    std::uint32_t digit;
  };
  std::vector<Coord> coords;
  for (std::size_t t = 0; t < shapes.size(); ++t) {
    for (std::size_t e = 0; e < shapes[t].rows * shapes[t].cols; ++e) {
      for (std::uint32_t d = 0; d < deg; ++d) coords.push_back({t, e, d});
    }
  }
  const std::size_t nvars = coords.size();

  std::vector<std::vector<std::uint32_t>> columns;
  columns.reserve(nvars);
  std::uint32_t unit = 1;
  for (const auto& c : coords) {
    auto x = zero_tuple(field, shapes);
    std::vector<Elem> d(x[c.mat].entries().begin(), x[c.mat].entries().end());
    unit = 1;
    for (std::uint32_t k = 0; k < c.digit; ++k) unit *= p;
    d[c.entry] = Elem{unit};
    x[c.mat] = Matrix(field, shapes[c.mat].rows, shapes[c.mat].cols, std::move(d));
    std::vector<std::uint32_t> col;
    for (const auto& m : map(x)) {
      for (auto v : m.entries()) {
        auto cs = f.coeffs(v);
        col.insert(col.end(), cs.begin(), cs.end());
      }
    }
    columns.push_back(std::move(col));
  }
  const std::size_t neq = columns.empty() ? 0 : columns[0].size();

  // row-reduce the neq x nvars system
  std::vector<std::vector<std::uint32_t>> a(neq, std::vector<std::uint32_t>(nvars));
  for (std::size_t j = 0; j < nvars; ++j) {
    if (columns[j].size() != neq) throw InvariantViolation("prime_field_kernel: map output shape varies");
    for (std::size_t i = 0; i < neq; ++i) a[i][j] = columns[j][i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nvars && r < neq; ++c) {
    std::size_t piv = r;
    while (piv < neq && a[piv][c] == 0) ++piv;
    if (piv == neq) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t s = inv_mod(a[r][c], p);
    for (std::size_t j = c; j < nvars; ++j) a[r][j] = static_cast<std::uint32_t>(a[r][j] * s % p);
    for (std::size_t i = 0; i < neq; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t k = a[i][c];
      for (std::size_t j = c; j < nvars; ++j) {
        a[i][j] = static_cast<std::uint32_t>((a[i][j] + (p - k) * a[r][j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(nvars, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<MatrixTuple> basis;
  for (std::size_t fcol = 0; fcol < nvars; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<std::uint32_t> v(nvars, 0);
    v[fcol] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = (p - a[row][fcol]) % p;

    std::vector<std::vector<std::uint32_t>> digits;
    for (auto s : shapes) digits.emplace_back(s.rows * s.cols * deg, 0);
    for (std::size_t k = 0; k < nvars; ++k) digits[coords[k].mat][coords[k].entry * deg + coords[k].digit] = v[k];
    MatrixTuple t;
    for (std::size_t m = 0; m < shapes.size(); ++m) {
      std::vector<Elem> d;
      for (std::size_t e = 0; e < shapes[m].rows * shapes[m].cols; ++e) {
        std::vector<std::uint32_t> cs(digits[m].begin() + static_cast<long>(e * deg),
                                      digits[m].begin() + static_cast<long>((e + 1) * deg));
        d.push_back(f.from_coeffs(cs));
      }
      t.emplace_back(field, shapes[m].rows, shapes[m].cols, std::move(d));
    }
    basis.push_back(std::move(t));
  }
  return basis;
}

MatrixTuple random_combination(const FieldPtr& field, const std::vector<Shape>& shapes,
                               const std::vector<MatrixTuple>& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field->p() - 1);
  auto out = zero_tuple(field, shapes);
  for (const auto& b : basis) {
    const Elem k{dist(rng)};
    if (k.code == 0) continue;
    for (std::size_t m = 0; m < out.size(); ++m) out[m] = out[m] + scale(k, b[m]);
  }
  return out;
}

}  // namespace gusvd
