#pragma once

#include <initializer_list>
#include <vector>

#include "gusvd/matrix.hpp"

namespace gusvd::testing {

inline Matrix mat(const FieldPtr& f, std::size_t r, std::size_t c, std::initializer_list<std::uint32_t> codes) {
  return Matrix::from_codes(f, r, c, std::vector<std::uint32_t>(codes));
}

inline Poly poly(const FieldPtr& f, std::initializer_list<std::uint32_t> low_first) {
  std::vector<Elem> c;
  for (auto x : low_first) c.push_back(Elem{x});
  return Poly(f, c);
}

inline Partition part(std::initializer_list<int> p) { return Partition(std::vector<int>(p)); }

}  // namespace gusvd::testing
