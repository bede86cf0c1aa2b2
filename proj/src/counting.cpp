#include "gusvd/counting.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gusvd/errors.hpp"
#include "gusvd/field.hpp"
#include "gusvd/partition.hpp"

namespace gusvd {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked(u128 v, const char* what) {
  if (v > UINT64_MAX) throw ResourceError(std::string(what) + " overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

u128 mul_checked(u128 a, u128 b, const char* what) {
  if (a != 0 && b > (~u128{0}) / a) throw ResourceError(std::string(what) + " overflows");
  return a * b;
}

int moebius(int n) {
  int r = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

// truncated product of two series
std::vector<u128> series_mul(const std::vector<u128>& a, const std::vector<u128>& b, std::size_t len) {
  std::vector<u128> r(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += mul_checked(a[i], b[j], "k_gl");
  }
  return r;
}

std::vector<u128> series_pow(std::vector<u128> base, std::uint64_t k, std::size_t len) {
  std::vector<u128> r(len, 0);
  r[0] = 1;
  for (; k; k >>= 1) {
    if (k & 1) r = series_mul(r, base, len);
    if (k > 1) base = series_mul(base, base, len);
  }
  return r;
}

}  // namespace

std::uint64_t irreducible_count(int d, std::uint64_t q) {
  if (d < 1) return 0;
  __int128 sum = 0;
  for (int k = 1; k <= d; ++k) {
    if (d % k) continue;
    const int mu = moebius(k);
    if (mu == 0) continue;
    u128 pw = 1;
    for (int i = 0; i < d / k; ++i) pw = mul_checked(pw, q, "irreducible_count");
    sum += mu * static_cast<__int128>(pw);
  }
  return checked(static_cast<u128>(sum / d), "irreducible_count");
}

std::uint64_t CountTable::partition_count(int d) {
  if (d < 0) throw DomainError("partition_count of a negative integer");
  std::lock_guard lock(mu_);
  if (auto it = p_.find(d); it != p_.end()) return it->second;
  std::vector<__int128> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= d; ++n) {
    __int128 s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = s;
  }
  const std::uint64_t v = checked(static_cast<u128>(p[static_cast<std::size_t>(d)]), "partition_count");
  p_[d] = v;
  return v;
}

std::uint64_t CountTable::k_gl(int n, std::uint64_t q) {
  if (n < 0) throw DomainError("k_gl of a negative dimension");
  if (prime_power_split(q).first == 0) throw ValidationError("k_gl: q = " + std::to_string(q) + " is not a prime power");
  {
    std::lock_guard lock(mu_);
    if (auto it = kgl_.find({n, q}); it != kgl_.end()) return it->second;
  }
  const auto len = static_cast<std::size_t>(n) + 1;
  std::vector<std::uint64_t> pc(len);
  for (std::size_t k = 0; k < len; ++k) pc[k] = partition_count(static_cast<int>(k));

  // each irreducible of degree d carries a partition of some k, costing d k
  std::vector<u128> total(len, 0);
  total[0] = 1;
  for (int d = 1; d <= n; ++d) {
    std::uint64_t count = irreducible_count(d, q);
    if (d == 1) count -= 1;  // x is not allowed
    std::vector<u128> one(len, 0);
    for (std::size_t k = 0; k * static_cast<std::size_t>(d) < len; ++k) one[k * static_cast<std::size_t>(d)] = pc[k];
    total = series_mul(total, series_pow(one, count, len), len);
  }
  const std::uint64_t v = checked(total[static_cast<std::size_t>(n)], "k_gl");
  std::lock_guard lock(mu_);
  kgl_[{n, q}] = v;
  return v;
}

std::uint64_t CountTable::f_nilpotent(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("f_nilpotent of a negative dimension");
  {
    std::lock_guard lock(mu_);
    if (auto it = f_.find({m, n}); it != f_.end()) return it->second;
  }
  // partitions of each size, counted by length
  std::vector<std::vector<std::uint64_t>> by_len(static_cast<std::size_t>(m) + 1);
  for (int s = 0; s <= m; ++s) {
    by_len[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(s) + 1, 0);
    for (const auto& p : partitions_of(s)) by_len[static_cast<std::size_t>(s)][p.length()]++;
  }
  std::uint64_t total = 0;
  for (int m3 = 0; 2 * m3 <= m; ++m3) {
    const std::uint64_t pj = partitions_of(m3).size();
    for (int m1 = 0; m1 + 2 * m3 <= m; ++m1) {
      const int m2 = m - m1 - 2 * m3;
      const auto& r = by_len[static_cast<std::size_t>(m1)];
      const auto& rp = by_len[static_cast<std::size_t>(m2)];
      for (std::size_t lr = 0; lr < r.size(); ++lr) {
        if (!r[lr]) continue;
        for (std::size_t lp = 0; lp < rp.size(); ++lp) {
          if (!rp[lp]) continue;
          const long long cols = m1 + static_cast<long long>(lr) + m2 - static_cast<long long>(lp) + 2LL * m3;
          if (cols <= n) total += r[lr] * rp[lp] * pj;
        }
      }
    }
  }
  std::lock_guard lock(mu_);
  f_[{m, n}] = total;
  return total;
}

CountTable& default_count_table() {
  static CountTable table;
  return table;
}

std::uint64_t partition_count(int d) { return default_count_table().partition_count(d); }
std::uint64_t k_gl(int n, std::uint64_t q) { return default_count_table().k_gl(n, q); }
std::uint64_t f_nilpotent(int m, int n) { return default_count_table().f_nilpotent(m, n); }

std::uint64_t f_nilpotent_closed_form(int m) {
  std::uint64_t total = 0;
  for (int m3 = 0; 2 * m3 <= m; ++m3) {
    for (int m1 = 0; m1 + 2 * m3 <= m; ++m1) {
      const int m2 = m - m1 - 2 * m3;
      total += partition_count(m1) * partition_count(m2) * partition_count(m3);
    }
  }
  return total;
}

std::uint64_t total_orbits(int m, int n, std::uint64_t q) {
  if (m < 0 || n < 0) throw DomainError("total_orbits of a negative dimension");
  std::uint64_t total = 0;
  for (int i = 0; i <= std::min(m, n); ++i) total += f_nilpotent(m - i, n - i) * k_gl(i, q);
  return total;
}

}  // namespace gusvd
