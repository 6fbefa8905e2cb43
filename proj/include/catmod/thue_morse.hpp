#pragma once

#include <cstdint>
#include <vector>

#include "catmod/natural.hpp"

namespace catmod::thue_morse {

// t_n via the recursive definition t_0 = 0, t_{2m} = t_m,
// t_{2m+1} = 1 - t_m, followed literally bit by bit.
inline std::uint32_t t_recursive(std::uint64_t n) {
  std::uint32_t r = 0;
  while (n != 0) {
    if (n & 1) {
      r ^= 1;
      n = (n - 1) / 2;
    } else {
      n /= 2;
    }
  }
  return r;
}

// t_n = parity of the binary digit sum of n; works for huge indices.
inline std::uint32_t t(const Natural& n) {
  if (n < 0) throw std::invalid_argument("t: index must be nonnegative");
  return static_cast<std::uint32_t>(mpz_popcount(raw(n)) & 1);
}

// Block-length partial sums of the Thue-Morse sequence: c_0 = 1 and
// c_{n+1} = c_n + 1 unless (c_n+1)/2 already appears, in which case
// c_{n+1} = c_n + 2.
struct CSequence {
  std::vector<std::uint64_t> terms;
};

inline CSequence c_stream(std::uint64_t count) {
  CSequence out;
  if (count == 0) return out;
  out.terms.reserve(count);
  std::vector<bool> member(2 * count + 4, false);  // c_k <= 2k+1
  std::uint64_t c = 1;
  member[1] = true;
  out.terms.push_back(1);
  while (out.terms.size() < count) {
    std::uint64_t next = c + 1;
    if (next % 2 == 0 && member[next / 2]) next = c + 2;
    member[next] = true;
    out.terms.push_back(next);
    c = next;
  }
  return out;
}

inline bool in_c_u64(std::uint64_t m) {
  if (m == 0) throw std::domain_error("in_c: index must be positive");
  std::uint64_t e = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++e;
  }
  return (e & 1) == 0;
}

// Membership via the closed form (2i+1)4^j: the 2-adic valuation is even.
// This is what makes the affine tests usable at thousands of digits.
inline bool in_c(const Natural& m) {
  if (m <= 0) throw std::domain_error("in_c: index must be positive");
  return (mpz_scan1(raw(m), 0) & 1) == 0;
}

// n in kc+l for the affine images used by the parity theorems:
// k in {2,4}, l in {-1,-2}.
inline bool in_affine_c(const Natural& n, int k, int l) {
  if ((k != 2 && k != 4) || (l != -1 && l != -2))
    throw unsupported_error("in_affine_c: only k in {2,4}, l in {-1,-2}");
  if (n < 0) throw std::invalid_argument("in_affine_c: index must be nonnegative");
  Natural m = n + static_cast<unsigned>(-l);
  if (!mpz_divisible_ui_p(raw(m), static_cast<unsigned long>(k))) return false;
  mpz_divexact_ui(raw(m), raw(m), static_cast<unsigned long>(k));
  return in_c(m);
}

// Length of the k-th block of t, numbering blocks from 0 with c_{-1} = 0.
inline std::uint64_t block_length(std::uint64_t k) {
  CSequence c = c_stream(k + 1);
  std::uint64_t prev = (k == 0) ? 0 : c.terms[k - 1];
  return c.terms[k] - prev;
}

}  // namespace catmod::thue_morse
