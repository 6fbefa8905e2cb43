#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catmod/digits.hpp"
#include "catmod/lucas.hpp"
#include "catmod/natural.hpp"
#include "catmod/thue_morse.hpp"

// Fast theorem kernels. Every kernel is a pure digit program: it reads
// the base-p expansion of n, touches each digit O(1) times, and never
// materializes the underlying sequence value.
namespace catmod::residues {

using lucas::Residue;

namespace detail {

inline void require_base(const digits::DigitString& ds, std::uint32_t base,
                         const char* who) {
  if (ds.base != base) throw std::invalid_argument(std::string(who) + ": wrong digit base");
}

inline std::vector<std::uint32_t> add_small(std::vector<std::uint32_t> d,
                                            std::uint32_t base, std::uint32_t delta) {
  std::uint64_t carry = delta;
  for (std::size_t i = 0; carry != 0; ++i) {
    if (i == d.size()) d.push_back(0);
    std::uint64_t cur = d[i] + carry;
    d[i] = static_cast<std::uint32_t>(cur % base);
    carry = cur / base;
  }
  return d;
}

inline std::vector<std::uint32_t> sub_one(std::vector<std::uint32_t> d,
                                          std::uint32_t base) {
  std::size_t i = 0;
  while (true) {
    if (i >= d.size()) throw std::invalid_argument("sub_one: value is zero");
    if (d[i] > 0) {
      --d[i];
      break;
    }
    d[i] = base - 1;
    ++i;
  }
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

// Halve a little-endian base-3 digit string; nullopt when the value is odd.
inline std::optional<std::vector<std::uint32_t>> halve_base3(
    const std::vector<std::uint32_t>& d) {
  std::vector<std::uint32_t> q(d.size(), 0);
  std::uint32_t rem = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    std::uint32_t cur = rem * 3 + d[i];
    q[i] = cur / 2;
    rem = cur % 2;
  }
  if (rem != 0) return std::nullopt;
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

inline bool all01_from(const std::vector<std::uint32_t>& d, std::size_t from) {
  for (std::size_t i = from; i < d.size(); ++i)
    if (d[i] > 1) return false;
  return true;
}

inline std::uint64_t count_ones_from(const std::vector<std::uint32_t>& d,
                                     std::size_t from) {
  std::uint64_t c = 0;
  for (std::size_t i = from; i < d.size(); ++i) c += (d[i] == 1);
  return c;
}

inline std::uint64_t trailing_zero_digits(const std::vector<std::uint32_t>& d) {
  std::uint64_t c = 0;
  for (std::uint32_t v : d) {
    if (v != 0) break;
    ++c;
  }
  return c;
}

inline Residue sign_residue(std::uint64_t exponent_parity_count) {
  return (exponent_parity_count % 2 == 0) ? Residue(1, 3) : Residue(2, 3);
}

}  // namespace detail

// omega(C_n) = delta(n+1) - 1: the 2-adic order of the n-th Catalan
// number from the binary digit sum of n+1.
inline std::uint64_t catalan_omega2(const digits::DigitString& n_base2) {
  detail::require_base(n_base2, 2, "catalan_omega2");
  std::vector<std::uint32_t> m = detail::add_small(n_base2.digits, 2, 1);
  return detail::count_ones_from(m, 0) - 1;
}

inline std::uint64_t catalan_omega2(const Natural& n) {
  Natural m = n + 1;
  return mpz_popcount(raw(m)) - 1;
}

// C_n mod 3: (-1)^{delta_3^*(n+1)} when n+1 lies in T*(01), else 0.
inline Residue catalan_mod3(const digits::DigitString& n_base3) {
  detail::require_base(n_base3, 3, "catalan_mod3");
  std::vector<std::uint32_t> m = detail::add_small(n_base3.digits, 3, 1);
  if (!detail::all01_from(m, 1)) return Residue(0, 3);
  return detail::sign_residue(detail::count_ones_from(m, 1));
}

inline Residue catalan_mod3(const Natural& n) {
  return catalan_mod3(digits::expand(n, 3));
}

// binom(2n,n) mod p: zero unless every base-p digit of n is at most p/2,
// otherwise the product of binom(2j,j)^{count of digit j}.
inline Residue central_binom_mod_p(const digits::DigitString& n_basep, std::uint32_t p) {
  lucas::require_prime(p);
  detail::require_base(n_basep, p, "central_binom_mod_p");
  if (p == 2) {
    // binom(2,1) = 2 kills the product whenever any digit is 1.
    return Residue(n_basep.empty() ? 1 : 0, 2);
  }
  std::uint32_t half = (p - 1) / 2;
  std::vector<std::uint64_t> count(half + 1, 0);
  for (std::uint32_t d : n_basep.digits) {
    if (d > half) return Residue(0, p);
    ++count[d];
  }
  lucas::BinomTable table(p);
  std::uint64_t result = 1;
  for (std::uint32_t j = 1; j <= half; ++j) {
    std::uint64_t base = table.binom(2 * j, j);  // 2j < p, nonzero mod p
    std::uint64_t e = count[j];
    std::uint64_t b = base;
    while (e != 0) {
      if (e & 1) result = (result * b) % p;
      b = (b * b) % p;
      e >>= 1;
    }
  }
  return Residue(static_cast<std::uint32_t>(result), p);
}

inline Residue central_binom_mod_p(const Natural& n, std::uint32_t p) {
  return central_binom_mod_p(digits::expand(n, p), p);
}

// T_n mod 3: 1 exactly on T(01).
inline Residue central_trinomial_mod3(const digits::DigitString& n_base3) {
  detail::require_base(n_base3, 3, "central_trinomial_mod3");
  return detail::all01_from(n_base3.digits, 0) ? Residue(1, 3) : Residue(0, 3);
}

inline Residue central_trinomial_mod3(const Natural& n) {
  return central_trinomial_mod3(digits::expand(n, 3));
}

enum class Family { motzkin, prefix, riordan, hex };

// Parity of M_n, P_n, gamma_n, H_n through the Thue-Morse block sequence:
// M_n and H_n are even iff n lies in 4c-2 or 4c-1; P_n and gamma_n are
// even iff n lies in 2c-1. Membership reduces to the 2-adic valuation of
// n+1 / n+2.
inline Residue family_parity(Family f, const digits::DigitString& n_base2) {
  detail::require_base(n_base2, 2, "family_parity");
  auto nu_plus = [&](std::uint32_t delta) {
    return detail::trailing_zero_digits(detail::add_small(n_base2.digits, 2, delta));
  };
  bool even = false;
  switch (f) {
    case Family::motzkin:
    case Family::hex: {
      std::uint64_t v1 = nu_plus(1), v2 = nu_plus(2);
      even = (v1 >= 2 && v1 % 2 == 0) || (v2 >= 2 && v2 % 2 == 0);
      break;
    }
    case Family::prefix:
    case Family::riordan: {
      even = nu_plus(1) % 2 == 1;
      break;
    }
  }
  return Residue(even ? 0 : 1, 2);
}

inline Residue family_parity(Family f, const Natural& n) {
  return family_parity(f, digits::expand(n, 2));
}

// The mod-3 corollaries: piecewise tests on the base-3 digits. The hex
// case delegates to the Catalan kernel at m = n/2.
inline Residue family_mod3(Family f, const digits::DigitString& n_base3) {
  detail::require_base(n_base3, 3, "family_mod3");
  const std::vector<std::uint32_t>& d = n_base3.digits;
  std::uint32_t r = n_base3.at(0);
  switch (f) {
    case Family::motzkin:
      // -1 on 3T(01)-1, +1 on 3T(01) and 3T(01)-2.
      if (r == 0) return detail::all01_from(d, 1) ? Residue(1, 3) : Residue(0, 3);
      if (r == 2) {
        std::vector<std::uint32_t> m = detail::add_small(d, 3, 1);
        return detail::all01_from(m, 1) ? Residue(2, 3) : Residue(0, 3);
      }
      {
        std::vector<std::uint32_t> m = detail::add_small(d, 3, 2);
        return detail::all01_from(m, 1) ? Residue(1, 3) : Residue(0, 3);
      }
    case Family::prefix:
      // +1 on 3T(01), -1 on 3T(01)+1 and 3T(01)-1.
      if (r == 0) return detail::all01_from(d, 1) ? Residue(1, 3) : Residue(0, 3);
      if (r == 1) return detail::all01_from(d, 1) ? Residue(2, 3) : Residue(0, 3);
      {
        std::vector<std::uint32_t> m = detail::add_small(d, 3, 1);
        return detail::all01_from(m, 1) ? Residue(2, 3) : Residue(0, 3);
      }
    case Family::riordan: {
      // +1 on T(01)-1.
      std::vector<std::uint32_t> m = detail::add_small(d, 3, 1);
      return detail::all01_from(m, 0) ? Residue(1, 3) : Residue(0, 3);
    }
    case Family::hex: {
      std::optional<std::vector<std::uint32_t>> m = detail::halve_base3(d);
      if (!m) return Residue(0, 3);
      digits::DigitString half;
      half.base = 3;
      half.digits = std::move(*m);
      return catalan_mod3(half);
    }
  }
  throw std::invalid_argument("family_mod3: unknown family");
}

inline Residue family_mod3(Family f, const Natural& n) {
  return family_mod3(f, digits::expand(n, 3));
}

// sum_{k<=n} binom(2k,k) mod 3: (-1)^{delta_3(n)} on 3T(01).
inline Residue partial_sum_mod3(const digits::DigitString& n_base3) {
  detail::require_base(n_base3, 3, "partial_sum_mod3");
  if (n_base3.at(0) != 0 || !detail::all01_from(n_base3.digits, 1))
    return Residue(0, 3);
  return detail::sign_residue(detail::count_ones_from(n_base3.digits, 0));
}

inline Residue partial_sum_mod3(const Natural& n) {
  return partial_sum_mod3(digits::expand(n, 3));
}

// a_n(r,s) mod 3: (-1)^{delta_3(n)} when s is even; 1 on T(02) when s is
// odd. Covers the central Delannoy (1,1) and Apery (2,1) numbers.
inline Residue a_rs_mod3(const digits::DigitString& n_base3, std::uint32_t r,
                         std::uint32_t s) {
  if (r == 0 || s == 0) throw unsupported_error("a_rs_mod3: r and s must be positive");
  detail::require_base(n_base3, 3, "a_rs_mod3");
  if (s % 2 == 0)
    return detail::sign_residue(detail::count_ones_from(n_base3.digits, 0));
  for (std::uint32_t d : n_base3.digits)
    if (d == 1) return Residue(0, 3);
  return Residue(1, 3);
}

inline Residue a_rs_mod3(const Natural& n, std::uint32_t r, std::uint32_t s) {
  return a_rs_mod3(digits::expand(n, 3), r, s);
}

// G_n(p) = prod_{1<=j<p} (j+1)^{delta_{p,j}(n)}, the number of entries of
// Pascal row n that are nonzero mod p. Exact count, not a residue.
inline Natural gould_count(const digits::DigitString& n_basep, std::uint32_t p) {
  lucas::require_prime(p);
  detail::require_base(n_basep, p, "gould_count");
  std::vector<std::uint64_t> count(p, 0);
  for (std::uint32_t d : n_basep.digits) ++count[d];
  Natural result = 1, factor;
  for (std::uint32_t j = 1; j < p; ++j) {
    if (count[j] == 0) continue;
    mpz_ui_pow_ui(raw(factor), j + 1, count[j]);
    result *= factor;
  }
  return result;
}

inline Natural gould_count(const Natural& n, std::uint32_t p) {
  return gould_count(digits::expand(n, p), p);
}

// Every entry of Pascal row n is nonzero mod p iff n = q p^k - 1 with
// 1 <= q < p, i.e. every non-leading base-p digit equals p-1.
inline bool gould_all_nonzero(const digits::DigitString& n_basep, std::uint32_t p) {
  lucas::require_prime(p);
  detail::require_base(n_basep, p, "gould_all_nonzero");
  if (n_basep.empty()) return true;  // row 0 is {1}
  for (std::size_t i = 0; i + 1 < n_basep.size(); ++i)
    if (n_basep.digits[i] != p - 1) return false;
  return true;
}

inline bool gould_all_nonzero(const Natural& n, std::uint32_t p) {
  return gould_all_nonzero(digits::expand(n, p), p);
}

enum class EulerianKind { central, bicentral };

// E_n = A(2n-1,n) mod 3: 1 on T(01)+1. A(2n,n) mod 3: 1 on 3T(01)+1 and
// -1 on 3T(01) and 3T(01)+2.
inline Residue eulerian_central_mod3(EulerianKind kind, const digits::DigitString& n_base3) {
  detail::require_base(n_base3, 3, "eulerian_central_mod3");
  if (n_base3.empty())
    throw std::invalid_argument("eulerian_central_mod3: rows start at n = 1");
  if (kind == EulerianKind::central) {
    std::vector<std::uint32_t> m = detail::sub_one(n_base3.digits, 3);
    return detail::all01_from(m, 0) ? Residue(1, 3) : Residue(0, 3);
  }
  // (n - n mod 3)/3 is the digit string from position 1 on.
  if (!detail::all01_from(n_base3.digits, 1)) return Residue(0, 3);
  return n_base3.at(0) == 1 ? Residue(1, 3) : Residue(2, 3);
}

inline Residue eulerian_central_mod3(EulerianKind kind, const Natural& n) {
  return eulerian_central_mod3(kind, digits::expand(n, 3));
}

struct BlockInfo {
  Natural length;
  std::optional<Natural> start;
  std::optional<Natural> end;
};

// Length (and for p in {2,3} position) of the k-th block of zeros of the
// Catalan sequence mod p: (p^{omega_q(k) + [p=3] + 1} - 3)/2 with
// q = (p+1)/2 for odd p, and 2^k - 1 for p = 2.
inline BlockInfo catalan_zero_block(std::uint32_t p, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("catalan_zero_block: blocks start at k = 1");
  lucas::require_prime(p);
  BlockInfo info;
  if (p == 2) {
    // Zero runs sit strictly between the odd values at n = 2^h - 1.
    Natural pow2 = Natural(1) << k;
    info.length = pow2 - 1;
    info.start = pow2;
    info.end = 2 * pow2 - 2;
    return info;
  }
  std::uint32_t q = (p + 1) / 2;
  std::uint64_t omega = digits::valuation_u64(k, q);
  std::uint64_t kron = (p == 3) ? 1 : 0;
  Natural len;
  mpz_ui_pow_ui(raw(len), p, omega + kron + 1);
  len -= 3;
  exact_div_ui(len, 2);
  info.length = std::move(len);
  if (p == 3) {
    // (a)_3 = (2, binary digits of k-1); the block is the run of triples
    // C_{3a-1} = C_{3a} = C_{3a+1} = ... = 0 ending at 3b+1 where the low
    // omega+1 digits of b are all 2 and the rest agree with a.
    Natural a = 0, pw = 1;
    for (std::uint64_t bits = k - 1; bits != 0; bits >>= 1) {
      pw *= 3;
      if (bits & 1) a += pw;
    }
    a += 2;
    Natural low_a = 2, three_pow = 1;
    for (std::uint64_t i = 1; i <= omega; ++i) {
      three_pow *= 3;
      low_a += three_pow;  // digits 1..omega of a are all 1
    }
    Natural low_b;
    mpz_ui_pow_ui(raw(low_b), 3, omega + 1);
    low_b -= 1;
    Natural b = a - low_a + low_b;
    info.start = 3 * a - 1;
    info.end = 3 * b + 1;
  }
  return info;
}

// Digit surgery behind the Thue-Morse indexing theorems: the i-th n with
// binom(2n,n) = 1 mod 3 has (n)_3 = (n_0, binary digits of i) with n_0
// chosen to make the number of ones even; the -1 case makes it odd.
inline Natural cb_one_index(std::uint64_t i) {
  std::uint32_t parity = static_cast<std::uint32_t>(__builtin_popcountll(i) & 1);
  Natural n = parity;  // n_0 = 0 if delta(i) even, 1 if odd
  Natural pw = 1;
  for (std::uint64_t bits = i; bits != 0; bits >>= 1) {
    pw *= 3;
    if (bits & 1) n += pw;
  }
  return n;
}

inline Natural cb_minus_one_index(std::uint64_t i) {
  std::uint32_t parity = static_cast<std::uint32_t>(__builtin_popcountll(i) & 1);
  Natural n = 1 - parity;
  Natural pw = 1;
  for (std::uint64_t bits = i; bits != 0; bits >>= 1) {
    pw *= 3;
    if (bits & 1) n += pw;
  }
  return n;
}

}  // namespace catmod::residues
