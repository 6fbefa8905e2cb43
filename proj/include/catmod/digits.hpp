#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "catmod/natural.hpp"

namespace catmod::digits {

// Little-endian base-b expansion: digits[i] is the coefficient of base^i.
// Zero is the empty digit list; the top digit is never zero.
struct DigitString {
  std::uint32_t base = 2;
  std::vector<std::uint32_t> digits;

  bool empty() const { return digits.empty(); }
  std::size_t size() const { return digits.size(); }
  std::uint32_t at(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

namespace detail {

inline std::uint32_t decode_gmp_digit(char c, std::uint32_t base) {
  // GMP alphabets: bases <= 36 use 0-9a-z, bases 37..62 use 0-9A-Za-z.
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
  if (base <= 36) {
    if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a') + 10;
  } else {
    if (c >= 'A' && c <= 'Z') return static_cast<std::uint32_t>(c - 'A') + 10;
    if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a') + 36;
  }
  throw internal_error("unexpected digit character from mpz_get_str");
}

}  // namespace detail

inline std::vector<std::uint32_t> expand_u64(std::uint64_t v, std::uint32_t base) {
  std::vector<std::uint32_t> out;
  while (v != 0) {
    out.push_back(static_cast<std::uint32_t>(v % base));
    v /= base;
  }
  return out;
}

inline DigitString expand(const Natural& n, std::uint32_t base) {
  if (base < 2) throw std::invalid_argument("expand: base must be >= 2");
  if (n < 0) throw std::invalid_argument("expand: value must be nonnegative");
  DigitString out;
  out.base = base;
  if (n == 0) return out;
  if (mpz_fits_ulong_p(raw(n))) {
    out.digits = expand_u64(mpz_get_ui(raw(n)), base);
    return out;
  }
  if (base <= 62) {
    // mpz_get_str is subquadratic, which keeps kernels usable on inputs
    // with hundreds of thousands of digits.
    std::string buf(mpz_sizeinbase(raw(n), static_cast<int>(base)) + 2, '\0');
    mpz_get_str(buf.data(), static_cast<int>(base), raw(n));
    std::size_t len = buf.find('\0');
    out.digits.reserve(len);
    for (std::size_t i = len; i-- > 0;)
      out.digits.push_back(detail::decode_gmp_digit(buf[i], base));
    return out;
  }
  Natural tmp = n;
  while (tmp != 0) {
    out.digits.push_back(
        static_cast<std::uint32_t>(mpz_tdiv_q_ui(raw(tmp), raw(tmp), base)));
  }
  return out;
}

inline Natural value_of(const DigitString& ds) {
  Natural v = 0;
  for (std::size_t i = ds.digits.size(); i-- > 0;) {
    v *= ds.base;
    v += ds.digits[i];
  }
  return v;
}

inline std::uint64_t digit_count(const DigitString& ds, std::uint32_t digit) {
  if (digit >= ds.base) throw std::invalid_argument("digit_count: digit out of range");
  return static_cast<std::uint64_t>(
      std::count(ds.digits.begin(), ds.digits.end(), digit));
}

// #{i : i-th base-b digit of n equals `digit`}.  digit_count(n,2,1) is the
// binary digit sum delta(n); digit_count(n,3,1) is delta_3(n).
inline std::uint64_t digit_count(const Natural& n, std::uint32_t base, std::uint32_t digit) {
  if (base < 2) throw std::invalid_argument("digit_count: base must be >= 2");
  if (digit >= base) throw std::invalid_argument("digit_count: digit out of range");
  return digit_count(expand(n, base), digit);
}

inline std::uint64_t valuation_u64(std::uint64_t n, std::uint64_t m) {
  if (n == 0) throw std::domain_error("valuation of 0 is undefined");
  if (m < 2) throw std::invalid_argument("valuation: modulus must be >= 2");
  std::uint64_t e = 0;
  while (n % m == 0) {
    n /= m;
    ++e;
  }
  return e;
}

// Largest e with m^e | n.
inline std::uint64_t valuation(const Natural& n, std::uint64_t m) {
  if (n == 0) throw std::domain_error("valuation of 0 is undefined");
  if (m < 2) throw std::invalid_argument("valuation: modulus must be >= 2");
  if ((m & (m - 1)) == 0) {
    std::uint64_t log2m = 0;
    for (std::uint64_t t = m; t > 1; t >>= 1) ++log2m;
    return mpz_scan1(raw(n), 0) / log2m;
  }
  if (mpz_fits_ulong_p(raw(n))) return valuation_u64(mpz_get_ui(raw(n)), m);
  Natural tmp = n;
  std::uint64_t e = 0;
  while (mpz_divisible_ui_p(raw(tmp), m)) {
    mpz_divexact_ui(raw(tmp), raw(tmp), m);
    ++e;
  }
  return e;
}

inline bool subset_of(const DigitString& ds, std::span<const std::uint32_t> allowed) {
  for (std::uint32_t a : allowed) {
    if (a >= ds.base) throw std::invalid_argument("digits_subset: digit out of range");
  }
  for (std::uint32_t d : ds.digits) {
    if (std::find(allowed.begin(), allowed.end(), d) == allowed.end()) return false;
  }
  return true;
}

// True iff every base-b digit of n lies in `allowed`; n = 0 vacuously.
inline bool digits_subset(const Natural& n, std::uint32_t base,
                          std::span<const std::uint32_t> allowed) {
  return subset_of(expand(n, base), allowed);
}

inline bool digits_subset(const Natural& n, std::uint32_t base,
                          std::initializer_list<std::uint32_t> allowed) {
  return digits_subset(n, base, std::span<const std::uint32_t>(allowed.begin(), allowed.size()));
}

struct Star01 {
  bool in_t_star01 = false;    // all base-3 digits at positions >= 1 are 0 or 1
  std::uint64_t ones_above = 0;  // delta_3^*: number of 1 digits at positions >= 1
};

// The starred predicate relaxes the digit constraint at position 0.
inline Star01 star_predicate_and_count(const DigitString& base3) {
  assert(base3.base == 3);
  Star01 out;
  out.in_t_star01 = true;
  for (std::size_t i = 1; i < base3.digits.size(); ++i) {
    if (base3.digits[i] == 2) {
      out.in_t_star01 = false;
      out.ones_above = 0;
      return out;
    }
    if (base3.digits[i] == 1) ++out.ones_above;
  }
  return out;
}

inline Star01 star_predicate_and_count(const Natural& n) {
  return star_predicate_and_count(expand(n, 3));
}

// True iff adding all parts in base b produces no carry: at every
// position the digit sum over parts stays below the base.
inline bool carry_free(std::span<const Natural> parts, std::uint32_t base) {
  if (parts.empty()) throw std::invalid_argument("carry_free: parts must be nonempty");
  if (base < 2) throw std::invalid_argument("carry_free: base must be >= 2");
  std::vector<DigitString> exp;
  exp.reserve(parts.size());
  std::size_t width = 0;
  for (const Natural& p : parts) {
    exp.push_back(expand(p, base));
    width = std::max(width, exp.back().size());
  }
  for (std::size_t i = 0; i < width; ++i) {
    std::uint64_t sum = 0;
    for (const DigitString& ds : exp) sum += ds.at(i);
    if (sum >= base) return false;
  }
  return true;
}

inline bool carry_free(std::initializer_list<Natural> parts, std::uint32_t base) {
  return carry_free(std::span<const Natural>(parts.begin(), parts.size()), base);
}

}  // namespace catmod::digits
