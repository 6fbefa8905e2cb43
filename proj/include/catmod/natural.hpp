#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace catmod {

// Arbitrary-precision integer backed by GMP. Naturals are Bignums the
// caller keeps nonnegative; signed intermediates (alternating sums,
// series reversion) use the same type.
using Bignum    = boost::multiprecision::mpz_int;
using Natural   = Bignum;
using SignedBig = Bignum;

// A requested (sequence, modulus) pair or parameter combination that has
// no registered fast kernel.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An index beyond the configured compute budget of an operation.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exactness assertion failed (inexact division, negative count).
// Indicates a bug in this library, never bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline mpz_srcptr raw(const Bignum& x) { return x.backend().data(); }
inline mpz_ptr raw(Bignum& x) { return x.backend().data(); }

inline std::uint64_t to_u64(const Bignum& x) {
  if (x < 0 || !mpz_fits_ulong_p(raw(x)))
    throw std::overflow_error("value does not fit in 64 bits");
  return mpz_get_ui(raw(x));
}

// Quotient x/d, throwing if d does not divide x exactly.
inline void exact_div_ui(Bignum& x, unsigned long d) {
  if (mpz_divisible_ui_p(raw(x), d) == 0)
    throw internal_error("inexact division");
  mpz_divexact_ui(raw(x), raw(x), d);
}

// Canonical residue of x (possibly negative) modulo small m.
inline std::uint32_t mod_ui(const Bignum& x, std::uint32_t m) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(raw(x), m));
}

inline Natural parse_natural(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  if (a == b) throw std::invalid_argument("empty number");
  for (std::size_t i = a; i < b; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not a nonnegative decimal integer");
  }
  return Natural(std::string(text.substr(a, b - a)));
}

inline std::string to_decimal(const Bignum& x) { return x.str(); }

}  // namespace catmod
