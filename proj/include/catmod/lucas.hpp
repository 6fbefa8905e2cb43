#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "catmod/digits.hpp"
#include "catmod/natural.hpp"

namespace catmod::lucas {

// Canonical representative of a congruence class: value in [0, modulus).
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;

  Residue() = default;
  Residue(std::uint32_t v, std::uint32_t m) : value(v), modulus(m) {
    if (m < 2) throw std::invalid_argument("Residue: modulus must be >= 2");
    if (v >= m) throw std::invalid_argument("Residue: value out of range");
  }

  friend bool operator==(const Residue&, const Residue&) = default;
};

// -1 is stored canonically as modulus-1.
inline Residue minus_one(std::uint32_t m) { return Residue(m - 1, m); }

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
}

// Pascal's triangle mod p for rows 0..p-1, the inner table of Lucas'
// congruence. Built per call context; the digit loop is a lookup.
class BinomTable {
 public:
  explicit BinomTable(std::uint32_t p) : p_(p) {
    require_prime(p);
    if (p > 4096) throw unsupported_error("BinomTable: prime too large");
    tri_.resize(static_cast<std::size_t>(p) * p, 0);
    for (std::uint32_t a = 0; a < p; ++a) {
      row(a)[0] = 1;
      for (std::uint32_t b = 1; b <= a; ++b)
        row(a)[b] = (at(a - 1, b) + at(a - 1, b - 1)) % p;
    }
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t binom(std::uint32_t a, std::uint32_t b) const {
    if (b > a) return 0;
    return at(a, b);
  }

 private:
  std::uint32_t* row(std::uint32_t a) { return tri_.data() + static_cast<std::size_t>(a) * p_; }
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const {
    return tri_[static_cast<std::size_t>(a) * p_ + b];
  }

  std::uint32_t p_;
  std::vector<std::uint32_t> tri_;
};

// binom(n,k) mod p digit by digit; any position with k_i > n_i kills the
// product, which also covers k > n.
inline Residue binom_mod(const digits::DigitString& n, const digits::DigitString& k,
                         const BinomTable& table) {
  std::uint32_t p = table.p();
  std::uint64_t prod = 1;
  if (k.size() > n.size()) return Residue(0, p);
  for (std::size_t i = 0; i < k.size(); ++i) {
    std::uint32_t f = table.binom(n.digits[i], k.digits[i]);
    if (f == 0) return Residue(0, p);
    prod = (prod * f) % p;
  }
  return Residue(static_cast<std::uint32_t>(prod), p);
}

inline Residue binom_mod(const Natural& n, const Natural& k, std::uint32_t p) {
  BinomTable table(p);
  return binom_mod(digits::expand(n, p), digits::expand(k, p), table);
}

// Multinomial coefficient n!/(prod parts!) mod p, digit by digit. At every
// position the part digits must sum to the digit of n; a carry in the
// addition of the parts makes the coefficient vanish.
inline Residue multinom_mod(const Natural& n, std::span<const Natural> parts,
                            std::uint32_t p) {
  BinomTable table(p);
  Natural sum = 0;
  for (const Natural& q : parts) sum += q;
  if (sum != n) throw std::invalid_argument("multinom_mod: parts must sum to n");

  digits::DigitString nd = digits::expand(n, p);
  std::vector<digits::DigitString> pd;
  pd.reserve(parts.size());
  for (const Natural& q : parts) pd.push_back(digits::expand(q, p));

  std::uint64_t prod = 1;
  for (std::size_t i = 0; i < nd.size(); ++i) {
    std::uint64_t s = 0;
    for (const auto& ds : pd) s += ds.at(i);
    if (s != nd.at(i)) return Residue(0, p);
    std::uint32_t rem = nd.at(i);
    for (const auto& ds : pd) {
      prod = (prod * table.binom(rem, ds.at(i))) % p;
      rem -= ds.at(i);
    }
  }
  return Residue(static_cast<std::uint32_t>(prod % p), p);
}

inline Residue multinom_mod(const Natural& n, std::initializer_list<Natural> parts,
                            std::uint32_t p) {
  return multinom_mod(n, std::span<const Natural>(parts.begin(), parts.size()), p);
}

}  // namespace catmod::lucas
