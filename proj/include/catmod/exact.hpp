#pragma once

#include <cstdint>
#include <vector>

#include "catmod/digits.hpp"
#include "catmod/lucas.hpp"
#include "catmod/natural.hpp"

namespace catmod::exact {

inline Natural binomial(std::uint64_t n, std::uint64_t k) {
  Natural out;
  mpz_bin_uiui(raw(out), n, k);
  return out;
}

inline Natural power(std::uint64_t base, std::uint64_t e) {
  Natural out;
  mpz_ui_pow_ui(raw(out), base, e);
  return out;
}

// Exact big-integer oracles, each computed from its defining formula.
// Memo tables grow monotonically; an instance is one evaluation context
// and is not meant to be shared across threads.
class Oracles {
 public:
  // C_n = binom(2n,n)/(n+1); the division is checked exact.
  Natural catalan(std::uint64_t n) {
    Natural c = binomial(2 * n, n);
    exact_div_ui(c, n + 1);
    return c;
  }

  Natural central_binom(std::uint64_t n) { return binomial(2 * n, n); }

  // M_n = sum_k binom(n,2k) C_k.
  Natural motzkin(std::uint64_t n) {
    ensure_catalan(n / 2);
    Natural m = 0;
    for (std::uint64_t k = 0; 2 * k <= n; ++k)
      m += binomial(n, 2 * k) * catalan_[k];
    return m;
  }

  // P_n via the height-indexed dynamic program over steps (1,1), (1,-1),
  // (1,0) that never dips below the axis, summed over all end heights.
  Natural motzkin_prefix(std::uint64_t n) {
    while (prefix_.size() <= n) {
      std::size_t t = dp_.size();  // dp_ holds counts by height after t-1 steps
      if (t == 0) {
        dp_.assign(1, Natural(1));
        prefix_.push_back(1);
        continue;
      }
      std::vector<Natural> next(t + 1, Natural(0));
      for (std::size_t h = 0; h < t; ++h) {
        next[h] += dp_[h];
        next[h + 1] += dp_[h];
        if (h > 0) next[h - 1] += dp_[h];
      }
      dp_ = std::move(next);
      Natural total = 0;
      for (const Natural& v : dp_) total += v;
      prefix_.push_back(std::move(total));
    }
    return prefix_[n];
  }

  // gamma_0 = 1 and gamma_{n+1} = M_n - gamma_n.
  Natural riordan(std::uint64_t n) {
    if (riordan_.empty()) riordan_.push_back(1);
    while (riordan_.size() <= n) {
      std::uint64_t k = riordan_.size() - 1;
      Natural next = motzkin(k) - riordan_[k];
      if (next < 0) throw internal_error("riordan: negative value");
      riordan_.push_back(std::move(next));
    }
    return riordan_[n];
  }

  // S_0 = 1, S_{2m} = S_{2m-1} + M_{m-1}, S_{2m+1} = S_{2m}.
  Natural sym012(std::uint64_t n) {
    if (sym_.empty()) sym_.push_back(1);
    while (sym_.size() <= n) {
      std::uint64_t k = sym_.size();
      if (k % 2 == 1) {
        sym_.push_back(sym_[k - 1]);
      } else {
        sym_.push_back(sym_[k - 1] + motzkin(k / 2 - 1));
      }
    }
    return sym_[n];
  }

  // H_0 = 1 and H_n = 3 H_{n-1} + sum_{i+j=n-2} H_i H_j: the root has no
  // children, one child in three positions, or left+right children.
  Natural hex(std::uint64_t n) {
    if (hex_.empty()) hex_.push_back(1);
    while (hex_.size() <= n) {
      std::uint64_t k = hex_.size();
      Natural h = 3 * hex_[k - 1];
      if (k >= 2) {
        for (std::uint64_t i = 0; i <= k - 2; ++i) h += hex_[i] * hex_[k - 2 - i];
      }
      hex_.push_back(std::move(h));
    }
    return hex_[n];
  }

  // T_n = sum_k n!/(k! k! (n-2k)!) = sum_k binom(n,k) binom(n-k,k).
  Natural central_trinomial(std::uint64_t n) {
    Natural t = 0;
    for (std::uint64_t k = 0; 2 * k <= n; ++k)
      t += binomial(n, k) * binomial(n - k, k);
    return t;
  }

  // sum_{k=0}^{n} binom(2k,k).
  Natural partial_sum_cb(std::uint64_t n) {
    Natural s = 0;
    for (std::uint64_t k = 0; k <= n; ++k) s += binomial(2 * k, k);
    return s;
  }

  // a_n(r,s) = sum_k binom(n,k)^r binom(n+k,k)^s for r,s >= 1.
  Natural a_rs(std::uint64_t n, std::uint32_t r, std::uint32_t s) {
    if (r == 0 || s == 0) throw unsupported_error("a_rs: r and s must be positive");
    Natural total = 0, t1, t2;
    for (std::uint64_t k = 0; k <= n; ++k) {
      mpz_bin_uiui(raw(t1), n, k);
      mpz_pow_ui(raw(t1), raw(t1), r);
      mpz_bin_uiui(raw(t2), n + k, k);
      mpz_pow_ui(raw(t2), raw(t2), s);
      total += t1 * t2;
    }
    return total;
  }

  // A(n,k) = sum_{i=0}^{k} (-1)^i (k-i)^n binom(n+1,i); the alternating
  // sum runs through signed intermediates and the result is checked
  // nonnegative.
  Natural eulerian(std::uint64_t n, std::uint64_t k) {
    if (k < 1 || k > n) throw std::invalid_argument("eulerian: need 1 <= k <= n");
    SignedBig total = 0;
    for (std::uint64_t i = 0; i <= k; ++i) {
      if (k == i) break;  // (k-i)^n = 0
      SignedBig term = power(k - i, n) * binomial(n + 1, i);
      if (i % 2 == 1) term = -term;
      total += term;
    }
    if (total < 0) throw internal_error("eulerian: negative value");
    return total;
  }

  // Number of entries of Pascal row n that are nonzero mod p, by scanning
  // the row with Lucas' congruence.
  std::uint64_t gould_row_count(std::uint64_t n, std::uint32_t p) {
    lucas::BinomTable table(p);
    digits::DigitString nd;
    nd.base = p;
    nd.digits = digits::expand_u64(n, p);
    digits::DigitString kd;
    kd.base = p;
    std::uint64_t count = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
      kd.digits = digits::expand_u64(k, p);
      if (lucas::binom_mod(nd, kd, table).value != 0) ++count;
    }
    return count;
  }

  // N_n = (1/(n-1)) sum_k binom(3n-3, n+k+1) binom(k, n-2) for n >= 2;
  // N_1 = 1 by definition (the single-vertex graph).
  Natural noncrossing(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("noncrossing: index starts at 1");
    if (n == 1) return 1;
    Natural total = 0;
    for (std::uint64_t k = n - 2; k + 4 <= n + n; ++k)  // k <= 2n-4
      total += binomial(3 * n - 3, n + k + 1) * binomial(k, n - 2);
    if (!mpz_divisible_ui_p(raw(total), n - 1))
      throw internal_error("noncrossing: inexact division");
    mpz_divexact_ui(raw(total), raw(total), n - 1);
    return total;
  }

  // Coefficient of x^n in the compositional inverse of sum_{k>=1} k! x^k.
  // The unit linear term makes every coefficient an integer.
  SignedBig com(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("com: index starts at 1");
    ensure_com(n);
    return com_[n];
  }

  // (2d)!! = (2d-1)(2d-3)...3.1 with 0!! = 1, the double factorial in the
  // odd-product convention.
  Natural double_fact(std::uint64_t d) {
    Natural out = 1;
    for (std::uint64_t i = 1; i <= d; ++i) mpz_mul_ui(raw(out), raw(out), 2 * i - 1);
    return out;
  }

  // Textbook three-term recurrences for D_n and A_n, kept as secondary
  // oracles against the defining sums.
  Natural delannoy_recurrence(std::uint64_t n) {
    if (delannoy_.empty()) delannoy_ = {Natural(1), Natural(3)};
    while (delannoy_.size() <= n) {
      std::uint64_t k = delannoy_.size() - 1;  // computing D_{k+1}
      Natural next = 3 * (2 * (k + 1) - 1) * delannoy_[k] - k * delannoy_[k - 1];
      exact_div_ui(next, k + 1);
      delannoy_.push_back(std::move(next));
    }
    return delannoy_[n];
  }

  Natural apery_recurrence(std::uint64_t n) {
    if (apery_.empty()) apery_ = {Natural(1), Natural(3)};
    while (apery_.size() <= n) {
      std::uint64_t k = apery_.size() - 1;  // computing A_{k+1}
      Natural next = (11 * k * k + 11 * k + 3) * apery_[k] + k * k * apery_[k - 1];
      exact_div_ui(next, (k + 1) * (k + 1));
      apery_.push_back(std::move(next));
    }
    return apery_[n];
  }

 private:
  void ensure_catalan(std::uint64_t n) {
    while (catalan_.size() <= n) catalan_.push_back(catalan(catalan_.size()));
  }

  void ensure_com(std::uint64_t n) {
    if (com_.size() > n) return;
    // Triangular back-substitution on f(g(x)) = x with f_k = k!.
    // gp[k][m] = [x^m] g(x)^k; the x^m equation determines a_m since only
    // the k=1 term involves it.
    std::size_t size = n + 1;
    std::vector<Bignum> fact(size + 1);
    fact[0] = 1;
    for (std::size_t i = 1; i <= size; ++i) fact[i] = fact[i - 1] * i;
    std::vector<std::vector<Bignum>> gp(size, std::vector<Bignum>(size, Bignum(0)));
    std::vector<Bignum> a(size, Bignum(0));
    for (std::size_t m = 1; m < size; ++m) {
      for (std::size_t k = 2; k <= m; ++k) {
        Bignum acc = 0;
        for (std::size_t j = k - 1; j < m; ++j)
          if (gp[k - 1][j] != 0) acc += gp[k - 1][j] * a[m - j];
        gp[k][m] = std::move(acc);
      }
      if (m == 1) {
        a[1] = 1;
      } else {
        Bignum acc = 0;
        for (std::size_t k = 2; k <= m; ++k) acc += fact[k] * gp[k][m];
        a[m] = -acc;
      }
      gp[1][m] = a[m];
    }
    com_.assign(size, Bignum(0));
    for (std::size_t m = 1; m < size; ++m) com_[m] = a[m];
  }

  std::vector<Natural> catalan_;
  std::vector<Natural> prefix_;
  std::vector<Natural> dp_;
  std::vector<Natural> riordan_;
  std::vector<Natural> sym_;
  std::vector<Natural> hex_;
  std::vector<Natural> delannoy_;
  std::vector<Natural> apery_;
  std::vector<SignedBig> com_;
};

}  // namespace catmod::exact
