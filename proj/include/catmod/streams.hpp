#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "catmod/exact.hpp"
#include "catmod/natural.hpp"

// Streaming producers of exact values for range scans. Each one advances
// a recurrence with exact (checked) integer divisions. The recurrences
// that are not themselves defining formulas are cross-checked against the
// defining-formula oracles in the test suite before any scan relies on
// them.
namespace catmod::exact {

// C_0 = 1, C_n = C_{n-1} (4n-2)/(n+1).
class CatalanStream {
 public:
  const Natural& value() const { return cur_; }
  std::uint64_t index() const { return n_; }
  void advance() {
    ++n_;
    cur_ *= 4 * n_ - 2;
    exact_div_ui(cur_, n_ + 1);
  }

 private:
  Natural cur_ = 1;
  std::uint64_t n_ = 0;
};

// binom(0,0) = 1, binom(2n+2,n+1) = binom(2n,n) (4n+2)/(n+1).
class CentralBinomStream {
 public:
  const Natural& value() const { return cur_; }
  std::uint64_t index() const { return n_; }
  void advance() {
    cur_ *= 4 * n_ + 2;
    exact_div_ui(cur_, n_ + 1);
    ++n_;
  }

 private:
  Natural cur_ = 1;
  std::uint64_t n_ = 0;
};

// (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}.
class MotzkinStream {
 public:
  const Natural& value() const { return cur_; }
  std::uint64_t index() const { return n_; }
  void advance() {
    ++n_;
    if (n_ == 1) return;  // M_1 = M_0 = 1
    Natural next = (2 * n_ + 1) * cur_ + 3 * (n_ - 1) * prev_;
    exact_div_ui(next, n_ + 2);
    prev_ = std::move(cur_);
    cur_ = std::move(next);
  }

 private:
  Natural prev_ = 1;
  Natural cur_ = 1;
  std::uint64_t n_ = 0;
};

// n T_n = (2n-1) T_{n-1} + 3(n-1) T_{n-2}.
class TrinomialStream {
 public:
  const Natural& value() const { return cur_; }
  std::uint64_t index() const { return n_; }
  void advance() {
    ++n_;
    if (n_ == 1) return;  // T_1 = T_0 = 1
    Natural next = (2 * n_ - 1) * cur_ + 3 * (n_ - 1) * prev_;
    exact_div_ui(next, n_);
    prev_ = std::move(cur_);
    cur_ = std::move(next);
  }

 private:
  Natural prev_ = 1;
  Natural cur_ = 1;
  std::uint64_t n_ = 0;
};

// (n+2) H_n = 3(2n+1) H_{n-1} - 5(n-1) H_{n-2}.
class HexStream {
 public:
  const Natural& value() const { return cur_; }
  std::uint64_t index() const { return n_; }
  void advance() {
    ++n_;
    if (n_ == 1) {
      prev_ = 1;
      cur_ = 3;
      return;
    }
    Natural next = 3 * (2 * n_ + 1) * cur_ - 5 * (n_ - 1) * prev_;
    if (next < 0) throw internal_error("hex stream: negative value");
    exact_div_ui(next, n_ + 2);
    prev_ = std::move(cur_);
    cur_ = std::move(next);
  }

 private:
  Natural prev_ = 1;
  Natural cur_ = 1;
  std::uint64_t n_ = 0;
};

// P_{n+1} = 3 P_n - M_n: every prefix extends by three steps except that
// a prefix ending on the axis cannot step down.
class PrefixStream {
 public:
  const Natural& value() const { return cur_; }
  std::uint64_t index() const { return motzkin_.index(); }
  void advance() {
    cur_ = 3 * cur_ - motzkin_.value();
    if (cur_ < 0) throw internal_error("prefix stream: negative value");
    motzkin_.advance();
  }

 private:
  MotzkinStream motzkin_;
  Natural cur_ = 1;
};

// gamma_{n+1} = M_n - gamma_n.
class RiordanStream {
 public:
  const Natural& value() const { return cur_; }
  std::uint64_t index() const { return motzkin_.index(); }
  void advance() {
    cur_ = motzkin_.value() - cur_;
    if (cur_ < 0) throw internal_error("riordan stream: negative value");
    motzkin_.advance();
  }

 private:
  MotzkinStream motzkin_;
  Natural cur_ = 1;
};

// S_0 = 1, S_{2m} = S_{2m-1} + M_{m-1}, S_{2m+1} = S_{2m}.
class Sym012Stream {
 public:
  const Natural& value() const { return cur_; }
  std::uint64_t index() const { return n_; }
  void advance() {
    ++n_;
    if (n_ % 2 == 0) {
      cur_ += motzkin_.value();  // M_{n/2 - 1}
      motzkin_.advance();
    }
  }

 private:
  MotzkinStream motzkin_;
  Natural cur_ = 1;
  std::uint64_t n_ = 0;
};

// Running sum of central binomial coefficients.
class PartialSumCBStream {
 public:
  const Natural& value() const { return sum_; }
  std::uint64_t index() const { return cb_.index(); }
  void advance() {
    cb_.advance();
    sum_ += cb_.value();
  }

 private:
  CentralBinomStream cb_;
  Natural sum_ = 1;
};

// Eulerian triangle rows via A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1),
// cross-checked against the alternating-sum formula. row()[k-1] = A(n,k).
class EulerianRowStream {
 public:
  std::uint64_t row_index() const { return n_; }
  const std::vector<Natural>& row() const { return row_; }
  void advance() {
    ++n_;
    if (n_ == 1) {
      row_.assign(1, Natural(1));
      return;
    }
    row_.push_back(0);
    for (std::uint64_t k = n_; k >= 1; --k) {
      Natural v = k * entry(k) + (n_ - k + 1) * entry(k - 1);
      row_[k - 1] = std::move(v);
    }
  }

 private:
  // A(n-1, k) while building row n; zero outside 1..n-1.
  const Natural& entry(std::uint64_t k) const {
    static const Natural zero = 0;
    if (k < 1 || k > n_ - 1) return zero;
    return row_[k - 1];
  }

  std::vector<Natural> row_;
  std::uint64_t n_ = 0;
};

// N_n by the binomial-sum formula, with the two binomials updated
// multiplicatively along k inside each row.
class NoncrossingStream {
 public:
  const Natural& value() const { return cur_; }
  std::uint64_t index() const { return n_; }
  void advance() {
    ++n_;
    if (n_ == 1) {
      cur_ = 1;
      return;
    }
    std::uint64_t n = n_;
    Natural big = binomial(3 * n - 3, 2 * n - 1);  // binom(3n-3, n+k+1) at k = n-2
    Natural small = 1;                             // binom(k, n-2) at k = n-2
    Natural total = big;
    for (std::uint64_t k = n - 2; k + 5 <= 2 * n; ++k) {
      // advance both binomials from k to k+1
      big *= 2 * n - k - 4;
      exact_div_ui(big, n + k + 2);
      small *= k + 1;
      exact_div_ui(small, k + 3 - n);
      total += big * small;
    }
    if (!mpz_divisible_ui_p(raw(total), n - 1))
      throw internal_error("noncrossing stream: inexact division");
    mpz_divexact_ui(raw(total), raw(total), n - 1);
    cur_ = std::move(total);
  }

 private:
  Natural cur_ = 1;
  std::uint64_t n_ = 0;
};

}  // namespace catmod::exact
