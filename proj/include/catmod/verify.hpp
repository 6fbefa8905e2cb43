#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "catmod/enumerate.hpp"
#include "catmod/exact.hpp"
#include "catmod/residues.hpp"
#include "catmod/streams.hpp"
#include "catmod/thue_morse.hpp"

namespace catmod::verify {

struct Failure {
  std::uint64_t n = 0;
  std::string expected;
  std::string actual;
};

// One verification record stream: pass iff no failures. Canonical
// serializations exclude the elapsed time so reports are byte-identical
// across runs and worker counts.
struct Report {
  std::string check_id;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;
  bool partial = false;
  std::string note;

  bool pass() const { return failures.empty(); }

  std::string to_json_lines() const {
    std::string out;
    for (const Failure& f : failures) {
      nlohmann::json rec{{"check", check_id},
                         {"n", f.n},
                         {"expected", f.expected},
                         {"actual", f.actual},
                         {"status", "fail"}};
      out += rec.dump();
      out += '\n';
    }
    nlohmann::json summary{{"check", check_id},
                           {"range", {lo, hi}},
                           {"failures", failures.size()},
                           {"status", pass() ? "pass" : "fail"}};
    if (partial) summary["partial"] = true;
    if (!note.empty()) summary["note"] = note;
    out += summary.dump();
    out += '\n';
    return out;
  }

  std::string to_tsv() const {
    std::string out;
    for (const Failure& f : failures) {
      out += check_id + "\t" + std::to_string(f.n) + "\t" + f.expected + "\t" +
             f.actual + "\tfail\n";
    }
    out += check_id + "\t[" + std::to_string(lo) + "," + std::to_string(hi) +
           "]\t-\t-\t" + (pass() ? "pass" : "fail") + "\n";
    return out;
  }

  std::string summary_line() const {
    std::ostringstream os;
    os << (pass() ? "PASS " : "FAIL ") << check_id << "  range [" << lo << ", "
       << hi << "]  failures=" << failures.size();
    if (partial) os << "  (partial: " << note << ")";
    os << "  " << static_cast<std::uint64_t>(elapsed_ms) << " ms";
    return os.str();
  }
};

namespace detail {

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

// A registered theorem check: the fast kernel against the exact-oracle
// residue stream over [start, n_max].
struct TheoremCheck {
  std::string id;
  std::uint32_t modulus = 0;  // 0: compare plain values (omega, counts)
  std::uint64_t start = 0;
  std::uint64_t default_max = 2000;
  std::function<std::uint32_t(std::uint64_t)> kernel;
  std::function<std::vector<std::uint32_t>(std::uint64_t)> oracle;  // [start..n_max]
};

namespace detail {

// ---- exact oracle range generators ----------------------------------

template <typename Stream, typename Fn>
std::vector<std::uint32_t> stream_map(std::uint64_t n_max, Fn&& fn) {
  std::vector<std::uint32_t> out;
  out.reserve(n_max + 1);
  Stream s;
  for (std::uint64_t n = 0;; ++n) {
    out.push_back(fn(s.value()));
    if (n == n_max) break;
    s.advance();
  }
  return out;
}

template <typename Stream>
std::vector<std::uint32_t> stream_mod(std::uint64_t n_max, std::uint32_t m) {
  return stream_map<Stream>(n_max,
                            [m](const Natural& v) { return mod_ui(v, m); });
}

inline std::vector<std::uint32_t> catalan_omega_range(std::uint64_t n_max) {
  return stream_map<exact::CatalanStream>(n_max, [](const Natural& v) {
    return static_cast<std::uint32_t>(mpz_scan1(raw(v), 0));
  });
}

// Pascal rows mod p by repeated addition; counts the nonzero entries per
// row. Independent of both Lucas' congruence and the product formula.
inline std::vector<std::uint32_t> gould_row_range(std::uint64_t n_max, std::uint32_t p) {
  std::vector<std::uint32_t> out;
  out.reserve(n_max + 1);
  std::vector<std::uint8_t> row(n_max + 1, 0);
  row[0] = 1;
  out.push_back(1);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    std::uint32_t nonzero = 1;  // row[0] stays 1
    for (std::uint64_t k = n; k >= 1; --k) {
      row[k] = static_cast<std::uint8_t>((row[k] + row[k - 1]) % p);
      if (row[k] != 0) ++nonzero;
    }
    out.push_back(nonzero);
  }
  return out;
}

// value = u * 3^e with u in {1,2}; exact mod-3 bookkeeping for binomial
// ratios without big integers.
struct ValUnit {
  std::int64_t e = 0;
  std::uint32_t u = 1;
};

inline void vu_mul(ValUnit& x, std::uint64_t f) {
  while (f % 3 == 0) {
    f /= 3;
    ++x.e;
  }
  if (f % 3 == 2) x.u = (x.u == 1) ? 2 : 1;
}

inline void vu_div(ValUnit& x, std::uint64_t f) {
  while (f % 3 == 0) {
    f /= 3;
    --x.e;
  }
  // 1 and 2 are their own inverses mod 3
  if (f % 3 == 2) x.u = (x.u == 1) ? 2 : 1;
}

inline std::uint32_t vu_pow_unit(const ValUnit& x, std::uint32_t e) {
  return (x.u == 2 && e % 2 == 1) ? 2 : 1;
}

// a_n(r,s) mod 3 directly from the defining sum, with both binomials
// advanced multiplicatively along k and tracked as unit * 3^valuation.
inline std::vector<std::uint32_t> a_rs_mod3_range(std::uint64_t n_max,
                                                  std::uint32_t r, std::uint32_t s) {
  std::vector<std::uint32_t> out;
  out.reserve(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    ValUnit u;  // binom(n,k)
    ValUnit v;  // binom(n+k,k)
    std::uint32_t acc = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
      if (u.e * r + v.e * s == 0)
        acc = (acc + vu_pow_unit(u, r) * vu_pow_unit(v, s)) % 3;
      if (k < n) {
        vu_mul(u, n - k);
        vu_div(u, k + 1);
        vu_mul(v, n + k + 1);
        vu_div(v, k + 1);
      }
    }
    out.push_back(acc);
  }
  return out;
}

inline std::vector<std::uint32_t> eulerian_mod3_range(std::uint64_t n_max,
                                                      residues::EulerianKind kind) {
  std::vector<std::uint32_t> out;
  out.reserve(n_max);
  exact::EulerianRowStream rows;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    while (rows.row_index() < (kind == residues::EulerianKind::central ? 2 * n - 1 : 2 * n))
      rows.advance();
    out.push_back(mod_ui(rows.row()[n - 1], 3));
  }
  return out;
}

inline std::vector<TheoremCheck> build_registry() {
  using residues::EulerianKind;
  using residues::Family;
  std::vector<TheoremCheck> checks;

  checks.push_back({"catalan_omega2", 0, 0, 2000,
                    [](std::uint64_t n) {
                      return static_cast<std::uint32_t>(
                          residues::catalan_omega2(Natural(n)));
                    },
                    catalan_omega_range});

  checks.push_back({"catalan_mod3", 3, 0, 2000,
                    [](std::uint64_t n) { return residues::catalan_mod3(Natural(n)).value; },
                    [](std::uint64_t m) { return stream_mod<exact::CatalanStream>(m, 3); }});

  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    checks.push_back({"central_binom_mod" + std::to_string(p), p, 0, 2000,
                      [p](std::uint64_t n) {
                        return residues::central_binom_mod_p(Natural(n), p).value;
                      },
                      [p](std::uint64_t m) {
                        return stream_mod<exact::CentralBinomStream>(m, p);
                      }});
  }

  checks.push_back({"central_trinomial_mod3", 3, 0, 2000,
                    [](std::uint64_t n) {
                      return residues::central_trinomial_mod3(Natural(n)).value;
                    },
                    [](std::uint64_t m) { return stream_mod<exact::TrinomialStream>(m, 3); }});

  struct FamilyRow {
    const char* name;
    Family family;
    std::function<std::vector<std::uint32_t>(std::uint64_t, std::uint32_t)> range;
  };
  const FamilyRow family_rows[] = {
      {"motzkin", Family::motzkin,
       [](std::uint64_t m, std::uint32_t mod) { return stream_mod<exact::MotzkinStream>(m, mod); }},
      {"prefix", Family::prefix,
       [](std::uint64_t m, std::uint32_t mod) { return stream_mod<exact::PrefixStream>(m, mod); }},
      {"riordan", Family::riordan,
       [](std::uint64_t m, std::uint32_t mod) { return stream_mod<exact::RiordanStream>(m, mod); }},
      {"hex", Family::hex,
       [](std::uint64_t m, std::uint32_t mod) { return stream_mod<exact::HexStream>(m, mod); }},
  };
  for (const FamilyRow& row : family_rows) {
    checks.push_back({std::string(row.name) + "_parity", 2, 0, 2000,
                      [f = row.family](std::uint64_t n) {
                        return residues::family_parity(f, Natural(n)).value;
                      },
                      [range = row.range](std::uint64_t m) { return range(m, 2); }});
  }
  for (const FamilyRow& row : family_rows) {
    checks.push_back({std::string(row.name) + "_mod3", 3, 0, 2000,
                      [f = row.family](std::uint64_t n) {
                        return residues::family_mod3(f, Natural(n)).value;
                      },
                      [range = row.range](std::uint64_t m) { return range(m, 3); }});
  }

  checks.push_back({"partial_sum_mod3", 3, 0, 2000,
                    [](std::uint64_t n) { return residues::partial_sum_mod3(Natural(n)).value; },
                    [](std::uint64_t m) {
                      return stream_mod<exact::PartialSumCBStream>(m, 3);
                    }});

  for (std::uint32_t r : {1u, 2u}) {
    for (std::uint32_t s : {1u, 2u}) {
      checks.push_back({"a_rs_mod3_r" + std::to_string(r) + "s" + std::to_string(s),
                        3, 0, 2000,
                        [r, s](std::uint64_t n) {
                          return residues::a_rs_mod3(Natural(n), r, s).value;
                        },
                        [r, s](std::uint64_t m) { return a_rs_mod3_range(m, r, s); }});
    }
  }

  for (std::uint32_t p : {2u, 3u, 5u}) {
    checks.push_back({"gould_count_p" + std::to_string(p), 0, 0, 2000,
                      [p](std::uint64_t n) {
                        return static_cast<std::uint32_t>(
                            to_u64(residues::gould_count(Natural(n), p)));
                      },
                      [p](std::uint64_t m) { return gould_row_range(m, p); }});
    checks.push_back({"gould_full_row_p" + std::to_string(p), 0, 0, 2000,
                      [p](std::uint64_t n) {
                        return residues::gould_all_nonzero(Natural(n), p) ? 1u : 0u;
                      },
                      [p](std::uint64_t m) {
                        std::vector<std::uint32_t> counts = gould_row_range(m, p);
                        for (std::uint64_t n = 0; n <= m; ++n)
                          counts[n] = (counts[n] == n + 1) ? 1 : 0;
                        return counts;
                      }});
  }

  checks.push_back({"eulerian_central_mod3", 3, 1, 600,
                    [](std::uint64_t n) {
                      return residues::eulerian_central_mod3(EulerianKind::central,
                                                             Natural(n))
                          .value;
                    },
                    [](std::uint64_t m) {
                      return eulerian_mod3_range(m, EulerianKind::central);
                    }});
  checks.push_back({"eulerian_bicentral_mod3", 3, 1, 600,
                    [](std::uint64_t n) {
                      return residues::eulerian_central_mod3(EulerianKind::bicentral,
                                                             Natural(n))
                          .value;
                    },
                    [](std::uint64_t m) {
                      return eulerian_mod3_range(m, EulerianKind::bicentral);
                    }});

  return checks;
}

}  // namespace detail

inline const std::vector<TheoremCheck>& theorem_checks() {
  static const std::vector<TheoremCheck> registry = detail::build_registry();
  return registry;
}

inline const TheoremCheck* find_check(std::string_view id) {
  for (const TheoremCheck& c : theorem_checks())
    if (c.id == id) return &c;
  return nullptr;
}

// Compare kernel to oracle over [check.start, n_max]. The oracle stream
// runs once sequentially; the kernel evaluations are partitioned across
// workers in contiguous chunks and merged in index order, so the report
// does not depend on the worker count.
inline Report run_theorem(const TheoremCheck& check, std::uint64_t n_max,
                          unsigned workers = 1) {
  detail::Timer timer;
  Report report;
  report.check_id = check.id;
  report.lo = check.start;
  report.hi = n_max;
  if (n_max < check.start) {
    report.elapsed_ms = timer.ms();
    return report;
  }

  std::vector<std::uint32_t> expected = check.oracle(n_max);
  std::uint64_t count = n_max - check.start + 1;
  if (expected.size() != count) throw internal_error("oracle range size mismatch");

  if (workers == 0) workers = 1;
  std::uint64_t chunk = (count + workers - 1) / workers;
  std::vector<std::future<std::vector<Failure>>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t a = static_cast<std::uint64_t>(w) * chunk;
    std::uint64_t b = std::min(count, a + chunk);
    if (a >= b) break;
    parts.push_back(std::async(std::launch::async, [&, a, b] {
      std::vector<Failure> fails;
      for (std::uint64_t i = a; i < b; ++i) {
        std::uint64_t n = check.start + i;
        std::uint32_t actual = check.kernel(n);
        if (actual != expected[i]) {
          fails.push_back({n, std::to_string(expected[i]), std::to_string(actual)});
        }
      }
      return fails;
    }));
  }
  for (auto& part : parts) {
    std::vector<Failure> fails = part.get();
    report.failures.insert(report.failures.end(), fails.begin(), fails.end());
  }
  report.elapsed_ms = timer.ms();
  return report;
}

inline Report check_theorem(std::string_view id, std::uint64_t n_max = 0,
                            unsigned workers = 1) {
  const TheoremCheck* check = find_check(id);
  if (check == nullptr)
    throw std::invalid_argument("unknown check id: " + std::string(id));
  return run_theorem(*check, n_max == 0 ? check->default_max : n_max, workers);
}

// ---- conjecture scans -------------------------------------------------

enum class ConjectureId {
  amdeberhan_mod4,
  amdeberhan_mod8,
  noncrossing_mod3,
  com_catalan_mod3,
};

inline std::optional<ConjectureId> parse_conjecture(std::string_view s) {
  if (s == "amdeberhan_mod4") return ConjectureId::amdeberhan_mod4;
  if (s == "amdeberhan_mod8") return ConjectureId::amdeberhan_mod8;
  if (s == "noncrossing_mod3") return ConjectureId::noncrossing_mod3;
  if (s == "com_catalan_mod3") return ConjectureId::com_catalan_mod3;
  return std::nullopt;
}

// n = (4i+1)4^{j+1} - 1 or (4i+3)4^{j+1} - 2: strip the powers of four
// from n+1 (resp. n+2) and look at the remainder class mod 4.
inline bool amdeberhan_mod4_index(std::uint64_t n) {
  auto stripped_class = [](std::uint64_t m, std::uint32_t want) {
    std::uint64_t e = 0;
    while (m % 4 == 0) {
      m /= 4;
      ++e;
    }
    return e >= 1 && m % 4 == want;
  };
  return stripped_class(n + 1, 1) || stripped_class(n + 2, 3);
}

// Expected N_n mod 3: 1 at 3^i and 2*3^i, -1 at 3^i + 3^j with i != j.
inline std::uint32_t noncrossing_mod3_predicted(std::uint64_t n) {
  std::vector<std::uint32_t> d = digits::expand_u64(n, 3);
  std::uint64_t ones = 0, twos = 0;
  for (std::uint32_t v : d) {
    if (v == 1) ++ones;
    if (v == 2) ++twos;
  }
  if (twos == 0 && ones == 1) return 1;  // 3^i
  if (twos == 1 && ones == 0) return 1;  // 2*3^i
  if (twos == 0 && ones == 2) return 2;  // 3^i + 3^j
  return 0;
}

inline Report scan_conjecture(ConjectureId id, std::uint64_t n_max) {
  detail::Timer timer;
  Report report;
  switch (id) {
    case ConjectureId::amdeberhan_mod4: {
      report.check_id = "amdeberhan_mod4";
      report.lo = 0;
      report.hi = n_max;
      exact::MotzkinStream m;
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        bool zero = mod_ui(m.value(), 4) == 0;
        bool predicted = amdeberhan_mod4_index(n);
        if (zero != predicted) {
          report.failures.push_back({n, predicted ? "0 (mod 4)" : "nonzero (mod 4)",
                                     std::to_string(mod_ui(m.value(), 4))});
        }
        m.advance();
      }
      break;
    }
    case ConjectureId::amdeberhan_mod8: {
      report.check_id = "amdeberhan_mod8";
      report.lo = 0;
      report.hi = n_max;
      exact::MotzkinStream m;
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (mod_ui(m.value(), 8) == 0)
          report.failures.push_back({n, "nonzero (mod 8)", "0"});
        m.advance();
      }
      break;
    }
    case ConjectureId::noncrossing_mod3: {
      report.check_id = "noncrossing_mod3";
      report.lo = 1;
      report.hi = n_max;
      exact::NoncrossingStream s;
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        s.advance();
        std::uint32_t actual = mod_ui(s.value(), 3);
        std::uint32_t predicted = noncrossing_mod3_predicted(n);
        if (actual != predicted) {
          report.failures.push_back(
              {n, std::to_string(predicted), std::to_string(actual)});
        }
      }
      break;
    }
    case ConjectureId::com_catalan_mod3: {
      report.check_id = "com_catalan_mod3";
      report.lo = 1;
      report.hi = n_max;
      exact::Oracles oracles;
      oracles.com(n_max);  // build the reversion table once
      exact::CatalanStream c;
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::uint32_t lhs = mod_ui(oracles.com(n), 3);
        std::uint32_t rhs = mod_ui(c.value(), 3);  // C_{n-1}
        if (lhs != rhs)
          report.failures.push_back({n, std::to_string(rhs), std::to_string(lhs)});
        c.advance();
      }
      break;
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// ---- identity suite ---------------------------------------------------

struct IdentityBounds {
  std::uint64_t double_fact_max = 30;     // the (2d)!! convolution
  std::uint64_t exact_max = 2000;         // exact three-term identities
  std::uint64_t parity_max = 5000;        // parity identities
  std::uint64_t thue_morse_max = 100000;  // t_n and the block-length law
};

inline Report check_identities(IdentityBounds bounds = {}) {
  detail::Timer timer;
  Report report;
  report.check_id = "identities";
  report.lo = 0;
  report.hi = std::max({bounds.double_fact_max, bounds.exact_max, bounds.parity_max,
                        bounds.thue_morse_max});
  auto fail = [&](std::uint64_t n, const std::string& what, const std::string& exp,
                  const std::string& act) {
    report.failures.push_back({n, what + " expected " + exp, act});
  };

  exact::Oracles oracles;

  // (2d)!! = (1/2) sum_k binom(d+1,k) (2k-2)!! (2d-2k)!!
  for (std::uint64_t d = 1; d <= bounds.double_fact_max; ++d) {
    Natural rhs = 0;
    for (std::uint64_t k = 1; k <= d; ++k)
      rhs += exact::binomial(d + 1, k) * oracles.double_fact(k - 1) *
             oracles.double_fact(d - k);
    Natural lhs = 2 * oracles.double_fact(d);
    if (lhs != rhs)
      fail(d, "double-factorial convolution", to_decimal(lhs), to_decimal(rhs));
  }

  // Shared exact streams.
  std::uint64_t m_max = std::max(bounds.exact_max + 2, bounds.parity_max);
  std::vector<Natural> motzkin(m_max + 1), trinomial(bounds.exact_max + 3);
  {
    exact::MotzkinStream ms;
    for (std::uint64_t n = 0; n <= m_max; ++n, ms.advance()) motzkin[n] = ms.value();
    exact::TrinomialStream ts;
    for (std::uint64_t n = 0; n + 1 <= bounds.exact_max + 3; ++n, ts.advance())
      trinomial[n] = ts.value();
  }
  std::uint64_t s_max = 2 * bounds.parity_max + 1;
  std::vector<Natural> sym(s_max + 1);
  {
    exact::Sym012Stream ss;
    for (std::uint64_t n = 0; n <= s_max; ++n, ss.advance()) sym[n] = ss.value();
  }

  // 2 M_n = 3 T_n + 2 T_{n+1} - T_{n+2}
  for (std::uint64_t n = 0; n <= bounds.exact_max; ++n) {
    SignedBig rhs = 3 * trinomial[n] + 2 * trinomial[n + 1] - trinomial[n + 2];
    if (2 * motzkin[n] != rhs)
      fail(n, "2M = 3T + 2T' - T''", to_decimal(2 * motzkin[n]), to_decimal(rhs));
  }

  // M_n = gamma_{n+1} + gamma_n
  {
    exact::RiordanStream rs;
    Natural prev = rs.value();  // gamma_0
    for (std::uint64_t n = 0; n <= bounds.exact_max; ++n) {
      rs.advance();
      Natural sum = prev + rs.value();
      if (motzkin[n] != sum)
        fail(n, "M = gamma' + gamma", to_decimal(motzkin[n]), to_decimal(sum));
      prev = rs.value();
    }
  }

  // M_n == S_n (mod 2)
  for (std::uint64_t n = 0; n <= bounds.parity_max; ++n) {
    if (mod_ui(motzkin[n], 2) != mod_ui(sym[n], 2))
      fail(n, "M == S (mod 2)", std::to_string(mod_ui(motzkin[n], 2)),
           std::to_string(mod_ui(sym[n], 2)));
  }

  // S_{2n+1} = S_{2n}
  for (std::uint64_t n = 0; 2 * n + 1 <= s_max; ++n) {
    if (sym[2 * n + 1] != sym[2 * n])
      fail(n, "S_{2n+1} = S_{2n}", to_decimal(sym[2 * n]), to_decimal(sym[2 * n + 1]));
  }

  // S_{2n-2} = S_{2n-3} + M_{n-2} for n >= 2
  for (std::uint64_t n = 2; n <= bounds.exact_max; ++n) {
    Natural rhs = sym[2 * n - 3] + motzkin[n - 2];
    if (sym[2 * n - 2] != rhs)
      fail(n, "S_{2n-2} = S_{2n-3} + M_{n-2}", to_decimal(sym[2 * n - 2]),
           to_decimal(rhs));
  }

  // S_{2n-2} is even iff n is not in c
  for (std::uint64_t n = 1; n <= bounds.parity_max; ++n) {
    bool even = mod_ui(sym[2 * n - 2], 2) == 0;
    bool out_of_c = !thue_morse::in_c_u64(n);
    if (even != out_of_c)
      fail(n, "S_{2n-2} parity vs c", out_of_c ? "even" : "odd",
           even ? "even" : "odd");
  }

  // t_n from the recursion equals the parity of the binary digit sum.
  for (std::uint64_t n = 0; n <= bounds.thue_morse_max; ++n) {
    std::uint32_t rec = thue_morse::t_recursive(n);
    std::uint32_t pop = static_cast<std::uint32_t>(__builtin_popcountll(n) & 1);
    if (rec != pop)
      fail(n, "t_n = parity of delta(n)", std::to_string(pop), std::to_string(rec));
  }

  // Block-length law: maximal runs of t reproduce c_k - c_{k-1}, and the
  // block values alternate starting from t_0 = 0.
  {
    std::uint64_t limit = bounds.thue_morse_max;
    std::vector<std::uint64_t> run_lengths;
    std::vector<std::uint32_t> run_values;
    std::uint32_t cur = thue_morse::t_recursive(0);
    std::uint64_t len = 1;
    for (std::uint64_t n = 1; n <= limit; ++n) {
      std::uint32_t b = static_cast<std::uint32_t>(__builtin_popcountll(n) & 1);
      if (b == cur) {
        ++len;
      } else {
        run_lengths.push_back(len);
        run_values.push_back(cur);
        cur = b;
        len = 1;
      }
    }
    // the final, possibly truncated run is dropped
    thue_morse::CSequence c = thue_morse::c_stream(run_lengths.size());
    for (std::size_t k = 0; k < run_lengths.size(); ++k) {
      std::uint64_t expected =
          c.terms[k] - (k == 0 ? 0 : c.terms[k - 1]);
      if (run_lengths[k] != expected)
        fail(k, "block length = c_k - c_{k-1}", std::to_string(expected),
             std::to_string(run_lengths[k]));
      if (run_values[k] != (k % 2))
        fail(k, "block value alternates", std::to_string(k % 2),
             std::to_string(run_values[k]));
    }
  }

  report.elapsed_ms = timer.ms();
  return report;
}

// ---- Catalan zero blocks ----------------------------------------------

inline Report check_blocks(std::uint32_t p, std::uint64_t k_max,
                           std::uint64_t scan_limit) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("check_blocks: p must be one of 2,3,5,7");
  detail::Timer timer;
  Report report;
  report.check_id = "blocks_p" + std::to_string(p);
  report.lo = 1;
  report.hi = k_max;

  // Maximal runs of C_n = 0 (mod p) with n <= scan_limit; a run still open
  // at the horizon is incomplete and not reported.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
  {
    bool in_run = false;
    std::uint64_t run_start = 0;
    auto feed = [&](std::uint64_t n, bool zero) {
      if (zero && !in_run) {
        in_run = true;
        run_start = n;
      } else if (!zero && in_run) {
        in_run = false;
        runs.emplace_back(run_start, n - 1);
      }
    };
    if (p == 2) {
      // omega kernel: C_n is even iff delta(n+1) > 1; no big integers.
      for (std::uint64_t n = 0; n <= scan_limit; ++n)
        feed(n, __builtin_popcountll(n + 1) > 1);
    } else {
      exact::CatalanStream c;
      for (std::uint64_t n = 0; n <= scan_limit; ++n) {
        feed(n, mod_ui(c.value(), p) == 0);
        c.advance();
      }
    }
  }

  std::uint64_t complete = std::min<std::uint64_t>(runs.size(), k_max);
  if (complete < k_max) {
    report.partial = true;
    report.note = "only " + std::to_string(complete) + " of " +
                  std::to_string(k_max) + " blocks complete within scan limit";
  }
  for (std::uint64_t k = 1; k <= complete; ++k) {
    auto [scan_start, scan_end] = runs[k - 1];
    residues::BlockInfo info = residues::catalan_zero_block(p, k);
    Natural scan_len = scan_end - scan_start + 1;
    std::string expected = "length=" + to_decimal(info.length);
    std::string actual = "length=" + to_decimal(scan_len);
    if (info.start) {
      expected += " start=" + to_decimal(*info.start) + " end=" + to_decimal(*info.end);
      actual += " start=" + std::to_string(scan_start) + " end=" + std::to_string(scan_end);
    }
    bool ok = info.length == scan_len &&
              (!info.start || (*info.start == scan_start && *info.end == scan_end));
    if (!ok) report.failures.push_back({k, expected, actual});
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// ---- orbit census -----------------------------------------------------

inline Report check_orbits(std::uint64_t n_max) {
  if (n_max > 11)
    throw std::invalid_argument("check_orbits: n_max is capped at 11");
  detail::Timer timer;
  Report report;
  report.check_id = "orbits";
  report.lo = 1;
  report.hi = n_max;
  exact::Oracles oracles;
  enumerate::Bounds bounds;
  enumerate::BinaryTreeArena arena(bounds);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    enumerate::OrbitCensus census = enumerate::orbit_census(arena, n);
    Natural cn = oracles.catalan(n);
    if (census.total_size != cn) {
      report.failures.push_back({n, "orbit sizes sum to " + to_decimal(cn),
                                 to_decimal(census.total_size)});
    }
    std::uint64_t d = residues::catalan_omega2(Natural(n));
    std::uint32_t min_omega = census.orbits_by_omega.begin()->first;
    if (min_omega != d) {
      report.failures.push_back({n, "min omega = " + std::to_string(d),
                                 std::to_string(min_omega)});
    }
    Natural want = oracles.double_fact(d);
    Natural have = census.orbits_by_omega.begin()->second;
    if (want != have) {
      report.failures.push_back({n, "(2d)!! = " + to_decimal(want) + " minimal orbits",
                                 to_decimal(have)});
    }
    std::uint64_t expected_fixed = (d == 0) ? 1 : 0;
    if (census.fixed_points != expected_fixed) {
      report.failures.push_back({n, std::to_string(expected_fixed) + " fixed points",
                                 std::to_string(census.fixed_points)});
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// ---- Thue-Morse indexing ---------------------------------------------

// The increasing sequences a (central binomials = 1 mod 3) and b (= -1):
// the digit-surgery construction must enumerate exactly the kernel filter,
// and a_i = t_i, b_i = 1 - t_i mod 3.
inline Report check_tm_indexing(std::uint64_t count) {
  detail::Timer timer;
  Report report;
  report.check_id = "tm_indexing";
  report.lo = 0;
  report.hi = count == 0 ? 0 : count - 1;

  if (count == 0) {
    report.elapsed_ms = timer.ms();
    return report;
  }
  std::vector<Natural> a, b;
  a.reserve(count);
  b.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    a.push_back(residues::cb_one_index(i));
    b.push_back(residues::cb_minus_one_index(i));
  }
  // Filter the kernel over n and match both constructions term by term.
  std::uint64_t ai = 0, bi = 0;
  Natural horizon = std::max(a.back(), b.back());
  bool mismatch = false;
  for (Natural n = 0; n <= horizon && !mismatch; ++n) {
    std::uint32_t v = residues::central_binom_mod_p(n, 3).value;
    if (v == 1 && ai < count) {
      if (a[ai] != n) {
        report.failures.push_back({ai, "a_" + std::to_string(ai) + " = " + to_decimal(n),
                                   to_decimal(a[ai])});
        mismatch = true;
        break;
      }
      ++ai;
    } else if (v == 2 && bi < count) {
      if (b[bi] != n) {
        report.failures.push_back({bi, "b_" + std::to_string(bi) + " = " + to_decimal(n),
                                   to_decimal(b[bi])});
        mismatch = true;
        break;
      }
      ++bi;
    }
  }
  if (ai < count)
    report.failures.push_back({ai, "filter reaches a_" + std::to_string(count - 1),
                               "stopped at " + std::to_string(ai)});
  if (bi < count)
    report.failures.push_back({bi, "filter reaches b_" + std::to_string(count - 1),
                               "stopped at " + std::to_string(bi)});

  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint32_t t = thue_morse::t(Natural(i));
    if (mod_ui(a[i], 3) != t)
      report.failures.push_back({i, "a_i = t_i (mod 3), t=" + std::to_string(t),
                                 std::to_string(mod_ui(a[i], 3))});
    if (mod_ui(b[i], 3) != 1 - t)
      report.failures.push_back({i, "b_i = 1 - t_i (mod 3), 1-t=" + std::to_string(1 - t),
                                 std::to_string(mod_ui(b[i], 3))});
  }
  report.elapsed_ms = timer.ms();
  return report;
}

}  // namespace catmod::verify
