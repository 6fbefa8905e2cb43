#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "catmod/exact.hpp"
#include "catmod/lucas.hpp"
#include "catmod/residues.hpp"
#include "catmod/streams.hpp"

// Sequence identifiers shared by the CLI commands and the b-file
// comparisons: natural start index, an exact evaluator with a compute
// budget, and the registry of fast residue kernels.
namespace catmod::seq {

enum class SequenceId {
  catalan,
  central_binom,
  motzkin,
  motzkin_prefix,
  riordan,
  sym012,
  hex,
  central_trinomial,
  partial_sum_cb,
  a_rs,
  delannoy,
  apery,
  eulerian_central,
  eulerian_bicentral,
  gould,
  noncrossing,
  com,
  double_fact,
};

struct Params {
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> s;
  std::optional<std::uint32_t> p;
};

struct Info {
  SequenceId id;
  const char* name;
  std::uint64_t start;   // natural starting index
  std::uint64_t budget;  // largest n the exact evaluator accepts
};

inline const std::vector<Info>& all_sequences() {
  static const std::vector<Info> table = {
      {SequenceId::catalan, "catalan", 0, 2000000},
      {SequenceId::central_binom, "central_binom", 0, 2000000},
      {SequenceId::motzkin, "motzkin", 0, 200000},
      {SequenceId::motzkin_prefix, "motzkin_prefix", 0, 200000},
      {SequenceId::riordan, "riordan", 0, 200000},
      {SequenceId::sym012, "sym012", 0, 200000},
      {SequenceId::hex, "hex", 0, 200000},
      {SequenceId::central_trinomial, "central_trinomial", 0, 200000},
      {SequenceId::partial_sum_cb, "partial_sum_cb", 0, 100000},
      {SequenceId::a_rs, "a_rs", 0, 4000},
      {SequenceId::delannoy, "delannoy", 0, 50000},
      {SequenceId::apery, "apery", 0, 50000},
      {SequenceId::eulerian_central, "eulerian_central", 1, 3000},
      {SequenceId::eulerian_bicentral, "eulerian_bicentral", 1, 3000},
      {SequenceId::gould, "gould", 0, 200000},
      {SequenceId::noncrossing, "noncrossing", 1, 2000},
      {SequenceId::com, "com", 1, 300},
      {SequenceId::double_fact, "double_fact", 0, 50000},
  };
  return table;
}

inline std::optional<SequenceId> parse(std::string_view name) {
  for (const Info& info : all_sequences())
    if (name == info.name) return info.id;
  return std::nullopt;
}

inline const Info& info(SequenceId id) {
  for (const Info& inf : all_sequences())
    if (inf.id == id) return inf;
  throw std::invalid_argument("unknown sequence id");
}

namespace detail {

template <typename Stream>
Natural stream_eval(std::uint64_t n) {
  Stream s;
  while (s.index() < n) s.advance();
  return s.value();
}

}  // namespace detail

// Exact value of the sequence at n. Throws budget_error beyond the
// per-sequence budget and invalid_argument below the starting index or
// for missing parameters.
inline SignedBig eval(SequenceId id, std::uint64_t n, const Params& params = {}) {
  const Info& inf = info(id);
  if (n < inf.start)
    throw std::invalid_argument(std::string(inf.name) + ": index starts at " +
                                std::to_string(inf.start));
  if (n > inf.budget)
    throw budget_error(std::string(inf.name) + ": n exceeds compute budget " +
                       std::to_string(inf.budget));
  exact::Oracles oracles;
  switch (id) {
    case SequenceId::catalan:
      return oracles.catalan(n);
    case SequenceId::central_binom:
      return oracles.central_binom(n);
    case SequenceId::motzkin:
      return detail::stream_eval<exact::MotzkinStream>(n);
    case SequenceId::motzkin_prefix:
      return detail::stream_eval<exact::PrefixStream>(n);
    case SequenceId::riordan:
      return detail::stream_eval<exact::RiordanStream>(n);
    case SequenceId::sym012:
      return detail::stream_eval<exact::Sym012Stream>(n);
    case SequenceId::hex:
      return detail::stream_eval<exact::HexStream>(n);
    case SequenceId::central_trinomial:
      return detail::stream_eval<exact::TrinomialStream>(n);
    case SequenceId::partial_sum_cb:
      return detail::stream_eval<exact::PartialSumCBStream>(n);
    case SequenceId::a_rs:
      if (!params.r || !params.s)
        throw std::invalid_argument("a_rs requires --r and --s");
      return oracles.a_rs(n, *params.r, *params.s);
    case SequenceId::delannoy:
      return oracles.delannoy_recurrence(n);
    case SequenceId::apery:
      return oracles.apery_recurrence(n);
    case SequenceId::eulerian_central: {
      exact::EulerianRowStream rows;
      while (rows.row_index() < 2 * n - 1) rows.advance();
      return rows.row()[n - 1];
    }
    case SequenceId::eulerian_bicentral: {
      exact::EulerianRowStream rows;
      while (rows.row_index() < 2 * n) rows.advance();
      return rows.row()[n - 1];
    }
    case SequenceId::gould:
      return Natural(oracles.gould_row_count(n, params.p.value_or(2)));
    case SequenceId::noncrossing:
      return oracles.noncrossing(n);
    case SequenceId::com:
      return oracles.com(n);
    case SequenceId::double_fact:
      return oracles.double_fact(n);
  }
  throw std::invalid_argument("unknown sequence id");
}

// Fast digit kernel for (sequence, modulus), or nullopt when the pair has
// no registered kernel. The kernels never materialize the exact value.
inline std::optional<lucas::Residue> residue_fast(SequenceId id, const Natural& n,
                                                  std::uint32_t mod,
                                                  const Params& params = {}) {
  using residues::EulerianKind;
  using residues::Family;
  switch (id) {
    case SequenceId::catalan:
      if (mod == 2)
        return lucas::Residue(residues::catalan_omega2(n) == 0 ? 1 : 0, 2);
      if (mod == 3) return residues::catalan_mod3(n);
      return std::nullopt;
    case SequenceId::central_binom:
      if (lucas::is_prime(mod)) return residues::central_binom_mod_p(n, mod);
      return std::nullopt;
    case SequenceId::central_trinomial:
      if (mod == 3) return residues::central_trinomial_mod3(n);
      return std::nullopt;
    case SequenceId::motzkin:
      if (mod == 2) return residues::family_parity(Family::motzkin, n);
      if (mod == 3) return residues::family_mod3(Family::motzkin, n);
      return std::nullopt;
    case SequenceId::motzkin_prefix:
      if (mod == 2) return residues::family_parity(Family::prefix, n);
      if (mod == 3) return residues::family_mod3(Family::prefix, n);
      return std::nullopt;
    case SequenceId::riordan:
      if (mod == 2) return residues::family_parity(Family::riordan, n);
      if (mod == 3) return residues::family_mod3(Family::riordan, n);
      return std::nullopt;
    case SequenceId::hex:
      if (mod == 2) return residues::family_parity(Family::hex, n);
      if (mod == 3) return residues::family_mod3(Family::hex, n);
      return std::nullopt;
    case SequenceId::partial_sum_cb:
      if (mod == 3) return residues::partial_sum_mod3(n);
      return std::nullopt;
    case SequenceId::a_rs:
      if (mod == 3) {
        if (!params.r || !params.s)
          throw std::invalid_argument("a_rs requires --r and --s");
        return residues::a_rs_mod3(n, *params.r, *params.s);
      }
      return std::nullopt;
    case SequenceId::delannoy:
      if (mod == 3) return residues::a_rs_mod3(n, 1, 1);
      return std::nullopt;
    case SequenceId::apery:
      if (mod == 3) return residues::a_rs_mod3(n, 2, 1);
      return std::nullopt;
    case SequenceId::eulerian_central:
      if (mod == 3) return residues::eulerian_central_mod3(EulerianKind::central, n);
      return std::nullopt;
    case SequenceId::eulerian_bicentral:
      if (mod == 3) return residues::eulerian_central_mod3(EulerianKind::bicentral, n);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

inline std::string supported_kernels_description() {
  return "catalan mod 2,3; central_binom mod any prime; central_trinomial mod 3; "
         "motzkin/motzkin_prefix/riordan/hex mod 2,3; partial_sum_cb mod 3; "
         "a_rs/delannoy/apery mod 3; eulerian_central/eulerian_bicentral mod 3";
}

}  // namespace catmod::seq
