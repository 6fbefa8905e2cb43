#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catmod/natural.hpp"

namespace catmod::bfile {

// OEIS b-file: one "index value" pair per line, '#' comments and blank
// lines ignored, indices strictly increasing.
struct Entry {
  std::int64_t index = 0;
  SignedBig value;
};

struct BFile {
  std::vector<Entry> entries;
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BFile parse(std::istream& in) {
  BFile out;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::int64_t> last;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == '#') continue;
    std::istringstream ss(line);
    std::int64_t index;
    std::string value_text, extra;
    if (!(ss >> index >> value_text))
      throw parse_error("b-file line " + std::to_string(line_no) + ": expected 'index value'");
    if (ss >> extra)
      throw parse_error("b-file line " + std::to_string(line_no) + ": trailing content");
    std::size_t d = (value_text[0] == '-') ? 1 : 0;
    if (d == value_text.size())
      throw parse_error("b-file line " + std::to_string(line_no) + ": bad value");
    for (; d < value_text.size(); ++d) {
      if (!std::isdigit(static_cast<unsigned char>(value_text[d])))
        throw parse_error("b-file line " + std::to_string(line_no) + ": bad value");
    }
    if (last && index <= *last)
      throw parse_error("b-file line " + std::to_string(line_no) +
                        ": indices must be strictly increasing");
    last = index;
    out.entries.push_back({index, SignedBig(value_text)});
  }
  return out;
}

inline BFile parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open b-file: " + path);
  return parse(in);
}

struct Mismatch {
  std::int64_t file_index = 0;
  std::string expected;
  std::string actual;
};

struct CompareResult {
  std::size_t compared = 0;
  std::optional<Mismatch> mismatch;
};

// File entry (i, v) is matched against the sequence at n = i - offset +
// seq_start; entries mapping below the sequence start are skipped. With a
// modulus the canonical residues are compared instead of exact values.
inline CompareResult compare(const BFile& file,
                             const std::function<SignedBig(std::uint64_t)>& eval,
                             std::int64_t seq_start, std::int64_t offset,
                             std::optional<std::uint32_t> mod = std::nullopt) {
  CompareResult result;
  for (const Entry& e : file.entries) {
    std::int64_t n = e.index - offset + seq_start;
    if (n < seq_start) continue;
    SignedBig value = eval(static_cast<std::uint64_t>(n));
    bool ok = mod ? mod_ui(value, *mod) == mod_ui(e.value, *mod) : value == e.value;
    ++result.compared;
    if (!ok) {
      std::string expected = mod ? std::to_string(mod_ui(value, *mod)) : to_decimal(value);
      std::string actual = mod ? std::to_string(mod_ui(e.value, *mod)) : to_decimal(e.value);
      result.mismatch = Mismatch{e.index, expected, actual};
      break;
    }
  }
  return result;
}

}  // namespace catmod::bfile
