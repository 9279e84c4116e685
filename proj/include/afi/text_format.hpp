#pragma once

// Matrix interchange format:
//
//   n k
//   + + - ...      (n rows of n tokens; "+"/"-" or "1"/"-1")
//
// The file encodes B, so the matrix it stands for is A = B / k.

#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "afi/core.hpp"

namespace afi {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScaledMatrix {
  SignMatrix matrix;
  std::int64_t k = 0;
};

inline std::string row_string(const SignMatrix& m, std::size_t i) {
  std::string s;
  s.reserve(m.size());
  for (auto e : m.row(i)) s.push_back(e > 0 ? '+' : '-');
  return s;
}

inline std::vector<std::string> row_strings(const SignMatrix& m) {
  std::vector<std::string> rows;
  rows.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(row_string(m, i));
  return rows;
}

inline SignMatrix from_row_strings(const std::vector<std::string>& rows,
                                   std::size_t cap = kDefaultDimensionCap) {
  const std::size_t n = rows.size();
  if (n > cap)
    throw CapExceeded("dimension " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<std::int8_t> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("row string length must equal n");
    for (char c : r) {
      if (c == '+') e.push_back(1);
      else if (c == '-') e.push_back(-1);
      else throw ParseError(std::string("bad sign character '") + c + "'");
    }
  }
  return SignMatrix(n, std::move(e), cap);
}

inline std::string format_matrix(const SignMatrix& m, std::int64_t k) {
  std::ostringstream out;
  out << m.size() << ' ' << k << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out << ' ';
      out << (m(i, j) > 0 ? '+' : '-');
    }
    out << '\n';
  }
  return out.str();
}

inline ScaledMatrix parse_matrix(std::istream& in,
                                 std::size_t cap = kDefaultDimensionCap) {
  long long n = 0, k = 0;
  if (!(in >> n >> k)) throw ParseError("expected header line 'n k'");
  if (n < 1) throw ParseError("n must be positive");
  if (k < 1) throw ParseError("k must be positive");
  if (static_cast<unsigned long long>(n) > cap)
    throw CapExceeded("dimension " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  const auto dim = static_cast<std::size_t>(n);
  std::vector<std::int8_t> e;
  e.reserve(dim * dim);
  std::string tok;
  for (std::size_t idx = 0; idx < dim * dim; ++idx) {
    if (!(in >> tok))
      throw ParseError("expected " + std::to_string(dim * dim) +
                       " entries, got " + std::to_string(idx));
    if (tok == "+" || tok == "1" || tok == "+1") e.push_back(1);
    else if (tok == "-" || tok == "-1") e.push_back(-1);
    else throw ParseError("bad matrix entry '" + tok + "'");
  }
  if (in >> tok) throw ParseError("trailing data after matrix: '" + tok + "'");
  return {SignMatrix(dim, std::move(e), cap), k};
}

inline ScaledMatrix parse_matrix(const std::string& text,
                                 std::size_t cap = kDefaultDimensionCap) {
  std::istringstream in(text);
  return parse_matrix(in, cap);
}

}  // namespace afi
