// Exact rational scalars and small coordinate vectors used throughout the
// library.  All quantities we manipulate (root coefficients, Gram entries,
// torus coordinates, weight evaluations) are rationals with tiny numerators
// and denominators, so boost::rational over long long is ample.
#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace isopar {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;  // row-major linear map: (M*x)[r] = sum_c M[r][c]*x[c]

// Raised when a structural invariant of the classification machinery fails.
// The command line tool maps it to exit code 1.
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

#define ISOPAR_REQUIRE(cond, msg)                      \
  do {                                                 \
    if (!(cond)) throw ::isopar::invariant_error(msg); \
  } while (0)

inline RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(x);
  return out;
}

// Renders "a" when the denominator is 1 and "a/b" otherwise; used by every
// serialization path so exports stay byte-stable.
inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

inline std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  s += ")";
  return s;
}

inline std::string vec_str(const IntVec& v) { return vec_str(to_rat(v)); }

// Lexicographic comparison; the canonical ordering for sets of torus points.
inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline IntVec apply_map(const IntMat& m, const IntVec& x) {
  IntVec out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
  }
  return out;
}

inline RatVec apply_map(const IntMat& m, const RatVec& x) {
  RatVec out(m.size(), Rat(0));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += Rat(m[r][c]) * x[c];
  }
  return out;
}

inline IntMat compose(const IntMat& a, const IntMat& b) {
  // (a*b)(x) = a(b(x))
  const std::size_t n = a.size();
  IntMat out(n, IntVec(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      if (a[r][k] != 0)
        for (std::size_t c = 0; c < n; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

inline IntMat identity_map(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace isopar
