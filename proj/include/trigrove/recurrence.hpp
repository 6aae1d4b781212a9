#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trigrove/error.hpp"

namespace trigrove {

using BigInt = boost::multiprecision::cpp_int;

/// Names the variable x_{i,j,k}; also used for cube cells.
struct VarId {
  int i = 0;
  int j = 0;
  int k = 0;

  int level() const { return i + j + k; }
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Sparse exponent vector, sorted by variable, no zero exponents.
using Exponents = std::vector<std::pair<VarId, long>>;

/// Lex order on dense exponent vectors (variables in VarId order). It is a
/// group order on Z^vars, so it is compatible with multiplication.
struct MonomialLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class LaurentPoly {
 public:
  using Terms = std::map<Exponents, BigInt, MonomialLess>;

  LaurentPoly() = default;
  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly variable(VarId v, long exponent = 1);
  static LaurentPoly monomial(Exponents exps, const BigInt& coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Ascending in MonomialLess; the leading term is the last one.
  const Terms& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Renames every variable x_v to x_{v+shift}.
  LaurentPoly shifted(VarId shift) const;

  /// Leading term first, e.g. "x[0,1,0]*x[0,0,-1]^-1 + 2".
  std::string to_string() const;

 private:
  void add_term(const Exponents& exps, const BigInt& coeff);

  Terms terms_;
};

std::string monomial_string(const Exponents& exps);

/// Exact quotient p / q in the Laurent ring. Throws Error(InvalidArgument)
/// when q is zero and Error(NotExact) naming a remainder term when q does
/// not divide p.
LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q);

/// Memoized cube recurrence with initial values x_v on the three levels
/// base-1, base, base+1 where base = origin.level(). The default origin
/// gives the usual slices -1, 0, 1.
class CubeRecurrence {
 public:
  explicit CubeRecurrence(VarId origin = {});

  int base_level() const { return base_; }
  /// Throws Error(InvalidArgument) below the initial slices and
  /// Error(NotExact) if a division fails.
  LaurentPoly f(VarId cell);

 private:
  int base_;
  std::shared_mutex mutex_;
  std::map<VarId, LaurentPoly> memo_;
};

/// Balanced cell of level m: (1,0,0), (1,1,0), (1,1,1), (2,1,1), ...
VarId balanced_cell(int m);

struct LevelSummary {
  int level = 0;
  VarId cell;
  std::size_t term_count = 0;
  BigInt max_abs_coefficient;
  bool all_coefficients_one = false;
  LaurentPoly value;
};

/// Throws Error(InvalidArgument) for m < 1 and Error(BudgetExceeded) above
/// max_level.
LevelSummary level_summary(int m, int max_level = 5);

}  // namespace trigrove
