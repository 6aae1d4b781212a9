#include "trigrove/recurrence.hpp"

#include <algorithm>
#include <limits>

namespace trigrove {

namespace {

long add_exponent(long a, long b) {
  long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Internal, "exponent overflow");
  return out;
}

// a + sign*b, dropping zeros.
Exponents combine(const Exponents& a, const Exponents& b, long sign) {
  Exponents out;
  out.reserve(a.size() + b.size());
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && x->first < y->first)) {
      out.push_back(*x++);
    } else if (x == a.end() || y->first < x->first) {
      out.emplace_back(y->first, sign * y->second);
      ++y;
    } else {
      const long e = add_exponent(x->second, sign * y->second);
      if (e != 0) out.emplace_back(x->first, e);
      ++x;
      ++y;
    }
  }
  return out;
}

long exponent_of(const Exponents& exps, VarId v) {
  auto it = std::lower_bound(exps.begin(), exps.end(), v,
                             [](const std::pair<VarId, long>& p, VarId key) { return p.first < key; });
  return it != exps.end() && it->first == v ? it->second : 0;
}

// Per-variable exponent range over all terms (absent variables count as 0).
std::map<VarId, std::pair<long, long>> exponent_box(const LaurentPoly& p) {
  std::map<VarId, std::pair<long, long>> box;
  for (const auto& [exps, coeff] : p.terms()) {
    for (const auto& [v, e] : exps) box.emplace(v, std::make_pair(0L, 0L));
  }
  for (auto& [v, range] : box) {
    range = {std::numeric_limits<long>::max(), std::numeric_limits<long>::min()};
    for (const auto& [exps, coeff] : p.terms()) {
      const long e = exponent_of(exps, v);
      range.first = std::min(range.first, e);
      range.second = std::max(range.second, e);
    }
  }
  return box;
}

std::string var_string(VarId v) {
  return "x[" + std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.k) + "]";
}

}  // namespace

bool MonomialLess::operator()(const Exponents& a, const Exponents& b) const {
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && x->first < y->first)) return x->second < 0;
    if (x == a.end() || y->first < x->first) return y->second > 0;
    if (x->second != y->second) return x->second < y->second;
    ++x;
    ++y;
  }
  return false;
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial({}, c); }

LaurentPoly LaurentPoly::variable(VarId v, long exponent) {
  return monomial(exponent == 0 ? Exponents{} : Exponents{{v, exponent}}, 1);
}

LaurentPoly LaurentPoly::monomial(Exponents exps, const BigInt& coeff) {
  std::sort(exps.begin(), exps.end());
  Exponents merged;
  for (const auto& [v, e] : exps) {
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second = add_exponent(merged.back().second, e);
    } else {
      merged.emplace_back(v, e);
    }
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  LaurentPoly out;
  out.add_term(merged, coeff);
  return out;
}

void LaurentPoly::add_term(const Exponents& exps, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  for (const auto& [exps, coeff] : q.terms_) add_term(exps, coeff);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  for (const auto& [exps, coeff] : q.terms_) add_term(exps, -coeff);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  for (const auto& [a, ca] : p.terms_) {
    for (const auto& [b, cb] : q.terms_) out.add_term(combine(a, b, 1), ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(VarId shift) const {
  LaurentPoly out;
  for (const auto& [exps, coeff] : terms_) {
    Exponents moved = exps;
    for (auto& [v, e] : moved) v = {v.i + shift.i, v.j + shift.j, v.k + shift.k};
    out.add_term(moved, coeff);
  }
  return out;
}

std::string monomial_string(const Exponents& exps) {
  std::string out;
  for (const auto& [v, e] : exps) {
    if (!out.empty()) out += "*";
    out += var_string(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, coeff] = *it;
    BigInt c = coeff;
    if (it != terms_.rbegin()) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0 && !exps.empty()) {
      out += "-";
      c = -c;
    }
    if (exps.empty()) {
      out += c.str();
    } else {
      if (c != 1) out += c.str() + "*";
      out += monomial_string(exps);
    }
  }
  return out;
}

LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const auto& [lead_exps, lead_coeff] = *q.terms().rbegin();

  // A quotient s with p = q*s has, per variable, exponents in
  // [min(p) - min(q), max(p) - max(q)].
  const auto pbox = exponent_box(p);
  const auto qbox = exponent_box(q);
  auto inside = [&](const Exponents& t) {
    std::map<VarId, std::pair<long, long>> box;
    for (const auto& [v, r] : qbox) box[v] = {-r.first, -r.second};
    for (const auto& [v, r] : pbox) {
      auto& b = box.try_emplace(v, std::make_pair(0L, 0L)).first->second;
      b.first += r.first;
      b.second += r.second;
    }
    for (const auto& [v, e] : t) {
      if (!box.contains(v)) return false;
    }
    for (const auto& [v, range] : box) {
      const long e = exponent_of(t, v);
      if (e < range.first || e > range.second) return false;
    }
    return true;
  };

  LaurentPoly quotient;
  LaurentPoly rest = p;
  while (!rest.is_zero()) {
    const auto& [exps, coeff] = *rest.terms().rbegin();
    const Exponents t = combine(exps, lead_exps, -1);
    if (coeff % lead_coeff != 0 || !inside(t)) {
      throw Error(ErrorCode::NotExact,
                  "division not exact; remainder term " + LaurentPoly::monomial(exps, coeff).to_string());
    }
    const LaurentPoly step = LaurentPoly::monomial(t, coeff / lead_coeff);
    quotient += step;
    rest -= step * q;
  }
  return quotient;
}

CubeRecurrence::CubeRecurrence(VarId origin) : base_(origin.level()) {}

LaurentPoly CubeRecurrence::f(VarId c) {
  const int rel = c.level() - base_;
  if (rel < -1) {
    throw Error(ErrorCode::InvalidArgument, "cell " + var_string(c) + " lies below the initial levels");
  }
  if (rel <= 1) return LaurentPoly::variable(c);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(c); it != memo_.end()) return it->second;
  }
  auto at = [&](int di, int dj, int dk) { return f({c.i - di, c.j - dj, c.k - dk}); };
  const LaurentPoly numerator =
      at(1, 0, 0) * at(0, 1, 1) + at(0, 1, 0) * at(1, 0, 1) + at(0, 0, 1) * at(1, 1, 0);
  LaurentPoly value = div_exact(numerator, at(1, 1, 1));
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(c, std::move(value)).first->second;
}

VarId balanced_cell(int m) { return {(m + 2) / 3, (m + 1) / 3, m / 3}; }

LevelSummary level_summary(int m, int max_level) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "level must be at least 1, got " + std::to_string(m));
  if (m > max_level) {
    throw Error(ErrorCode::BudgetExceeded,
                "level " + std::to_string(m) + " exceeds the limit " + std::to_string(max_level));
  }
  CubeRecurrence cube;
  LevelSummary out;
  out.level = m;
  out.cell = balanced_cell(m);
  out.value = cube.f(out.cell);
  out.term_count = out.value.term_count();
  out.all_coefficients_one = true;
  for (const auto& [exps, coeff] : out.value.terms()) {
    const BigInt a = coeff < 0 ? BigInt(-coeff) : coeff;
    if (a > out.max_abs_coefficient) out.max_abs_coefficient = a;
    if (coeff != 1) out.all_coefficients_one = false;
  }
  return out;
}

}  // namespace trigrove
