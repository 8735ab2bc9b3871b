#include "qfaul/laurent_poly.hpp"

#include "qfaul/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qfaul {

BigRational make_rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw DivideByZero("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

LaurentPoly::LaurentPoly(long value) {
  if (value != 0)
    coeffs_.emplace_back(value);
}

LaurentPoly::LaurentPoly(const BigInt &value) {
  if (value != 0)
    coeffs_.push_back(value);
}

LaurentPoly::LaurentPoly(int min_exp, std::vector<BigInt> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::from_ascending(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long v : coeffs)
    c.emplace_back(v);
  return LaurentPoly(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(const BigInt &coeff, int exp) {
  return LaurentPoly(exp, {coeff});
}

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const BigInt &c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const BigInt &c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

BigInt LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp())
    return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero())
    return {};
  LaurentPoly r = *this;
  r.min_exp_ += k;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs) {
  if (rhs.is_zero())
    return *this;
  if (is_zero())
    return *this = rhs;
  int lo = std::min(min_exp_, rhs.min_exp_);
  int hi = std::max(max_exp(), rhs.max_exp());
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i + static_cast<std::size_t>(min_exp_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    out[i + static_cast<std::size_t>(rhs.min_exp_ - lo)] += rhs.coeffs_[i];
  min_exp_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs) {
  return *this += -rhs;
}

LaurentPoly operator*(const LaurentPoly &lhs, const LaurentPoly &rhs) {
  if (lhs.is_zero() || rhs.is_zero())
    return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return LaurentPoly(lhs.min_exp_ + rhs.min_exp_, std::move(out));
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &rhs) {
  return *this = *this * rhs;
}

LaurentPoly pow(const LaurentPoly &base, unsigned exponent) {
  LaurentPoly result = 1;
  LaurentPoly square = base;
  while (exponent > 0) {
    if (exponent & 1u)
      result *= square;
    exponent >>= 1;
    if (exponent > 0)
      square *= square;
  }
  return result;
}

LaurentPoly divexact(const LaurentPoly &a, const LaurentPoly &b) {
  if (b.is_zero())
    throw DivideByZero("divexact by the zero polynomial");
  if (a.is_zero())
    return {};
  auto bc = b.coeffs();
  const BigInt &lead = bc.back();
  int bdeg = static_cast<int>(bc.size()) - 1;
  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  if (rem.size() < bc.size())
    throw NotDivisible("divisor has wider support than dividend");
  std::vector<BigInt> quot(rem.size() - bc.size() + 1);
  // Long division from the top; the quotient must exhaust the remainder.
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt &top = rem[k + static_cast<std::size_t>(bdeg)];
    if (top == 0)
      continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NotDivisible("coefficient not divisible by leading coefficient");
    BigInt qk = top / lead;
    for (std::size_t j = 0; j < bc.size(); ++j)
      rem[k + j] -= qk * bc[j];
    quot[k] = std::move(qk);
  }
  if (std::any_of(rem.begin(), rem.end(),
                  [](const BigInt &c) { return c != 0; }))
    throw NotDivisible("nonzero remainder");
  return LaurentPoly(a.min_exp() - b.min_exp(), std::move(quot));
}

BigRational eval(const LaurentPoly &p, const BigRational &x) {
  if (p.is_zero())
    return 0;
  if (x == 0) {
    if (p.min_exp() < 0)
      throw DivideByZero("evaluating negative powers at zero");
    return p.min_exp() == 0 ? BigRational(p.coeffs().front()) : BigRational(0);
  }
  // Horner on the dense part, then scale by x^min_exp.
  BigRational acc = 0;
  auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  int e = p.min_exp();
  BigRational base = e >= 0 ? x : BigRational(1) / x;
  BigRational scale = 1;
  for (int i = 0; i < (e >= 0 ? e : -e); ++i)
    scale *= base;
  acc *= scale;
  acc.canonicalize();
  return acc;
}

LaurentPoly stretch(const LaurentPoly &p, int s) {
  if (s <= 0)
    throw std::invalid_argument("stretch factor must be positive");
  if (p.is_zero() || s == 1)
    return p;
  auto c = p.coeffs();
  std::vector<BigInt> out((c.size() - 1) * static_cast<std::size_t>(s) + 1);
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i * static_cast<std::size_t>(s)] = c[i];
  return LaurentPoly(p.min_exp() * s, std::move(out));
}

std::string to_string(const LaurentPoly &p, const std::string &var) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
    BigInt c = p.coeff(e);
    if (c == 0)
      continue;
    if (first) {
      if (c < 0)
        os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigInt mag = abs(c);
    if (e == 0 || mag != 1)
      os << mag.get_str();
    if (e != 0) {
      os << var;
      if (e != 1)
        os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

} // namespace qfaul
