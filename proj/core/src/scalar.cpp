#include "qinv/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qinv {

Laurent::Laurent(const mpq_class& c, int exponent) : low_(exponent) {
  if (c != 0) c_.push_back(c);
  else low_ = 0;
}

Laurent Laurent::from_coeffs(int low, std::vector<mpq_class> coeffs) {
  Laurent r;
  r.low_ = low;
  r.c_ = std::move(coeffs);
  r.trim();
  return r;
}

void Laurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < c_.size() && c_[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead_zeros));
    low_ += static_cast<int>(lead_zeros);
  }
  if (c_.empty()) low_ = 0;
}

mpq_class Laurent::coeff(int exponent) const {
  if (exponent < low_ || exponent > high()) return 0;
  return c_[static_cast<std::size_t>(exponent - low_)];
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), mpq_class(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.c_.size(); ++k)
    c_[static_cast<std::size_t>(o.low_ - lo) + k] += o.c_[k];
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Laurent::from_coeffs(a.low_ + b.low_, std::move(c));
}

Laurent Laurent::scaled(const mpq_class& s) const {
  if (s == 0) return {};
  Laurent r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

mpq_class Laurent::at_one() const {
  mpq_class s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

bool Laurent::all_exponents_even() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0 && ((low_ + static_cast<int>(k)) % 2 != 0)) return false;
  return true;
}

void Laurent::divmod(const Laurent& a, const Laurent& b, Laurent& quot, Laurent& rem) {
  if (b.is_zero()) throw DivisionByZero();
  // work with exponent offsets relative to 0 for both
  std::vector<mpq_class> r(static_cast<std::size_t>(std::max(a.high() + 1, 0)));
  for (int e = a.low_; e <= a.high(); ++e)
    if (e >= 0) r[static_cast<std::size_t>(e)] = a.coeff(e);
  int db = b.high();
  std::vector<mpq_class> bq(static_cast<std::size_t>(db + 1));
  for (int e = b.low_; e <= db; ++e) bq[static_cast<std::size_t>(e)] = b.coeff(e);
  int da = static_cast<int>(r.size()) - 1;
  std::vector<mpq_class> qc(static_cast<std::size_t>(std::max(da - db + 1, 0)));
  for (int d = da; d >= db; --d) {
    const mpq_class& top = r[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    mpq_class f = top / bq[static_cast<std::size_t>(db)];
    qc[static_cast<std::size_t>(d - db)] = f;
    for (int k = 0; k <= db; ++k)
      if (bq[static_cast<std::size_t>(k)] != 0)
        r[static_cast<std::size_t>(d - db + k)] -= f * bq[static_cast<std::size_t>(k)];
  }
  quot = from_coeffs(0, std::move(qc));
  rem = from_coeffs(0, std::move(r));
}

Laurent Laurent::gcd(Laurent a, Laurent b) {
  a = a.shifted(-a.low());
  b = b.shifted(-b.low());
  while (!b.is_zero()) {
    Laurent q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? r : r.scaled(1 / r.lead());
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.lead());
}

Scalar::Scalar(long n) : num_(mpq_class(n)), den_(mpq_class(1)) {}
Scalar::Scalar(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}
Scalar::Scalar(const Laurent& num) : num_(num), den_(mpq_class(1)) {}
Scalar::Scalar(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

Scalar Scalar::v(int k) { return Scalar(Laurent(mpq_class(1), k)); }

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Laurent(mpq_class(1));
    return;
  }
  if (den_.span() == 1) {
    num_ = num_.shifted(-den_.low()).scaled(1 / den_.lead());
    den_ = Laurent(mpq_class(1));
    return;
  }
  int s = den_.low();
  den_ = den_.shifted(-s);
  num_ = num_.shifted(-s);
  int t = num_.low();
  Laurent g = Laurent::gcd(num_.shifted(-t), den_);
  if (g.span() > 1) {
    Laurent q, r;
    Laurent::divmod(num_.shifted(-t), g, q, r);
    num_ = q.shifted(t);
    Laurent::divmod(den_, g, q, r);
    den_ = q;
  }
  mpq_class lc = den_.lead();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

Scalar Scalar::operator-() const { return Scalar(Raw{}, -num_, den_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1L), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

mpq_class Scalar::classical_limit() const {
  mpq_class d = den_.at_one();
  if (d == 0) throw PoleAtOne();
  return num_.at_one() / d;
}

std::string format_rational(const mpq_class& c) {
  return c.get_str();
}

namespace {

std::string format_laurent(const Laurent& p, bool in_q) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const char var = in_q ? 'q' : 'v';
  for (int e = p.high(); e >= p.low(); --e) {
    mpq_class c = p.coeff(e);
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = neg ? mpq_class(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    int ex = in_q ? e / 2 : e;
    if (ex == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << '*';
    os << var;
    if (ex != 1) os << '^' << ex;
  }
  return os.str();
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar r = term();
    for (;;) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  Scalar term() {
    Scalar r = unary();
    for (;;) {
      if (eat('*')) r *= unary();
      else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else {
        return r;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      bool neg = false;
      bool paren = eat('(');
      if (eat('-')) neg = true;
      else eat('+');
      long e = integer();
      if (paren && !eat(')')) fail("expected ')'");
      if (base.is_zero() && neg) fail("zero to a negative power");
      base = base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Scalar atom() {
    skip();
    if (eat('(')) {
      Scalar r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < s_.size() && s_[pos_] == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (pos_ < s_.size() && s_[pos_] == 'v') {
      ++pos_;
      return Scalar::v();
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(mpq_class(std::string(s_.substr(start, pos_ - start))));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Scalar::str() const {
  bool in_q = num_.all_exponents_even() && den_.all_exponents_even();
  if (den_.is_one()) return format_laurent(num_, in_q);
  return "(" + format_laurent(num_, in_q) + ")/(" + format_laurent(den_, in_q) + ")";
}

Scalar Scalar::parse(std::string_view text) { return Parser(text).run(); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

mpq_class classical_limit(const Scalar& a) { return a.classical_limit(); }

Scalar qint(int n) { return (Scalar::q(n) - Scalar::q(-n)) / (Scalar::q() - Scalar::q(-1)); }

Scalar qbinom(int n, int k, const Scalar& base) {
  if (k < 0 || k > n) return {};
  auto bracket = [&](int m) { return (base.pow(m) - base.pow(-m)) / (base - base.inverse()); };
  Scalar r(1L);
  for (int i = 0; i < k; ++i) r = r * bracket(n - i) / bracket(i + 1);
  return r;
}

}  // namespace qinv
