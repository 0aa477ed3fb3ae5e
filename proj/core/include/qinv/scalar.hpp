#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qinv {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct PoleAtOne : std::domain_error {
  PoleAtOne() : std::domain_error("pole at v = 1") {}
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Laurent polynomial in v with rational coefficients, stored densely from
// the lowest nonzero exponent. The zero polynomial has no coefficients.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const mpq_class& c, int exponent = 0);
  static Laurent from_coeffs(int low, std::vector<mpq_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  // number of stored coefficients (span of exponents)
  std::size_t span() const { return c_.size(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int exponent) const;
  const mpq_class& lead() const { return c_.back(); }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  Laurent scaled(const mpq_class& s) const;
  Laurent shifted(int k) const;
  mpq_class at_one() const;
  bool all_exponents_even() const;

  // Division of genuine polynomials (low() == 0 for the divisor).
  static void divmod(const Laurent& a, const Laurent& b, Laurent& quot, Laurent& rem);
  static Laurent gcd(Laurent a, Laurent b);  // monic, inputs treated as polynomials

 private:
  void trim();
  int low_ = 0;
  std::vector<mpq_class> c_;
};

// Element of Q(v), kept in canonical form: coprime numerator and denominator,
// denominator a monic polynomial with nonzero constant term, zero as 0/1.
class Scalar {
 public:
  Scalar() : den_(mpq_class(1)) {}
  Scalar(long n);  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const Laurent& num);
  Scalar(const Laurent& num, const Laurent& den);

  static Scalar v(int k = 1);
  static Scalar q(int k = 1) { return v(2 * k); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Scalar inverse() const;
  Scalar pow(int e) const;
  // value at v = 1; throws PoleAtOne
  mpq_class classical_limit() const;

  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  struct Raw {};
  Scalar(Raw, Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
  Laurent num_;
  Laurent den_;
};

enum class ArithOp { Add, Sub, Mul, Div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);
mpq_class classical_limit(const Scalar& a);

// [n]_q = (q^n - q^{-n}) / (q - q^{-1})
Scalar qint(int n);
// q_base-binomial coefficient with [n] computed in the given base (q or v)
Scalar qbinom(int n, int k, const Scalar& base);

std::string format_rational(const mpq_class& c);

}  // namespace qinv
