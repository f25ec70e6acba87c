#pragma once
// Exact scalars: arbitrary-precision rationals and elements a + b*sqrt(d)
// of a real quadratic field with a fixed squarefree d.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gtm {

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};
struct IncompatibleField : Error {
  explicit IncompatibleField(const std::string& m) : Error("IncompatibleField", m) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& m = "division by zero") : Error("DivisionByZero", m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& z) : q_(z) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "n" or "p/q" with optional sign; whitespace is not allowed inside.
  static Rational parse(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational");
    std::size_t slash = s.find('/');
    auto digits_ok = [](std::string_view t, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i >= t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    if (!digits_ok(num, true) || (slash != std::string_view::npos && !digits_ok(den, false)))
      throw ParseError("malformed rational '" + std::string(s) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    mpz_class zn(n, 10);
    mpz_class zd(1);
    if (slash != std::string_view::npos) zd = mpz_class(std::string(den), 10);
    if (zd == 0) throw DivisionByZero("zero denominator in '" + std::string(s) + "'");
    return Rational(zn, zd);
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / q_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

namespace detail {

// Splits |n| = m^2 * s with s squarefree. Trial division; adequate for the
// discriminants that occur here.
inline std::pair<mpz_class, mpz_class> square_split(mpz_class n) {
  if (n < 0) n = -n;
  mpz_class m = 1, s = 1;
  if (n == 0) return {0, 1};
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (p > 2000000) break;
    while (n % (p * p) == 0) {
      n /= p * p;
      m *= p;
    }
    if (n % p == 0) {
      n /= p;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    m *= r;
  } else {
    s *= n;
  }
  return {m, s};
}

inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace detail

// a + b*sqrt(d). d == 0 encodes a pure rational (then b == 0).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}                    // NOLINT(google-explicit-constructor)
  Scalar(int v) : a_(v) {}                     // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : a_(std::move(a)) {}     // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw Error("BadDomain", "negative discriminant");
    if (d_ != 0) {
      auto [m, s] = detail::square_split(mpz_class(d_));
      b_ *= Rational(m);
      d_ = s.get_si();
      if (d_ == 1) {
        a_ += b_;
        b_ = Rational(0);
        d_ = 0;
      }
    }
    normalize();
  }
  static Scalar frac(long p, long q) { return Scalar(Rational(p, q)); }
  static Scalar sqrt_of(long d) { return Scalar(Rational(0), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return d_ == 0; }
  Scalar conj() const { return d_ == 0 ? *this : Scalar(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

  // Sign of the real number a + b*sqrt(d).
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  static long common_d(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw IncompatibleField("sqrt(" + std::to_string(x.d_) + ") and sqrt(" + std::to_string(y.d_) + ") cannot be combined");
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    long d = common_d(x, y);
    return Scalar(x.a_ + y.a_, x.b_ + y.b_, d, raw_tag{});
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    long d = common_d(x, y);
    return Scalar(x.a_ - y.a_, x.b_ - y.b_, d, raw_tag{});
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    long d = common_d(x, y);
    return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d, raw_tag{});
  }
  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (d_ == 0) return Scalar(a_.inverse());
    Rational n = norm();
    return Scalar(a_ / n, -b_ / n, d_, raw_tag{});
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }
  Scalar operator-() const { return Scalar(-a_, -b_, d_, raw_tag{}); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  // Total order by real value; only defined for combinable operands.
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  // Square root inside the same field (or Q(sqrt(r)) for a rational r).
  std::optional<Scalar> try_sqrt() const {
    if (d_ == 0) {
      if (a_.sign() < 0) return std::nullopt;
      if (auto r = detail::rational_sqrt(a_)) return Scalar(*r);
      mpz_class pq = a_.num() * a_.den();
      auto [m, s] = detail::square_split(pq);
      return Scalar(Rational(0), Rational(m, a_.den()), s.get_si());
    }
    // (x + y sqrt d)^2 = a + b sqrt d with x, y rational.
    auto disc = detail::rational_sqrt(norm());
    if (!disc) return std::nullopt;
    for (int sg : {1, -1}) {
      Rational X = (a_ + Rational(sg) * *disc) / Rational(2);
      auto x = detail::rational_sqrt(X);
      if (!x || x->is_zero()) continue;
      Rational y = b_ / (Rational(2) * *x);
      Scalar cand(*x, y, d_, raw_tag{});
      if (cand * cand == *this) return cand.sign() < 0 ? -cand : cand;
    }
    return std::nullopt;
  }

  // Text form used in JSON: "3/4", "12+3*sqrt(19)", "-2/5*sqrt(19)".
  std::string str() const {
    if (d_ == 0 || b_.is_zero()) return a_.str();
    std::string surd;
    if (b_ == Rational(1)) surd = "sqrt(" + std::to_string(d_) + ")";
    else if (b_ == Rational(-1)) surd = "-sqrt(" + std::to_string(d_) + ")";
    else surd = b_.str() + "*sqrt(" + std::to_string(d_) + ")";
    if (a_.is_zero()) return surd;
    if (surd[0] == '-') return a_.str() + surd;
    return a_.str() + "+" + surd;
  }

  static Scalar parse(std::string_view s) {
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty scalar");
    std::size_t sq = t.find("sqrt(");
    if (sq == std::string::npos) return Scalar(Rational::parse(t));
    std::size_t close = t.find(')', sq);
    if (close == std::string::npos || close + 1 != t.size()) throw ParseError("malformed surd '" + t + "'");
    std::string dstr = t.substr(sq + 5, close - sq - 5);
    long d = 0;
    try {
      Rational dr = Rational::parse(dstr);
      if (!dr.is_integer() || dr.sign() < 0) throw ParseError("bad discriminant");
      d = dr.num().get_si();
    } catch (const DivisionByZero&) {
      throw ParseError("bad discriminant in '" + t + "'");
    }
    // Coefficient part before sqrt: "", "-", "+", "c*", or "a+c*", "a-".
    std::string head = t.substr(0, sq);
    Rational a(0), b(1);
    if (!head.empty() && head.back() == '*') {
      head.pop_back();
      // split head into a and b at the last sign that is not leading
      std::size_t cut = std::string::npos;
      for (std::size_t i = head.size(); i-- > 1;)
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
          cut = i;
          break;
        }
      if (cut == std::string::npos) {
        b = Rational::parse(head);
      } else {
        a = Rational::parse(head.substr(0, cut));
        b = Rational::parse(head.substr(cut));
      }
    } else {
      if (head.empty() || head == "+") {
        b = Rational(1);
      } else if (head == "-") {
        b = Rational(-1);
      } else {
        char last = head.back();
        if (last != '+' && last != '-') throw ParseError("malformed surd '" + t + "'");
        head.pop_back();
        a = Rational::parse(head);
        b = Rational(last == '+' ? 1 : -1);
      }
    }
    return Scalar(a, b, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  struct raw_tag {};
  Scalar(Rational a, Rational b, long d, raw_tag) : a_(std::move(a)), b_(std::move(b)), d_(d) { normalize(); }
  void normalize() {
    if (b_.is_zero()) d_ = 0;
  }

  Rational a_{0};
  Rational b_{0};
  long d_ = 0;
};

inline Scalar pow(Scalar x, unsigned e) {
  Scalar r(1);
  while (e) {
    if (e & 1U) r *= x;
    x *= x;
    e >>= 1U;
  }
  return r;
}

// Discriminant shared by a collection of scalars (0 if all rational).
template <class Range>
long common_field(const Range& xs) {
  long d = 0;
  for (const Scalar& x : xs) {
    if (x.d() == 0) continue;
    if (d != 0 && d != x.d())
      throw IncompatibleField("sqrt(" + std::to_string(d) + ") and sqrt(" + std::to_string(x.d()) + ") mixed");
    d = x.d();
  }
  return d;
}

}  // namespace gtm

template <>
struct std::hash<gtm::Rational> {
  std::size_t operator()(const gtm::Rational& r) const { return std::hash<std::string>{}(r.str()); }
};
