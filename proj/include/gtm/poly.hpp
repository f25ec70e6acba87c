#pragma once
// Sparse multivariate polynomials with exact coefficients, graded-lex order.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gtm/exactnum.hpp"

namespace gtm {

struct NotDivisible : Error {
  explicit NotDivisible(const std::string& m) : Error("NotDivisible", m) {}
};

using Exponent = std::vector<int>;

// Leading monomial first: larger total degree, then lexicographically larger.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

template <class C>
class MultiPolyT {
 public:
  using Terms = std::map<Exponent, C, GrlexGreater>;

  MultiPolyT() = default;
  explicit MultiPolyT(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  MultiPolyT(std::vector<std::string> vars, const C& c) : vars_(std::move(vars)) {
    if (!c.is_zero()) terms_[Exponent(vars_.size(), 0)] = c;
  }

  static MultiPolyT var(const std::vector<std::string>& vars, std::size_t idx) {
    MultiPolyT p(vars);
    Exponent e(vars.size(), 0);
    e.at(idx) = 1;
    p.terms_[e] = C(1);
    return p;
  }
  static MultiPolyT var(const std::vector<std::string>& vars, const std::string& name) {
    return var(vars, index_of(vars, name));
  }
  static std::size_t index_of(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw Error("BadParams", "unknown variable " + name);
    return static_cast<std::size_t>(it - vars.begin());
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
  }
  C constant_term() const {
    auto it = terms_.find(Exponent(vars_.size(), 0));
    return it == terms_.end() ? C(0) : it->second;
  }
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const C& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const Exponent& e, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }
  int degree_in(std::size_t idx) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
  }

  friend MultiPolyT operator+(MultiPolyT a, const MultiPolyT& b) {
    a.check_same(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend MultiPolyT operator-(MultiPolyT a, const MultiPolyT& b) {
    a.check_same(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  MultiPolyT operator-() const {
    MultiPolyT r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  friend MultiPolyT operator*(const MultiPolyT& a, const MultiPolyT& b) {
    a.check_same(b);
    MultiPolyT r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPolyT operator*(const C& k, const MultiPolyT& a) {
    MultiPolyT r(a.vars_);
    if (k.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = k * c;
    return r;
  }
  MultiPolyT operator+(const C& k) const { return *this + MultiPolyT(vars_, k); }
  MultiPolyT operator-(const C& k) const { return *this - MultiPolyT(vars_, k); }
  MultiPolyT& operator+=(const MultiPolyT& o) { return *this = *this + o; }
  MultiPolyT& operator-=(const MultiPolyT& o) { return *this = *this - o; }
  MultiPolyT& operator*=(const MultiPolyT& o) { return *this = *this * o; }

  friend bool operator==(const MultiPolyT& a, const MultiPolyT& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPolyT pow(unsigned k) const {
    MultiPolyT r(vars_, C(1)), base = *this;
    while (k) {
      if (k & 1U) r *= base;
      base *= base;
      k >>= 1U;
    }
    return r;
  }

  // Evaluate at a point whose coordinates live in a ring T constructible from C.
  template <class T>
  T eval(const std::vector<T>& pt) const {
    if (pt.size() != vars_.size()) throw Error("BadParams", "evaluation point has wrong arity");
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T m = T(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m = m * pt[i];
      acc = acc + m;
    }
    return acc;
  }

  MultiPolyT derivative(std::size_t idx) const {
    MultiPolyT r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exponent f = e;
      f[idx] -= 1;
      r.add_term(f, C(e[idx]) * c);
    }
    return r;
  }

  std::vector<MultiPolyT> gradient() const {
    std::vector<MultiPolyT> g;
    for (std::size_t i = 0; i < vars_.size(); ++i) g.push_back(derivative(i));
    return g;
  }

  // Replace variable idx by polynomial s (same variable list).
  MultiPolyT substitute(std::size_t idx, const MultiPolyT& s) const {
    check_same(s);
    MultiPolyT r(vars_);
    std::vector<MultiPolyT> powers{MultiPolyT(vars_, C(1))};
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(powers.size()) <= e[idx]) powers.push_back(powers.back() * s);
      Exponent f = e;
      f[idx] = 0;
      MultiPolyT mono(vars_);
      mono.terms_[f] = c;
      r += mono * powers[static_cast<std::size_t>(e[idx])];
    }
    return r;
  }

  // Coefficients with respect to one variable: result[k] multiplies var^k.
  std::vector<MultiPolyT> coefficients_in(std::size_t idx) const {
    std::vector<MultiPolyT> out(static_cast<std::size_t>(std::max(degree_in(idx), 0)) + 1, MultiPolyT(vars_));
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f[idx] = 0;
      out[static_cast<std::size_t>(e[idx])].add_term(f, c);
    }
    return out;
  }

  // Multivariate division by a single divisor under grlex.
  std::pair<MultiPolyT, MultiPolyT> divmod(const MultiPolyT& q) const {
    check_same(q);
    if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
    MultiPolyT quot(vars_), rem(vars_), p = *this;
    const Exponent& lq = q.leading_exponent();
    const C& cq = q.leading_coeff();
    while (!p.is_zero()) {
      Exponent lp = p.leading_exponent();
      C cp = p.leading_coeff();
      bool divides = true;
      Exponent e(lp.size());
      for (std::size_t i = 0; i < lp.size(); ++i) {
        e[i] = lp[i] - lq[i];
        if (e[i] < 0) divides = false;
      }
      if (divides) {
        MultiPolyT t(vars_);
        t.terms_[e] = cp / cq;
        quot += t;
        p -= t * q;
      } else {
        rem.add_term(lp, cp);
        p.terms_.erase(p.terms_.begin());
      }
    }
    return {quot, rem};
  }

  MultiPolyT divide_exact(const MultiPolyT& q) const {
    auto [quot, rem] = divmod(q);
    if (!rem.is_zero()) throw NotDivisible("nonzero remainder " + rem.str());
    return quot;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string cs = c.str();
      bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
      std::string mag = neg ? cs.substr(1) : cs;
      if (mag.find_first_of("+-") != std::string::npos) mag = "(" + mag + ")";
      if (!first) os << (neg ? "-" : "+");
      else if (neg) os << "-";
      bool has_var = total(e) > 0;
      bool printed = false;
      if (!has_var || mag != "1") {
        os << mag;
        printed = true;
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) os << "*";
        os << vars_[i];
        if (e[i] > 1) os << "^" << e[i];
        printed = true;
      }
      first = false;
    }
    return os.str();
  }

 private:
  static int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }
  void check_same(const MultiPolyT& o) const {
    if (vars_ != o.vars_) throw Error("BadParams", "polynomials over different variable lists");
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

using MultiPoly = MultiPolyT<Rational>;

template <class C>
MultiPolyT<Scalar> to_scalar_poly(const MultiPolyT<C>& p) {
  MultiPolyT<Scalar> r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, Scalar(c));
  return r;
}

// ---------- univariate helpers (single-variable polynomials over a field) ----------

template <class C>
std::vector<C> dense(const MultiPolyT<C>& p) {
  if (p.nvars() != 1) throw Error("BadParams", "univariate polynomial expected");
  std::vector<C> out(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1, C(0));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e[0])] = c;
  return out;
}

template <class C>
MultiPolyT<C> from_dense(const std::vector<std::string>& vars, const std::vector<C>& a) {
  MultiPolyT<C> p(vars);
  for (std::size_t k = 0; k < a.size(); ++k) p.add_term(Exponent{static_cast<int>(k)}, a[k]);
  return p;
}

template <class C>
MultiPolyT<C> monic(const MultiPolyT<C>& p) {
  if (p.is_zero()) return p;
  return p.leading_coeff().inverse() * p;
}

template <class C>
MultiPolyT<C> ugcd(MultiPolyT<C> a, MultiPolyT<C> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

namespace detail {

inline std::vector<mpz_class> divisors(mpz_class n, std::size_t cap = 200000) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> f;
  mpz_class m = n;
  for (mpz_class p = 2; p * p <= m; ++p) {
    if (p > 1000000) return {};
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (m > 1) f.emplace_back(m, 1);
  std::vector<mpz_class> ds{1};
  for (auto& [p, e] : f) {
    std::size_t cur = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
      if (ds.size() > cap) return {};
    }
  }
  return ds;
}

}  // namespace detail

// Rational roots of a univariate polynomial with rational coefficients.
inline std::vector<Rational> rational_roots(const MultiPoly& p) {
  std::vector<Rational> roots;
  if (p.is_zero() || p.total_degree() <= 0) return roots;
  std::vector<Rational> a = dense(p);
  std::size_t low = 0;
  while (a[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Rational(0));
  a.erase(a.begin(), a.begin() + static_cast<long>(low));
  if (a.size() <= 1) return roots;
  mpz_class l = 1;
  for (auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> z;
  for (auto& c : a) z.push_back((c * Rational(l)).num());
  auto ps = detail::divisors(z.front());
  auto qs = detail::divisors(z.back());
  MultiPoly q = from_dense(p.vars(), a);
  for (const auto& pp : ps)
    for (const auto& qq : qs)
      for (int sg : {1, -1}) {
        Rational r(mpz_class(sg * pp), qq);
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (q.eval(std::vector<Rational>{r}).is_zero()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct RootReport {
  std::vector<Scalar> roots;  // distinct roots found
  bool complete = true;       // false when an unresolved factor of degree > 2 remains
};

namespace detail {

// Approximate complex roots (Durand-Kerner), used only to propose factors
// that are then checked exactly.
inline std::vector<std::complex<long double>> approx_roots(const std::vector<Rational>& a) {
  using C = std::complex<long double>;
  const std::size_t n = a.size() - 1;
  std::vector<C> c;
  for (const auto& x : a) c.push_back(C(static_cast<long double>(x.raw().get_d()), 0));
  for (auto& x : c) x /= c.back();
  std::vector<C> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(C(0.4L, 0.9L), static_cast<long double>(i));
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      C num = c[n];
      for (std::size_t k = n; k-- > 0;) num = num * z[i] + c[k];
      C den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      C step = num / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-30L) break;
  }
  return z;
}

// Monic quadratic factors over Q of a rational polynomial (checked exactly).
inline std::vector<MultiPoly> rational_quadratic_factors(MultiPoly p) {
  std::vector<MultiPoly> out;
  if (p.nvars() != 1) return out;
  for (bool found = true; found && p.total_degree() >= 3;) {
    found = false;
    std::vector<Rational> a = dense(p);
    mpz_class l = 1;
    for (auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    mpz_class lead = (a.back() * Rational(l)).num();
    auto cs = divisors(lead);
    auto z = approx_roots(a);
    for (std::size_t i = 0; i < z.size() && !found; ++i)
      for (std::size_t j = i + 1; j < z.size() && !found; ++j) {
        auto s = z[i] + z[j], q = z[i] * z[j];
        if (std::abs(s.imag()) > 1e-6L || std::abs(q.imag()) > 1e-6L) continue;
        for (const auto& c : cs) {
          long double cd = static_cast<long double>(c.get_d());
          long double e = std::round(-s.real() * cd), f = std::round(q.real() * cd);
          if (std::abs(e) > 1e17L || std::abs(f) > 1e17L) continue;
          Rational E(mpz_class(static_cast<long>(e)), c), F(mpz_class(static_cast<long>(f)), c);
          MultiPoly g = from_dense<Rational>(p.vars(), {F, E, Rational(1)});
          auto [quo, rem] = p.divmod(g);
          if (!rem.is_zero()) continue;
          out.push_back(g);
          p = quo;
          found = true;
          break;
        }
      }
  }
  return out;
}

// Number of distinct real roots of a rational polynomial (Sturm sequence).
inline int real_root_count(const MultiPoly& p) {
  if (p.total_degree() <= 0) return 0;
  std::vector<MultiPoly> seq{p, p.derivative(0)};
  while (!seq.back().is_zero() && seq.back().total_degree() > 0) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto changes = [&](bool at_plus) {
    int n = 0, prev = 0;
    for (const auto& q : seq) {
      if (q.is_zero()) continue;
      int sg = q.leading_coeff().sign();
      if (!at_plus && q.total_degree() % 2 == 1) sg = -sg;
      if (prev != 0 && sg != prev) ++n;
      prev = sg;
    }
    return n;
  };
  return changes(false) - changes(true);
}

}  // namespace detail

// Roots of a univariate polynomial over Q or Q(sqrt d): rational roots first,
// then a remaining factor of degree <= 2 is solved by the quadratic formula.
inline RootReport field_roots(const MultiPolyT<Scalar>& p) {
  RootReport rep;
  if (p.is_zero()) {
    rep.complete = false;
    return rep;
  }
  std::vector<Scalar> coeffs = dense(p);
  long d = common_field(coeffs);
  MultiPoly normpoly(p.vars());
  {
    MultiPolyT<Scalar> conj(p.vars());
    for (const auto& [e, c] : p.terms()) conj.add_term(e, c.conj());
    MultiPolyT<Scalar> n = d == 0 ? p : p * conj;
    for (const auto& [e, c] : n.terms()) normpoly.add_term(e, c.a());
  }
  MultiPolyT<Scalar> rest = p;
  auto lin = [&](const Scalar& r) {
    return from_dense<Scalar>(p.vars(), {-r, Scalar(1)});
  };
  for (const Rational& r : rational_roots(normpoly)) {
    Scalar s(r);
    while (rest.eval(std::vector<Scalar>{s}).is_zero()) {
      if (std::find(rep.roots.begin(), rep.roots.end(), s) == rep.roots.end()) rep.roots.push_back(s);
      rest = rest.divide_exact(lin(s));
    }
  }
  // Quadratic factors of the norm give the roots in real quadratic fields.
  if (rest.total_degree() > 2) {
    MultiPoly rn(p.vars());
    {
      MultiPolyT<Scalar> conj(p.vars());
      for (const auto& [e, c] : rest.terms()) conj.add_term(e, c.conj());
      MultiPolyT<Scalar> n = d == 0 ? rest : rest * conj;
      for (const auto& [e, c] : n.terms()) rn.add_term(e, c.a());
    }
    for (const auto& g : detail::rational_quadratic_factors(rn)) {
      auto a = dense(g);
      Rational disc = a[1] * a[1] - Rational(4) * a[0];
      auto sq = Scalar(disc).try_sqrt();
      if (!sq || (sq->d() != 0 && d != 0 && sq->d() != d)) continue;
      for (int sg : {1, -1}) {
        Scalar s = (Scalar(-a[1]) + Scalar(sg) * *sq) / Scalar(2);
        while (rest.total_degree() > 0 && rest.eval(std::vector<Scalar>{s}).is_zero()) {
          if (std::find(rep.roots.begin(), rep.roots.end(), s) == rep.roots.end()) rep.roots.push_back(s);
          rest = rest.divide_exact(lin(s));
        }
      }
    }
  }
  int deg = rest.total_degree();
  if (deg == 1) {
    auto a = dense(rest);
    Scalar s = -a[0] / a[1];
    if (std::find(rep.roots.begin(), rep.roots.end(), s) == rep.roots.end()) rep.roots.push_back(s);
  } else if (deg == 2) {
    auto a = dense(rest);
    Scalar disc = a[1] * a[1] - Scalar(4) * a[2] * a[0];
    auto sq = disc.try_sqrt();
    if (sq && (sq->d() == 0 || d == 0 || sq->d() == d)) {
      for (int sg : {1, -1}) {
        Scalar s = (-a[1] + Scalar(sg) * *sq) / (Scalar(2) * a[2]);
        if (std::find(rep.roots.begin(), rep.roots.end(), s) == rep.roots.end()) rep.roots.push_back(s);
      }
    } else {
      // negative discriminant: no real roots; otherwise a nested radical we cannot represent
      rep.complete = disc.sign() < 0;
    }
  } else if (deg > 2) {
    // Complete only when the leftover factor has no real roots at all.
    MultiPoly rn(p.vars());
    MultiPolyT<Scalar> conj(p.vars());
    for (const auto& [e, c] : rest.terms()) conj.add_term(e, c.conj());
    const MultiPolyT<Scalar> prod = d == 0 ? rest : rest * conj;
    for (const auto& [e, c] : prod.terms()) rn.add_term(e, c.a());
    rep.complete = detail::real_root_count(rn) == 0;
  }
  std::sort(rep.roots.begin(), rep.roots.end(), [](const Scalar& x, const Scalar& y) {
    if (x.d() != y.d() && x.d() != 0 && y.d() != 0) return x.d() < y.d();
    return x < y;
  });
  return rep;
}

}  // namespace gtm
