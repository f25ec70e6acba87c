#pragma once
// Small exact solver for polynomial systems over Q or Q(sqrt d). In order of
// preference it substitutes a variable occurring linearly with a constant
// coefficient, branches on the roots of a univariate equation, splits on the
// coefficient of a variable occurring linearly (zero, or nonzero and
// substituted as a quotient) and eliminates by resultants.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gtm/poly.hpp"

namespace gtm {

using SPoly = MultiPolyT<Scalar>;

struct PolySolution {
  // Variable i equals value[i] / den[i], both polynomials in the free variables.
  std::vector<SPoly> value;
  std::vector<SPoly> den;
  std::vector<bool> free;
  // Equations the free variables must satisfy: one irreducible equation
  // describes the set implicitly, several mean the result is incomplete.
  std::vector<SPoly> pending;

  bool is_point() const {
    for (std::size_t i = 0; i < value.size(); ++i)
      if (!value[i].is_constant() || !den[i].is_constant()) return false;
    return true;
  }
  std::vector<Scalar> point() const {
    std::vector<Scalar> p;
    for (std::size_t i = 0; i < value.size(); ++i) p.push_back(value[i].constant_term() / den[i].constant_term());
    return p;
  }
  // Value of variable i with the free variables set from at.
  Scalar eval(std::size_t i, const std::vector<Scalar>& at) const {
    Scalar d = den[i].eval(at);
    if (d.is_zero()) throw Error("BadDomain", "solution undefined at this parameter value");
    return value[i].eval(at) / d;
  }
};

struct PolySolveResult {
  std::vector<PolySolution> solutions;
  bool complete = true;
  // Univariate equations whose roots could not all be found in Q(sqrt d).
  std::vector<SPoly> unresolved;
};

// Determinant by fraction-free (Bareiss) elimination.
inline SPoly bareiss_det(std::vector<std::vector<SPoly>> m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 0) return SPoly(vars, Scalar(1));
  SPoly prev(vars, Scalar(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return SPoly(vars);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Resultant of p and q with respect to variable idx (Sylvester determinant).
inline SPoly resultant(const SPoly& p, const SPoly& q, std::size_t idx) {
  auto a = p.coefficients_in(idx), b = q.coefficients_in(idx);
  const std::size_t dp = a.size() - 1, dq = b.size() - 1;
  const std::size_t n = dp + dq;
  if (n == 0) return SPoly(p.vars(), Scalar(1));
  std::vector<std::vector<SPoly>> m(n, std::vector<SPoly>(n, SPoly(p.vars())));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t c = 0; c <= dp; ++c) m[r][r + c] = a[dp - c];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t c = 0; c <= dq; ++c) m[dq + r][r + c] = b[dq - c];
  return bareiss_det(std::move(m), p.vars());
}

namespace detail {

inline std::vector<std::size_t> vars_in(const SPoly& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (p.degree_in(i) > 0) out.push_back(i);
  return out;
}

inline SPoly monic(const SPoly& p) { return gtm::monic(p); }

// Exact square root of a polynomial, if it is a square.
inline std::optional<SPoly> poly_sqrt(const SPoly& p) {
  if (p.is_zero()) return p;
  SPoly root(p.vars());
  SPoly rem = p;
  Exponent lead;
  Scalar lead_coeff;
  for (int step = 0; !rem.is_zero(); ++step) {
    const Exponent& e = rem.leading_exponent();
    Exponent half(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) half[i] = e[i] / 2;
    SPoly term(p.vars());
    if (step == 0) {
      for (int x : e)
        if (x % 2) return std::nullopt;
      auto c = rem.leading_coeff().try_sqrt();
      if (!c) return std::nullopt;
      lead = half;
      lead_coeff = *c;
      term.add_term(half, *c);
    } else {
      // Next term t with 2 * lead * t = leading term of the remainder.
      Exponent t(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        t[i] = e[i] - lead[i];
        if (t[i] < 0) return std::nullopt;
      }
      if (!GrlexGreater{}(lead, t)) return std::nullopt;
      term.add_term(t, rem.leading_coeff() / (Scalar(2) * lead_coeff));
    }
    rem -= term * (root + root + term);
    root += term;
    if (step > 4096) return std::nullopt;
  }
  return root;
}

inline SPoly to_univariate(const SPoly& p, std::size_t idx) {
  std::vector<Scalar> a;
  for (const auto& c : p.coefficients_in(idx)) a.push_back(c.constant_term());
  return from_dense<Scalar>({"s"}, a);
}

// den^deg * p(x_idx = num / den), with deg the degree of p in x_idx.
inline SPoly homogenized(const SPoly& p, std::size_t idx, const SPoly& num, const SPoly& den, int deg) {
  auto cs = p.coefficients_in(idx);
  SPoly out(p.vars());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j].is_zero()) continue;
    out += cs[j] * num.pow(static_cast<unsigned>(j)) * den.pow(static_cast<unsigned>(deg - static_cast<int>(j)));
  }
  return out;
}

// e with every factor that is a known-nonzero expression divided out.
inline SPoly saturate(SPoly e, const std::vector<SPoly>& nonzero) {
  for (const auto& f : nonzero) {
    if (f.is_constant()) continue;
    for (;;) {
      if (e.is_constant() || f.total_degree() > e.total_degree()) break;
      auto [q, r] = e.divmod(f);
      if (!r.is_zero()) break;
      e = q;
    }
  }
  return e;
}

// Gcd of the coefficients of e in variable i, for e in exactly two variables.
inline SPoly content_in(const SPoly& e, std::size_t i) {
  SPoly g(e.vars());
  for (const auto& c : e.coefficients_in(i))
    if (!c.is_zero()) g = g.is_zero() ? monic(c) : ugcd(g, c);
  return g;
}

// Power series in s: coefficient vectors truncated to n terms.
inline std::vector<Scalar> series_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b, std::size_t n) {
  std::vector<Scalar> out(n, Scalar(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Factor A(y) x - B(y) of e, with e in exactly the variables x = xi and y = yi.
// A simple root of e(y0, x) is lifted to a power series in y - y0 and each
// Pade approximant is tested by exact division.
inline std::optional<SPoly> linear_factor(const SPoly& e, std::size_t xi, std::size_t yi) {
  const int m = e.degree_in(xi), D = e.degree_in(yi);
  if (m < 2 || D < 1) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(2 * D + 2);
  const auto& vars = e.vars();
  int tried = 0;
  for (int k = 0; k < 40 && tried < 3; ++k) {
    const long y0 = k % 2 ? (k + 1) / 2 : -(k / 2);
    // c[j][t]: coefficient of x^j s^t after y = y0 + s.
    SPoly shifted = e.substitute(yi, SPoly::var(vars, yi) + Scalar(y0));
    std::vector<std::vector<Scalar>> c(static_cast<std::size_t>(m) + 1, std::vector<Scalar>(n, Scalar(0)));
    for (const auto& [ex, co] : shifted.terms())
      if (static_cast<std::size_t>(ex[yi]) < n) c[static_cast<std::size_t>(ex[xi])][static_cast<std::size_t>(ex[yi])] += co;
    std::vector<Scalar> u;
    for (const auto& cj : c) u.push_back(cj[0]);
    if (u.back().is_zero()) continue;
    SPoly uni = from_dense<Scalar>({"s"}, u);
    if (ugcd(uni, uni.derivative(0)).total_degree() > 0) continue;
    ++tried;
    RootReport rr;
    try {
      rr = field_roots(uni);
    } catch (const Error&) {
      continue;
    }
    for (const Scalar& r : rr.roots) {
      Scalar dp(0), pw(1);
      for (int j = 1; j <= m; ++j) {
        dp += Scalar(j) * u[static_cast<std::size_t>(j)] * pw;
        pw *= r;
      }
      std::vector<Scalar> W(n, Scalar(0));
      W[0] = r;
      for (std::size_t t = 1; t < n; ++t) {
        std::vector<Scalar> val(t + 1, Scalar(0)), pow{Scalar(1)};
        for (int j = 0; j <= m; ++j) {
          auto term = series_mul(c[static_cast<std::size_t>(j)], pow, t + 1);
          for (std::size_t q = 0; q <= t; ++q) val[q] += term[q];
          pow = series_mul(pow, W, t + 1);
        }
        W[t] = -val[t] / dp;
      }
      for (int d = 0; d <= D; ++d) {
        // a_0..a_d with sum_i a_i W_{j-i} = 0 for j = d+1..2d, by elimination.
        const std::size_t cols = static_cast<std::size_t>(d) + 1;
        std::vector<std::vector<Scalar>> M;
        for (int j = d + 1; j <= 2 * d; ++j) {
          std::vector<Scalar> row(cols, Scalar(0));
          for (int i = 0; i <= d; ++i) row[static_cast<std::size_t>(i)] = W[static_cast<std::size_t>(j - i)];
          M.push_back(row);
        }
        std::vector<int> pivot_col;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols && rank < M.size(); ++col) {
          std::size_t p = rank;
          while (p < M.size() && M[p][col].is_zero()) ++p;
          if (p == M.size()) continue;
          std::swap(M[p], M[rank]);
          Scalar inv = M[rank][col].inverse();
          for (auto& x : M[rank]) x *= inv;
          for (std::size_t q = 0; q < M.size(); ++q)
            if (q != rank && !M[q][col].is_zero()) {
              Scalar f = M[q][col];
              for (std::size_t z = 0; z < cols; ++z) M[q][z] -= f * M[rank][z];
            }
          pivot_col.push_back(static_cast<int>(col));
          ++rank;
        }
        std::size_t freec = 0;
        while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(freec)) != pivot_col.end()) ++freec;
        std::vector<Scalar> a(cols, Scalar(0));
        a[freec] = Scalar(1);
        for (std::size_t q = 0; q < rank; ++q) a[static_cast<std::size_t>(pivot_col[q])] = -M[q][freec];
        SPoly A(vars), B(vars), s = SPoly::var(vars, yi) - Scalar(y0);
        for (int i = 0; i <= d; ++i) {
          A += a[static_cast<std::size_t>(i)] * s.pow(static_cast<unsigned>(i));
          Scalar bj(0);
          for (int t = 0; t <= i; ++t) bj += a[static_cast<std::size_t>(t)] * W[static_cast<std::size_t>(i - t)];
          B += bj * s.pow(static_cast<unsigned>(i));
        }
        if (A.is_zero()) continue;
        SPoly F = A * SPoly::var(vars, xi) - B;
        if (e.divmod(F).second.is_zero()) return monic(F);
      }
    }
  }
  return std::nullopt;
}

// A proper factor of a two-variable equation: a content or a factor linear in one variable.
inline std::optional<SPoly> bivariate_factor(const SPoly& e) {
  auto vs = vars_in(e);
  if (vs.size() != 2) return std::nullopt;
  for (std::size_t i : vs) {
    SPoly c = content_in(e, i);
    if (c.total_degree() > 0) return c;
  }
  for (int o = 0; o < 2; ++o) {
    std::size_t i = vs[static_cast<std::size_t>(o)], j = vs[static_cast<std::size_t>(1 - o)];
    if (auto f = linear_factor(e, i, j)) return f;
  }
  return std::nullopt;
}

struct SolveState {
  std::vector<SPoly> eqs;
  std::vector<SPoly> nonzero;
  std::vector<SPoly> value, den;
  std::vector<bool> solved;
  // Univariate equations whose remaining roots are out of reach; kept as
  // constraints while the other equations are solved.
  std::vector<SPoly> deferred;
};

inline void substitute_all(SolveState& st, std::size_t idx, const SPoly& num, const SPoly& den) {
  const bool unit = den.is_constant();
  const SPoly q = unit ? den.constant_term().inverse() * num : num;
  auto sub = [&](const SPoly& e) { return unit ? e.substitute(idx, q) : homogenized(e, idx, num, den, e.degree_in(idx)); };
  for (auto& e : st.eqs) e = sub(e);
  for (auto& e : st.nonzero) e = sub(e);
  for (std::size_t i = 0; i < st.value.size(); ++i) {
    if (!st.solved[i]) continue;
    int dn = st.value[i].degree_in(idx), dd = st.den[i].degree_in(idx), m = std::max(dn, dd);
    if (unit || m == 0) {
      st.value[i] = st.value[i].substitute(idx, q);
      st.den[i] = st.den[i].substitute(idx, q);
      continue;
    }
    st.value[i] = homogenized(st.value[i], idx, num, den, dn) * den.pow(static_cast<unsigned>(m - dn));
    st.den[i] = homogenized(st.den[i], idx, num, den, dd) * den.pow(static_cast<unsigned>(m - dd));
  }
  st.value[idx] = q;
  st.den[idx] = unit ? SPoly(num.vars(), Scalar(1)) : den;
  if (!unit) st.nonzero.push_back(den);
  st.solved[idx] = true;
}

inline PolySolution make_solution(const SolveState& st, std::vector<SPoly> pending) {
  PolySolution ps{st.value, st.den, {}, std::move(pending)};
  for (bool s : st.solved) ps.free.push_back(!s);
  for (std::size_t i = 0; i < ps.value.size(); ++i) {
    // Cancel a common factor when both sides involve only the same one variable.
    auto vd = vars_in(ps.den[i]), vv = vars_in(ps.value[i]);
    if (vd.size() == 1 && (vv.empty() || vv == vd)) {
      SPoly g = ugcd(ps.value[i], ps.den[i]);
      if (g.total_degree() > 0) {
        ps.value[i] = ps.value[i].divide_exact(g);
        ps.den[i] = ps.den[i].divide_exact(g);
      }
    }
  }
  for (std::size_t i = 0; i < ps.value.size(); ++i)
    if (ps.den[i].is_constant()) {
      ps.value[i] = ps.den[i].constant_term().inverse() * ps.value[i];
      ps.den[i] = SPoly(ps.value[i].vars(), Scalar(1));
    }
  return ps;
}

// A new resultant with fewer variables than its parents, scanning pairs with
// the fewest combined variables first.
inline std::optional<SPoly> elimination_step(const std::vector<SPoly>& eqs) {
  struct PairKey {
    std::size_t nv;
    int deg;
    std::size_t p, q;
  };
  std::vector<PairKey> pairs;
  for (std::size_t p = 0; p < eqs.size(); ++p)
    for (std::size_t q = p + 1; q < eqs.size(); ++q) {
      int deg = eqs[p].total_degree() * eqs[q].total_degree();
      if (deg > 48) continue;
      auto vp = vars_in(eqs[p]), vq = vars_in(eqs[q]);
      std::vector<std::size_t> all = vp;
      all.insert(all.end(), vq.begin(), vq.end());
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      if (all.size() == vp.size() + vq.size()) continue;  // nothing shared
      pairs.push_back({all.size(), deg, p, q});
    }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const PairKey& a, const PairKey& b) { return a.nv != b.nv ? a.nv < b.nv : a.deg < b.deg; });
  for (const auto& pk : pairs) {
    const SPoly& a = eqs[pk.p];
    const SPoly& b = eqs[pk.q];
    auto vp = vars_in(a), vq = vars_in(b);
    for (std::size_t i : vp) {
      if (std::find(vq.begin(), vq.end(), i) == vq.end()) continue;
      SPoly r = resultant(a, b, i);
      if (r.is_zero()) continue;
      r = monic(r);
      if (vars_in(r).size() >= std::max(vp.size(), vq.size())) continue;
      if (std::find(eqs.begin(), eqs.end(), r) != eqs.end()) continue;
      return r;
    }
  }
  return std::nullopt;
}

inline void solve_rec(SolveState st, PolySolveResult& out, int depth) {
  if (depth > 200) {
    out.complete = false;
    for (const auto& e : st.eqs) out.unresolved.push_back(e);
    out.solutions.push_back(make_solution(st, st.eqs));
    return;
  }
  int eliminations = 0;
  for (;;) {
    std::vector<SPoly> kept;
    for (const auto& e0 : st.eqs) {
      if (e0.is_zero()) continue;
      if (e0.is_constant()) return;  // nonzero constant: inconsistent
      SPoly e = monic(saturate(e0, st.nonzero));
      if (std::find(kept.begin(), kept.end(), e) == kept.end()) kept.push_back(e);
    }
    // Univariate equations in the same variable merge into their gcd.
    for (std::size_t p = 0; p < kept.size(); ++p) {
      auto vp = vars_in(kept[p]);
      if (vp.size() != 1) continue;
      for (std::size_t q = kept.size(); q-- > p + 1;) {
        if (vars_in(kept[q]) != vp) continue;
        kept[p] = ugcd(kept[p], kept[q]);
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(q));
        if (kept[p].is_constant()) return;
      }
    }
    st.eqs = std::move(kept);
    for (const auto& nz : st.nonzero)
      if (nz.is_zero()) return;
    if (st.eqs.empty()) break;
    bool only_deferred = true;
    for (const auto& e : st.eqs)
      only_deferred = only_deferred && std::find(st.deferred.begin(), st.deferred.end(), e) != st.deferred.end();
    if (only_deferred) {
      out.complete = false;
      for (const auto& e : st.eqs) out.unresolved.push_back(e);
      return;
    }
    std::stable_sort(st.eqs.begin(), st.eqs.end(),
                     [](const SPoly& a, const SPoly& b) { return vars_in(a).size() < vars_in(b).size(); });
    bool progressed = false;
    for (std::size_t q = 0; q < st.eqs.size() && !progressed; ++q)
      for (std::size_t i : vars_in(st.eqs[q])) {
        if (st.eqs[q].degree_in(i) != 1) continue;
        auto cs = st.eqs[q].coefficients_in(i);
        if (!cs[1].is_constant()) continue;
        substitute_all(st, i, -cs[0], cs[1]);
        progressed = true;
        break;
      }
    if (progressed) continue;
    std::size_t uq = 0;
    while (uq < st.eqs.size() && vars_in(st.eqs[uq]).size() == 1 &&
           std::find(st.deferred.begin(), st.deferred.end(), st.eqs[uq]) != st.deferred.end())
      ++uq;
    if (uq < st.eqs.size() && vars_in(st.eqs[uq]).size() == 1) {
      const SPoly e = st.eqs[uq];
      const std::size_t v = vars_in(e).front();
      RootReport rr;
      try {
        rr = field_roots(to_univariate(e, v));
      } catch (const Error&) {
        rr.complete = false;
        rr.roots.clear();
      }
      if (!rr.complete) {
        // Keep the factor without the found roots and go on with the other equations.
        SPoly rest = e;
        for (const auto& r : rr.roots) {
          SPoly lin = SPoly::var(e.vars(), v) - r;
          while (rest.degree_in(v) > 0 && rest.divmod(lin).second.is_zero()) rest = rest.divide_exact(lin);
        }
        rest = monic(rest);
        SolveState br = st;
        br.eqs[uq] = rest;
        br.deferred.push_back(rest);
        solve_rec(br, out, depth + 1);
      }
      for (const auto& r : rr.roots) {
        SolveState br = st;
        try {
          substitute_all(br, v, SPoly(e.vars(), r), SPoly(e.vars(), Scalar(1)));
          solve_rec(br, out, depth + 1);
        } catch (const Error&) {
          out.complete = false;  // roots from two different quadratic fields
          out.unresolved.push_back(e);
        }
      }
      return;
    }
    // A variable occurring linearly: its coefficient vanishes, or it is a quotient.
    std::optional<std::pair<std::size_t, std::size_t>> lin;
    std::size_t lin_vars = 0;
    for (std::size_t q = 0; q < st.eqs.size(); ++q)
      for (std::size_t i : vars_in(st.eqs[q])) {
        if (st.eqs[q].degree_in(i) != 1) continue;
        std::size_t nv = vars_in(st.eqs[q].coefficients_in(i)[1]).size();
        if (!lin || nv < lin_vars) {
          lin = std::make_pair(q, i);
          lin_vars = nv;
        }
      }
    if (lin) {
      auto [q, i] = *lin;
      auto cs = st.eqs[q].coefficients_in(i);
      SolveState zero = st;
      zero.eqs.push_back(cs[1]);
      solve_rec(zero, out, depth + 1);
      substitute_all(st, i, -cs[0], cs[1]);
      solve_rec(st, out, depth + 1);
      return;
    }
    // A quadratic with constant leading coefficient and square discriminant splits.
    for (std::size_t q = 0; q < st.eqs.size(); ++q)
      for (std::size_t i : vars_in(st.eqs[q])) {
        if (st.eqs[q].degree_in(i) != 2) continue;
        auto cs = st.eqs[q].coefficients_in(i);
        if (!cs[2].is_constant()) continue;
        auto root = poly_sqrt(cs[1] * cs[1] - Scalar(4) * cs[2] * cs[0]);
        if (!root) continue;
        SPoly x = SPoly::var(st.eqs[q].vars(), i);
        for (int sg : {1, -1}) {
          SolveState br = st;
          br.eqs[q] = Scalar(2) * cs[2] * x + cs[1] + Scalar(sg) * *root;
          solve_rec(br, out, depth + 1);
        }
        return;
      }
    for (std::size_t q = 0; q < st.eqs.size(); ++q)
      if (auto f = bivariate_factor(st.eqs[q])) {
        SolveState br = st;
        br.eqs[q] = *f;
        solve_rec(br, out, depth + 1);
        st.eqs[q] = st.eqs[q].divide_exact(*f);
        solve_rec(st, out, depth + 1);
        return;
      }
    std::optional<SPoly> r;
    if (eliminations < 64) r = elimination_step(st.eqs);
    if (r) {
      st.eqs.push_back(*r);
      ++eliminations;
      continue;
    }
    // A single remaining equation defines the solution set implicitly; more
    // than one is a nonlinear system this solver cannot triangularize.
    if (st.eqs.size() > 1) {
      out.complete = false;
      for (const auto& e : st.eqs) out.unresolved.push_back(e);
    }
    out.solutions.push_back(make_solution(st, st.eqs));
    return;
  }
  out.solutions.push_back(make_solution(st, {}));
}

}  // namespace detail

// Solves eqs = 0 in the given variables; solutions on which any expression in
// nonzero vanishes identically are discarded.
inline PolySolveResult solve_system(const std::vector<std::string>& vars, const std::vector<SPoly>& eqs,
                                    const std::vector<SPoly>& nonzero = {}) {
  detail::SolveState st;
  st.eqs = eqs;
  st.nonzero = nonzero;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    st.value.push_back(SPoly::var(vars, i));
    st.den.push_back(SPoly(vars, Scalar(1)));
  }
  st.solved.assign(vars.size(), false);
  PolySolveResult out;
  detail::solve_rec(st, out, 0);
  return out;
}

// A point of solution s with the free variables at distinct sample values
// picked by k; a single pending equation is solved for its last variable.
// nullopt when s is undefined there or the pending root is out of reach.
inline std::optional<std::vector<Scalar>> sample_point(const PolySolution& s, long k) {
  const std::size_t n = s.value.size();
  if (s.pending.size() > 1) return std::nullopt;
  std::vector<Scalar> at(n);
  for (std::size_t i = 0; i < n; ++i) at[i] = Scalar::frac(k * static_cast<long>(2 * i + 3) + 1, 7);
  try {
    if (!s.pending.empty()) {
      const SPoly& p = s.pending.front();
      auto vs = detail::vars_in(p);
      if (vs.empty()) return std::nullopt;
      const std::size_t target = vs.back();
      SPoly q = p;
      for (std::size_t v : vs)
        if (v != target) q = q.substitute(v, SPoly(p.vars(), at[v]));
      RootReport rr = field_roots(detail::to_univariate(q, target));
      if (rr.roots.empty()) return std::nullopt;
      at[target] = rr.roots.front();
    }
    std::vector<Scalar> pt(n);
    for (std::size_t i = 0; i < n; ++i) pt[i] = s.free[i] ? at[i] : s.eval(i, at);
    return pt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Dimension of the solution set: free variables less pending equations.
inline int solution_dimension(const PolySolution& s) {
  int f = 0;
  for (bool b : s.free) f += b ? 1 : 0;
  return f - static_cast<int>(s.pending.size());
}

}  // namespace gtm
