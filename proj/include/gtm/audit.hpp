#pragma once
// Uniqueness audits: the exact intersection table of the 8/9-dim components,
// sampled pairwise distinctness of the family lists, and the exhaustive
// solution of the two-adjacent-zero systems.

#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <tuple>
#include <random>
#include <string>
#include <vector>

#include "gtm/classify.hpp"
#include "gtm/relations.hpp"
#include "gtm/solve.hpp"
#include "gtm/variety.hpp"

namespace gtm {

// ---------------------------------------------------------------------------
// Quotients of polynomials, used to expand the component closed forms in
// their parameters. A quotient without variables is a plain scalar.

class Frac {
 public:
  Frac() : c_(0) {}
  Frac(const Scalar& c) : c_(c) {}  // NOLINT(google-explicit-constructor)
  Frac(SPoly n, SPoly d) : n_(std::move(n)), d_(std::move(d)) { tidy(); }
  static Frac var(const std::vector<std::string>& vars, const std::string& name) {
    return Frac(SPoly::var(vars, name), SPoly(vars, Scalar(1)));
  }

  bool is_constant() const { return !n_; }
  SPoly num(const std::vector<std::string>& vars) const { return n_ ? *n_ : SPoly(vars, c_); }
  SPoly den(const std::vector<std::string>& vars) const { return d_ ? *d_ : SPoly(vars, Scalar(1)); }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.is_constant() && b.is_constant()) return Frac(a.c_ + b.c_);
    const auto& v = a.vars_of(b);
    return Frac(a.num(v) * b.den(v) + b.num(v) * a.den(v), a.den(v) * b.den(v));
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.is_constant() && b.is_constant()) return Frac(a.c_ * b.c_);
    const auto& v = a.vars_of(b);
    return Frac(a.num(v) * b.num(v), a.den(v) * b.den(v));
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.is_constant()) {
      if (b.c_.is_zero()) throw Error("BadDomain", "division by zero");
      return a * Frac(b.c_.inverse());
    }
    if (b.n_->is_zero()) throw Error("BadDomain", "division by the zero polynomial");
    const auto& v = a.vars_of(b);
    return Frac(a.num(v) * b.den(v), a.den(v) * b.num(v));
  }
  Frac operator-() const { return n_ ? Frac(-*n_, *d_) : Frac(-c_); }
  friend bool operator==(const Frac& a, const Frac& b) {
    if (a.is_constant() && b.is_constant()) return a.c_ == b.c_;
    const auto& v = a.vars_of(b);
    return (a.num(v) * b.den(v) - b.num(v) * a.den(v)).is_zero();
  }

 private:
  const std::vector<std::string>& vars_of(const Frac& o) const { return n_ ? n_->vars() : o.n_->vars(); }
  void tidy() {
    if (d_->is_constant()) {
      n_ = d_->constant_term().inverse() * *n_;
      d_ = SPoly(n_->vars(), Scalar(1));
    }
    if (n_->is_constant() && d_->is_constant()) {
      c_ = n_->constant_term();
      n_.reset();
      d_.reset();
    }
  }
  Scalar c_;
  std::optional<SPoly> n_, d_;
};

// Parameters of each component, in label order.
inline std::vector<std::string> component_params(const std::string& id, bool nine) {
  if (id == "1") return {"u", "v"};
  if (id == "1_0") return {"v"};
  if (id == "2") return nine ? std::vector<std::string>{"y"} : std::vector<std::string>{"x", "y"};
  return {"t"};
}

inline std::vector<std::string> component_ids(bool nine) {
  if (nine) return {"1", "1_0", "2", "3", "5+", "5-", "6+", "6-"};
  return {"1", "1_0", "2", "3", "4+", "4-", "5+", "5-", "6+", "6-"};
}

// Expressions that must not vanish on a component (outside its domain).
inline std::vector<Frac> component_domain(const std::string& id, bool nine, const std::function<Frac(const std::string&)>& p) {
  const int len = nine ? 7 : 6;
  std::vector<Frac> out;
  auto F = [](long a, long b) { return Frac(Scalar::frac(a, b)); };
  if (id == "1") {
    out = {p("u") - p("v"), p("u") - p("v") - F(1, 1)};
    for (int i = 1; i <= len + 1; ++i) out.push_back(p("v") + F(i, 1));
  } else if (id == "1_0") {
    for (int i = 1; i <= len; ++i) out.push_back(p("v") + F(i, 1));
  } else if (id == "2" && !nine) {
    out = {F(5, 1) * p("y") - F(9, 1), F(2, 1) * p("x") - p("y") + F(1, 1), F(5, 1) * p("y") + F(7, 1)};
  } else if (id == "2") {
    for (long a : {9L, 7L, -9L, -7L}) out.push_back(p("y") - F(a, 5));
  }
  return out;
}

// num/den in a single variable idx reduced to lowest terms, written in that
// variable alone (its name with any "A."/"B." prefix dropped).
inline std::pair<SPoly, SPoly> reduce_quotient(const SPoly& num, const SPoly& den, std::size_t idx) {
  std::string name = num.vars()[idx];
  if (auto dot = name.find('.'); dot != std::string::npos) name = name.substr(dot + 1);
  auto uni = [&](const SPoly& p) {
    std::vector<Scalar> a;
    for (const auto& c : p.coefficients_in(idx)) a.push_back(c.constant_term());
    return from_dense<Scalar>({name}, a);
  };
  SPoly n = uni(num), d = uni(den);
  SPoly g = ugcd(n, d);
  n = n.divide_exact(g);
  d = d.divide_exact(g);
  Scalar lc = d.leading_coeff();
  return {lc.inverse() * n, lc.inverse() * d};
}

// One piece of the intersection of two components.
struct IntersectionPiece {
  FamilyLabel a, b;                  // points: both labels with exact parameters
  bool curve = false;                // positive-dimensional piece
  std::string free_parameter;        // for curves: the free parameter (as "A.v" or "B.t")
  std::map<std::string, std::string> description;  // for curves: parameter -> expression
  std::vector<SPoly> value, den;                    // for curves: the raw parametrization
};

struct IntersectionResult {
  bool nine = false;
  std::string a, b;
  std::vector<IntersectionPiece> pieces;
  bool complete = true;
  std::vector<SPoly> unresolved;
};

inline std::string component_name(const std::string& id, bool nine) {
  return std::string(nine ? "tM" : "M") + id;
}

inline IntersectionResult intersect_components(const std::string& A, const std::string& B, bool nine) {
  IntersectionResult res;
  res.nine = nine;
  res.a = A;
  res.b = B;
  std::vector<std::string> vars;
  for (const auto& q : component_params(A, nine)) vars.push_back("A." + q);
  for (const auto& q : component_params(B, nine)) vars.push_back("B." + q);
  auto pa = [&](const std::string& q) { return Frac::var(vars, "A." + q); };
  auto pb = [&](const std::string& q) { return Frac::var(vars, "B." + q); };
  auto fa = component_formula<Frac>(A, nine, pa);
  auto fb = component_formula<Frac>(B, nine, pb);
  std::vector<SPoly> eqs, nonzero;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    eqs.push_back(fa[i].num(vars) * fb[i].den(vars) - fb[i].num(vars) * fa[i].den(vars));
    nonzero.push_back(fa[i].den(vars));
    nonzero.push_back(fb[i].den(vars));
  }
  for (const auto& d : component_domain(A, nine, pa)) nonzero.push_back(d.num(vars));
  for (const auto& d : component_domain(B, nine, pb)) nonzero.push_back(d.num(vars));
  PolySolveResult sol = solve_system(vars, eqs, nonzero);
  res.complete = sol.complete;
  res.unresolved = sol.unresolved;
  const std::string tag = nine ? "tM" : "M";
  auto label_at = [&](const std::string& id, const std::string& pre, const std::vector<Scalar>& pt) {
    FamilyLabel L{tag, id, {}};
    for (const auto& q : component_params(id, nine)) {
      std::size_t i = SPoly::index_of(vars, pre + q);
      L.params.push_back({q, pt[i]});
    }
    return L;
  };
  for (const auto& s : sol.solutions) {
    if (s.pending.size() > 1) continue;
    std::size_t nfree = 0, free_idx = 0;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (s.free[i]) {
        ++nfree;
        free_idx = i;
      }
    if (nfree == 0 && s.pending.empty()) {
      auto pt = s.point();
      IntersectionPiece piece{label_at(A, "A.", pt), label_at(B, "B.", pt), false, "", {}};
      try {
        if (component_b_vector(piece.a) != component_b_vector(piece.b)) continue;
      } catch (const Error&) {
        continue;  // outside a domain
      }
      bool dup = false;
      for (const auto& p : res.pieces) dup = dup || (!p.curve && p.a.str() == piece.a.str() && p.b.str() == piece.b.str());
      if (!dup) res.pieces.push_back(piece);
      continue;
    }
    // Positive-dimensional: confirm at sample values of the free parameters.
    bool ok = false;
    for (long k : {7L, 13L, 29L, 41L}) {
      auto pt = sample_point(s, k);
      if (!pt) continue;
      try {
        if (component_b_vector(label_at(A, "A.", *pt)) == component_b_vector(label_at(B, "B.", *pt))) ok = true;
      } catch (const Error&) {
      }
    }
    if (!ok) continue;
    IntersectionPiece piece;
    piece.curve = true;
    piece.a = FamilyLabel{tag, A, {}};
    piece.b = FamilyLabel{tag, B, {}};
    piece.free_parameter = nfree == 1 ? vars[free_idx] : "";
    for (const auto& e : s.pending) piece.description["equation"] = e.str() + " = 0";
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (!s.free[i]) {
        SPoly num = s.value[i], den = s.den[i];
        if (nfree == 1 && s.pending.empty()) std::tie(num, den) = reduce_quotient(num, den, free_idx);
        std::string e = num.str();
        if (!den.is_constant() || den.constant_term() != Scalar(1)) e = "(" + e + ")/(" + den.str() + ")";
        piece.description[vars[i]] = e;
      }
    piece.value = s.value;
    piece.den = s.den;
    res.pieces.push_back(piece);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Exhaustive solution for zeros at alpha_k, alpha_{k+1}.

struct TypeCSolution {
  std::vector<Scalar> b;  // normalized tilde B_1..B_{n-1}
  std::vector<FamilyLabel> isomorphic_to;
};

struct TypeCReport {
  int n_plus_1 = 0;
  int k = 0;
  std::vector<TypeCSolution> solutions;  // indecomposable ones
  int decomposable_discarded = 0;
  int split_patterns = 0;  // crossing zero patterns that split for every B
  int families_with_parameters = 0;  // positive-dimensional indecomposable solution sets
  bool complete = true;
};

// Specialized relations as polynomials in the unknown B's.
inline std::vector<SPoly> specialized_equations(const std::vector<Scalar>& alpha, const std::vector<SPoly>& B) {
  const int N = static_cast<int>(alpha.size()) + 1;
  std::vector<SPoly> out;
  for (int which : {5, 7}) {
    const int w = which == 5 ? 4 : 6;
    const MultiPoly& rel = cleared_relation(which);
    for (int m = 1; m + which <= N; ++m) {
      SPoly acc(B.front().vars());
      for (const auto& [e, c] : rel.terms()) {
        Scalar coef(c);
        for (int i = 0; i <= w; ++i)
          for (int r = 0; r < e[static_cast<std::size_t>(w + i)]; ++r) coef *= alpha[static_cast<std::size_t>(m - 1 + i)];
        if (coef.is_zero()) continue;
        SPoly term(B.front().vars(), coef);
        for (int i = 0; i < w; ++i)
          for (int r = 0; r < e[static_cast<std::size_t>(i)]; ++r) term *= B[static_cast<std::size_t>(m - 1 + i)];
        acc += term;
      }
      out.push_back(acc);
    }
  }
  return out;
}

inline TypeCReport typec_exhaustive(int N, int k) {
  const int n = N - 1;
  if (k < 1 || k + 1 > n) throw Error("BadParams", "zeros at k, k+1 need 1 <= k <= n-1");
  TypeCReport rep;
  rep.n_plus_1 = N;
  rep.k = k;
  std::vector<Scalar> alpha(static_cast<std::size_t>(n), Scalar(1));
  alpha[static_cast<std::size_t>(k - 1)] = alpha[static_cast<std::size_t>(k)] = Scalar(0);
  // Crossing entries B_{k-1}, B_k, B_{k+1} (those that exist).
  std::vector<int> cross;
  for (int j : {k - 1, k, k + 1})
    if (j >= 1 && j <= n - 1) cross.push_back(j);
  // The solver breaks ties by variable index; order the variables so that the
  // long free stretch of B comes first, which keeps the elimination mirror-symmetric.
  const bool mirrored = 2 * k < n;
  auto var_index = [&](int j) { return static_cast<std::size_t>(mirrored ? n - 1 - j : j - 1); };
  std::vector<std::string> vars(static_cast<std::size_t>(n - 1));
  for (int j = 1; j <= n - 1; ++j) vars[var_index(j)] = "b" + std::to_string(j);
  vars.push_back("s");
  const std::size_t S = vars.size() - 1;
  std::vector<std::vector<Scalar>> seen;
  for (unsigned mask = 0; mask < (1u << cross.size()); ++mask) {
    // mask bit set: that crossing entry is nonzero.
    std::vector<SPoly> B;
    for (int j = 1; j <= n - 1; ++j) B.push_back(SPoly::var(vars, var_index(j)));
    std::vector<SPoly> nonzero;
    std::vector<int> nz;
    for (std::size_t c = 0; c < cross.size(); ++c) {
      int j = cross[c];
      if (mask & (1u << c)) nz.push_back(j);
      else B[static_cast<std::size_t>(j - 1)] = SPoly(vars);
    }
    // The two block scalings fix up to two nonzero crossing entries to 1; with
    // all three nonzero, B_{k-1} B_{k+1} / B_k is invariant and stays free.
    // b_{k-1} = b_k = 0 or b_k = b_{k+1} = 0 gives an interval split whatever the rest is.
    auto nonzero_at = [&](int j) { return std::find(nz.begin(), nz.end(), j) != nz.end(); };
    if (!nonzero_at(k) && (!nonzero_at(k - 1) || !nonzero_at(k + 1))) {
      ++rep.split_patterns;
      continue;
    }
    bool all3 = nz.size() == 3;
    for (std::size_t c = 0; c < nz.size() && c < 2; ++c) {
      int j = nz[c];
      if (all3 && j == k + 1) continue;
      B[static_cast<std::size_t>(j - 1)] = SPoly(vars, Scalar(1));
    }
    if (all3) {
      B[static_cast<std::size_t>(k)] = SPoly::var(vars, S);
      nonzero.push_back(SPoly::var(vars, S));
    }
    auto eqs = specialized_equations(alpha, B);
    PolySolveResult res = solve_system(vars, eqs, nonzero);
    if (!res.complete) rep.complete = false;
    for (const auto& sol : res.solutions) {
      if (!sol.pending.empty()) continue;
      // Evaluate; free variables (other than the invariant) mean a family.
      bool has_free = false;
      for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
        bool used = false;
        for (const auto& bb : B) used = used || bb.degree_in(i) > 0;
        if (used && sol.free[i]) has_free = true;
      }
      if (all3 && sol.free[S]) has_free = true;
      // Free variables are sampled at a generic value; positive-dimensional
      // indecomposable solution sets would contradict the classification.
      std::vector<Scalar> at(vars.size(), Scalar::frac(37, 11));
      std::vector<Scalar> bval;
      try {
        for (const auto& bb : B) {
          SPoly v = bb;
          for (std::size_t i = 0; i < vars.size(); ++i)
            if (v.degree_in(i) > 0) v = v.substitute(i, SPoly(vars, sol.free[i] ? at[i] : sol.eval(i, at)));
          bval.push_back(v.constant_term());
        }
      } catch (const Error&) {
        rep.complete = false;
        continue;
      }
      DefiningSet ds(N, Convention::Tilde, alpha, bval);
      if (is_decomposable(ds)) {
        ++rep.decomposable_discarded;
        continue;
      }
      if (has_free) {
        ++rep.families_with_parameters;
        continue;
      }
      if (std::find(seen.begin(), seen.end(), bval) != seen.end()) continue;
      seen.push_back(bval);
      TypeCSolution ts{bval, {}};
      for (const auto& L : detail::candidates_c(k, N))
        if (graded_isomorphic(make_family(L, N), ds)) ts.isomorphic_to.push_back(L);
      rep.solutions.push_back(ts);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Checks of the stated intersection list and involution properties.

struct ClaimCheck {
  std::string claim;
  std::string computed;
  bool reproduced = false;
};

// Symbolic check of the M1 / M2 criterion u = (v+3)(v+4)(v+5)/30 + (v-3)/2, both ways.
struct CriterionReport {
  bool sufficient = false;  // every M1 point with that u lies on M2 (as an identity in v)
  bool necessary = false;   // the computed intersection curve is exactly that u
  std::string computed_u;
  std::vector<Scalar> excluded_v;  // real v where the curve leaves a domain
};

inline Frac criterion_u(const Frac& v) {
  auto K = [](long p, long q = 1) { return Frac(Scalar::frac(p, q)); };
  return K(1, 30) * (v + K(3)) * (v + K(4)) * (v + K(5)) + K(1, 2) * (v - K(3));
}

inline CriterionReport m1_m2_criterion(const IntersectionResult& m1m2) {
  CriterionReport rep;
  const std::vector<std::string> var{"v"};
  Frac v = Frac::var(var, "v");
  Frac u = criterion_u(v);
  auto m1 = component_formula<Frac>("1", false, [&](const std::string& k) { return k == "u" ? u : v; });
  Frac x = m1[1], y = m1[2];
  auto m2 = component_formula<Frac>("2", false, [&](const std::string& k) { return k == "x" ? x : y; });
  rep.sufficient = m1 == m2;
  std::vector<SPoly> bad;
  for (const auto& d : component_domain("1", false, [&](const std::string& k) { return k == "u" ? u : v; })) bad.push_back(d.num(var));
  for (const auto& d : component_domain("2", false, [&](const std::string& k) { return k == "x" ? x : y; })) bad.push_back(d.num(var));
  for (const auto& c : m1) bad.push_back(c.den(var));
  for (const auto& c : m2) bad.push_back(c.den(var));
  for (const auto& b : bad) {
    if (b.is_constant()) continue;
    for (const auto& r : field_roots(b).roots)
      if (std::find(rep.excluded_v.begin(), rep.excluded_v.end(), r) == rep.excluded_v.end()) rep.excluded_v.push_back(r);
  }
  std::sort(rep.excluded_v.begin(), rep.excluded_v.end(), [](const Scalar& x, const Scalar& y) {
    return x.d() != y.d() ? x.d() < y.d() : x < y;  // values from different fields never compare
  });
  int curves = 0;
  for (const auto& piece : m1m2.pieces) {
    if (!piece.curve) continue;
    ++curves;
    const auto& vars = piece.value.front().vars();
    const std::size_t iu = SPoly::index_of(vars, "A.u"), iv = SPoly::index_of(vars, "A.v");
    if (piece.free_parameter != "A.v") continue;
    Frac fu(piece.value[iu], piece.den[iu]);
    rep.necessary = fu == criterion_u(Frac::var(vars, "A.v"));
    rep.computed_u = piece.description.at("A.u");
    (void)iv;
  }
  if (curves != 1) rep.necessary = false;
  return rep;
}

inline const IntersectionResult& find_pair(const std::vector<IntersectionResult>& t, const std::string& a, const std::string& b) {
  for (const auto& r : t)
    if ((r.a == a && r.b == b) || (r.a == b && r.b == a)) return r;
  throw Error("BadParams", "no intersection computed for " + a + ", " + b);
}

inline std::vector<IntersectionPiece> points_of(const IntersectionResult& r) {
  std::vector<IntersectionPiece> out;
  for (const auto& p : r.pieces)
    if (!p.curve) out.push_back(p);
  return out;
}

// The piece's label for component id (a or b side).
inline const FamilyLabel& side(const IntersectionPiece& p, const std::string& id) { return p.a.variant == id ? p.a : p.b; }

inline std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

// Components (other than those listed) that meet id.
inline std::vector<std::string> partners(const std::vector<IntersectionResult>& t, const std::string& id) {
  std::vector<std::string> out;
  for (const auto& r : t) {
    if (r.pieces.empty()) continue;
    if (r.a == id) out.push_back(r.b);
    if (r.b == id) out.push_back(r.a);
  }
  return out;
}

inline std::vector<ClaimCheck> dim8_claims(const std::vector<IntersectionResult>& t, const CriterionReport& crit) {
  std::vector<ClaimCheck> out;
  auto F = [](long p, long q) { return Scalar::frac(p, q); };
  const Scalar r19 = Scalar::sqrt_of(19), r61 = Scalar::sqrt_of(61);
  auto named = [](const std::vector<std::string>& ids) {
    std::vector<std::string> n;
    for (const auto& i : ids) n.push_back("M" + i);
    return n.empty() ? std::string("none") : join(n);
  };
  {
    auto p = partners(t, "3");
    out.push_back({"M3 does not intersect other subsets M_i", "M3 meets: " + named(p), p.empty()});
  }
  out.push_back({"P(u,v) in M1 lies in M2 iff u = (v+3)(v+4)(v+5)/30 + (v-3)/2",
                 "intersection curve u = " + crit.computed_u + "; identity on M1 " +
                     (crit.sufficient ? "holds" : "fails"),
                 crit.sufficient && crit.necessary});
  {
    std::vector<std::string> got;
    std::vector<Scalar> vs;
    for (const auto& p : points_of(find_pair(t, "1_0", "2"))) {
      vs.push_back(side(p, "1_0").param("v"));
      got.push_back("v = " + vs.back().str());
    }
    std::vector<Scalar> want{F(-7, 2) - F(1, 2) * r61, F(-7, 2) + F(1, 2) * r61};
    std::sort(vs.begin(), vs.end());
    std::sort(want.begin(), want.end());
    out.push_back({"M1_0 intersects M2 at v = (-7 +- sqrt61)/2", got.empty() ? "empty" : join(got), vs == want});
  }
  for (const char* id : {"4+", "4-"}) {
    const bool plus = id[1] == '+';
    const Scalar r = plus ? r19 : -r19;
    auto pts = points_of(find_pair(t, "1", id));
    Scalar want_t = F(-16, 15) + F(68, 285) * r;
    bool t_ok = pts.size() == 1 && side(pts[0], id).param("t") == want_t;
    std::string got = pts.empty() ? "empty" : "t = " + side(pts[0], id).param("t").str();
    out.push_back({std::string("M4") + id[1] + " intersects M1 at t = -16/15 " + id[1] + " 68/285 sqrt19", got, t_ok});
    std::string uv = "none";
    bool p_ok = false;
    if (pts.size() == 1) {
      const auto& m1 = side(pts[0], "1");
      uv = "P(" + m1.param("u").str() + ", " + m1.param("v").str() + ")";
      p_ok = m1.param("u") == F(-9, 2) + F(3, 2) * r && m1.param("v") == Scalar(-2) + r;
    }
    out.push_back({std::string("the M4") + id[1] + " / M1 point is P(-9/2 " + id[1] + " 3/2 sqrt19, -2 " + id[1] + " sqrt19)",
                   uv, p_ok});
    auto p = partners(t, id);
    p.erase(std::remove(p.begin(), p.end(), std::string("1")), p.end());
    out.push_back({std::string("M4") + id[1] + " does not intersect other subsets", "other partners: " + named(p), p.empty()});
  }
  for (const char* id : {"5+", "5-"}) {
    const bool plus = id[1] == '+';
    auto pts = points_of(find_pair(t, "1", id));
    std::string got = "empty";
    bool ok = false;
    if (pts.size() == 1) {
      const auto& m1 = side(pts[0], "1");
      Scalar tt = side(pts[0], id).param("t");
      got = "t = " + tt.str() + ", P(" + m1.param("u").str() + ", " + m1.param("v").str() + ")";
      ok = plus ? (tt == Scalar(4) && m1.param("u") == Scalar(3) && m1.param("v") == Scalar(1))
                : (tt == Scalar(-4) && m1.param("u") == Scalar(-10) && m1.param("v") == Scalar(-9));
    }
    out.push_back({std::string("M5") + id[1] + " intersects M1 at t = " + (plus ? "4, P(3,1)" : "-4, P(-10,-9)"), got, ok});
  }
  for (const char* id : {"5+", "5-"}) {
    auto pts = points_of(find_pair(t, "2", id));
    std::vector<std::string> got;
    bool ok = false;
    for (const auto& p : pts) {
      got.push_back("t = " + side(p, id).param("t").str());
      ok = ok || side(p, id).param("t").is_zero();
    }
    out.push_back({std::string("M5") + id[1] + " intersects M2 at t = 0", got.empty() ? "empty" : join(got), ok});
  }
  for (const char* id : {"6+", "6-"}) {
    const bool plus = id[1] == '+';
    auto pts = points_of(find_pair(t, "1_0", id));
    std::string got = "empty";
    bool ok = false;
    if (pts.size() == 1) {
      Scalar tt = side(pts[0], id).param("t"), v = side(pts[0], "1_0").param("v");
      got = "t = " + tt.str() + ", v = " + v.str();
      ok = tt == Scalar(plus ? 6 : -6) && v.is_zero();
    }
    out.push_back({std::string("M6") + id[1] + " intersects M1_0 at t = " + (plus ? "6" : "-6") + " and v = 0", got, ok});
    auto p = partners(t, id);
    p.erase(std::remove(p.begin(), p.end(), std::string("1_0")), p.end());
    out.push_back({std::string("M6") + id[1] + " does not intersect other subsets", "other partners: " + named(p), p.empty()});
  }
  return out;
}

// Involution sigma(b_1..b_6) = (-b_6..-b_1): symbolic where the image has an
// explicit parameter map, exact sampled membership otherwise.
inline std::vector<ClaimCheck> sigma_claims(unsigned seed) {
  std::vector<ClaimCheck> out;
  auto sig = [](std::vector<Frac> b) {
    std::reverse(b.begin(), b.end());
    for (auto& x : b) x = -x;
    return b;
  };
  auto K = [](long c) { return Frac(Scalar(c)); };
  {
    const std::vector<std::string> vars{"u", "v"};
    Frac u = Frac::var(vars, "u"), v = Frac::var(vars, "v");
    auto a = component_formula<Frac>("1", false, [&](const std::string& k) { return k == "u" ? u : v; });
    auto b = component_formula<Frac>("1", false, [&](const std::string& k) { return k == "u" ? -u - K(7) : -v - K(8); });
    out.push_back({"sigma(P(u,v)) = P(-u-7, -v-8) on M1", "symbolic identity", sig(a) == b});
  }
  {
    const std::vector<std::string> vars{"v"};
    Frac v = Frac::var(vars, "v");
    auto a = component_formula<Frac>("1_0", false, [&](const std::string&) { return v; });
    auto b = component_formula<Frac>("1_0", false, [&](const std::string&) { return -v - K(7); });
    out.push_back({"sigma(M1_0) = M1_0", "symbolic: v -> -v-7", sig(a) == b});
  }
  auto one_param = [&](const std::string& from, const std::string& to, bool negate, const std::string& claim) {
    const std::vector<std::string> vars{"t"};
    Frac t = Frac::var(vars, "t");
    auto a = component_formula<Frac>(from, false, [&](const std::string&) { return t; });
    auto b = component_formula<Frac>(to, false, [&](const std::string&) { return negate ? -t : t; });
    out.push_back({claim, std::string("symbolic: t -> ") + (negate ? "-t" : "t"), sig(a) == b});
  };
  one_param("3", "3", true, "sigma(M3) = M3");
  one_param("5-", "5+", true, "sigma(M5-) = M5+");
  one_param("6-", "6+", false, "sigma(M6-) = M6+");
  {
    std::mt19937 g(seed);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
    int tested = 0, ok = 0;
    for (int i = 0; i < 200 && tested < 60; ++i) {
      const int which = i % 3;
      FamilyLabel L = which == 0 ? FamilyLabel{"M", "2", {{"x", Scalar::frac(num(g), den(g))}, {"y", Scalar::frac(num(g), den(g))}}}
                                 : FamilyLabel{"M", which == 1 ? "4+" : "4-", {{"t", Scalar::frac(num(g), den(g))}}};
      std::vector<Scalar> b;
      try {
        b = sigma(component_b_vector(L));
      } catch (const Error&) {
        continue;
      }
      ++tested;
      for (const auto& m : component_membership(b))
        if (m.variant == "2" || m.variant == "4+" || m.variant == "4-") {
          ++ok;
          break;
        }
    }
    out.push_back({"sigma(M2 u M4+- ) = M2 u M4+-",
                   std::to_string(ok) + "/" + std::to_string(tested) + " sampled images back in M2 u M4+-",
                   tested > 0 && ok == tested});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extension of the 8/9-dim components by one basis vector on either side.

struct ExtensionPiece {
  std::string locus;                // parameter relations, empty when the whole component extends
  int dim = 0;                      // dimension of the piece in the component's parameters
  std::vector<std::string> images;  // labels of sampled extended points in the next list
};

struct ExtensionLocus {
  std::string component;  // e.g. "M4+"
  bool left = false;      // new vector prepended instead of appended
  int params = 0;         // dimension of the component
  std::string verdict;    // "all", "curve", "points", "none"
  std::vector<ExtensionPiece> pieces;
  std::vector<std::string> unresolved;  // equations whose roots are out of reach
  bool complete = true;

  std::string side() const { return left ? "left" : "right"; }
  bool images_listed() const {
    for (const auto& p : pieces)
      for (const auto& i : p.images)
        if (i.rfind("unlisted", 0) == 0) return false;
    return true;
  }
  std::string summary() const {
    std::vector<std::string> parts;
    for (const auto& p : pieces) {
      std::string s = p.locus.empty() ? std::string("everywhere") : p.locus;
      if (!p.images.empty()) s += " -> " + join(p.images, " | ");
      parts.push_back(s);
    }
    std::string out = verdict + (parts.empty() ? "" : ": " + join(parts, "; "));
    if (!complete) out += " (unresolved: " + join(unresolved, ", ") + ")";
    return out;
  }
};

inline std::string solution_locus(const PolySolution& s, const std::vector<std::string>& vars, std::size_t W) {
  std::vector<std::string> parts;
  for (const auto& p : s.pending) parts.push_back(p.str() + " = 0");
  std::size_t fi = W, nfree = 0;
  for (std::size_t j = 0; j < W; ++j)
    if (s.free[j]) {
      fi = j;
      ++nfree;
    }
  for (std::size_t i = 0; i < W; ++i) {
    if (s.free[i]) continue;
    SPoly n = s.value[i], d = s.den[i];
    if (nfree == 1 && s.pending.empty()) std::tie(n, d) = reduce_quotient(n, d, fi);
    std::string e = n.str();
    if (!d.is_constant() || d.constant_term() != Scalar(1)) e = "(" + e + ")/(" + d.str() + ")";
    parts.push_back(vars[i] + " = " + e);
  }
  return join(parts);
}

inline ExtensionLocus extension_locus(const std::string& id, bool nine, bool left = false) {
  ExtensionLocus rep;
  rep.component = component_name(id, nine);
  rep.left = left;
  auto names = component_params(id, nine);
  rep.params = static_cast<int>(names.size());
  std::vector<std::string> vars = names;
  vars.push_back("w");
  auto param = [&](const std::string& k) { return Frac::var(vars, k); };
  auto b = component_formula<Frac>(id, nine, param);
  const Frac w = Frac::var(vars, "w");
  if (left) b.insert(b.begin(), w);
  else b.push_back(w);
  const std::size_t L = b.size();
  std::vector<SPoly> eqs, nonzero;
  for (auto r : {r5_form(&b[left ? 0 : L - 4]), r7_form(&b[left ? 0 : L - 6])}) eqs.push_back(r.num(vars));
  for (const auto& x : b) nonzero.push_back(x.den(vars));
  for (const auto& d : component_domain(id, nine, param)) nonzero.push_back(d.num(vars));
  PolySolveResult sol = solve_system(vars, eqs, nonzero);
  rep.complete = sol.complete;
  for (const auto& u : sol.unresolved) rep.unresolved.push_back(u.str());
  int max_dim = -1;
  const std::size_t W = vars.size() - 1;
  for (const auto& s : sol.solutions) {
    if (s.pending.size() > 1) continue;
    // Dimension in the component's parameters: w adds none when it is determined.
    int dim = solution_dimension(s);
    if (s.free[W] && s.pending.empty()) --dim;
    ExtensionPiece piece;
    bool genuine = false;
    for (long k : {7L, 13L, 29L, 41L, 53L, 67L}) {
      auto pt = sample_point(s, k);
      if (!pt) continue;
      try {
        FamilyLabel lab{nine ? "tM" : "M", id, {}};
        for (std::size_t i = 0; i < W; ++i) lab.params.push_back({vars[i], (*pt)[i]});
        auto bv = component_b_vector(lab);
        if (left) bv.insert(bv.begin(), (*pt)[W]);
        else bv.push_back((*pt)[W]);
        if (!benoist_residuals(tilde_set(static_cast<int>(bv.size()) + 2, {}, bv).action()).all_zero()) continue;
        genuine = true;
        if (bv.size() == 7) {
          std::vector<std::string> labs;
          for (const auto& m : component_membership(bv)) labs.push_back(m.str());
          std::string img = join(labs, " = ");
          if (img.empty()) {
            std::vector<std::string> xs;
            for (const auto& x : bv) xs.push_back(x.str());
            img = "unlisted (" + join(xs) + ")";
          }
          if (std::find(piece.images.begin(), piece.images.end(), img) == piece.images.end() && piece.images.size() < 3)
            piece.images.push_back(img);
        }
        if (dim == 0) break;
      } catch (const Error&) {
      }
    }
    if (!genuine) continue;
    piece.dim = dim;
    max_dim = std::max(max_dim, dim);
    piece.locus = solution_locus(s, vars, W);
    rep.pieces.push_back(piece);
  }
  if (max_dim < 0) rep.verdict = "none";
  else if (max_dim >= rep.params) rep.verdict = "all";
  else if (max_dim == 0) rep.verdict = "points";
  else rep.verdict = "curve";
  return rep;
}

// ---------------------------------------------------------------------------
// Sampled distinctness of a family list: two draws get the same canonical
// label only when the modules are isomorphic (a documented coincidence).

struct DistinctnessReport {
  int draws = 0;
  int classified = 0;
  int pairs_compared = 0;
  int coincidences = 0;           // different input labels, same module
  int violations = 0;             // same canonical label, non-isomorphic modules
  int split_isomorphic = 0;       // isomorphic modules, different canonical labels
  std::vector<std::string> coincidence_examples;
  std::vector<std::string> failures;
};

inline std::vector<FamilyLabel> sample_labels(PatternKind kind, int N, std::mt19937& g, int count) {
  const int n = N - 1;
  std::uniform_int_distribution<int> num(-30, 30), den(1, 6), pick(0, 9);
  const std::vector<long> special{4, 6, -4, -6, 0, 1, -1};
  auto draw = [&]() {
    if (pick(g) < 3) return Scalar(special[static_cast<std::size_t>(num(g) + 30) % special.size()]);
    return Scalar::frac(num(g), den(g));
  };
  std::vector<FamilyLabel> out;
  std::uniform_int_distribution<int> kk(1, std::max(1, n));
  while (static_cast<int>(out.size()) < count) {
    switch (kind) {
      case PatternKind::TypeA: {
        int c = pick(g) % 7;
        if (c == 0) out.push_back({"Vlm", "", {{"lambda", draw()}, {"mu", draw()}}});
        else if (c == 1) out.push_back({"C", "", {{"x", draw()}}});
        else if (c == 2) out.push_back({"Vdef", "Vlm(-2,-3)", {{"t", draw()}}});
        else if (c == 3) out.push_back({"Vdef", "Vlm(1,3-n)", {{"t", draw()}}});
        else if (c == 4) out.push_back({"Vdef", "Vlm(0,-1)", {{"t", draw()}}});
        else if (c == 5) out.push_back({"Vdef", "Vlm(-1,-2-n)", {{"t", draw()}}});
        else out.push_back({"Vlm", "", {{"lambda", Scalar(0)}, {"mu", draw()}}});
        break;
      }
      case PatternKind::TypeB: {
        int k = kk(g), c = pick(g) % 4;
        Scalar lam = draw();
        if (c == 0) out.push_back({"Vlm", "", {{"lambda", lam}, {"mu", Scalar(2) * lam - Scalar(k)}}});
        else if (c == 1 && k <= n - 2) out.push_back({"Vdef", "Vlm(-1,-k-2)", {{"k", Scalar(k)}, {"t", draw()}}});
        else if (c == 2 && k >= 3) out.push_back({"Vdef", "Vlm(0,-k)", {{"k", Scalar(k)}, {"t", draw()}}});
        else {
          static const char* bases[] = {"Vlm(0,-1)", "Vlm(-2,-3)", "Vlm(-1,-2-n)", "Vlm(1,-n)"};
          out.push_back({"TildeV", bases[pick(g) % 4], {}});
        }
        break;
      }
      case PatternKind::TypeC: {
        int k = 1 + static_cast<int>(g() % static_cast<unsigned>(std::max(1, n - 1)));
        out.push_back({pick(g) % 2 ? "Rk" : "RkDual", "", {{"k", Scalar(k)}}});
        break;
      }
      default: return out;
    }
  }
  return out;
}

inline DistinctnessReport distinctness_audit(PatternKind kind, int N, unsigned seed, int count) {
  DistinctnessReport rep;
  std::mt19937 g(seed);
  struct Item {
    FamilyLabel in;
    DefiningSet ds;
    std::string canon;
  };
  std::vector<Item> items;
  for (const auto& L : sample_labels(kind, N, g, count)) {
    ++rep.draws;
    DefiningSet ds;
    try {
      ds = make_family(L, N);
    } catch (const Error&) {
      continue;
    }
    auto r = classify(ds);
    if (r.status != Status::Classified) continue;
    ++rep.classified;
    items.push_back({L, ds, r.label->str()});
  }
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (items[i].in.str() == items[j].in.str()) continue;
      ++rep.pairs_compared;
      const bool same = items[i].canon == items[j].canon;
      const bool iso = graded_isomorphic(items[i].ds, items[j].ds).has_value();
      if (same && iso) {
        ++rep.coincidences;
        std::string ex = items[i].in.str() + " = " + items[j].in.str();
        if (rep.coincidence_examples.size() < 12 &&
            std::find(rep.coincidence_examples.begin(), rep.coincidence_examples.end(), ex) == rep.coincidence_examples.end())
          rep.coincidence_examples.push_back(ex);
      } else if (same) {
        ++rep.violations;
        rep.failures.push_back(items[i].in.str() + " and " + items[j].in.str() + " both -> " + items[i].canon);
      } else if (iso) {
        ++rep.split_isomorphic;
        rep.failures.push_back(items[i].in.str() + " and " + items[j].in.str() + " isomorphic but named " +
                               items[i].canon + ", " + items[j].canon);
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// The audit entry point.

struct ComponentLine {
  std::string component;
  int samples = 0;
  bool residuals_zero = true;
  std::vector<std::string> meets;
};

struct AuditReport {
  int n_plus_1 = 0;
  PatternKind kind = PatternKind::TypeA;
  unsigned seed = 0;
  std::vector<ClaimCheck> claims;  // one verdict per stated fact
  // type a, dimensions 8 and 9
  std::optional<EliminantReport> eliminant;
  std::vector<ComponentLine> components;
  std::vector<IntersectionResult> intersections;
  std::optional<CriterionReport> criterion;
  std::vector<ExtensionLocus> extensions;
  // other dimensions and types
  std::optional<DistinctnessReport> distinctness;
  std::vector<TypeCReport> typec;

  bool all_reproduced() const {
    for (const auto& c : claims)
      if (!c.reproduced) return false;
    return true;
  }
};

inline std::vector<ComponentLine> component_lines(bool nine, const std::vector<IntersectionResult>& table, unsigned seed) {
  std::vector<ComponentLine> out;
  std::mt19937 g(seed);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  for (const auto& id : component_ids(nine)) {
    ComponentLine line;
    line.component = component_name(id, nine);
    for (int i = 0; i < 200 && line.samples < 20; ++i) {
      FamilyLabel L{nine ? "tM" : "M", id, {}};
      for (const auto& q : component_params(id, nine)) L.params.push_back({q, Scalar::frac(num(g), den(g))});
      std::vector<Scalar> b;
      try {
        b = component_b_vector(L);
      } catch (const Error&) {
        continue;
      }
      ++line.samples;
      if (!benoist_residuals(tilde_set(static_cast<int>(b.size()) + 2, {}, b).action()).all_zero()) line.residuals_zero = false;
    }
    for (const auto& r : table) {
      if (r.pieces.empty() || (r.a != id && r.b != id)) continue;
      const std::string other = r.a == id ? r.b : r.a;
      std::vector<std::string> where;
      for (const auto& p : r.pieces) {
        if (p.curve) {
          std::vector<std::string> d;
          for (const auto& [k, v] : p.description) d.push_back(k.substr(2) + " = " + v);
          where.push_back("curve " + join(d));
        } else {
          where.push_back(side(p, id).str());
        }
      }
      line.meets.push_back(component_name(other, nine) + " at " + join(where, "; "));
    }
    out.push_back(line);
  }
  return out;
}

inline std::vector<IntersectionResult> intersection_table(bool nine) {
  std::vector<IntersectionResult> out;
  auto ids = component_ids(nine);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) out.push_back(intersect_components(ids[i], ids[j], nine));
  return out;
}

inline AuditReport uniqueness_audit(int N, PatternKind kind, unsigned seed = 20240601u) {
  AuditReport rep;
  rep.n_plus_1 = N;
  rep.kind = kind;
  rep.seed = seed;
  if (kind == PatternKind::TypeA && (N == 8 || N == 9)) {
    const bool nine = N == 9;
    rep.intersections = intersection_table(nine);
    bool complete = true;
    for (const auto& r : rep.intersections) complete = complete && r.complete;
    rep.claims.push_back({"pairwise intersections solved exactly", complete ? "all systems solved" : "some system left unresolved", complete});
    rep.components = component_lines(nine, rep.intersections, seed);
    bool sound = true;
    for (const auto& c : rep.components) sound = sound && c.residuals_zero && c.samples == 20;
    rep.claims.push_back({"every component point is a module", sound ? "20 samples per component, zero residuals" : "nonzero residual", sound});
    if (!nine) {
      auto e = eliminant_identity();
      rep.claims.push_back({"eliminant equals (z-y+2/5) F(x,y,z) up to a constant, degree 5",
                            std::string(e.identity ? "identity holds" : "identity fails") + ", constant " + e.constant.str() +
                                ", degree " + std::to_string(e.degree),
                            e.identity && e.degree == 5});
      rep.eliminant = e;
      rep.criterion = m1_m2_criterion(find_pair(rep.intersections, "1", "2"));
      for (auto& c : dim8_claims(rep.intersections, *rep.criterion)) rep.claims.push_back(c);
      for (auto& c : sigma_claims(seed)) rep.claims.push_back(c);
      for (const auto& id : component_ids(false))
        for (bool left : {false, true}) rep.extensions.push_back(extension_locus(id, false, left));
      for (std::size_t e = 0; e + 1 < rep.extensions.size(); e += 2) {
        const auto& r = rep.extensions[e];
        const auto& l = rep.extensions[e + 1];
        const std::string computed = "right " + r.summary() + "; left " + l.summary();
        if (r.component == "M4+" || r.component == "M4-") {
          // Not a component of the next list: no side extends along all of it, and
          // every extended point lies on a listed component.
          rep.claims.push_back({r.component + " does not survive to dimension 9", computed,
                                r.verdict != "all" && l.verdict != "all" && r.complete && l.complete && r.images_listed() &&
                                    l.images_listed()});
        } else if (r.component == "M2") {
          bool curve = false;
          for (const auto* x : {&r, &l})
            for (const auto& pc : x->pieces)
              for (const auto& img : pc.images) curve = curve || (pc.dim == 1 && img.find("tM(2,") != std::string::npos);
          rep.claims.push_back({"M2 extends along a curve onto the one-parameter tM2", computed, curve});
        } else {
          rep.claims.push_back({r.component + " extends to dimension 9", computed, r.verdict == "all" || l.verdict == "all"});
        }
      }
    } else {
      auto pts = points_of(find_pair(rep.intersections, "1", "2"));
      std::vector<Scalar> ys;
      for (const auto& p : pts) ys.push_back(side(p, "2").param("y"));
      std::sort(ys.begin(), ys.end());
      const Scalar r21 = Scalar::sqrt_of(21);
      std::vector<Scalar> want{Scalar::frac(-2, 5) * r21, Scalar::frac(2, 5) * r21};
      std::vector<std::string> got;
      for (const auto& y : ys) got.push_back("y = " + y.str());
      rep.claims.push_back({"tM2 intersects tM1 at y = +-2/5 sqrt21", got.empty() ? "empty" : join(got), ys == want});
      for (bool left : {false, true}) rep.extensions.push_back(extension_locus("2", true, left));
      // Points of tM2 extending on either side; the whole curve must not.
      std::vector<std::string> loci;
      bool only_points = true;
      for (const auto& ex : rep.extensions) {
        only_points = only_points && ex.verdict != "all" && ex.complete;
        for (const auto& pc : ex.pieces)
          if (std::find(loci.begin(), loci.end(), pc.locus) == loci.end()) loci.push_back(pc.locus);
      }
      std::vector<std::string> want_loci{"y = " + want[0].str(), "y = " + want[1].str()};
      std::sort(loci.begin(), loci.end());
      std::sort(want_loci.begin(), want_loci.end());
      rep.claims.push_back({"only y = +-2/5 sqrt21 of tM2 survive to dimension 10",
                            "right " + rep.extensions[0].summary() + "; left " + rep.extensions[1].summary(),
                            only_points && loci == want_loci});
    }
    return rep;
  }
  if (kind == PatternKind::TypeC) {
    bool ok = true, complete = true;
    std::vector<std::string> summary;
    for (int k = 1; k <= N - 2; ++k) {
      rep.typec.push_back(typec_exhaustive(N, k));
      const auto& t = rep.typec.back();
      auto expected = detail::candidates_c(k, N);
      std::vector<std::string> got, want;
      for (const auto& s : t.solutions)
        for (const auto& L : s.isomorphic_to) got.push_back(L.str());
      for (const auto& L : expected) want.push_back(L.str());
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      bool each_named = true;
      for (const auto& s : t.solutions) each_named = each_named && s.isomorphic_to.size() == 1;
      ok = ok && got == want && each_named && t.families_with_parameters == 0 && t.solutions.size() == want.size();
      complete = complete && t.complete;
      summary.push_back("k=" + std::to_string(k) + ": " + (got.empty() ? std::string("none") : join(got, " + ")));
    }
    rep.claims.push_back({"exhaustive zero-adjacent solutions are exactly Rk(k) and RkDual(n-k)", join(summary, "; "), ok && complete});
    rep.distinctness = distinctness_audit(kind, N, seed, 24);
  } else {
    rep.distinctness = distinctness_audit(kind, N, seed, 60);
  }
  const auto& d = *rep.distinctness;
  rep.claims.push_back({"distinct labels give distinct canonical results outside coincidences",
                        std::to_string(d.pairs_compared) + " pairs, " + std::to_string(d.coincidences) + " coincidences, " +
                            std::to_string(d.violations + d.split_isomorphic) + " failures",
                        d.violations == 0 && d.split_isomorphic == 0 && d.classified > 0});
  if (N < classification_threshold(kind) && !(kind == PatternKind::TypeA && (N == 8 || N == 9)))
    rep.claims.push_back({"dimension is below the stated threshold " + std::to_string(classification_threshold(kind)),
                          "uniqueness is reported, not asserted", true});
  return rep;
}

}  // namespace gtm
