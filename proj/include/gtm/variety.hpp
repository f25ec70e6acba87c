#pragma once
// The variety of zero-free normalized modules in dimensions 8 and 9: the
// surface F, its parametrization f, the involutions, the solution chain for
// fixed (b2, b3, b4), component membership and the eliminant identity.

#include <array>
#include <string>
#include <vector>

#include "gtm/families.hpp"
#include "gtm/poly.hpp"
#include "gtm/relations.hpp"
#include "gtm/solve.hpp"

namespace gtm {

using Triple = std::array<Scalar, 3>;

inline Scalar F_eval(const Scalar& x, const Scalar& y, const Scalar& z) {
  const Scalar three(3), six(6), nine(9);
  return y * y * (z - six) * (x + six) + y * (x + z) * (x * z + three * z - three * x + Scalar(36)) +
         three * x * z * (Scalar(4) * x - Scalar(4) * z - x * z) - nine * (x + z) * (x + z);
}

// F as a polynomial in (x, y, z).
inline const MultiPoly& F_poly() {
  static const MultiPoly f = [] {
    std::vector<std::string> v{"x", "y", "z"};
    MultiPoly x = MultiPoly::var(v, 0), y = MultiPoly::var(v, 1), z = MultiPoly::var(v, 2);
    auto k = [&](long c) { return MultiPoly(v, Rational(c)); };
    return y * y * (z - k(6)) * (x + k(6)) + y * (x + z) * (x * z + k(3) * z - k(3) * x + k(36)) +
           k(3) * x * z * (k(4) * x - k(4) * z - x * z) - k(9) * (x + z) * (x + z);
  }();
  return f;
}

// (b2, b3, b4) of the M1 point with shifted parameters: 6u/(v(v+1)), ...
inline Triple map_f(const Scalar& u, const Scalar& v) {
  for (long bad : {0L, -1L, -2L, -3L})
    if (v == Scalar(bad)) throw Error("BadDomain", "map_f needs v outside {0,-1,-2,-3}");
  const Scalar six(6), one(1), two(2), three(3);
  return {six * u / (v * (v + one)), six * (u + one) / ((v + one) * (v + two)),
          six * (u + two) / ((v + two) * (v + three))};
}

// Singular curve of the surface; gamma(t) = map_f(t-1, t-1) = map_f(t+1, t).
inline Triple gamma_point(const Scalar& t) {
  for (long bad : {0L, -1L, -2L})
    if (t == Scalar(bad)) throw Error("BadDomain", "gamma needs t outside {0,-1,-2}");
  return {Scalar(6) / t, Scalar(6) / (t + Scalar(1)), Scalar(6) / (t + Scalar(2))};
}

inline Triple sigma_F(const Triple& p) { return {-p[2], -p[1], -p[0]}; }

// (b_1..b_L) -> (-b_L..-b_1)
inline std::vector<Scalar> sigma(const std::vector<Scalar>& b) {
  std::vector<Scalar> out;
  for (auto it = b.rbegin(); it != b.rend(); ++it) out.push_back(-*it);
  return out;
}

// Residuals of the four equations (R5 at 1..3, R7 at 1) for an 8-dim point.
inline std::vector<Scalar> main_system(const std::vector<Scalar>& b) {
  if (b.size() != 6) throw Error("BadParams", "main system needs six b values");
  return {r5_form(&b[0]), r5_form(&b[1]), r5_form(&b[2]), r7_form(&b[0])};
}

// All (b1, b5, b6) solving the main system with (b2, b3, b4) = (x, y, z).
// Solutions are polynomials in the variables b1, b5, b6; a variable marked
// free is a parameter of the solution line.
inline PolySolveResult solve_8dim_given_middle(const Scalar& x, const Scalar& y, const Scalar& z) {
  const std::vector<std::string> vars{"b1", "b5", "b6"};
  std::vector<SPoly> b{SPoly::var(vars, 0), SPoly(vars, x), SPoly(vars, y), SPoly(vars, z), SPoly::var(vars, 1),
                       SPoly::var(vars, 2)};
  std::vector<SPoly> eqs{r5_form(&b[0]), r5_form(&b[1]), r5_form(&b[2]), r7_form(&b[0])};
  return solve_system(vars, eqs);
}

// The full six-vector of a middle solution with every free variable set to s.
inline std::vector<Scalar> middle_solution_point(const PolySolution& sol, const Scalar& x, const Scalar& y,
                                                 const Scalar& z, const Scalar& s) {
  std::vector<Scalar> at(3, s);
  for (std::size_t i = 0; i < 3; ++i)
    if (!sol.free[i]) at[i] = Scalar(0);
  auto val = [&](std::size_t i) { return sol.free[i] ? s : sol.eval(i, at); };
  return {val(0), x, y, z, val(1), val(2)};
}

namespace detail {

inline FamilyLabel comp(bool nine, const std::string& id, std::vector<std::pair<std::string, Scalar>> params) {
  return FamilyLabel{nine ? "tM" : "M", id, std::move(params)};
}

inline bool matches(const FamilyLabel& L, const std::vector<Scalar>& b) {
  try {
    return component_b_vector(L) == b;
  } catch (const Error&) {
    return false;
  }
}

// Candidate v for M1: common roots of b_i(v+i)(v+i+1) - b_{i+1}(v+i+1)(v+i+2) + 6.
inline std::vector<Scalar> m1_v_candidates(const std::vector<Scalar>& b) {
  const std::vector<std::string> var{"v"};
  SPoly v = SPoly::var(var, 0);
  auto c = [&](long k) { return SPoly(var, Scalar(k)); };
  SPoly g(var);
  for (std::size_t i = 1; i < b.size(); ++i) {
    long I = static_cast<long>(i);
    SPoly q = b[i - 1] * ((v + Scalar(I)) * (v + Scalar(I + 1))) - b[i] * ((v + Scalar(I + 1)) * (v + Scalar(I + 2))) + c(6);
    g = g.is_zero() ? q : ugcd(g, q);
  }
  if (g.is_zero() || g.is_constant()) return {};
  return field_roots(g).roots;
}

}  // namespace detail

// Every component (with recovered parameters) whose closed form equals b.
// Length 6 checks the 8-dim list M, length 7 the 9-dim list tM.
inline std::vector<FamilyLabel> component_membership(const std::vector<Scalar>& b) {
  if (b.size() != 6 && b.size() != 7) throw Error("BadParams", "variety points have 6 or 7 entries");
  const bool nine = b.size() == 7;
  std::vector<FamilyLabel> out;
  auto consider = [&](const FamilyLabel& L) {
    if (detail::matches(L, b)) out.push_back(L);
  };
  std::vector<Scalar> vs;
  try {
    vs = detail::m1_v_candidates(b);
  } catch (const Error&) {
  }
  for (const Scalar& v : vs) {
    try {
      Scalar u = b[0] * (v + Scalar(1)) * (v + Scalar(2)) / Scalar(6) - Scalar(1);
      consider(detail::comp(nine, "1", {{"u", u}, {"v", v}}));
    } catch (const Error&) {
    }
  }
  if (!b[0].is_zero()) consider(detail::comp(nine, "1_0", {{"v", Scalar(6) / b[0] - Scalar(1)}}));
  if (nine)
    consider(detail::comp(true, "2", {{"y", b[3]}}));
  else
    consider(detail::comp(false, "2", {{"x", b[1]}, {"y", b[2]}}));
  consider(detail::comp(nine, "3", {{"t", b[0]}}));
  if (!nine)
    for (const char* id : {"4+", "4-"}) {
      try {
        Scalar r = id[1] == '+' ? Scalar::sqrt_of(19) : -Scalar::sqrt_of(19);
        consider(detail::comp(false, id, {{"t", b[4] - Scalar::frac(2, 5) - Scalar::frac(1, 5) * r}}));
      } catch (const Error&) {
      }
    }
  consider(detail::comp(nine, "5+", {{"t", b[0]}}));
  consider(detail::comp(nine, "5-", {{"t", b.back()}}));
  consider(detail::comp(nine, "6+", {{"t", b[0]}}));
  consider(detail::comp(nine, "6-", {{"t", -b.back()}}));
  return out;
}

// M2 point for given (x, y); BadDomain on y in {9/5, -7/5} or 2x - y + 1 = 0.
inline std::vector<Scalar> m2_branch_solutions(const Scalar& x, const Scalar& y) {
  return component_b_vector(FamilyLabel{"M", "2", {{"x", x}, {"y", y}}});
}

struct EliminantReport {
  MultiPoly eliminant;  // in (x, y, z)
  MultiPoly factor;     // the linear factor z - y + 2/5
  Rational constant;    // eliminant = constant * factor * F
  bool identity = false;
  int degree = 0;
  bool printed_factor_divides = false;  // does z - y - 2/5 divide it?
};

inline bool eliminant_matches(const MultiPoly& eliminant, const MultiPoly& factor, const MultiPoly& F,
                              Rational* constant = nullptr) {
  auto [q, r] = eliminant.divmod(factor);
  if (!r.is_zero() || q.is_zero() || F.is_zero()) return false;
  if (q.leading_exponent() != F.leading_exponent()) return false;
  Rational c = q.leading_coeff() / F.leading_coeff();
  if (!(q == c * F)) return false;
  if (constant) *constant = c;
  return true;
}

// Solves b1, b5, b6 from the three R5 equations, substitutes into R7_1 and
// clears the denominators (2z-y-1)(2x-y+1)(2y-z+1).
inline EliminantReport eliminant_identity() {
  const std::vector<std::string> V{"x", "y", "z", "b1", "b5", "b6"};
  std::vector<MultiPoly> b{MultiPoly::var(V, 3), MultiPoly::var(V, 0), MultiPoly::var(V, 1),
                           MultiPoly::var(V, 2), MultiPoly::var(V, 4), MultiPoly::var(V, 5)};
  MultiPoly e1 = r5_form<Rational>(&b[0]), e2 = r5_form<Rational>(&b[1]), e3 = r5_form<Rational>(&b[2]);
  MultiPoly e4 = r7_form<Rational>(&b[0]);
  // e1 = c1 b1 + d1, e2 = c2 b5 + d2, e3 = c3 b6 + g3 b5 + d3 with c, d, g free of b's.
  auto c1 = e1.coefficients_in(3), c2 = e2.coefficients_in(4);
  auto c3b6 = e3.coefficients_in(5);
  auto c3b5 = c3b6[0].coefficients_in(4);
  MultiPoly C1 = c1[1], N1 = -c1[0], C2 = c2[1], N2 = -c2[0];
  MultiPoly C3 = c3b6[1], N3 = -(c3b5[1] * N2 + c3b5[0] * C2);  // b6 = N3 / (C2 C3)
  MultiPoly P(V);
  for (const auto& [e, c] : e4.terms()) {
    int a = e[3], bb = e[4], cc = e[5];
    if (a > 1 || bb + cc > 1) throw Error("BadParams", "unexpected monomial in the R7 equation");
    Exponent xe = e;
    xe[3] = xe[4] = xe[5] = 0;
    MultiPoly term(V);
    term.add_term(xe, c);
    if (a) term *= N1; else term *= C1;
    if (bb) term *= N2;
    if (cc) term *= N3;
    if (!cc) term *= C3;
    if (!bb && !cc) term *= C2;
    P += term;
  }
  // Drop the b variables, which no longer occur.
  const std::vector<std::string> xyz{"x", "y", "z"};
  MultiPoly E(xyz);
  for (const auto& [e, c] : P.terms()) E.add_term(Exponent{e[0], e[1], e[2]}, c);
  EliminantReport rep{E, MultiPoly::var(xyz, 2) - MultiPoly::var(xyz, 1) + Rational(2, 5), Rational(0), false,
                      E.total_degree(), false};
  rep.identity = eliminant_matches(E, rep.factor, F_poly(), &rep.constant);
  MultiPoly printed = MultiPoly::var(xyz, 2) - MultiPoly::var(xyz, 1) - Rational(2, 5);
  rep.printed_factor_divides = E.divmod(printed).second.is_zero();
  return rep;
}

}  // namespace gtm
