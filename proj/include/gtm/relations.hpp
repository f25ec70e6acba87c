#pragma once
// The two defining relations in b-coordinates, their zero-adapted forms,
// forced zeros from two separated alpha zeros, and one-step extensions.

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gtm/modulecore.hpp"
#include "gtm/poly.hpp"
#include "gtm/witt.hpp"

namespace gtm {

// R5 on b_m..b_{m+3} (b[0..3]); LHS - RHS. K is the coefficient type acting on T.
template <class K = Scalar, class T>
T r5_form(const T* b) {
  const K three(3L);
  return b[3] * (b[0] - b[1]) - b[0] * (b[2] - b[3]) - (b[0] - three * b[1] + three * b[2] - b[3]);
}

// R7 on b_m..b_{m+5} (b[0..5]).
template <class K = Scalar, class T>
T r7_form(const T* b) {
  const K three(3L), five(5L), ten(10L), nine_tenths = K(9L) / K(10L);
  T lhs = b[5] * (b[0] - three * b[1] + three * b[2] - b[3]) - b[0] * (b[2] - three * b[3] + three * b[4] - b[5]);
  T rhs = b[0] - five * b[1] + ten * b[2] - ten * b[3] + five * b[4] - b[5];
  return lhs - nine_tenths * rhs;
}

// Residuals of both relations for a zero-free normalized b-vector.
inline ResidualReport r5_r7_residuals(const std::vector<Scalar>& b) {
  ResidualReport rep;
  const int L = static_cast<int>(b.size());
  for (int m = 1; m + 3 <= L; ++m) rep.entries.push_back({"R5", m, r5_form(&b[static_cast<std::size_t>(m - 1)])});
  for (int m = 1; m + 5 <= L; ++m)
    rep.entries.push_back({"R7", m, r7_form(&b[static_cast<std::size_t>(m - 1)])});
  return rep;
}

namespace detail {

// Variables: B_0..B_{w-1} then a_0..a_w (offsets from m), w = 4 or 6.
inline std::vector<std::string> cleared_vars(int w) {
  std::vector<std::string> v;
  for (int i = 0; i < w; ++i) v.push_back("B" + std::to_string(i));
  for (int i = 0; i <= w; ++i) v.push_back("a" + std::to_string(i));
  return v;
}

// Substitutes b_i = B_i / (a_i a_{i+1}) into the b-form relation and multiplies
// by a_0 ... a_w. Every monomial stays polynomial, so this is done termwise.
inline MultiPoly clear_denominators(const MultiPoly& bform, int w) {
  MultiPoly out(cleared_vars(w));
  for (const auto& [e, c] : bform.terms()) {
    Exponent x(static_cast<std::size_t>(2 * w + 1), 0);
    for (int i = 0; i <= w; ++i) x[static_cast<std::size_t>(w + i)] = 1;
    for (int i = 0; i < w; ++i) {
      x[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(w + i)] -= e[static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(w + i + 1)] -= e[static_cast<std::size_t>(i)];
    }
    for (int k = w; k <= 2 * w; ++k)
      if (x[static_cast<std::size_t>(k)] < 0) throw NotDivisible("b-form monomial does not clear");
    out.add_term(x, c);
  }
  return out;
}

}  // namespace detail

// Polynomial forms in (B, alpha) of the two relations; equal to the operator
// residuals ([e~2,e~3]-e~5) f_m and ([e~2,e~5]-9/10 e~7) f_m.
inline const MultiPoly& cleared_relation(int which) {
  auto build = [](int w) {
    std::vector<std::string> v;
    for (int i = 0; i < w; ++i) v.push_back("b" + std::to_string(i));
    std::vector<MultiPoly> b;
    for (std::size_t i = 0; i < v.size(); ++i) b.push_back(MultiPoly::var(v, i));
    return detail::clear_denominators(w == 4 ? r5_form<Rational>(b.data()) : r7_form<Rational>(b.data()), w);
  };
  static const MultiPoly r5 = build(4);
  static const MultiPoly r7 = build(6);
  return which == 5 ? r5 : r7;
}

// Zero-adapted systems: the cleared relations evaluated at the actual alpha
// values. On a zero alpha_k only the summands free of alpha_k survive, which is
// the rule "keep only summands b_k b_j or b_{k-1} b_l".
inline ResidualReport specialized_residuals(const std::vector<Scalar>& alpha, const std::vector<Scalar>& B) {
  ResidualReport rep;
  const int N = static_cast<int>(alpha.size()) + 1;
  auto run = [&](int which, const char* id) {
    const int w = which == 5 ? 4 : 6;
    const MultiPoly& p = cleared_relation(which);
    for (int m = 1; m + which <= N; ++m) {
      std::vector<Scalar> pt;
      for (int i = 0; i < w; ++i) pt.push_back(B[static_cast<std::size_t>(m - 1 + i)]);
      for (int i = 0; i <= w; ++i) pt.push_back(alpha[static_cast<std::size_t>(m - 1 + i)]);
      Scalar v(0);
      for (const auto& [e, c] : p.terms()) {
        Scalar t(c);
        for (std::size_t k = 0; k < e.size(); ++k)
          for (int r = 0; r < e[k]; ++r) t *= pt[k];
        v += t;
      }
      rep.entries.push_back({id, m, v});
    }
  };
  run(5, "sR5");
  run(7, "sR7");
  return rep;
}

inline ResidualReport specialized_residuals(const DefiningSet& ds) {
  DefiningSet t = ds.to_tilde();
  return specialized_residuals(t.alpha, t.b);
}

// Pattern form: alpha is 1 except at the pattern's zeros.
inline ResidualReport specialized_residuals(const ZeroPattern& pat, const std::vector<Scalar>& b) {
  std::vector<Scalar> alpha(b.size() + 1, Scalar(1));
  for (int z : pat.zeros) alpha.at(static_cast<std::size_t>(z - 1)) = Scalar(0);
  return specialized_residuals(alpha, b);
}

// Pairs (i, m) with e_i f_m = 0 forced by two alpha zeros k < k+p, p >= 2:
// every m <= k and m + i >= k + p + 1.
inline std::set<std::pair<int, int>> forced_zero_set(const std::vector<Scalar>& alpha) {
  const int N = static_cast<int>(alpha.size()) + 1;
  std::vector<int> zeros;
  for (int i = 1; i < N; ++i)
    if (alpha[static_cast<std::size_t>(i - 1)].is_zero()) zeros.push_back(i);
  std::set<std::pair<int, int>> out;
  for (std::size_t a = 0; a < zeros.size(); ++a)
    for (std::size_t c = a + 1; c < zeros.size(); ++c) {
      int k = zeros[a], kp = zeros[c];
      if (kp - k < 2) continue;
      for (int m = 1; m <= k; ++m)
        for (int i = kp + 1 - m; i + m <= N; ++i) out.insert({i, m});
    }
  return out;
}

enum class ExtensionKind { Unique, Free, Empty };

inline const char* to_string(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::Unique: return "unique";
    case ExtensionKind::Free: return "free";
    default: return "empty";
  }
}

struct Extension {
  ExtensionKind kind = ExtensionKind::Empty;
  std::optional<Scalar> value;  // the new b when unique
};

enum class Side { Right, Left };

// Tilde set one dimension larger, the new alpha equal to 1 and the new B given.
inline DefiningSet extended_with(const DefiningSet& ds, Side side, const Scalar& B_new) {
  DefiningSet t = ds.to_tilde();
  std::vector<Scalar> a = t.alpha, b = t.b;
  if (side == Side::Right) {
    a.push_back(Scalar(1));
    if (t.n_plus_1 >= 2) b.push_back(B_new);
  } else {
    a.insert(a.begin(), Scalar(1));
    if (t.n_plus_1 >= 2) b.insert(b.begin(), B_new);
  }
  return DefiningSet(t.n_plus_1 + 1, Convention::Tilde, std::move(a), std::move(b));
}

// All new B values that keep the residuals zero after adding one basis vector.
// The new residuals are affine in the new B, so sampling at 0 and 1 suffices.
inline Extension extend(const DefiningSet& ds, Side side) {
  if (ds.n_plus_1 < 2) return {ExtensionKind::Free, std::nullopt};
  auto new_residuals = [&](const Scalar& x) {
    DefiningSet e = extended_with(ds, side, x);
    ResidualReport r = benoist_residuals(e.action());
    const int N = e.n_plus_1;
    std::vector<Scalar> out;
    for (const auto& res : r.entries) {
      int top = res.index + (res.relation == "R5" ? 5 : 7);
      bool touches = side == Side::Right ? top == N : res.index == 1;
      if (touches) out.push_back(res.value);
    }
    return out;
  };
  auto r0 = new_residuals(Scalar(0)), r1 = new_residuals(Scalar(1));
  std::optional<Scalar> sol;
  for (std::size_t i = 0; i < r0.size(); ++i) {
    Scalar slope = r1[i] - r0[i];
    if (slope.is_zero()) {
      if (!r0[i].is_zero()) return {ExtensionKind::Empty, std::nullopt};
      continue;
    }
    Scalar x = -r0[i] / slope;
    if (sol && *sol != x) return {ExtensionKind::Empty, std::nullopt};
    sol = x;
  }
  if (!sol) return {ExtensionKind::Free, std::nullopt};
  return {ExtensionKind::Unique, sol};
}

inline Extension extend_right(const DefiningSet& ds) { return extend(ds, Side::Right); }
inline Extension extend_left(const DefiningSet& ds) { return extend(ds, Side::Left); }

}  // namespace gtm
