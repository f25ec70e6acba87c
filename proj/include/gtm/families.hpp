#pragma once
// Named module families: labels, constructors from action formulas, the
// closed-form b-vectors of the classification tables, and dual labels.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gtm/modulecore.hpp"

namespace gtm {

struct FamilyLabel {
  std::string tag;      // Vlm, C, Vdef, TildeV, Rk, RkDual, TildeVgr, M, tM
  std::string variant;  // Vdef/TildeV base (e.g. "Vlm(-2,-3)"), M/tM component ("4+", "1_0")
  std::vector<std::pair<std::string, Scalar>> params;

  bool has(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return true;
    return false;
  }
  const Scalar& param(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw Error("BadParams", tag + " needs parameter '" + key + "'");
  }
  int int_param(const std::string& key) const {
    const Scalar& s = param(key);
    if (!s.is_rational() || !s.a().is_integer()) throw Error("BadParams", key + " must be an integer");
    return static_cast<int>(s.a().num().get_si());
  }

  std::string str() const {
    std::string out = tag + "(";
    bool first = true;
    auto sep = [&] {
      if (!first) out += ",";
      first = false;
    };
    if (tag == "Vdef" || tag == "TildeV") {
      sep();
      out += "base=" + variant;
    } else if (tag == "M" || tag == "tM") {
      sep();
      std::string id = variant;
      char sign = 0;
      if (!id.empty() && (id.back() == '+' || id.back() == '-')) {
        sign = id.back();
        id.pop_back();
      }
      out += id;
      if (sign) {
        out += ",";
        out += sign;
      }
    }
    for (const auto& [k, v] : params) {
      sep();
      out += k + "=" + v.str();
    }
    return out + ")";
  }

  friend bool operator==(const FamilyLabel& a, const FamilyLabel& b) {
    return a.tag == b.tag && a.variant == b.variant && a.params == b.params;
  }

  static FamilyLabel parse(const std::string& text);
};

namespace detail {

inline std::string strip_spaces(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

inline std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

// Known deformation bases and the zero position they carry.
inline const std::vector<std::string>& vdef_bases() {
  static const std::vector<std::string> b{"Vlm(-2,-3)", "Vlm(1,3-n)", "Vlm(0,-1)", "Vlm(-1,-2-n)", "Vlm(-1,-k-2)", "Vlm(0,-k)"};
  return b;
}
inline const std::vector<std::string>& tilde_bases() {
  static const std::vector<std::string> b{"Vlm(0,-1)", "Vlm(-1,-2)", "Vlm(-2,-3)", "Vlm(-1,-2-n)", "Vlm(1,-n)"};
  return b;
}

}  // namespace detail

inline FamilyLabel FamilyLabel::parse(const std::string& raw) {
  std::string s = detail::strip_spaces(raw);
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw ParseError("family label must look like Name(...): '" + raw + "'");
  FamilyLabel L;
  L.tag = s.substr(0, open);
  auto items = detail::split_top(s.substr(open + 1, s.size() - open - 2));
  std::vector<std::string> positional;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) {
      positional.push_back(it);
      continue;
    }
    std::string key = it.substr(0, eq), val = it.substr(eq + 1);
    if (key == "base") {
      L.variant = val;
      continue;
    }
    L.params.emplace_back(key, Scalar::parse(val));
  }
  auto need = [&](std::initializer_list<const char*> keys) {
    std::vector<std::pair<std::string, Scalar>> ordered;
    for (const char* k : keys) ordered.emplace_back(k, L.param(k));
    if (ordered.size() != L.params.size()) throw ParseError("unexpected parameters in '" + raw + "'");
    L.params = std::move(ordered);
  };
  if (L.tag == "Vlm") {
    if (positional.size() == 2 && L.params.empty()) {
      L.params = {{"lambda", Scalar::parse(positional[0])}, {"mu", Scalar::parse(positional[1])}};
      positional.clear();
    }
    need({"lambda", "mu"});
  } else if (L.tag == "C") {
    need({"x"});
  } else if (L.tag == "Vdef") {
    const auto& bases = detail::vdef_bases();
    if (std::find(bases.begin(), bases.end(), L.variant) == bases.end()) throw ParseError("unknown deformation base '" + L.variant + "'");
    if (L.variant == "Vlm(-1,-k-2)" || L.variant == "Vlm(0,-k)") need({"k", "t"});
    else need({"t"});
  } else if (L.tag == "TildeV") {
    const auto& bases = detail::tilde_bases();
    if (std::find(bases.begin(), bases.end(), L.variant) == bases.end()) throw ParseError("unknown tilde base '" + L.variant + "'");
    need({});
  } else if (L.tag == "Rk" || L.tag == "RkDual" || L.tag == "TildeVgr") {
    need({"k"});
  } else if (L.tag == "M" || L.tag == "tM") {
    if (positional.empty() || positional.size() > 2) throw ParseError("component id expected in '" + raw + "'");
    L.variant = positional[0];
    if (positional.size() == 2) {
      if (positional[1] != "+" && positional[1] != "-") throw ParseError("sign must be + or -");
      L.variant += positional[1];
    }
    positional.clear();
    const std::string& v = L.variant;
    if (v == "1") need({"u", "v"});
    else if (v == "1_0") need({"v"});
    else if (v == "2" && L.tag == "M") need({"x", "y"});
    else if (v == "2") need({"y"});
    else if (v == "3" || v == "4+" || v == "4-" || v == "5+" || v == "5-" || v == "6+" || v == "6-") need({"t"});
    else throw ParseError("unknown component '" + v + "'");
    if (L.tag == "tM" && (v == "4+" || v == "4-")) throw ParseError("component 4 has no 9-dimensional version");
  } else {
    throw ParseError("unknown family '" + L.tag + "'");
  }
  if (!positional.empty()) throw ParseError("unexpected positional argument in '" + raw + "'");
  return L;
}

// ---- construction helpers ----

using ActionFormula = std::function<Scalar(int i, int j)>;

// Standard-basis table e_i f_j = formula(i, j) f_{i+j}.
inline ActionTable formula_table(int N, const ActionFormula& e) {
  ActionTable t(N, Convention::Standard);
  for (int i = 1; i < N; ++i)
    for (int j = 1; i + j <= N; ++j) t.at(i, j) = e(i, j);
  return t;
}

inline DefiningSet from_formula(int N, const ActionFormula& e) {
  std::vector<Scalar> a, b;
  for (int j = 1; j < N; ++j) a.push_back(e(1, j));
  for (int j = 1; j + 2 <= N; ++j) b.push_back(e(2, j));
  return DefiningSet(N, Convention::Standard, std::move(a), std::move(b));
}

// Tensor densities: e_k f_j = (j + mu - lambda(k+1)) f_{j+k}.
inline ActionFormula vlm_formula(const Scalar& lambda, const Scalar& mu) {
  return [=](int k, int j) { return Scalar(j) + mu - lambda * Scalar(k + 1); };
}

inline DefiningSet raw_vlm(const Scalar& lambda, const Scalar& mu, int N) { return from_formula(N, vlm_formula(lambda, mu)); }

// Deformations of V_{-1,-k-2}; t is the table parameter (b_{k+1} = t), so the
// action formula e_i f_{k+1} = i(s(i-1) - i + 2) runs with s = t/6.
inline ActionFormula vdef_m1_formula(int k, const Scalar& t) {
  Scalar s = t / Scalar(6);
  return [=](int i, int j) {
    if (j == k + 1) return Scalar(i) * (s * Scalar(i - 1) - Scalar(i) + Scalar(2));
    return Scalar(j + i - k - 1);
  };
}

inline ActionFormula tilde_formula(const std::string& base) {
  if (base == "Vlm(0,-1)") return [](int i, int j) { return j >= 2 ? Scalar(j - 1) : Scalar(i - 1); };
  if (base == "Vlm(-1,-2)") return [](int i, int j) { return j >= 2 ? Scalar(j + i - 1) : Scalar(i * (i - 1)); };
  if (base == "Vlm(-2,-3)") return [](int i, int j) { return j >= 2 ? Scalar(j + 2 * i - 1) : Scalar(i * i * i - i); };
  throw Error("BadParams", "no action formula for tilde base " + base);
}

// The infinite module V_gr restricted to f_1..f_N with e_1 f_k = e_1 f_{k+1} = 0.
inline ActionFormula vgr_formula(int k) {
  return [=](int i, int j) {
    if (j >= k + 1) return Scalar(j - k - 1);
    if (i + j <= k + 1) return Scalar(i + j - k - 1);
    return Scalar(1);
  };
}

namespace detail {

inline DefiningSet with_b(DefiningSet ds, int j, const Scalar& v) {
  ds.b.at(static_cast<std::size_t>(j - 1)) = v;
  return ds;
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw Error("BadParams", msg);
}

inline void require_dim(int N, int want, const std::string& who) {
  require(N == want, who + " is defined in dimension " + std::to_string(want));
}

}  // namespace detail

// Closed-form b-vectors of the 8- and 9-dimensional components.
// Closed forms of the 8/9-dim components over any field-like T built from
// Scalar; param(name) supplies the parameters. No domain checks.
template <class T, class Param>
std::vector<T> component_formula(const std::string& id, bool nine, Param param) {
  const int len = nine ? 7 : 6;
  auto F = [](long p, long q) { return T(Scalar::frac(p, q)); };
  auto K = [](long c) { return T(Scalar(c)); };
  std::vector<T> b;
  if (id == "1") {
    T u = param("u"), v = param("v");
    for (int i = 1; i <= len; ++i) b.push_back(K(6) * (u + K(i)) / ((v + K(i)) * (v + K(i + 1))));
  } else if (id == "1_0") {
    T v = param("v");
    for (int i = 1; i <= len; ++i) b.push_back(K(6) / (v + K(i)));
  } else if (id == "2" && !nine) {
    T x = param("x"), y = param("y");
    T d2 = K(2) * x - y + K(1);
    b.push_back((K(5) * x * y - K(17) * x + K(10) * y + K(2)) / (K(5) * y - K(9)));
    b.push_back(x);
    b.push_back(y);
    b.push_back(y - F(2, 5));
    b.push_back((K(5) * x * y + K(3) * x - K(6)) / (K(5) * d2));
    b.push_back((K(5) * x * y * y - K(2) * x * y - K(22) * y + K(10) * y * y + K(21) * x - K(12)) /
                (d2 * (K(5) * y + K(7))));
  } else if (id == "2") {
    T y = param("y");
    b.push_back((y - F(3, 5)) * (y + F(3, 5)) * (y - K(2)) / ((y - F(9, 5)) * (y - F(7, 5))));
    b.push_back((y - F(8, 5)) * (y + F(3, 5)) / (y - F(9, 5)));
    b.push_back(y + F(2, 5));
    b.push_back(y);
    b.push_back(y - F(2, 5));
    b.push_back((y + F(8, 5)) * (y - F(3, 5)) / (y + F(9, 5)));
    b.push_back((y - F(3, 5)) * (y + F(3, 5)) * (y + K(2)) / ((y + F(9, 5)) * (y + F(7, 5))));
  } else if (id == "3") {
    b.assign(static_cast<std::size_t>(len), param("t"));
  } else if (id == "4+" || id == "4-") {
    T t = param("t");
    T r(id == "4+" ? Scalar::sqrt_of(19) : -Scalar::sqrt_of(19));
    b = {K(12) + K(3) * r, F(-2, 5) + F(1, 5) * r, F(1, 5) + F(2, 5) * r, F(-1, 5) + F(2, 5) * r,
         F(2, 5) + F(1, 5) * r + t, K(-12) + K(3) * r + t * (F(4, 3) * r - F(13, 3))};
  } else if (id == "5-") {
    b = {F(-27, 28), F(-8, 7), F(-7, 5), F(-9, 5), F(-5, 2), param("t")};
    if (nine) b.insert(b.begin(), F(-5, 6));
  } else if (id == "5+") {
    b = {param("t"), F(5, 2), F(9, 5), F(7, 5), F(8, 7), F(27, 28)};
    if (nine) b.push_back(F(5, 6));
  } else if (id == "6+") {
    b = {param("t")};
    for (int i = 2; i <= len; ++i) b.push_back(F(6, i));
  } else if (id == "6-") {
    for (int i = len; i >= 2; --i) b.push_back(F(-6, i));
    b.push_back(-param("t"));
  } else {
    throw Error("BadParams", "unknown component " + id);
  }
  return b;
}

// b_1..b_6 (M) or b_1..b_7 (tM) of a component point, with domain checks.
inline std::vector<Scalar> component_b_vector(const FamilyLabel& L) {
  const bool nine = L.tag == "tM";
  const int len = nine ? 7 : 6;
  const std::string& id = L.variant;
  auto F = [](long p, long q) { return Scalar::frac(p, q); };
  if (id == "1") {
    Scalar u = L.param("u"), v = L.param("v");
    detail::require(u != v && u != v + Scalar(1), "M1 needs u != v, v+1");
    for (int i = 1; i <= len + 1; ++i) detail::require(v != Scalar(-i), "M1 needs v outside -1..-" + std::to_string(len + 1));
  } else if (id == "1_0") {
    Scalar v = L.param("v");
    for (int i = 1; i <= len; ++i) detail::require(v != Scalar(-i), "M1_0 needs v outside -1..-" + std::to_string(len));
  } else if (id == "2" && !nine) {
    Scalar x = L.param("x"), y = L.param("y");
    if ((Scalar(5) * y - Scalar(9)).is_zero() || (Scalar(2) * x - y + Scalar(1)).is_zero() ||
        (Scalar(5) * y + Scalar(7)).is_zero())
      throw Error("BadDomain", "M2 needs y != 9/5, -7/5 and 2x-y+1 != 0");
  } else if (id == "2") {
    Scalar y = L.param("y");
    for (const Scalar& bad : {F(9, 5), F(7, 5), F(-9, 5), F(-7, 5)})
      if (y == bad) throw Error("BadDomain", "tM2 needs y outside {+-9/5, +-7/5}");
  } else if (nine && (id == "4+" || id == "4-")) {
    throw Error("BadParams", "unknown component " + id);
  }
  return component_formula<Scalar>(id, nine, [&](const std::string& k) { return L.param(k); });
}

DefiningSet make_family(const FamilyLabel& L, int N);

// f_1..f_N of V_gr with the gluing coefficient that keeps it indecomposable:
// e_2 f_{k-1} = 1 for k >= 2 (table R_k); for k = 1, e_2 f_2 = 1.
inline DefiningSet make_tilde_vgr_truncation(int k, int N) {
  const int n = N - 1;
  detail::require(k >= 1 && k <= n - 1, "TildeVgr needs 1 <= k <= n-1");
  detail::require(N >= 4, "TildeVgr needs dimension >= 4");
  DefiningSet raw = from_formula(N, vgr_formula(k));
  std::map<int, Scalar> targets;
  if (k >= 2) {
    raw = detail::with_b(raw, k - 1, Scalar(1));
    targets = {{k - 1, Scalar(1)}, {k, Scalar(1)}};
  } else {
    raw = detail::with_b(raw, 2, Scalar(1));
    targets = {{1, Scalar(1)}, {2, Scalar(1)}};
  }
  return normalize(raw, targets).ds;
}

inline DefiningSet normalized_dual(const DefiningSet& ds, const std::map<int, Scalar>& targets) {
  return normalize(dualize(ds), targets).ds;
}

inline DefiningSet make_family(const FamilyLabel& L, int N) {
  detail::require(N >= 2, "dimension must be at least 2");
  const int n = N - 1;
  if (L.tag == "Vlm") {
    Scalar lambda = L.param("lambda"), mu = L.param("mu");
    DefiningSet raw = raw_vlm(lambda, mu, N);
    ZeroPattern p = detect_pattern(raw.alpha);
    std::map<int, Scalar> targets;
    if (p.kind == PatternKind::TypeB) {
      int k = p.k;
      if (k <= n - 1 && !lambda.is_zero()) targets[k] = Scalar(-6) * lambda;
      else if (k >= 2 && lambda != Scalar(-1)) targets[k - 1] = Scalar(6) * (lambda + Scalar(1));
    }
    return normalize(raw, targets).ds;
  }
  if (L.tag == "C") {
    Scalar x = L.param("x");
    DefiningSet ds = from_formula(N, [&](int i, int) { return i == 1 ? Scalar(1) : i == 2 ? x / Scalar(6) : Scalar(0); });
    return normalize(ds).ds;
  }
  if (L.tag == "Vdef") {
    const std::string& base = L.variant;
    Scalar t = L.param("t");
    if (base == "Vlm(-2,-3)" || base == "Vlm(0,-1)") {
      detail::require(N >= 3, "deformed families need dimension >= 3");
      // V_{0,-1} in the TypeA list is the zero-free module with b_i = 6/i, i.e. the raw V_{-1,-2}.
      DefiningSet ds = base == "Vlm(-2,-3)" ? normalize(raw_vlm(Scalar(-2), Scalar(-3), N)).ds
                                            : normalize(raw_vlm(Scalar(-1), Scalar(-2), N)).ds;
      return detail::with_b(ds, 1, t);
    }
    if (base == "Vlm(1,3-n)" || base == "Vlm(-1,-2-n)") {
      FamilyLabel src{"Vdef", base == "Vlm(1,3-n)" ? "Vlm(-2,-3)" : "Vlm(0,-1)", {{"t", t}}};
      return normalized_dual(make_family(src, N), {});
    }
    int k = L.int_param("k");
    if (base == "Vlm(-1,-k-2)") {
      detail::require(k >= 1 && k <= n - 2, "V_{-1,-k-2}^t needs 1 <= k <= n-2");
      return normalize(from_formula(N, vdef_m1_formula(k, t)), {{k, Scalar(6)}}).ds;
    }
    // V_{0,-k}^t = (V_{-1,-k'-2}^{-t})^*, k' = n+1-k.
    detail::require(k >= 3 && k <= n, "V_{0,-k}^t needs 3 <= k <= n");
    FamilyLabel src{"Vdef", "Vlm(-1,-k-2)", {{"k", Scalar(n + 1 - k)}, {"t", -t}}};
    return normalized_dual(make_family(src, N), {{k - 1, Scalar(-6)}});
  }
  if (L.tag == "TildeV") {
    const std::string& base = L.variant;
    detail::require(N >= 4, "tilde modules need dimension >= 4");
    if (base == "Vlm(-1,-2-n)") return normalized_dual(make_family(FamilyLabel{"TildeV", "Vlm(0,-1)", {}}, N), {{n - 1, Scalar(-6)}});
    if (base == "Vlm(1,-n)") return normalized_dual(make_family(FamilyLabel{"TildeV", "Vlm(-2,-3)", {}}, N), {{n - 1, Scalar(-6)}});
    return normalize(from_formula(N, tilde_formula(base)), {{1, Scalar(6)}}).ds;
  }
  if (L.tag == "Rk" || L.tag == "RkDual") {
    int k = L.int_param("k");
    detail::require(k >= 2 && k <= n - 1, L.tag + " needs 2 <= k <= n-1");
    std::vector<Scalar> b;
    for (int j = 1; j <= n - 1; ++j) {
      if (j <= k - 2) b.push_back(Scalar(-6) / Scalar(k - j));
      else if (j == k - 1 || j == k) b.push_back(Scalar(1));
      else if (j == k + 1) b.push_back(Scalar(0));
      else b.push_back(Scalar(6) / Scalar(j - k));
    }
    DefiningSet rk = tilde_set(N, {k, k + 1}, b);
    if (L.tag == "Rk") return rk;
    int z = n - k;  // zeros of the dual at n-k, n-k+1
    return normalized_dual(rk, {{z, Scalar(1)}, {z + 1, Scalar(1)}});
  }
  if (L.tag == "TildeVgr") return make_tilde_vgr_truncation(L.int_param("k"), N);
  if (L.tag == "M" || L.tag == "tM") {
    detail::require_dim(N, L.tag == "M" ? 8 : 9, L.str());
    return tilde_set(N, {}, component_b_vector(L));
  }
  throw Error("BadParams", "unknown family " + L.tag);
}

inline std::vector<Scalar> family_b_vector(const FamilyLabel& L, int N) { return make_family(L, N).b; }

// Closed-form table rows (tilde b-vectors), written independently of the
// action formulas so the two sources can be compared.
inline std::vector<Scalar> table_b_vector(const FamilyLabel& L, int N) {
  const int n = N - 1;
  std::vector<Scalar> b;
  auto each = [&](const std::function<Scalar(int)>& f) {
    for (int j = 1; j <= n - 1; ++j) b.push_back(f(j));
    return b;
  };
  auto S = [](long v) { return Scalar(v); };
  if (L.tag == "Vlm") {
    Scalar lambda = L.param("lambda"), mu = L.param("mu");
    Scalar u = mu - Scalar(3) * lambda, v = mu - Scalar(2) * lambda;
    int k = 0;
    for (int j = 1; j <= n; ++j)
      if (v + Scalar(j) == Scalar(0)) k = j;
    return each([&](int j) {
      if (k && j == k - 1) return Scalar(6) * (lambda + Scalar(1));
      if (k && j == k) return Scalar(-6) * lambda;
      return Scalar(6) * (u + S(j)) / ((v + S(j)) * (v + S(j + 1)));
    });
  }
  if (L.tag == "C") return each([&](int) { return L.param("x"); });
  if (L.tag == "Vdef") {
    const std::string& base = L.variant;
    Scalar t = L.param("t");
    if (base == "Vlm(-2,-3)") return each([&](int j) { return j == 1 ? t : Scalar(6 * (j + 3)) / S((j + 1) * (j + 2)); });
    if (base == "Vlm(1,3-n)")
      return each([&](int j) { return j == n - 1 ? -t : Scalar(-6 * (n - j + 3)) / S((n - j + 1) * (n - j + 2)); });
    if (base == "Vlm(0,-1)") return each([&](int j) { return j == 1 ? t : Scalar(6) / S(j); });
    if (base == "Vlm(-1,-2-n)") return each([&](int j) { return j == n - 1 ? -t : Scalar(-6) / S(n - j); });
    int k = L.int_param("k");
    if (base == "Vlm(-1,-k-2)")
      return each([&](int j) {
        if (j == k - 1) return Scalar(0);
        if (j == k) return Scalar(6);
        if (j == k + 1) return t;
        return j > k ? Scalar(6) / S(j - k) : Scalar(-6) / S(k - j);
      });
    return each([&](int j) {
      if (j == k - 2) return t;
      if (j == k - 1) return Scalar(-6);
      if (j == k) return Scalar(0);
      return j > k ? Scalar(6) / S(j - k + 1) : Scalar(-6) / S(k - 1 - j);
    });
  }
  if (L.tag == "TildeV") {
    const std::string& base = L.variant;
    if (base == "Vlm(0,-1)" || base == "Vlm(-1,-2)") return each([&](int j) { return Scalar(6) / S(j); });
    if (base == "Vlm(-2,-3)") return each([&](int j) { return j == 1 ? Scalar(6) : Scalar(6 * (j + 3)) / S((j + 1) * (j + 2)); });
    if (base == "Vlm(-1,-2-n)") return each([&](int j) { return Scalar(-6) / S(n - j); });
    return each([&](int j) { return j == n - 1 ? Scalar(-6) : Scalar(-6 * (n - j + 3)) / S((n - j + 1) * (n - j + 2)); });
  }
  if (L.tag == "Rk" || L.tag == "RkDual") {
    int kk = L.int_param("k");
    bool dual = L.tag == "RkDual";
    int k = dual ? n - kk : kk;
    return each([&](int j) {
      if (j <= k - 2) return Scalar(-6) / S(k - j);
      if (j == k - 1) return dual ? Scalar(0) : Scalar(1);
      if (j == k) return Scalar(1);
      if (j == k + 1) return dual ? Scalar(1) : Scalar(0);
      return Scalar(6) / S(j - k);
    });
  }
  if (L.tag == "M" || L.tag == "tM") return component_b_vector(L);
  return make_family(L, N).b;
}

// The dual module's label as stated in the classification lists.
inline FamilyLabel dual_label(const FamilyLabel& L, int N) {
  const int n = N - 1;
  if (L.tag == "Vlm") {
    Scalar lambda = L.param("lambda"), mu = L.param("mu");
    return {"Vlm", "", {{"lambda", -lambda - Scalar(1)}, {"mu", -mu - Scalar(n + 3)}}};
  }
  if (L.tag == "C") return {"C", "", {{"x", -L.param("x")}}};
  if (L.tag == "Vdef") {
    const std::string& b = L.variant;
    Scalar t = L.param("t");
    if (b == "Vlm(-2,-3)") return {"Vdef", "Vlm(1,3-n)", {{"t", t}}};
    if (b == "Vlm(1,3-n)") return {"Vdef", "Vlm(-2,-3)", {{"t", t}}};
    if (b == "Vlm(0,-1)") return {"Vdef", "Vlm(-1,-2-n)", {{"t", t}}};
    if (b == "Vlm(-1,-2-n)") return {"Vdef", "Vlm(0,-1)", {{"t", t}}};
    Scalar k2(n + 1 - L.int_param("k"));
    if (b == "Vlm(-1,-k-2)") return {"Vdef", "Vlm(0,-k)", {{"k", k2}, {"t", -t}}};
    return {"Vdef", "Vlm(-1,-k-2)", {{"k", k2}, {"t", -t}}};
  }
  if (L.tag == "TildeV") {
    const std::string& b = L.variant;
    if (b == "Vlm(0,-1)" || b == "Vlm(-1,-2)") return {"TildeV", "Vlm(-1,-2-n)", {}};
    if (b == "Vlm(-1,-2-n)") return {"TildeV", "Vlm(0,-1)", {}};
    if (b == "Vlm(-2,-3)") return {"TildeV", "Vlm(1,-n)", {}};
    return {"TildeV", "Vlm(-2,-3)", {}};
  }
  if (L.tag == "Rk") return {"RkDual", "", L.params};
  if (L.tag == "RkDual") return {"Rk", "", L.params};
  if (L.tag == "TildeVgr") {
    int k = L.int_param("k");
    if (k >= 2) return {"RkDual", "", L.params};
    return {"Rk", "", {{"k", Scalar(n - 1)}}};
  }
  throw Error("BadParams", "no stated dual for " + L.str());
}

}  // namespace gtm
