#pragma once
// Defining sets of graded thread modules: normalization, duals,
// subquotients, decomposition and graded isomorphism.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "gtm/exactnum.hpp"
#include "gtm/witt.hpp"

namespace gtm {

// alpha_i: e_1 f_i = alpha_i f_{i+1}. In the standard convention the second
// list holds beta_j (e_2 f_j = beta_j f_{j+2}); in the tilde convention it holds
// B_j with e~_2 f_j = B_j f_{j+2}, so B_j = 6 beta_j.
struct DefiningSet {
  int n_plus_1 = 1;
  Convention convention = Convention::Tilde;
  std::vector<Scalar> alpha;
  std::vector<Scalar> b;

  DefiningSet() = default;
  DefiningSet(int N, Convention c, std::vector<Scalar> a, std::vector<Scalar> bb)
      : n_plus_1(N), convention(c), alpha(std::move(a)), b(std::move(bb)) {
    validate();
  }

  void validate() const {
    if (n_plus_1 < 1) throw Error("BadParams", "dimension must be positive");
    if (static_cast<int>(alpha.size()) != n_plus_1 - 1 || static_cast<int>(b.size()) != std::max(n_plus_1 - 2, 0))
      throw Error("BadParams", "defining set lengths do not match dimension " + std::to_string(n_plus_1));
  }

  int n() const { return n_plus_1 - 1; }
  const Scalar& a(int i) const { return alpha.at(static_cast<std::size_t>(i - 1)); }
  const Scalar& bj(int j) const { return b.at(static_cast<std::size_t>(j - 1)); }

  long field_d() const {
    std::vector<Scalar> all = alpha;
    all.insert(all.end(), b.begin(), b.end());
    return common_field(all);
  }

  bool is_normalized() const {
    if (convention != Convention::Tilde) return false;
    for (const auto& x : alpha)
      if (!(x.is_zero() || x == Scalar(1))) return false;
    return true;
  }

  DefiningSet to_tilde() const {
    if (convention == Convention::Tilde) return *this;
    DefiningSet r = *this;
    r.convention = Convention::Tilde;
    for (auto& x : r.b) x *= Scalar(6);
    return r;
  }
  DefiningSet to_standard() const {
    if (convention == Convention::Standard) return *this;
    DefiningSet r = *this;
    r.convention = Convention::Standard;
    for (auto& x : r.b) x /= Scalar(6);
    return r;
  }

  ActionTable action() const {
    DefiningSet t = to_tilde();
    return generate_action(t.alpha, t.b);
  }

  friend bool operator==(const DefiningSet& x, const DefiningSet& y) {
    return x.n_plus_1 == y.n_plus_1 && x.convention == y.convention && x.alpha == y.alpha && x.b == y.b;
  }
};

// Builds a tilde-convention set from a b-vector with alpha given by a zero list.
inline DefiningSet tilde_set(int N, const std::vector<int>& alpha_zeros, std::vector<Scalar> b) {
  std::vector<Scalar> alpha(static_cast<std::size_t>(N - 1), Scalar(1));
  for (int k : alpha_zeros) alpha.at(static_cast<std::size_t>(k - 1)) = Scalar(0);
  return DefiningSet(N, Convention::Tilde, std::move(alpha), std::move(b));
}

enum class PatternKind { TypeA, TypeB, TypeC, Degenerate };

inline const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::TypeA: return "typeA";
    case PatternKind::TypeB: return "typeB";
    case PatternKind::TypeC: return "typeC";
    default: return "degenerate";
  }
}

struct ZeroPattern {
  PatternKind kind = PatternKind::TypeA;
  int k = 0;               // first zero (TypeB/TypeC)
  std::vector<int> zeros;  // all zero positions of alpha
};

inline ZeroPattern detect_pattern(const std::vector<Scalar>& alpha) {
  ZeroPattern p;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i].is_zero()) p.zeros.push_back(static_cast<int>(i) + 1);
  if (p.zeros.empty()) p.kind = PatternKind::TypeA;
  else if (p.zeros.size() == 1) p.kind = PatternKind::TypeB;
  else if (p.zeros.size() == 2 && p.zeros[1] == p.zeros[0] + 1) p.kind = PatternKind::TypeC;
  else p.kind = PatternKind::Degenerate;
  if (!p.zeros.empty()) p.k = p.zeros.front();
  return p;
}

struct Normalized {
  DefiningSet ds;              // tilde convention, alpha in {0,1}
  std::vector<Scalar> gamma;   // gamma_1..gamma_N applied to the input
  std::vector<int> free_blocks;  // basis index starting each block whose scale was left free
};

// Rescaled set: alpha'_i = alpha_i g_i / g_{i+1}, B'_j = B_j g_j / g_{j+2}.
inline DefiningSet apply_rescaling(const DefiningSet& ds, const std::vector<Scalar>& g) {
  DefiningSet t = ds.to_tilde();
  if (static_cast<int>(g.size()) != t.n_plus_1) throw Error("BadParams", "rescaling length mismatch");
  for (int i = 1; i < t.n_plus_1; ++i) t.alpha[static_cast<std::size_t>(i - 1)] *= g[static_cast<std::size_t>(i - 1)] / g[static_cast<std::size_t>(i)];
  for (int j = 1; j + 2 <= t.n_plus_1; ++j) t.b[static_cast<std::size_t>(j - 1)] *= g[static_cast<std::size_t>(j - 1)] / g[static_cast<std::size_t>(j + 1)];
  return t;
}

// Basis index (1-based) of the first vector of the block containing f_i.
inline std::vector<int> block_starts(const std::vector<Scalar>& alpha) {
  int N = static_cast<int>(alpha.size()) + 1;
  std::vector<int> start(static_cast<std::size_t>(N + 1), 1);
  for (int i = 2; i <= N; ++i)
    start[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i - 2)].is_zero() ? i : start[static_cast<std::size_t>(i - 1)];
  return start;
}

// Makes every nonzero alpha equal to 1. Block seeds default to 1; `targets`
// (j -> value) fixes cross-block b_j where the ratio of block seeds is still free.
inline Normalized normalize(const DefiningSet& input, const std::map<int, Scalar>& targets = {}) {
  DefiningSet ds = input.to_tilde();
  int N = ds.n_plus_1;
  auto start = block_starts(ds.alpha);
  // offset[i] = gamma_i / seed(block of i)
  std::vector<Scalar> offset(static_cast<std::size_t>(N + 1), Scalar(1));
  for (int i = 2; i <= N; ++i)
    if (start[static_cast<std::size_t>(i)] != i) offset[static_cast<std::size_t>(i)] = offset[static_cast<std::size_t>(i - 1)] * ds.a(i - 1);
  std::map<int, Scalar> seed;
  seed[1] = Scalar(1);
  for (const auto& [j, val] : targets) {
    if (j < 1 || j + 2 > N) continue;
    int p = start[static_cast<std::size_t>(j)], q = start[static_cast<std::size_t>(j + 2)];
    if (p == q || ds.bj(j).is_zero() || val.is_zero()) continue;
    // val = B_j * seed_p * off_j / (seed_q * off_{j+2})
    Scalar ratio = ds.bj(j) * offset[static_cast<std::size_t>(j)] / (val * offset[static_cast<std::size_t>(j + 2)]);
    bool hp = seed.count(p) != 0, hq = seed.count(q) != 0;
    if (hp && !hq) seed[q] = seed[p] * ratio;
    else if (!hp && hq) seed[p] = seed[q] / ratio;
  }
  Normalized out;
  for (int s = 2; s <= N; ++s)
    if (start[static_cast<std::size_t>(s)] == s && seed.count(s) == 0) {
      out.free_blocks.push_back(s);
      seed[s] = Scalar(1);
    }
  for (int i = 1; i <= N; ++i) out.gamma.push_back(seed[start[static_cast<std::size_t>(i)]] * offset[static_cast<std::size_t>(i)]);
  out.ds = apply_rescaling(ds, out.gamma);
  return out;
}

inline DefiningSet dualize(const DefiningSet& ds) {
  DefiningSet r = ds;
  int n = ds.n();
  for (int j = 1; j <= n; ++j) r.alpha[static_cast<std::size_t>(j - 1)] = -ds.a(n + 1 - j);
  for (int j = 1; j <= n - 1; ++j) r.b[static_cast<std::size_t>(j - 1)] = -ds.bj(n - j);
  return r;
}

inline DefiningSet subquotient(const DefiningSet& ds, int lo, int hi) {
  if (lo < 1 || hi > ds.n_plus_1 || lo > hi)
    throw Error("BadWindow", "window [" + std::to_string(lo) + "," + std::to_string(hi) + "] outside 1.." + std::to_string(ds.n_plus_1));
  std::vector<Scalar> a(ds.alpha.begin() + (lo - 1), ds.alpha.begin() + (hi - 1));
  std::vector<Scalar> bb;
  for (int j = lo; j + 2 <= hi; ++j) bb.push_back(ds.bj(j));
  return DefiningSet(hi - lo + 1, ds.convention, std::move(a), std::move(bb));
}

struct Split {
  DefiningSet first, second;
  int m = 0;  // first summand is <f_1..f_m>
};

// Interval split <f_1..f_m> + <f_{m+1}..f_N>: alpha_m = 0 and the e_2 arrows
// crossing the cut (from f_{m-1} and f_m) vanish.
inline std::optional<Split> decompose(const DefiningSet& ds) {
  int N = ds.n_plus_1;
  for (int m = 1; m < N; ++m) {
    if (!ds.a(m).is_zero()) continue;
    if (m >= 2 && m + 1 <= N && !ds.bj(m - 1).is_zero()) continue;
    if (m + 2 <= N && !ds.bj(m).is_zero()) continue;
    return Split{subquotient(ds, 1, m), subquotient(ds, m + 1, N), m};
  }
  return std::nullopt;
}

// Connected components of the basis under all nonzero actions e_i f_j.
inline std::vector<std::vector<int>> action_components(const ActionTable& t) {
  int N = t.n_plus_1();
  std::vector<int> parent(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int i = 1; i < N; ++i)
    for (int j = 1; i + j <= N; ++j)
      if (!t.at(i, j).is_zero()) parent[static_cast<std::size_t>(find(j))] = find(i + j);
  std::map<int, std::vector<int>> comps;
  for (int i = 1; i <= N; ++i) comps[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : comps) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_decomposable(const DefiningSet& ds) {
  return ds.n_plus_1 > 1 && action_components(ds.action()).size() > 1;
}

// Diagonal rescaling g with apply_rescaling(a, g) == b (tilde conventions), if any.
inline std::optional<std::vector<Scalar>> graded_isomorphic(const DefiningSet& a0, const DefiningSet& b0) {
  if (a0.n_plus_1 != b0.n_plus_1) return std::nullopt;
  DefiningSet a = a0.to_tilde(), b = b0.to_tilde();
  int N = a.n_plus_1;
  // Edge i -> k with g_k = g_i * w.
  std::vector<std::vector<std::pair<int, Scalar>>> adj(static_cast<std::size_t>(N + 1));
  for (int i = 1; i < N; ++i) {
    bool za = a.a(i).is_zero(), zb = b.a(i).is_zero();
    if (za != zb) return std::nullopt;
    if (za) continue;
    Scalar w = a.a(i) / b.a(i);
    adj[static_cast<std::size_t>(i)].push_back({i + 1, w});
    adj[static_cast<std::size_t>(i + 1)].push_back({i, w.inverse()});
  }
  for (int j = 1; j + 2 <= N; ++j) {
    bool za = a.bj(j).is_zero(), zb = b.bj(j).is_zero();
    if (za != zb) return std::nullopt;
    if (za) continue;
    Scalar w = a.bj(j) / b.bj(j);
    adj[static_cast<std::size_t>(j)].push_back({j + 2, w});
    adj[static_cast<std::size_t>(j + 2)].push_back({j, w.inverse()});
  }
  std::vector<std::optional<Scalar>> g(static_cast<std::size_t>(N + 1));
  for (int s = 1; s <= N; ++s) {
    if (g[static_cast<std::size_t>(s)]) continue;
    g[static_cast<std::size_t>(s)] = Scalar(1);
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const auto& [y, w] : adj[static_cast<std::size_t>(x)]) {
        Scalar val = *g[static_cast<std::size_t>(x)] * w;
        if (!g[static_cast<std::size_t>(y)]) {
          g[static_cast<std::size_t>(y)] = val;
          q.push(y);
        } else if (*g[static_cast<std::size_t>(y)] != val) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Scalar> out;
  for (int i = 1; i <= N; ++i) out.push_back(*g[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace gtm
