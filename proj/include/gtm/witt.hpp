#pragma once
// Witt algebra constants and the W+-action generated by e_1 and e_2.

#include <string>
#include <vector>

#include "gtm/exactnum.hpp"

namespace gtm {

enum class Convention { Standard, Tilde };

inline const char* to_string(Convention c) { return c == Convention::Standard ? "standard" : "tilde"; }

// [e_i, e_j] = (j - i) e_{i+j}
inline Scalar bracket_coeff(int i, int j) { return Scalar(static_cast<long>(j - i)); }

// e~_1 = e_1, e~_i = 6 (i-2)! e_i
inline Scalar tilde_coeff(int i) {
  if (i < 1) throw Error("BadParams", "tilde_coeff needs i >= 1");
  if (i == 1) return Scalar(1);
  Scalar f(6);
  for (int k = 2; k <= i - 2; ++k) f *= Scalar(static_cast<long>(k));
  return f;
}

// e_i f_j = coeff(i, j) f_{i+j}; only pairs with i + j <= N are stored.
class ActionTable {
 public:
  ActionTable() = default;
  ActionTable(int n_plus_1, Convention conv) : N_(n_plus_1), conv_(conv) {
    rows_.assign(static_cast<std::size_t>(N_), {});
    for (int i = 1; i < N_; ++i) rows_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(N_ - i), Scalar(0));
  }

  int n_plus_1() const { return N_; }
  Convention convention() const { return conv_; }

  const Scalar& at(int i, int j) const { return rows_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j - 1)); }
  Scalar& at(int i, int j) { return rows_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j - 1)); }
  // Zero outside the stored range.
  Scalar get(int i, int j) const {
    if (i < 1 || j < 1 || i + j > N_) return Scalar(0);
    return at(i, j);
  }

  ActionTable to(Convention target) const {
    if (target == conv_) return *this;
    ActionTable r(N_, target);
    for (int i = 1; i < N_; ++i) {
      Scalar k = tilde_coeff(i);
      for (int j = 1; i + j <= N_; ++j) r.at(i, j) = target == Convention::Tilde ? at(i, j) * k : at(i, j) / k;
    }
    return r;
  }

  friend bool operator==(const ActionTable& a, const ActionTable& b) {
    return a.N_ == b.N_ && a.conv_ == b.conv_ && a.rows_ == b.rows_;
  }

  // Checks e~_{i+1} = [e~_1, e~_i] on every stored pair.
  bool recursion_consistent() const {
    ActionTable t = to(Convention::Tilde);
    for (int i = 2; i + 1 < N_; ++i)
      for (int j = 1; i + 1 + j <= N_; ++j)
        if (t.at(i + 1, j) != t.at(i, j) * t.at(1, i + j) - t.at(1, j) * t.at(i, j + 1)) return false;
    return true;
  }

 private:
  int N_ = 0;
  Convention conv_ = Convention::Tilde;
  std::vector<std::vector<Scalar>> rows_;
};

// Rows 1 and 2 in the tilde basis (alpha, B) generate all rows by commutators.
inline ActionTable generate_action(const std::vector<Scalar>& alpha, const std::vector<Scalar>& B) {
  int N = static_cast<int>(alpha.size()) + 1;
  if (N < 1 || static_cast<int>(B.size()) != std::max(N - 2, 0))
    throw Error("BadParams", "alpha has length n and b has length n-1");
  ActionTable t(N, Convention::Tilde);
  for (int j = 1; j < N; ++j) t.at(1, j) = alpha[static_cast<std::size_t>(j - 1)];
  for (int j = 1; j + 2 <= N; ++j) t.at(2, j) = B[static_cast<std::size_t>(j - 1)];
  for (int i = 2; i + 1 < N; ++i)
    for (int j = 1; i + 1 + j <= N; ++j) t.at(i + 1, j) = t.at(i, j) * t.at(1, i + j) - t.at(1, j) * t.at(i, j + 1);
  return t;
}

struct Residual {
  std::string relation;  // "R5", "R7" or a specialized id
  int index = 0;         // basis index m
  Scalar value;
};

struct ResidualReport {
  std::vector<Residual> entries;
  bool all_zero() const {
    for (const auto& r : entries)
      if (!r.value.is_zero()) return false;
    return true;
  }
  std::vector<Residual> nonzero() const {
    std::vector<Residual> out;
    for (const auto& r : entries)
      if (!r.value.is_zero()) out.push_back(r);
    return out;
  }
};

// ([e~2,e~3] - e~5) f_m and ([e~2,e~5] - 9/10 e~7) f_m for every m whose
// target degree fits in the module.
inline ResidualReport benoist_residuals(const ActionTable& table) {
  ActionTable t = table.to(Convention::Tilde);
  int N = t.n_plus_1();
  ResidualReport rep;
  auto c = [&](int i, int j) { return t.get(i, j); };
  for (int m = 1; m + 5 <= N; ++m)
    rep.entries.push_back({"R5", m, c(3, m) * c(2, m + 3) - c(2, m) * c(3, m + 2) - c(5, m)});
  for (int m = 1; m + 7 <= N; ++m)
    rep.entries.push_back(
        {"R7", m, c(5, m) * c(2, m + 5) - c(2, m) * c(5, m + 2) - Scalar::frac(9, 10) * c(7, m)});
  return rep;
}

struct JacobiDefect {
  int i, j, m;
  Scalar value;
};

// Direct check of (e_i e_j - e_j e_i - (j-i) e_{i+j}) f_m = 0 in the standard basis.
inline std::vector<JacobiDefect> full_jacobi_check(const ActionTable& table) {
  ActionTable s = table.to(Convention::Standard);
  int N = s.n_plus_1();
  std::vector<JacobiDefect> out;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; i + j < N; ++j)
      for (int m = 1; i + j + m <= N; ++m) {
        Scalar v = s.get(j, m) * s.get(i, m + j) - s.get(i, m) * s.get(j, m + i) - bracket_coeff(i, j) * s.get(i + j, m);
        if (!v.is_zero()) out.push_back({i, j, m, v});
      }
  return out;
}

}  // namespace gtm
