#include <gtest/gtest.h>

#include <random>

#include "gtm/variety.hpp"

using gtm::FamilyLabel;
using gtm::Scalar;

namespace {
Scalar rnd(std::mt19937& g) {
  std::uniform_int_distribution<int> num(-60, 60), den(1, 7);
  return Scalar::frac(num(g), den(g));
}
Scalar F(long p, long q) { return Scalar::frac(p, q); }
bool on_system(const std::vector<Scalar>& b) {
  for (const auto& r : gtm::main_system(b))
    if (!r.is_zero()) return false;
  return true;
}
std::vector<std::string> names(const std::vector<FamilyLabel>& ls) {
  std::vector<std::string> out;
  for (const auto& l : ls) out.push_back(l.str());
  return out;
}
}  // namespace

TEST(Variety, SurfaceValues) {
  std::mt19937 g(1);
  for (int i = 0; i < 20; ++i) {
    Scalar t = rnd(g);
    EXPECT_TRUE(gtm::F_eval(t, t, t).is_zero());
    EXPECT_TRUE(gtm::F_eval(t, Scalar(3), Scalar(2)).is_zero());
    EXPECT_TRUE(gtm::F_eval(Scalar(-2), Scalar(-3), t).is_zero());
  }
  EXPECT_TRUE(gtm::F_eval(Scalar(3), Scalar(2), F(3, 2)).is_zero());
  EXPECT_EQ(gtm::F_poly().eval(std::vector<gtm::Rational>{7, 3, 2}), gtm::Rational(0));
  EXPECT_EQ(gtm::F_poly().total_degree(), 4);
}

TEST(Variety, MapAndInvolutions) {
  EXPECT_EQ(gtm::map_f(Scalar(1), Scalar(1)), (gtm::Triple{Scalar(3), Scalar(2), F(3, 2)}));
  EXPECT_THROW(gtm::map_f(Scalar(1), Scalar(-3)), gtm::Error);
  std::mt19937 g(2);
  int checked = 0;
  while (checked < 50) {
    Scalar u = rnd(g), v = rnd(g);
    if (v == Scalar(0) || v == Scalar(-1) || v == Scalar(-2) || v == Scalar(-3) || v == Scalar(-4) ||
        v == Scalar(-5) || v == Scalar(-6) || v == Scalar(-7))
      continue;
    auto p = gtm::map_f(u, v);
    EXPECT_TRUE(gtm::F_eval(p[0], p[1], p[2]).is_zero());
    auto s = gtm::sigma_F(p);
    EXPECT_TRUE(gtm::F_eval(s[0], s[1], s[2]).is_zero());
    EXPECT_EQ(s, gtm::map_f(-u - Scalar(2), -v - Scalar(3)));
    EXPECT_EQ(gtm::sigma_F(s), p);
    ++checked;
  }
  std::vector<Scalar> b{Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5), Scalar(6)};
  EXPECT_EQ(gtm::sigma(gtm::sigma(b)), b);
  auto m5m = gtm::component_b_vector(FamilyLabel::parse("M(5,-,t=3)"));
  EXPECT_EQ(gtm::sigma(m5m), gtm::component_b_vector(FamilyLabel::parse("M(5,+,t=-3)")));
}

TEST(Variety, GammaIsSingular) {
  std::mt19937 g(3);
  auto grad = gtm::F_poly().gradient();
  for (int i = 0; i < 20; ++i) {
    Scalar t = rnd(g);
    if (t == Scalar(0) || t == Scalar(-1) || t == Scalar(-2) || t == Scalar(1)) continue;
    auto p = gtm::gamma_point(t);
    std::vector<gtm::Rational> pt{p[0].a(), p[1].a(), p[2].a()};
    EXPECT_TRUE(gtm::F_poly().eval(pt).is_zero());
    for (const auto& d : grad) EXPECT_TRUE(d.eval(pt).is_zero());
    EXPECT_EQ(p, gtm::map_f(t - Scalar(1), t - Scalar(1)));
    EXPECT_EQ(p, gtm::map_f(t + Scalar(1), t));
  }
}

TEST(Variety, MiddleSolveDocumentedCases) {
  std::mt19937 g(4);
  for (int i = 0; i < 10; ++i) {
    Scalar t = rnd(g);
    if (t == Scalar(1) || t == Scalar(-1)) continue;
    auto r = gtm::solve_8dim_given_middle(t, t, t);
    ASSERT_TRUE(r.complete);
    ASSERT_EQ(r.solutions.size(), 1u);
    ASSERT_TRUE(r.solutions[0].is_point());
    EXPECT_EQ(r.solutions[0].point(), (std::vector<Scalar>{t, t, t}));
  }
  auto e = gtm::solve_8dim_given_middle(Scalar(7), Scalar(3), Scalar(2));
  EXPECT_TRUE(e.complete);
  EXPECT_TRUE(e.solutions.empty());
  // Generic image point: unique solution given by the shifted M1 formulas.
  Scalar u(2), v(5);
  auto p = gtm::map_f(u, v);
  auto r = gtm::solve_8dim_given_middle(p[0], p[1], p[2]);
  ASSERT_EQ(r.solutions.size(), 1u);
  Scalar six(6);
  EXPECT_EQ(r.solutions[0].point(),
            (std::vector<Scalar>{six * (u - Scalar(1)) / ((v - Scalar(1)) * v),
                                 six * (u + Scalar(3)) / ((v + Scalar(3)) * (v + Scalar(4))),
                                 six * (u + Scalar(4)) / ((v + Scalar(4)) * (v + Scalar(5)))}));
}

TEST(Variety, BranchLinesAtExcludedY) {
  // y = 9/5 on z = y - 2/5 is inconsistent except at x = 5/2, where b1 is free (M5+).
  for (Scalar x : {Scalar(0), Scalar(1), F(-3, 2), Scalar(4)}) {
    auto r = gtm::solve_8dim_given_middle(x, F(9, 5), F(7, 5));
    EXPECT_TRUE(r.solutions.empty()) << x.str();
    auto s = gtm::solve_8dim_given_middle(x, F(-7, 5), F(-9, 5));
    EXPECT_TRUE(s.solutions.empty()) << x.str();
  }
  auto r = gtm::solve_8dim_given_middle(F(5, 2), F(9, 5), F(7, 5));
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_TRUE(r.solutions[0].free[0]);
  auto pt = gtm::middle_solution_point(r.solutions[0], F(5, 2), F(9, 5), F(7, 5), Scalar(11));
  EXPECT_EQ(pt, gtm::component_b_vector(FamilyLabel::parse("M(5,+,t=11)")));
  auto s = gtm::solve_8dim_given_middle(F(-8, 7), F(-7, 5), F(-9, 5));
  ASSERT_EQ(s.solutions.size(), 1u);
  EXPECT_TRUE(s.solutions[0].free[2]);
  EXPECT_THROW(gtm::m2_branch_solutions(Scalar(1), F(9, 5)), gtm::Error);
  EXPECT_THROW(gtm::m2_branch_solutions(Scalar(1), F(-7, 5)), gtm::Error);
  EXPECT_THROW(gtm::m2_branch_solutions(Scalar(1), Scalar(3)), gtm::Error);
}

TEST(Variety, M2Branch) {
  auto p = gtm::m2_branch_solutions(F(9, 5), F(7, 5));
  EXPECT_EQ(p, (std::vector<Scalar>{Scalar(1), F(9, 5), F(7, 5), Scalar(1), F(3, 4), F(17, 28)}));
  std::mt19937 g(5);
  for (int i = 0; i < 20; ++i) {
    Scalar x = rnd(g), y = rnd(g);
    try {
      auto b = gtm::m2_branch_solutions(x, y);
      EXPECT_TRUE(on_system(b));
      auto r = gtm::solve_8dim_given_middle(b[1], b[2], b[3]);
      ASSERT_FALSE(r.solutions.empty());
    } catch (const gtm::Error&) {
    }
  }
}

TEST(Variety, ComponentMembershipExamples) {
  auto m5 = gtm::component_b_vector(FamilyLabel::parse("M(5,+,t=4)"));
  EXPECT_EQ(names(gtm::component_membership(m5)), (std::vector<std::string>{"M(1,u=3,v=1)", "M(5,+,t=4)"}));
  std::vector<Scalar> c(6, F(7, 3));
  EXPECT_EQ(names(gtm::component_membership(c)), (std::vector<std::string>{"M(3,t=7/3)"}));
  Scalar r = Scalar::sqrt_of(19);
  Scalar t = F(-16, 15) + F(68, 285) * r;
  auto m4 = gtm::component_b_vector(FamilyLabel{"M", "4+", {{"t", t}}});
  auto got = gtm::component_membership(m4);
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0].variant, "1");
  EXPECT_EQ(got[0].param("u"), F(-17, 2) + F(3, 2) * r);
  EXPECT_EQ(got[0].param("v"), Scalar(-6) + r);
  EXPECT_EQ(got[1].str(), FamilyLabel({"M", "4+", {{"t", t}}}).str());
}

TEST(Variety, ComponentSoundness) {
  std::mt19937 g(6);
  auto draws = [&](const std::string& tag, const std::string& id, const std::vector<std::string>& ps) {
    int ok = 0;
    for (int i = 0; i < 60 && ok < 20; ++i) {
      FamilyLabel L{tag, id, {}};
      for (const auto& p : ps) L.params.push_back({p, rnd(g)});
      std::vector<Scalar> b;
      try {
        b = gtm::component_b_vector(L);
      } catch (const gtm::Error&) {
        continue;
      }
      if (b.size() == 6) EXPECT_TRUE(on_system(b)) << L.str();
      auto rep = gtm::benoist_residuals(gtm::tilde_set(static_cast<int>(b.size()) + 2, {}, b).action());
      EXPECT_TRUE(rep.all_zero()) << L.str();
      auto mem = gtm::component_membership(b);
      bool found = false;
      for (const auto& m : mem) found = found || m.variant == id;
      EXPECT_TRUE(found) << L.str();
      ++ok;
    }
    EXPECT_EQ(ok, 20) << tag << id;
  };
  for (const char* tag : {"M", "tM"}) {
    draws(tag, "1", {"u", "v"});
    draws(tag, "1_0", {"v"});
    draws(tag, "3", {"t"});
    draws(tag, "5+", {"t"});
    draws(tag, "5-", {"t"});
    draws(tag, "6+", {"t"});
    draws(tag, "6-", {"t"});
  }
  draws("M", "2", {"x", "y"});
  draws("tM", "2", {"y"});
  draws("M", "4+", {"t"});
  draws("M", "4-", {"t"});
}

TEST(Variety, EliminantIdentity) {
  auto rep = gtm::eliminant_identity();
  EXPECT_TRUE(rep.identity);
  EXPECT_EQ(rep.degree, 5);
  EXPECT_EQ(rep.constant, gtm::Rational(1));
  EXPECT_FALSE(rep.printed_factor_divides);
  EXPECT_EQ(rep.eliminant.divide_exact(rep.factor), rep.constant * gtm::F_poly());
  gtm::MultiPoly bumped = gtm::F_poly() + gtm::Rational(1);
  EXPECT_FALSE(gtm::eliminant_matches(rep.eliminant, rep.factor, bumped));
}

TEST(Variety, GridCompleteness) {
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y)
      for (int z = -3; z <= 3; ++z) {
        Scalar X(x), Y(y), Z(z);
        auto r = gtm::solve_8dim_given_middle(X, Y, Z);
        EXPECT_TRUE(r.complete);
        for (const auto& sol : r.solutions)
          for (long s : {0L, 1L, 2L, -5L}) {
            auto b = gtm::middle_solution_point(sol, X, Y, Z, Scalar(s));
            EXPECT_TRUE(on_system(b));
            EXPECT_FALSE(gtm::component_membership(b).empty()) << x << " " << y << " " << z << " s=" << s;
          }
      }
}
