#include <random>

#include <gtest/gtest.h>

#include "equisig/charseries.hpp"

using namespace equisig;

namespace {

  TruncatedSeries x1(int d) {
    return TruncatedSeries::variable(1, d, 0);
  }

  TruncatedSeries c1(int d, CyclotomicNumber c) {
    return TruncatedSeries::constant(1, d, c);
  }

  TruncatedSeries poly1(int d, std::vector<Rational> const& coeffs) {
    TruncatedSeries s(1, d);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      s.add_term({static_cast<int>(k)}, CyclotomicNumber(coeffs[k]));
    }
    return s;
  }

  // Plain univariate rational series, used as an independent oracle.
  using Plain = std::vector<Rational>;

  Plain plain_exp(Rational a, std::size_t n) {
    Plain   out(n);
    Rational p = 1;
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = p;
      p      = p * a / static_cast<long>(k + 1);
    }
    return out;
  }

  Plain plain_div(Plain const& a, Plain const& b) {
    Plain q(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      Rational s = a[k];
      for (std::size_t j = 1; j <= k; ++j) {
        s -= b[j] * q[k - j];
      }
      q[k] = s / b[0];
    }
    return q;
  }

}  // namespace

TEST(TruncatedSeries, ArithmeticExamples) {
  auto one = c1(4, CyclotomicNumber(1));
  EXPECT_EQ((one + x1(4)) * (one - x1(4)), poly1(4, {1, 0, -1}));
  EXPECT_EQ(series_invert(one - x1(4)), poly1(4, {1, 1, 1}));
  auto z3 = root_of_unity(1, 3);
  auto s  = c1(4, CyclotomicNumber(1) - z3) + x1(4);
  EXPECT_EQ(series_invert(s).constant_term(), (CyclotomicNumber(2) + z3) / CyclotomicNumber(3));
  EXPECT_EQ(series_invert(s) * s, c1(4, CyclotomicNumber(1)));
  EXPECT_THROW(series_invert(x1(4)), DivisionByZero);
  // Truncation discards overflow.
  EXPECT_EQ(x1(4) * x1(4) * x1(4), TruncatedSeries(1, 4));
}

TEST(TruncatedSeries, Exponential) {
  EXPECT_EQ(exp_linear({Rational(0)}, 6), c1(6, CyclotomicNumber(1)));
  EXPECT_EQ(exp_linear({Rational(1)}, 4), poly1(4, {1, 1, Rational(1, 2)}));
  EXPECT_EQ(exp_linear({Rational(1)}, 8) * exp_linear({Rational(-1)}, 8), c1(8, CyclotomicNumber(1)));
  std::mt19937_64                 rng(4);
  std::uniform_int_distribution<> coef(-5, 5);
  for (int t = 0; t < 20; ++t) {
    LinearForm a(3), b(3), s(3);
    for (std::size_t i = 0; i < 3; ++i) {
      a[i] = Rational(coef(rng), 3);
      b[i] = Rational(coef(rng), 2);
      a[i].canonicalize();
      b[i].canonicalize();
      s[i] = a[i] + b[i];
    }
    EXPECT_EQ(exp_linear(s, 6), exp_linear(a, 6) * exp_linear(b, 6));
  }
}

TEST(TruncatedSeries, AngleFactor) {
  for (std::int64_t m : {2, 3, 5, 8}) {
    for (std::int64_t a = 1; a < m; ++a) {
      auto z = root_of_unity(a, m);
      EXPECT_EQ(angle_factor(z, {Rational(0)}, 6),
                c1(6, (CyclotomicNumber(1) + z) / (CyclotomicNumber(1) - z)));
      // (zeta, x) -> (zeta^-1, -x) negates the factor; zeta -> -zeta inverts it.
      LinearForm l{Rational(1), Rational(-2, 3)};
      LinearForm nl{Rational(-1), Rational(2, 3)};
      EXPECT_EQ(angle_factor(z.inverse(), nl, 6), -angle_factor(z, l, 6));
      if (!(-z).is_one()) {
        EXPECT_EQ(angle_factor(z, l, 6) * angle_factor(-z, l, 6),
                  TruncatedSeries::constant(2, 6, CyclotomicNumber(1)));
      }
    }
  }
  // The product A(zeta, l) A(zeta^-1, -l) is -A(zeta, l)^2, not 1: at
  // zeta = zeta_3, l = 0 it is 1/3.
  auto z3 = root_of_unity(1, 3);
  EXPECT_EQ((angle_factor(z3, {Rational(0)}, 0) * angle_factor(z3.inverse(), {Rational(0)}, 0)).constant_term(),
            CyclotomicNumber(Rational(1, 3)));
  auto minus = CyclotomicNumber(-1);
  EXPECT_TRUE(angle_factor(minus, {Rational(0)}, 4).is_zero());
  // Oracle: (1 - e^x)/(1 + e^x) by plain series division.
  auto e   = plain_exp(1, 5);
  Plain num(5), den(5);
  for (std::size_t k = 0; k < 5; ++k) {
    num[k] = (k == 0 ? 1 : 0) - e[k];
    den[k] = (k == 0 ? 1 : 0) + e[k];
  }
  auto q  = plain_div(num, den);
  auto af = angle_factor(minus, {Rational(1)}, 8);
  EXPECT_EQ(af.coefficient({1}), CyclotomicNumber(Rational(-1, 2)));
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(af.coefficient({k}), CyclotomicNumber(q[static_cast<std::size_t>(k)]));
  }
  EXPECT_THROW(angle_factor(CyclotomicNumber(1), {Rational(1)}, 4), DomainError);
  EXPECT_THROW(angle_factor(CyclotomicNumber(2), {Rational(1)}, 4), DomainError);
}

TEST(TruncatedSeries, LClass) {
  EXPECT_EQ(l_class({}, 1, 8), c1(8, CyclotomicNumber(1)));
  EXPECT_EQ(l_class_factor({Rational(1)}, 8), poly1(8, {1, 0, Rational(1, 3), 0, Rational(-1, 45)}));
  EXPECT_EQ(l_class_factor({Rational(1)}, 4), poly1(4, {1, 0, Rational(1, 3)}));
  // Oracle: y (e^2y + 1) / (e^2y - 1) by plain division, after cancelling y.
  std::size_t const n = 12;
  auto              e = plain_exp(2, n + 1);
  Plain             num(n), den(n);
  for (std::size_t k = 0; k < n; ++k) {
    num[k] = e[k] + (k == 0 ? 1 : 0);
    den[k] = e[k + 1];
  }
  auto q  = plain_div(num, den);
  auto lc = l_class_factor({Rational(1)}, 2 * static_cast<int>(n - 1));
  for (std::size_t k = 0; k < n; ++k) {
    EXPECT_EQ(lc.coefficient({static_cast<int>(k)}), CyclotomicNumber(q[k])) << k;
    if (k % 2 == 1) {
      EXPECT_TRUE(lc.coefficient({static_cast<int>(k)}).is_zero());
    }
  }
  std::vector<LinearForm> r1{{Rational(1), Rational(0)}}, r2{{Rational(1), Rational(1)}, {Rational(0), Rational(3)}};
  auto                    both = r1;
  both.insert(both.end(), r2.begin(), r2.end());
  EXPECT_EQ(l_class(both, 2, 8), l_class(r1, 2, 8) * l_class(r2, 2, 8));
}

TEST(TruncatedSeries, CothIdentity) {
  auto half = coth_identity_check(1, 2, 4);
  EXPECT_TRUE(half.holds);
  EXPECT_EQ(half.sign, -1);
  for (std::int64_t m = 2; m <= 12; ++m) {
    for (std::int64_t a = 1; a < m; ++a) {
      for (int d : {0, 2, 4, 6}) {
        auto r = coth_identity_check(a, m, d);
        EXPECT_TRUE(r.holds) << a << "/" << m;
        EXPECT_EQ(r.sign, -1);
      }
    }
  }
  EXPECT_THROW(coth_identity_check(0, 3, 4), DomainError);
}

TEST(TruncatedSeries, Integrate) {
  IntersectionFunctional f(1, 4);
  f.set({2}, Rational(1));
  EXPECT_TRUE(integrate(TruncatedSeries(1, 4), f).is_zero());
  EXPECT_EQ(integrate(x1(4) * x1(4), f), CyclotomicNumber(1));
  EXPECT_EQ(integrate(poly1(4, {7, 3, 5}), f), CyclotomicNumber(5));
  auto pt = IntersectionFunctional::point();
  auto z  = root_of_unity(1, 5);
  EXPECT_EQ(integrate(TruncatedSeries::constant(0, 0, z), pt), z);
  EXPECT_THROW(f.set({1}, Rational(1)), DomainError);
  EXPECT_THROW(integrate(TruncatedSeries(1, 2), f), DomainError);
}
