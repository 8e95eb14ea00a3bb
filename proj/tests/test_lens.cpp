#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "equisig/lens.hpp"

using namespace equisig;

namespace {

  // Literal search over sign patterns and permutations.
  bool isometric_brute_force(LensSpace const& a, LensSpace const& b) {
    if (a.order() != b.order() || a.m() != b.m()) {
      return false;
    }
    auto const n = a.order();
    auto const m = a.m();
    for (auto u : units_mod(n)) {
      for (std::uint32_t signs = 0; signs < (1u << m); ++signs) {
        std::vector<std::int64_t> w;
        for (std::size_t j = 0; j < m; ++j) {
          auto x = mod_floor(u * a.weights()[j], n);
          w.push_back((signs >> j) & 1u ? mod_floor(-x, n) : x);
        }
        std::sort(w.begin(), w.end());
        do {
          if (w == b.weights()) {
            return true;
          }
        } while (std::next_permutation(w.begin(), w.end()));
      }
    }
    return false;
  }

  std::complex<double> rho_float(LensSpace const& l, std::int64_t k) {
    std::complex<double> v = 1;
    for (auto q : l.weights()) {
      v *= std::complex<double>(0, 1.0 / std::tan(std::numbers::pi * static_cast<double>(k * q) / static_cast<double>(l.order())));
    }
    return v;
  }

  std::vector<LensSpace> all_lens_spaces(std::int64_t n, std::size_t m) {
    auto const                units = units_mod(n);
    std::vector<LensSpace>    out;
    std::vector<std::size_t>  idx(m, 0);
    while (true) {
      std::vector<std::int64_t> w;
      for (auto i : idx) {
        w.push_back(units[i]);
      }
      out.emplace_back(n, w);
      std::size_t i = m;
      while (i > 0 && idx[i - 1] + 1 == units.size()) {
        idx[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
    }
    return out;
  }

}  // namespace

TEST(LensSpace, Construction) {
  EXPECT_THROW(LensSpace(1, {1}), DomainError);
  EXPECT_THROW(LensSpace(6, {2}), DomainError);
  EXPECT_THROW(LensSpace(6, {}), DomainError);
  auto l = LensSpace::classical(7, {2});
  EXPECT_EQ(l.weights(), (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(l.dimension(), 3);
  EXPECT_EQ(l.to_string(), "L(7;1,2)");
  EXPECT_EQ(l.short_name(), "L(7;2)");
  EXPECT_EQ(LensSpace(5, {-1}).weights().front(), 4);
}

TEST(Rho, Examples) {
  EXPECT_TRUE(rho_vector(LensSpace(2, {1})).at(1).is_zero());
  auto z = root_of_unity(1, 3);
  EXPECT_EQ(rho_vector(LensSpace(3, {1})).at(1), (CyclotomicNumber(1) + z) / (CyclotomicNumber(1) - z));
  EXPECT_NE(rho_vector(LensSpace::classical(7, {1})), rho_vector(LensSpace::classical(7, {2})));
  EXPECT_THROW(rho_vector(LensSpace(3, {1})).at(3), DomainError);
}

TEST(Rho, FloatOracleAndSymmetries) {
  for (std::int64_t n = 2; n <= 13; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      for (auto const& l : all_lens_spaces(n, m)) {
        auto r = rho_vector(l);
        EXPECT_TRUE(galois_equivariant(r)) << l.to_string();
        for (std::int64_t k = 1; k < n; ++k) {
          EXPECT_LT(std::abs(r.at(k).approx() - rho_float(l, k)), 1e-9) << l.to_string() << " k=" << k;
          EXPECT_EQ(r.at(n - k), r.at(k).conj());
        }
      }
    }
  }
}

TEST(Classification, Examples) {
  auto l1 = LensSpace::classical(7, {1});
  auto l2 = LensSpace::classical(7, {2});
  EXPECT_TRUE(homotopy_equivalent(l1, l1));
  EXPECT_TRUE(homotopy_equivalent(l1, l2));
  EXPECT_FALSE(homotopy_equivalent(l1, LensSpace::classical(7, {1, 1})));
  EXPECT_FALSE(homotopy_equivalent(LensSpace::classical(5, {1}), LensSpace::classical(5, {2})));
  EXPECT_FALSE(homotopy_equivalent(l1, LensSpace::classical(5, {1})));
  EXPECT_TRUE(isometric(l1, LensSpace::classical(7, {6})));
  EXPECT_FALSE(isometric(l1, l2));
  EXPECT_TRUE(isometric(l2, l2));
  // 2^-1 = 4 mod 7: L(7;2) and L(7;4) are isometric.
  EXPECT_TRUE(isometric(l2, LensSpace::classical(7, {4})));
}

TEST(Classification, IsometryAgreesWithBruteForce) {
  for (std::int64_t n = 2; n <= 13; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      auto all = all_lens_spaces(n, m);
      for (auto const& a : all) {
        for (auto const& b : all) {
          EXPECT_EQ(isometric(a, b), isometric_brute_force(a, b)) << a.to_string() << " " << b.to_string();
        }
      }
    }
  }
}

TEST(Classification, IsometryImpliesHomotopyAndEqualRho) {
  for (std::int64_t n = 2; n <= 13; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      auto                   all = all_lens_spaces(n, m);
      std::vector<RhoVector> rho;
      for (auto const& l : all) {
        rho.push_back(rho_vector(l));
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          auto u = isometry_unit(all[i], all[j]);
          if (!u) {
            continue;
          }
          EXPECT_TRUE(homotopy_equivalent(all[i], all[j]));
          auto sign = isometry_sign(all[i], all[j], *u);
          EXPECT_TRUE(rho_matches_under_isometry(rho[i], rho[j], *u, sign))
              << all[i].to_string() << " " << all[j].to_string();
        }
      }
    }
  }
}

TEST(ExoticPairs, Search) {
  EXPECT_TRUE(find_exotic_pairs(5, 1).empty());
  auto pairs = find_exotic_pairs(7, 1);
  bool found = false;
  for (auto const& p : pairs) {
    EXPECT_TRUE(homotopy_equivalent(p.first, p.second));
    EXPECT_FALSE(isometric(p.first, p.second));
    EXPECT_FALSE(p.difference.is_zero());
    EXPECT_EQ(rho_vector(p.second).at(p.k) - rho_vector(p.first).at(p.k), p.difference);
    found = found || (p.first == LensSpace::classical(7, {1}) && p.second == LensSpace::classical(7, {2}));
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(find_exotic_pairs(201, 1), DomainError);
  EXPECT_THROW(find_exotic_pairs(10, 5), DomainError);
}

TEST(ExoticPairs, DeterministicAcrossThreadCounts) {
  setenv("EQUISIG_THREADS", "1", 1);
  auto serial = find_exotic_pairs(20, 2);
  setenv("EQUISIG_THREADS", "4", 1);
  auto parallel = find_exotic_pairs(20, 2);
  unsetenv("EQUISIG_THREADS");
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].first, parallel[i].first);
    EXPECT_EQ(serial[i].second, parallel[i].second);
    EXPECT_EQ(serial[i].k, parallel[i].k);
  }
  EXPECT_FALSE(serial.empty());
}
