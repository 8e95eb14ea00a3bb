#include <cmath>
#include <complex>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "equisig/grouprep.hpp"

using namespace equisig;

namespace {

  FiniteAbelianGroup G(std::vector<std::int64_t> f) {
    return FiniteAbelianGroup::from_cyclic_orders(f);
  }

  VirtualRep chi(FiniteAbelianGroup const& g, std::size_t c, long k = 1) {
    return VirtualRep::character(g, c, k);
  }

  VirtualRep random_rep(std::mt19937_64& rng, FiniteAbelianGroup const& g) {
    std::uniform_int_distribution<long>        coef(-3, 3);
    std::uniform_int_distribution<std::size_t> idx(0, g.size() - 1);
    VirtualRep                                 v(g);
    for (int i = 0; i < 4; ++i) {
      v.add_term(idx(rng), coef(rng));
    }
    return v;
  }

  // Character value from the definition, in floating point.
  std::complex<double> value(VirtualRep const& v, std::size_t g) {
    auto const&          grp = v.group();
    std::complex<double> s   = 0;
    auto const           x   = grp.residues(g);
    for (auto const& [c, k] : v.terms()) {
      auto const a     = grp.residues(c);
      double     phase = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        phase += double(a[i] * x[i]) / double(grp.invariant_factors()[i]);
      }
      s += k.get_d() * std::polar(1.0, 2 * M_PI * phase);
    }
    return s;
  }

  // <u, v> from character values.
  double brute_inner(VirtualRep const& u, VirtualRep const& v) {
    std::complex<double> s = 0;
    for (std::size_t g = 0; g < u.group().size(); ++g) {
      s += value(u, g) * std::conj(value(v, g));
    }
    s /= double(u.group().size());
    EXPECT_NEAR(s.imag(), 0, 1e-9);
    return s.real();
  }

  std::vector<FiniteAbelianGroup> small_groups() {
    return {G({1}), G({2}), G({3}), G({4}), G({6}), G({2, 2}), G({2, 4}), G({3, 3}), G({2, 2, 2}),
            G({4, 4}), G({2, 6})};
  }

}  // namespace

TEST(FiniteAbelianGroup, Normalization) {
  EXPECT_EQ(G({2, 3}).invariant_factors(), (std::vector<std::int64_t>{6}));
  EXPECT_EQ(G({4, 2}).invariant_factors(), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(G({1}).invariant_factors(), (std::vector<std::int64_t>{}));
  EXPECT_EQ(G({6, 10}).invariant_factors(), (std::vector<std::int64_t>{2, 30}));
  EXPECT_THROW(FiniteAbelianGroup({4, 2}), DomainError);
  EXPECT_THROW(FiniteAbelianGroup({1}), DomainError);
  EXPECT_THROW(G({101, 101}), DomainError);
}

TEST(FiniteAbelianGroup, IndexingAndArithmetic) {
  auto g = G({2, 4});
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g.index(g.residues(i)), i);
    EXPECT_EQ(g.add(i, g.negate(i)), g.identity());
  }
  EXPECT_EQ(g.residues(5), (Residues{1, 1}));
  EXPECT_EQ(g.element_order(g.index({1, 2})), 2);
  EXPECT_EQ(g.element_order(g.index({0, 1})), 4);
}

TEST(ProductPresentation, ElementsAndCharactersAgree) {
  for (auto orders : std::vector<std::vector<std::int64_t>>{{2, 3}, {4, 2}, {6, 4}, {2, 2, 3}, {3, 1}}) {
    ProductPresentation pp(orders);
    auto const&         g = pp.group();
    std::vector<Residues> all{{}};
    for (auto n : orders) {
      std::vector<Residues> next;
      for (auto const& r : all) {
        for (std::int64_t k = 0; k < n; ++k) {
          auto s = r;
          s.push_back(k);
          next.push_back(s);
        }
      }
      all = next;
    }
    std::set<std::size_t> images;
    for (auto const& b : all) {
      images.insert(pp.element(b));
      for (auto const& x : all) {
        double phase = 0;
        for (std::size_t j = 0; j < orders.size(); ++j) {
          phase += double(b[j] * x[j]) / double(orders[j]);
        }
        auto expect = std::polar(1.0, 2 * M_PI * phase);
        auto got    = g.character_value(pp.character(b), pp.element(x)).approx();
        EXPECT_NEAR(std::abs(expect - got), 0, 1e-9);
      }
    }
    EXPECT_EQ(images.size(), g.size());
  }
}

TEST(VirtualRep, RingExamples) {
  auto g = G({5});
  auto x = chi(g, 1);
  auto one = VirtualRep::one(g);
  EXPECT_EQ((one - x) * (one + x), one - chi(g, 2));
  auto z3  = G({3});
  EXPECT_EQ(VirtualRep::regular(z3) * chi(z3, 1), VirtualRep::regular(z3));
  EXPECT_EQ(x + VirtualRep::zero(g), x);
  EXPECT_THROW(x + VirtualRep::one(z3), GroupMismatch);
  EXPECT_TRUE((x - x).terms().empty());
}

TEST(VirtualRep, EvaluateExamples) {
  for (std::int64_t n : {2, 3, 5, 6, 12}) {
    auto g = G({n});
    for (std::size_t x = 1; x < g.size(); ++x) {
      EXPECT_TRUE(evaluate(VirtualRep::regular(g), x).is_zero());
    }
    EXPECT_EQ(evaluate(VirtualRep::regular(g), 0), CyclotomicNumber(n));
  }
  auto z4 = G({4});
  EXPECT_EQ(evaluate(chi(z4, 1), 1), root_of_unity(1, 4));
  std::mt19937_64 rng(7);
  for (auto const& g : small_groups()) {
    for (int t = 0; t < 5; ++t) {
      auto u = random_rep(rng, g), v = random_rep(rng, g);
      EXPECT_EQ(evaluate(u, 0), CyclotomicNumber(u.dimension()));
      for (std::size_t x = 0; x < g.size(); ++x) {
        EXPECT_EQ(evaluate(u * v, x), evaluate(u, x) * evaluate(v, x));
        EXPECT_NEAR(std::abs(evaluate(u, x).approx() - value(u, x)), 0, 1e-9);
        EXPECT_EQ(g.element_order(x) % evaluate(u, x).conductor(), 0);
      }
    }
  }
}

TEST(VirtualRep, CharacterTableIsUnitary) {
  for (auto const& g : small_groups()) {
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        CyclotomicNumber s(0);
        for (std::size_t x = 0; x < g.size(); ++x) {
          s += g.character_value(a, x) * g.character_value(b, x).conj();
        }
        EXPECT_EQ(s, CyclotomicNumber(a == b ? g.order() : 0));
      }
    }
  }
}

TEST(Subgroup, StructureAndEmbedding) {
  for (auto const& g : small_groups()) {
    for (auto const& h : all_subgroups(g)) {
      auto const& a = h.abstract();
      EXPECT_EQ(a.order(), h.order());
      std::set<std::size_t> image;
      for (std::size_t x = 0; x < a.size(); ++x) {
        image.insert(h.to_parent(x));
        EXPECT_EQ(h.to_abstract(h.to_parent(x)), x);
        for (std::size_t y = 0; y < a.size(); ++y) {
          EXPECT_EQ(h.to_parent(a.add(x, y)), g.add(h.to_parent(x), h.to_parent(y)));
        }
      }
      EXPECT_EQ(std::vector<std::size_t>(image.begin(), image.end()), h.members());
      for (std::size_t c = 0; c < g.size(); ++c) {
        auto r = h.restrict_character(c);
        for (std::size_t x = 0; x < a.size(); ++x) {
          EXPECT_EQ(a.character_value(r, x), g.character_value(c, h.to_parent(x)));
        }
      }
    }
  }
}

TEST(Subgroup, Enumeration) {
  EXPECT_EQ(cyclic_subgroups(G({1})).size(), 1u);
  EXPECT_EQ(cyclic_subgroups(G({4})).size(), 3u);
  EXPECT_EQ(all_subgroups(G({4})).size(), 3u);
  EXPECT_EQ(cyclic_subgroups(G({2, 2})).size(), 4u);
  EXPECT_EQ(all_subgroups(G({2, 2})).size(), 5u);
  // Oracle: closed subsets by brute force over all subsets.
  for (auto const& g : {G({2, 4}), G({2, 2, 2}), G({8}), G({2, 6})}) {
    std::size_t n = 0, ncyc = 0;
    for (unsigned long mask = 1; mask < (1ul << g.size()); ++mask) {
      if (!(mask & 1)) {
        continue;
      }
      bool closed = true;
      std::vector<std::size_t> m;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (mask >> i & 1) {
          m.push_back(i);
        }
      }
      for (auto a : m) {
        for (auto b : m) {
          closed = closed && (mask >> g.add(a, b) & 1);
        }
      }
      if (!closed) {
        continue;
      }
      ++n;
      for (auto a : m) {
        if (static_cast<std::size_t>(g.element_order(a)) == m.size()) {
          ++ncyc;
          break;
        }
      }
    }
    EXPECT_EQ(all_subgroups(g).size(), n) << g.to_string();
    EXPECT_EQ(cyclic_subgroups(g).size(), ncyc) << g.to_string();
  }
  auto cs = cyclic_subgroups(G({6}));
  EXPECT_EQ(cs.front().order(), 6);
  EXPECT_EQ(cs.back().order(), 1);
}

TEST(VirtualRep, RestrictExamples) {
  auto z4 = G({4});
  auto h  = Subgroup::generated(z4, {2});
  EXPECT_EQ(restrict(VirtualRep::one(z4), h), VirtualRep::one(h.abstract()));
  EXPECT_EQ(restrict(chi(z4, 1), h), chi(h.abstract(), 1));
  EXPECT_EQ(restrict(VirtualRep::regular(z4), h), Integer(2) * VirtualRep::regular(h.abstract()));
}

TEST(VirtualRep, InduceExamples) {
  auto z4 = G({4});
  auto h  = Subgroup::generated(z4, {2});
  EXPECT_EQ(induce(chi(h.abstract(), 1), h), chi(z4, 1) + chi(z4, 3));
  for (auto const& g : small_groups()) {
    auto t = Subgroup::trivial(g);
    EXPECT_EQ(induce(VirtualRep::one(t.abstract()), t), VirtualRep::regular(g));
  }
}

TEST(VirtualRep, FrobeniusAndProjectionFormula) {
  std::mt19937_64 rng(11);
  for (auto const& g : small_groups()) {
    for (auto const& h : all_subgroups(g)) {
      for (int t = 0; t < 3; ++t) {
        auto w  = random_rep(rng, h.abstract());
        auto v  = random_rep(rng, g);
        auto iw = induce(w, h);
        EXPECT_NEAR(brute_inner(iw, v), brute_inner(w, restrict(v, h)), 1e-9);
        EXPECT_EQ(inner_product(iw, v), inner_product(w, restrict(v, h)));
        EXPECT_EQ(induce(w * restrict(v, h), h), iw * v);
        EXPECT_EQ(iw.dimension(), w.dimension() * h.index_in_parent());
      }
    }
  }
}

TEST(VirtualRep, InflateExamples) {
  auto z4 = G({4});
  auto n  = Subgroup::generated(z4, {2});
  auto q  = quotient(z4, n);
  EXPECT_EQ(q.group.order(), 2);
  EXPECT_EQ(inflate(VirtualRep::one(q.group), z4, q), VirtualRep::one(z4));
  EXPECT_EQ(inflate(chi(q.group, 1), z4, q), chi(z4, 2));
  std::mt19937_64 rng(3);
  for (auto const& g : small_groups()) {
    for (auto const& sub : all_subgroups(g)) {
      auto qq = quotient(g, sub);
      EXPECT_EQ(qq.group.order() * sub.order(), g.order());
      for (std::size_t x = 0; x < g.size(); ++x) {
        EXPECT_EQ(qq.projection[x] == 0, sub.contains(x));
      }
      auto w   = random_rep(rng, qq.group);
      auto inf = inflate(w, g, qq);
      for (std::size_t x = 0; x < g.size(); ++x) {
        EXPECT_EQ(evaluate(inf, x), evaluate(w, qq.projection[x]));
      }
      EXPECT_EQ(restrict(inf, sub), w.dimension() * VirtualRep::one(sub.abstract()));
      EXPECT_EQ(inf.dimension(), w.dimension());
    }
  }
}

TEST(VirtualRep, LambdaOperations) {
  auto z4 = G({4});
  EXPECT_EQ(lambda_minus1(z4, {}), VirtualRep::one(z4));
  EXPECT_EQ(lambda_total(z4, {}), VirtualRep::one(z4));
  EXPECT_EQ(lambda_minus1(z4, {1}), VirtualRep::one(z4) - chi(z4, 1));
  EXPECT_EQ(lambda_minus1(z4, {1, 2}),
            VirtualRep::one(z4) - chi(z4, 1) - chi(z4, 2) + chi(z4, 3));
  EXPECT_EQ(lambda_total(z4, {1, 2}),
            VirtualRep::one(z4) + chi(z4, 1) + chi(z4, 2) + chi(z4, 3));
}
