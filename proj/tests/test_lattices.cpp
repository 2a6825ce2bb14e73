#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "flagfpt/errors.hpp"
#include "flagfpt/lattices.hpp"

using namespace flagfpt;

namespace {

std::size_t binomial(int n, int k) {
  std::size_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

std::vector<int> bits_to_indices(unsigned mask, int width) {
  std::vector<int> out;
  for (int i = 0; i < width; ++i)
    if (mask >> i & 1u) out.push_back(i + 1);
  return out;
}

bool covers_of(const FinitePoset& p, const Element& lower, const Element& upper) {
  const auto& c = p.covers(lower);
  return std::find(c.begin(), c.end(), upper) != c.end();
}

/// Small lattices exercised by the exhaustive property checks.
std::vector<std::pair<std::string, FinitePoset>> small_lattices() {
  std::vector<std::pair<std::string, FinitePoset>> out;
  for (int n = 2; n <= 8; ++n)
    for (int d = 1; d < n; ++d)
      out.emplace_back("I(" + std::to_string(d) + "," + std::to_string(n) + ")", build_idn(d, n));
  for (int n = 3; n <= 6; ++n)
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      auto ds = bits_to_indices(mask, n - 1);
      if (ds.size() < 2) continue;
      out.emplace_back("H(n=" + std::to_string(n) + ",mask=" + std::to_string(mask) + ")",
                       build_young(make_young_spec(n, ds)));
    }
  out.emplace_back("H(7;2,3,5)", build_young(make_young_spec(7, {2, 3, 5})));
  out.emplace_back("B4 tuple", build_minuscule_tuple(make_root_system_type('B', 4), 4));
  out.emplace_back("D5 tuple", build_minuscule_tuple(make_root_system_type('D', 5), 5));
  out.emplace_back("E6 weight", build_minuscule_weightposet(RootSystem(make_root_system_type('E', 6)), 1));
  out.emplace_back("E7 weight", build_minuscule_weightposet(RootSystem(make_root_system_type('E', 7)), 7));
  out.emplace_back("D4 weight", build_minuscule_weightposet(RootSystem(make_root_system_type('D', 4)), 1));
  return out;
}

}  // namespace

TEST(Idn, SizesAndErrors) {
  EXPECT_EQ(build_idn(1, 3).size(), 3u);
  EXPECT_EQ(build_idn(4, 7).size(), 35u);
  for (int n = 1; n <= 10; ++n)
    for (int d = 1; d <= n; ++d) EXPECT_EQ(build_idn(d, n).size(), binomial(n, d));
  EXPECT_THROW(build_idn(0, 3), PreconditionError);
  EXPECT_THROW(build_idn(4, 3), PreconditionError);
}

TEST(Idn, SingletonsAreTotallyOrdered) {
  const auto p = build_idn(1, 3);
  EXPECT_TRUE(p.less({1}, {2}));
  EXPECT_TRUE(p.less({2}, {3}));
  EXPECT_TRUE(p.less({1}, {3}));
}

TEST(Idn, IncomparablePair) {
  const auto p = build_idn(2, 4);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_FALSE(p.leq({1, 4}, {2, 3}));
  EXPECT_FALSE(p.leq({2, 3}, {1, 4}));
  EXPECT_EQ(p.join({1, 4}, {2, 3}), (Element{2, 4}));
  EXPECT_EQ(p.meet({1, 4}, {2, 3}), (Element{1, 3}));
}

TEST(Young, SizeAndSingleBlock) {
  EXPECT_EQ(build_young(make_young_spec(7, {2, 3, 5})).size(), 77u);
  const auto single = build_young(make_young_spec(6, {3}));
  const auto idn = build_idn(3, 6);
  EXPECT_EQ(single.elements(), idn.elements());
  for (const auto& a : idn.elements())
    for (const auto& b : idn.elements()) EXPECT_EQ(single.leq(a, b), idn.leq(a, b));
}

TEST(Young, SpecValidation) {
  EXPECT_THROW(make_young_spec(1, {1}), PreconditionError);
  EXPECT_THROW(make_young_spec(5, {}), PreconditionError);
  EXPECT_THROW(make_young_spec(5, {5}), PreconditionError);
  EXPECT_THROW(make_young_spec(5, {2, 2}), PreconditionError);
  EXPECT_EQ(make_young_spec(5, {3, 1}).ds, (std::vector<int>{1, 3}));
}

TEST(Young, ShorterTuplesAreGreater) {
  const auto p = build_young(make_young_spec(7, {2, 3, 5}));
  EXPECT_TRUE(p.less({1, 2, 3, 4, 5}, {1, 2, 3}));
  EXPECT_TRUE(p.less({1, 2, 4, 6, 7}, {1, 2, 4}));
  EXPECT_FALSE(p.leq({1, 2, 4}, {1, 2, 4, 6, 7}));
  EXPECT_FALSE(p.leq({2, 3, 4, 5, 6}, {1, 2, 3}));
}

TEST(Young, JoinAndMeetExamples) {
  const auto p = build_young(make_young_spec(7, {2, 3, 5}));
  EXPECT_EQ(p.join({1, 2, 4}, {1, 3, 4, 6, 7}), (Element{1, 3, 4}));
  EXPECT_EQ(p.meet({1, 2, 4}, {1, 3, 4, 6, 7}), (Element{1, 2, 4, 6, 7}));
  EXPECT_EQ(p.least_upper_bound({1, 2, 4}, {1, 3, 4, 6, 7}), (Element{1, 3, 4}));
  EXPECT_EQ(p.greatest_lower_bound({1, 2, 4}, {1, 3, 4, 6, 7}), (Element{1, 2, 4, 6, 7}));
}

TEST(MinimalElements, Examples) {
  EXPECT_EQ(minimal_elements(build_idn(4, 7)), (std::vector<Element>{{1, 2, 3, 4}}));
  EXPECT_EQ(minimal_elements(build_young(make_young_spec(7, {2, 3, 5}))),
            (std::vector<Element>{{1, 2, 3, 4, 5}}));
  const FinitePoset antichain(PosetKind::tuple_model, {{1}, {2}},
                              [](const Element& a, const Element& b) { return a == b; });
  EXPECT_EQ(minimal_elements(antichain), (std::vector<Element>{{1}, {2}}));
  EXPECT_EQ(maximal_elements(antichain).size(), 2u);
  EXPECT_THROW(principal_chain(antichain), NotALatticeError);
}

TEST(Covers, Examples) {
  const auto g = build_idn(4, 7);
  EXPECT_EQ(covers(g, {1, 2, 3, 5}), (std::vector<Element>{{1, 2, 3, 6}, {1, 2, 4, 5}}));
  EXPECT_TRUE(covers(g, {4, 5, 6, 7}).empty());
  EXPECT_THROW(covers(g, {1, 2, 3}), PreconditionError);

  const auto h = build_young(make_young_spec(7, {2, 3, 5}));
  const auto c = covers(h, {1, 2, 4, 6, 7});
  EXPECT_EQ(std::set<Element>(c.begin(), c.end()),
            (std::set<Element>{{1, 3, 4, 6, 7}, {1, 2, 5, 6, 7}, {1, 2, 4}}));
}

TEST(PrincipalChain, Grassmannian47) {
  const auto chain = principal_chain(build_idn(4, 7));
  const std::vector<Element> expected{{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 6}, {1, 3, 5, 7},
                                      {2, 4, 6, 7}, {3, 5, 6, 7}, {4, 5, 6, 7}};
  EXPECT_EQ(chain.elements, expected);
  EXPECT_EQ(chain.length(), 7u);
}

TEST(PrincipalChain, Flag235In7) {
  const auto chain = principal_chain(build_young(make_young_spec(7, {2, 3, 5})));
  const std::vector<Element> expected{{1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}, {1, 2, 3, 5, 7},
                                      {1, 2, 4, 6, 7}, {1, 3, 5},       {2, 4, 6},
                                      {3, 5, 7},       {4, 6},          {5, 7},
                                      {6, 7}};
  EXPECT_EQ(chain.elements, expected);
}

TEST(PrincipalChain, IdnLengthIsN) {
  for (int n = 2; n <= 12; ++n)
    for (int d = 1; d < n; ++d) EXPECT_EQ(principal_chain(build_idn(d, n)).length(), static_cast<std::size_t>(n));
  EXPECT_EQ(principal_chain(build_idn(1, 5)).elements,
            (std::vector<Element>{{1}, {2}, {3}, {4}, {5}}));
}

TEST(FastSuccessor, IdnExamples) {
  EXPECT_EQ(fast_successor_idn({1, 2, 4, 6}, 7), (Element{1, 3, 5, 7}));
  EXPECT_EQ(fast_successor_idn({1, 2, 3, 4}, 7), (Element{1, 2, 3, 5}));
  EXPECT_EQ(fast_successor_idn({3, 5, 6, 7}, 7), (Element{4, 5, 6, 7}));
  EXPECT_THROW(fast_successor_idn({4, 5, 6, 7}, 7), PreconditionError);
  EXPECT_THROW(fast_successor_idn({3, 3, 6, 7}, 7), PreconditionError);
  EXPECT_THROW(fast_successor_idn({3, 5, 6, 8}, 7), PreconditionError);
}

TEST(FastSuccessor, YoungExamples) {
  const auto spec = make_young_spec(7, {2, 3, 5});
  EXPECT_EQ(fast_successor_young({1, 2, 4, 6, 7}, spec), (Element{1, 3, 5}));
  EXPECT_EQ(fast_successor_young({3, 5, 7}, spec), (Element{4, 6}));
  EXPECT_EQ(fast_successor_young({4, 6}, spec), (Element{5, 7}));
  EXPECT_THROW(fast_successor_young({6, 7}, spec), PreconditionError);
  EXPECT_THROW(fast_successor_young({1, 2, 3, 4}, spec), PreconditionError);
}

TEST(FastSuccessor, MatchesChainIdn) {
  for (int n = 2; n <= 10; ++n)
    for (int d = 1; d < n; ++d) {
      const auto chain = principal_chain(build_idn(d, n));
      for (std::size_t k = 0; k + 1 < chain.length(); ++k)
        EXPECT_EQ(fast_successor_idn(chain.elements[k], n), chain.elements[k + 1])
            << "I(" << d << "," << n << ") step " << k;
    }
}

TEST(FastSuccessor, MatchesChainYoung) {
  for (int n = 2; n <= 8; ++n)
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      const auto spec = make_young_spec(n, bits_to_indices(mask, n - 1));
      const auto chain = principal_chain(build_young(spec));
      for (std::size_t k = 0; k + 1 < chain.length(); ++k)
        EXPECT_EQ(fast_successor_young(chain.elements[k], spec), chain.elements[k + 1])
            << "n=" << n << " mask=" << mask << " step " << k;
    }
}

TEST(LatticeAxioms, OrderIsPartialOrder) {
  for (const auto& [name, p] : small_lattices()) {
    if (p.size() > 60) continue;
    const auto& el = p.elements();
    for (const auto& a : el) {
      EXPECT_TRUE(p.leq(a, a)) << name;
      for (const auto& b : el) {
        if (a != b && p.leq(a, b)) EXPECT_FALSE(p.leq(b, a)) << name;
        if (!p.leq(a, b)) continue;
        for (const auto& c : el)
          if (p.leq(b, c)) EXPECT_TRUE(p.leq(a, c)) << name;
      }
    }
  }
}

TEST(LatticeAxioms, NativeOperationsAreBounds) {
  for (const auto& [name, p] : small_lattices()) {
    const auto& el = p.elements();
    for (const auto& a : el)
      for (const auto& b : el) {
        const auto lub = p.least_upper_bound(a, b);
        const auto glb = p.greatest_lower_bound(a, b);
        ASSERT_TRUE(lub.has_value()) << name << " " << format_element(a) << format_element(b);
        ASSERT_TRUE(glb.has_value()) << name << " " << format_element(a) << format_element(b);
        EXPECT_EQ(p.join(a, b), *lub) << name;
        EXPECT_EQ(p.meet(a, b), *glb) << name;
      }
  }
}

TEST(LatticeAxioms, Distributive) {
  for (const auto& [name, p] : small_lattices()) {
    const auto& el = p.elements();
    const std::size_t n = el.size();
    std::vector<std::size_t> join(n * n), meet(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        join[i * n + j] = p.index_of(p.join(el[i], el[j]));
        meet[i * n + j] = p.index_of(p.meet(el[i], el[j]));
      }
    std::size_t bad = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          bad += meet[x * n + join[y * n + z]] != join[meet[x * n + y] * n + meet[x * n + z]];
    EXPECT_EQ(bad, 0u) << name;
  }
}

// Literal sentence: "pi, rho are covers of pi v rho, then pi ^ rho is a cover".
// No element covers an upper bound of itself, so the premise never holds.
TEST(Semimodularity, LiteralSentenceIsVacuous) {
  for (const auto& [name, p] : small_lattices()) {
    std::size_t premises = 0;
    const auto& el = p.elements();
    for (const auto& a : el)
      for (const auto& b : el) {
        if (a == b) continue;
        const auto j = p.join(a, b);
        if (covers_of(p, j, a) && covers_of(p, j, b)) ++premises;
      }
    EXPECT_EQ(premises, 0u) << name;
  }
}

TEST(Semimodularity, UpperAndLowerReadings) {
  for (const auto& [name, p] : small_lattices()) {
    std::size_t upper = 0, lower = 0;
    const auto& el = p.elements();
    for (const auto& a : el)
      for (const auto& b : el) {
        if (a == b) continue;
        const auto j = p.join(a, b);
        const auto m = p.meet(a, b);
        if (covers_of(p, m, a) && covers_of(p, m, b)) {
          ++upper;
          EXPECT_TRUE(covers_of(p, a, j) && covers_of(p, b, j)) << name;
        }
        if (covers_of(p, a, j) && covers_of(p, b, j)) {
          ++lower;
          EXPECT_TRUE(covers_of(p, m, a) && covers_of(p, m, b)) << name;
        }
      }
    const bool chain = std::all_of(el.begin(), el.end(), [&](const Element& a) {
      return std::all_of(el.begin(), el.end(),
                         [&](const Element& b) { return p.leq(a, b) || p.leq(b, a); });
    });
    if (!chain) {
      EXPECT_GT(upper, 0u) << name;
      EXPECT_GT(lower, 0u) << name;
    }
  }
}

TEST(Minuscule, TupleModelSizes) {
  for (int r = 2; r <= 9; ++r)
    EXPECT_EQ(build_minuscule_tuple(make_root_system_type('B', r), r).size(), 1u << r);
  EXPECT_EQ(build_minuscule_tuple(make_root_system_type('D', 3), 3).size(), 4u);
  for (int r = 3; r <= 7; ++r) {
    EXPECT_EQ(build_minuscule_tuple(make_root_system_type('D', r), r).size(), 1u << (r - 1));
    EXPECT_EQ(build_minuscule_tuple(make_root_system_type('D', r), r - 1).size(), 1u << (r - 1));
  }
  for (int r = 1; r <= 7; ++r)
    for (int d = 1; d <= r; ++d)
      EXPECT_EQ(build_minuscule_tuple(make_root_system_type('A', r), d).size(), binomial(r + 1, d));
  EXPECT_THROW(build_minuscule_tuple(make_root_system_type('C', 3), 1), PreconditionError);
  EXPECT_THROW(build_minuscule_tuple(make_root_system_type('B', 3), 1), PreconditionError);
  EXPECT_THROW(build_minuscule_tuple(make_root_system_type('E', 6), 1), PreconditionError);
}

TEST(Minuscule, TypeBChainLength) {
  for (int n = 3; n <= 10; ++n) {
    const auto p = build_minuscule_tuple(make_root_system_type('B', n - 1), n - 1);
    EXPECT_EQ(principal_chain(p).length(), static_cast<std::size_t>(2 * (n - 1))) << "n=" << n;
  }
}

TEST(Minuscule, TupleAndWeightModelsAgree) {
  for (char f : {'A', 'B', 'D'})
    for (int r = 1; r <= 6; ++r) {
      RootSystemType t;
      try {
        t = make_root_system_type(f, r);
      } catch (const PreconditionError&) {
        continue;
      }
      const RootSystem rs(t);
      for (int d : minuscule_indices(t)) {
        if (!has_minuscule_tuple_model(t, d)) continue;
        const auto tuple = build_minuscule_tuple(t, d);
        const auto weight = build_minuscule_weightposet(rs, d);
        EXPECT_EQ(tuple.size(), weight.size()) << t.label() << " d=" << d;
        EXPECT_EQ(principal_chain(tuple).length(), principal_chain(weight).length())
            << t.label() << " d=" << d;
      }
    }
}

TEST(Minuscule, ExceptionalWeightModels) {
  const RootSystem e6(make_root_system_type('E', 6));
  const RootSystem e7(make_root_system_type('E', 7));
  for (int d : {1, 6}) {
    const auto p = build_minuscule_weightposet(e6, d);
    EXPECT_EQ(p.size(), 27u);
    EXPECT_EQ(principal_chain(p).length(), 12u);
  }
  const auto p7 = build_minuscule_weightposet(e7, 7);
  EXPECT_EQ(p7.size(), 56u);
  EXPECT_EQ(principal_chain(p7).length(), 18u);
  EXPECT_THROW(build_minuscule_weightposet(RootSystem(make_root_system_type('E', 8)), 8),
               PreconditionError);
}

TEST(Minuscule, WeightCoversDifferBySimpleRoot) {
  const RootSystem rs(make_root_system_type('E', 6));
  const auto p = build_minuscule_weightposet(rs, 1);
  for (const auto& x : p.elements())
    for (const auto& y : p.covers(x)) {
      const auto cx = rs.to_root_coords(WeightVector{x});
      const auto cy = rs.to_root_coords(WeightVector{y});
      Rational total(0);
      for (std::size_t j = 0; j < cx.size(); ++j) total += cy[j] - cx[j];
      EXPECT_EQ(total, Rational(1));
    }
}

// The weight model of A_{n-1}(varpi_d) is anti-isomorphic to I(d,n) via
// S -> sum_{s in S} e_s, whose varpi-coordinates are [j in S] - [j+1 in S].
TEST(Minuscule, TypeAWeightModelIsDualOfIdn) {
  for (int n = 2; n <= 7; ++n) {
    const RootSystem rs(make_root_system_type('A', n - 1));
    for (int d = 1; d < n; ++d) {
      const auto idn = build_idn(d, n);
      const auto wp = build_minuscule_weightposet(rs, d);
      ASSERT_EQ(idn.size(), wp.size());
      std::map<Element, Element> phi;
      for (const auto& s : idn.elements()) {
        Element w(n - 1, 0);
        for (int j = 1; j < n; ++j) {
          const bool in_j = std::find(s.begin(), s.end(), j) != s.end();
          const bool in_next = std::find(s.begin(), s.end(), j + 1) != s.end();
          w[j - 1] = static_cast<int>(in_j) - static_cast<int>(in_next);
        }
        ASSERT_TRUE(wp.contains(w));
        phi.emplace(s, w);
      }
      for (const auto& a : idn.elements())
        for (const auto& b : idn.elements())
          EXPECT_EQ(idn.leq(a, b), wp.leq(phi.at(b), phi.at(a))) << "n=" << n << " d=" << d;
      EXPECT_EQ(principal_chain(wp).length(), static_cast<std::size_t>(n));
    }
  }
}

TEST(FinitePoset, CanonicalOrderAndFormatting) {
  const auto p = build_young(make_young_spec(4, {1, 2}));
  EXPECT_EQ(p.elements().front(), (Element{1, 2}));
  EXPECT_EQ(p.elements().back(), (Element{4}));
  EXPECT_EQ(format_element({1, 2, 4}), "(1,2,4)");
  EXPECT_TRUE(canonical_less({1, 2, 3}, {1, 2}));
  EXPECT_TRUE(canonical_less({1, 2}, {1, 3}));
}
