#include <gtest/gtest.h>

#include "fusionkit/semiring.hpp"
#include "oracles.hpp"

using namespace fusionkit;

namespace {

Word w(std::initializer_list<std::int64_t> ids) { return Word(ids); }

Combination<Word> terms(std::initializer_list<std::pair<Word, int>> list) {
  Combination<Word> c;
  for (const auto& [x, n] : list) c.add(x, n);
  return c;
}

const std::vector<FusionDatum>& catalog_data() {
  static const std::vector<FusionDatum> data{catalog::au(), catalog::bu(), catalog::aaut(), catalog::reflection(2),
                                             catalog::reflection(3)};
  return data;
}

}  // namespace

TEST(Product, FreeUnitaryExamples) {
  const auto d = catalog::au();
  EXPECT_EQ(multiply(d, w({0}), w({1})), terms({{Word{}, 1}, {w({0, 1}), 1}}));
  EXPECT_EQ(multiply(d, w({0, 1}), w({0, 1})), terms({{Word{}, 1}, {w({0, 1}), 1}, {w({0, 1, 0, 1}), 1}}));
}

TEST(Product, AutomorphismExample) {
  EXPECT_EQ(multiply(catalog::aaut(), w({0}), w({0})), terms({{Word{}, 1}, {w({0}), 1}, {w({0, 0}), 1}}));
}

TEST(Product, CyclicSingleLetters) {
  const auto d = catalog::reflection(5);
  for (std::int64_t x = 0; x < 5; ++x) {
    for (std::int64_t y = 0; y < 5; ++y) {
      const auto p = multiply(d, w({x}), w({y}));
      if ((x + y) % 5 == 0) {
        EXPECT_EQ(p, terms({{Word{}, 1}, {w({0}), 1}, {w({x, y}), 1}}));
      } else {
        EXPECT_EQ(p, terms({{w({(x + y) % 5}), 1}, {w({x, y}), 1}}));
      }
    }
  }
}

TEST(Product, MatchesBruteForceSplittings) {
  for (const auto& d : catalog_data()) {
    const auto ws = enumerate_words(d, 3, std::nullopt);
    for (const auto& x : ws)
      for (const auto& y : ws)
        ASSERT_EQ(oracle::to_ids(multiply(d, x, y)), oracle::free_product_brute(d, oracle::ids(x), oracle::ids(y)))
            << format_word(d, x) << " * " << format_word(d, y);
  }
}

TEST(Product, CoefficientsAggregate) {
  const auto d = catalog::aaut();
  const auto p = multiply(d, Combination<Word>(w({0}), 2), Combination<Word>(w({0}), 3));
  EXPECT_EQ(p, terms({{Word{}, 6}, {w({0}), 6}, {w({0, 0}), 6}}));
}

TEST(Product, MultiplicitiesBeyondMachineIntegers) {
  // In [r]^n over B_u the unit appears Catalan(n / 2) times.
  const auto d = catalog::bu();
  Combination<Word> power(Word{});
  for (int i = 0; i < 80; ++i) power = multiply(d, power, Combination<Word>(w({0})));
  Coeff catalan = 1;
  for (int k = 0; k < 40; ++k) catalan = catalan * 2 * (2 * k + 1) / (k + 2);
  EXPECT_EQ(power.coefficient(Word{}), catalan);
  EXPECT_GT(catalan, Coeff(std::numeric_limits<std::int64_t>::max()));
}

TEST(Product, DatumMismatchThrows) {
  const auto a = SemiringElement::simple(catalog::au(), w({0}));
  const auto b = SemiringElement::simple(catalog::bu(), w({0}));
  try {
    product(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::datum_mismatch);
  }
  EXPECT_THROW(sum(a, b), Error);
}

TEST(Product, PrintsInCanonicalOrder) {
  const auto d = catalog::au();
  const auto p = product(SemiringElement::simple(d, w({0, 1})), SemiringElement::simple(d, w({0, 1})));
  EXPECT_EQ(p.to_string(), "1 + [a a*] + [a a* a a*]");
}

TEST(Dual, Examples) {
  const auto d = catalog::au();
  EXPECT_EQ(dual(SemiringElement::unit(d)), SemiringElement::unit(d));
  EXPECT_EQ(dual(SemiringElement(d, terms({{w({0, 0}), 2}}))), SemiringElement(d, terms({{w({1, 1}), 2}})));
  EXPECT_EQ(dual(SemiringElement::simple(d, w({0, 1}))), SemiringElement::simple(d, w({0, 1})));
}

TEST(Leq, Examples) {
  const auto d = catalog::au();
  const auto one = SemiringElement::unit(d);
  const auto a = SemiringElement::simple(d, w({0}));
  const auto as = SemiringElement::simple(d, w({1}));
  const auto wit = leq(one, product(a, as));
  ASSERT_TRUE(wit);
  EXPECT_EQ(wit->difference, SemiringElement::simple(d, w({0, 1})));
  EXPECT_EQ(sum(wit->lhs, wit->difference), wit->rhs);
  const auto same = leq(a, a);
  ASSERT_TRUE(same);
  EXPECT_TRUE(same->difference.terms().empty());
  EXPECT_FALSE(leq(a, as));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(catalog::bu(), w({0, 0}), letter_dimensions({{Letter{0}, 2}})), 3);
  EXPECT_EQ(dimension(catalog::au(), Word{}, letter_dimensions({{Letter{0}, 3}, {Letter{1}, 3}})), 1);
  EXPECT_EQ(dimension(catalog::au(), w({0, 1}), letter_dimensions({{Letter{0}, 3}, {Letter{1}, 3}})), 8);
}

TEST(Dimension, SpinDimensionsOfPowers) {
  const auto d = catalog::bu();
  DimensionFunction dim(d, letter_dimensions({{Letter{0}, 2}}));
  Word x;
  for (int m = 1; m <= 8; ++m) {
    x.push_back(Letter{0});
    EXPECT_EQ(dim(x), m + 1) << m;  // spin m/2
  }
  DimensionFunction so3(catalog::aaut(), letter_dimensions({{Letter{0}, 3}}));
  Word y;
  for (int m = 1; m <= 8; ++m) {
    y.push_back(Letter{0});
    EXPECT_EQ(so3(y), 2 * m + 1) << m;
  }
}

TEST(Dimension, InconsistentValuesThrow) {
  // dim r = 1 for B_u gives dim rr = 0.
  try {
    dimension(catalog::bu(), w({0, 0}), letter_dimensions({{Letter{0}, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::inconsistent_dimension);
  }
  EXPECT_THROW(dimension(catalog::au(), w({0}), letter_dimensions({{Letter{0}, 2}, {Letter{1}, 3}})), Error);
}

// --- properties ---------------------------------------------------------------

class SemiringLaws : public ::testing::TestWithParam<int> {};

TEST_P(SemiringLaws, AssociativeUpToLengthThree) {
  const auto& d = catalog_data()[static_cast<std::size_t>(GetParam())];
  EXPECT_FALSE(find_associativity_failure(d, 3, std::nullopt).has_value());
}

TEST_P(SemiringLaws, UnitAndDualAntiMultiplicative) {
  const auto& d = catalog_data()[static_cast<std::size_t>(GetParam())];
  const auto ws = enumerate_words(d, 3, std::nullopt);
  for (const auto& x : ws) {
    ASSERT_EQ(multiply(d, Word{}, x), Combination<Word>(x));
    ASSERT_EQ(multiply(d, x, Word{}), Combination<Word>(x));
    for (const auto& y : ws)
      ASSERT_EQ(dual(d, multiply(d, x, y)), multiply(d, word_dual(d, y), word_dual(d, x)));
  }
}

TEST_P(SemiringLaws, UnitCoefficientDetectsDuals) {
  const auto& d = catalog_data()[static_cast<std::size_t>(GetParam())];
  const auto ws = enumerate_words(d, 4, std::nullopt);
  for (const auto& x : ws)
    for (const auto& y : ws)
      ASSERT_EQ(multiply(d, x, y).coefficient(Word{}), y == word_dual(d, x) ? 1 : 0);
}

TEST_P(SemiringLaws, NoNontrivialInvertibles) {
  const auto& d = catalog_data()[static_cast<std::size_t>(GetParam())];
  for (const auto& x : enumerate_words(d, 4, std::nullopt)) {
    if (x.empty()) continue;
    const auto p = multiply(d, x, word_dual(d, x));
    ASSERT_GE(p.size(), 2u);
    ASSERT_TRUE(p.contains(concat(x, word_dual(d, x))));
  }
}

TEST_P(SemiringLaws, ProductsDominatedByLongerProducts) {
  const auto& d = catalog_data()[static_cast<std::size_t>(GetParam())];
  const auto ws = enumerate_words(d, 2, std::nullopt);
  for (const auto& x : ws)
    for (const auto& y : ws)
      for (const auto& t : ws)
        ASSERT_TRUE(difference(multiply(d, x, y), multiply(d, concat(x, t), concat(word_dual(d, t), y))));
}

INSTANTIATE_TEST_SUITE_P(Catalog, SemiringLaws, ::testing::Range(0, 5));

TEST(Dimension, MultiplicativeOnProducts) {
  const std::vector<std::pair<FusionDatum, LetterDimensions>> cases{
      {catalog::bu(), letter_dimensions({{Letter{0}, 2}})},
      {catalog::au(), letter_dimensions({{Letter{0}, 3}, {Letter{1}, 3}})},
      {catalog::aaut(), letter_dimensions({{Letter{0}, 3}})}};
  for (const auto& [d, dims] : cases) {
    DimensionFunction dim(d, dims);
    const auto ws = enumerate_words(d, 3, std::nullopt);
    for (const auto& x : ws)
      for (const auto& y : ws) ASSERT_EQ(dim(multiply(d, x, y)), dim(x) * dim(y));
  }
}

TEST(Product, ClebschGordanForSpinWords) {
  const auto d = catalog::bu();
  auto power = [](int m) {
    Word x;
    for (int i = 0; i < m; ++i) x.push_back(Letter{0});
    return x;
  };
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      Combination<Word> expected;
      for (auto [k, c] : oracle::clebsch_gordan(m, n)) expected.add(power(k), c);
      ASSERT_EQ(multiply(d, power(m), power(n)), expected) << m << " " << n;
    }
  }
}

TEST(Associativity, UncheckedDatumCanFail) {
  // r o r = r, r o s = s o r = r, s o s undefined violates associativity of o.
  const auto d = FusionDatum::table({"r", "s"}, {0, 1}, {{{0, 0}, 0}, {{0, 1}, 0}, {{1, 0}, 0}}, Checking::unchecked);
  EXPECT_TRUE(find_associativity_failure(d, 2, std::nullopt).has_value());
}
