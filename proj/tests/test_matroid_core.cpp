#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matroidlab/matroid_core.hpp"
#include "test_oracles.hpp"

using namespace matroidlab;

TEST_CASE("m1 independence on small finite sets") {
  CHECK(m1_is_independent(SetExpr::points({{1, 1}, {2, 1}, {3, 1}})));
  CHECK_FALSE(m1_is_independent(SetExpr::points({{1, 1}, {1, 2}})));
}

TEST_CASE("m1 independence agrees with the window prefix check") {
  CHECK(m1_is_independent(SetExpr::column_tail(7, 1)));
  CHECK(m1_is_independent(SetExpr::ray(Point{1, 1}, 1)));
  SetExpr two;
  two.tails = {ColumnTail{1, 1}, ColumnTail{2, 1}};
  two = normalize(two);
  CHECK_FALSE(m1_is_independent(two));
  CHECK_FALSE(testlab::window_m1_independent(two, 50));

  testlab::SetExprGen gen(101);
  for (int i = 0; i < 500; ++i) {
    const SetExpr s = gen.next();
    // a 50-row window sees past every structural row of the generator
    CHECK(m1_is_independent(s) == testlab::window_m1_independent(s, 50));
  }
}

TEST_CASE("m1 capacity equals greedy window insertions") {
  CHECK(m1_capacity(SetExpr::column_tail(3, 4)) == ExtNat::of(3));
  CHECK(testlab::greedy_window_capacity(SetExpr::column_tail(3, 4), 60) == 3);
  CHECK(m1_capacity(SetExpr::column_tail(5, 1)) == ExtNat::of(0));
  CHECK(testlab::greedy_window_capacity(SetExpr::column_tail(5, 1), 60) == 0);
  CHECK(m1_capacity(SetExpr::points({{5, 5}})) == ExtNat::infinity());
  CHECK_THROWS_AS(m1_capacity(SetExpr::points({{1, 1}, {1, 2}})), DependentInput);

  testlab::SetExprGen gen(103);
  for (int i = 0; i < 200; ++i) {
    const SetExpr s = gen.next_infinite();
    if (!m1_is_independent(s)) continue;
    const auto cap = m1_capacity(s);
    REQUIRE_FALSE(cap.infinite);
    CHECK(cap.value == testlab::greedy_window_capacity(s, 60));
  }
}

TEST_CASE("m1 bases admit no window augmentation") {
  const auto m1 = [](const SetExpr& s) { return m1_is_independent(s); };
  for (int c : {1, 4, 9}) {
    CHECK(m1_is_base(SetExpr::column_tail(c, 1)));
    CHECK_FALSE(testlab::window_augmentation(m1, SetExpr::column_tail(c, 1), 100));
  }
  CHECK(m1_is_base(SetExpr::ray(Point{1, 1}, 1)));
  CHECK_FALSE(testlab::window_augmentation(m1, SetExpr::ray(Point{1, 1}, 1), 100));
  CHECK_FALSE(m1_is_base(SetExpr::column_tail(3, 4)));
  CHECK(testlab::window_augmentation(m1, SetExpr::column_tail(3, 4), 100).has_value());
}

TEST_CASE("m1 base iff eventual deficiency zero, validated by exhaustion") {
  const auto m1 = [](const SetExpr& s) { return m1_is_independent(s); };
  testlab::SetExprGen gen(107);
  for (int i = 0; i < 120; ++i) {
    const SetExpr s = gen.next_infinite();
    if (!m1_is_independent(s)) continue;
    const auto prof = deficiency_profile(s);
    const bool symbolic = m1_is_base(s);
    CHECK(symbolic == (prof.kind == DeficiencyProfile::Eventual::Finite &&
                       prof.eventual_value == 0));
    if (symbolic) CHECK_FALSE(testlab::window_augmentation(m1, s, 40));
    if (!symbolic && !m1_capacity(s).infinite)
      CHECK(testlab::window_augmentation(m1, s, 40).has_value());
  }
}

TEST_CASE("membership in L on the forced examples") {
  CHECK_FALSE(m_is_independent(SetExpr::column_tail(3, 1)));  // zero removed < 3
  CHECK(m_is_independent(SetExpr::column_tail(3, 4)));        // three removed
  CHECK_FALSE(m_is_independent(SetExpr::column_tail(3, 3)));  // two removed
  CHECK(m_is_independent(SetExpr::ray(Point{1, 1}, 1)));      // no dominant column
}

TEST_CASE("membership in L agrees with the definitional search oracle") {
  testlab::SetExprGen gen(109);
  for (int i = 0; i < 400; ++i) {
    const SetExpr s = gen.next();
    CHECK(m_is_independent(s) == testlab::definitional_m_independent(s, 60));
  }
}

TEST_CASE("L is contained in L1 and they agree on finite sets") {
  testlab::SetExprGen gen(113);
  for (int i = 0; i < 10000; ++i) {
    const SetExpr s = gen.next();
    if (m_is_independent(s)) CHECK(m1_is_independent(s));
    if (is_finite_set(s)) CHECK(m_is_independent(s) == m1_is_independent(s));
  }
}

TEST_CASE("I2: independence survives single removals") {
  testlab::SetExprGen gen(127);
  for (int i = 0; i < 300; ++i) {
    const SetExpr s = gen.next();
    const auto pts = materialize_rows(s, 12);
    if (pts.empty()) continue;
    const Point p = pts[gen.rng() % pts.size()];
    if (m1_is_independent(s)) CHECK(m1_is_independent(remove(s, p)));
    if (m_is_independent(s)) CHECK(m_is_independent(remove(s, p)));
  }
}

TEST_CASE("bases of M on the forced examples") {
  const auto m_pred = [](const SetExpr& s) { return m_is_independent(s); };
  for (int l : {1, 2, 3}) {
    CHECK(m_is_base(SetExpr::column_tail(l, l + 1)));
    CHECK_FALSE(testlab::window_augmentation(m_pred, SetExpr::column_tail(l, l + 1), 100));
  }
  CHECK(m_is_base(SetExpr::ray(Point{1, 1}, 1)));
  CHECK_FALSE(testlab::window_augmentation(m_pred, SetExpr::ray(Point{1, 1}, 1), 100));
  CHECK_FALSE(m_is_base(SetExpr::column_tail(3, 5)));
  const auto aug = testlab::window_augmentation(m_pred, SetExpr::column_tail(3, 5), 100);
  REQUIRE(aug.has_value());
  CHECK(m_is_independent(insert(SetExpr::column_tail(3, 5), *aug)));
}

TEST_CASE("m_augment on the worked examples") {
  CHECK(m_augment(SetExpr::empty(), SetExpr::ray(Point{1, 1}, 1)) == Point{1, 1});

  const auto same_column =
      m_augment(SetExpr::column_tail(2, 5), SetExpr::column_tail(2, 3));
  REQUIRE(same_column.has_value());
  CHECK(*same_column == Point{3, 2});
  CHECK(m_is_independent(insert(SetExpr::column_tail(2, 5), *same_column)));
  CHECK(testlab::definitional_m_independent(insert(SetExpr::column_tail(2, 5), *same_column), 60));

  const auto mixed = m_augment(SetExpr::column_tail(4, 6), SetExpr::ray(Point{1, 1}, 1));
  REQUIRE(mixed.has_value());
  CHECK(*mixed == Point{1, 1});
  const SetExpr grown = insert(SetExpr::column_tail(4, 6), *mixed);
  CHECK(dominant_column(grown) == 4);
  CHECK(m_capacity(grown) == ExtNat::of(0));
  CHECK(m_is_base(grown));
}

TEST_CASE("m_augment preconditions and maximality") {
  CHECK_THROWS_AS(m_augment(SetExpr::points({{1, 1}, {1, 2}}), SetExpr::ray(Point{1, 1}, 1)),
                  DependentInput);
  CHECK_THROWS_AS(m_augment(SetExpr::empty(), SetExpr::column_tail(3, 1)), NotABase);
  // a base of M cannot be augmented, even from a different base
  CHECK_FALSE(m_augment(SetExpr::ray(Point{1, 1}, 2), SetExpr::ray(Point{1, 1}, 1)).has_value());
}

TEST_CASE("m_augment is sound on random independent sets") {
  testlab::SetExprGen gen(131);
  const std::vector<SetExpr> some_bases = {
      SetExpr::ray(Point{1, 1}, 1), SetExpr::column_tail(1, 2), SetExpr::column_tail(3, 4),
      SetExpr::ray(Point{1, 5}, 2)};
  int exercised = 0;
  for (int i = 0; i < 400; ++i) {
    const SetExpr s = gen.next();
    if (!m_is_independent(s)) continue;
    const SetExpr& b = some_bases[gen.rng() % some_bases.size()];
    const auto got = m_augment(s, b);
    if (m_is_base(s)) {
      CHECK_FALSE(got.has_value());
      continue;
    }
    REQUIRE(got.has_value());
    CHECK(contains(b, *got));
    CHECK_FALSE(contains(s, *got));
    CHECK(m_is_independent(insert(s, *got)));
    ++exercised;
  }
  CHECK(exercised > 50);
}

TEST_CASE("toy matroid") {
  CHECK(toy_is_independent(FiniteSubset1D::cofinite_missing({1, 2})));
  CHECK(toy_is_base(FiniteSubset1D::cofinite_missing({1, 2})));
  CHECK_FALSE(toy_is_independent(FiniteSubset1D::cofinite_missing({7})));
  std::vector<int> hundred;
  for (int i = 1; i <= 100; ++i) hundred.push_back(i);
  CHECK(toy_is_independent(FiniteSubset1D::finite(hundred)));
  CHECK_FALSE(toy_is_base(FiniteSubset1D::finite(hundred)));
  CHECK(toy_fin_is_independent(FiniteSubset1D::cofinite_missing({5})));
  CHECK(toy_fin_is_base(FiniteSubset1D::cofinite_missing({})));
}

TEST_CASE("toy bases differ from the unique finitarization base by two") {
  std::mt19937_64 rng(137);
  for (int i = 0; i < 1000; ++i) {
    const int a = static_cast<int>(rng() % 50) + 1;
    int b = static_cast<int>(rng() % 50) + 1;
    if (a == b) b = a + 1;
    const auto base = FiniteSubset1D::cofinite_missing({a, b});
    REQUIRE(toy_is_base(base));
    // N \ base = {a, b}: gap to the base N of the finitarization is exactly 2
    CHECK(base.values.size() == 2);
  }
}
