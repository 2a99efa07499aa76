#include <gtest/gtest.h>

#include <random>
#include <set>

#include "symrank/counting.hpp"
#include "symrank/matspace.hpp"

using namespace symrank;

namespace {

// rank = log_q |row span|, from listing every combination of rows.
unsigned span_rank(const SymMatrix& a) {
  const auto& f = *a.field();
  const unsigned m = a.order();
  const auto rows = a.full();
  std::set<std::vector<Elem>> span;
  std::uint64_t combos = 1;
  for (unsigned i = 0; i < m; ++i) combos *= f.size();
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    std::vector<Elem> v(m, 0);
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < m; ++i) {
      const Elem c = static_cast<Elem>(rest % f.size());
      rest /= f.size();
      for (unsigned j = 0; j < m; ++j) v[j] = f.add(v[j], f.mul(c, rows[i * m + j]));
    }
    span.insert(v);
  }
  unsigned r = 0;
  for (std::size_t s = 1; s < span.size(); s *= f.size()) ++r;
  return r;
}

SymMatrix random_sym(const FieldPtr& f, unsigned m, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, f->size() - 1);
  std::vector<Elem> upper(upper_size(m));
  for (auto& x : upper) x = pick(rng);
  return SymMatrix(f, m, upper);
}

std::vector<Elem> random_invertible(const gf::Field& f, unsigned m, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, f.size() - 1);
  while (true) {
    std::vector<Elem> p(std::size_t{m} * m);
    for (auto& x : p) x = pick(rng);
    if (linalg::rank(f, p, m, m) == m) return p;
  }
}

}  // namespace

TEST(Rank, Examples) {
  auto f2 = gf::field_of_order(2);
  for (unsigned m = 1; m <= 5; ++m) {
    EXPECT_EQ(rank(SymMatrix(f2, m)), 0u);
    EXPECT_EQ(rank(SymMatrix::identity(f2, m)), m);
  }
  EXPECT_EQ(rank(SymMatrix::from_rows(f2, {{1, 1}, {1, 1}})), 1u);
}

TEST(Rank, MatchesSpanOracleExhaustively) {
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}, {3, 3}}) {
    auto f = gf::field_of_order(q);
    for (const auto& a : enumerate_sym(f, m)) ASSERT_EQ(rank(a), span_rank(a)) << "q=" << q;
  }
}

TEST(Rank, MatchesSpanOracleRandom) {
  std::mt19937_64 rng(2024);
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 5}, {2, 6}, {5, 3}, {9, 3}, {8, 3}}) {
    auto f = gf::field_of_order(q);
    for (int s = 0; s < 200; ++s) {
      const auto a = random_sym(f, m, rng);
      ASSERT_EQ(rank(a), span_rank(a));
    }
  }
}

TEST(Distance, Examples) {
  auto f2 = gf::field_of_order(2);
  const auto id2 = SymMatrix::identity(f2, 2);
  const auto ones = SymMatrix::from_rows(f2, {{1, 1}, {1, 1}});
  EXPECT_EQ(distance(id2, id2), 0u);
  EXPECT_EQ(distance(SymMatrix(f2, 4), SymMatrix::identity(f2, 4)), 4u);
  EXPECT_EQ(distance(id2, ones), 2u);
  EXPECT_EQ(distance(ones, id2), 2u);
}

TEST(Distance, Mismatch) {
  auto f2 = gf::field_of_order(2);
  auto f3 = gf::field_of_order(3);
  EXPECT_THROW(distance(SymMatrix(f2, 2), SymMatrix(f2, 3)), std::invalid_argument);
  EXPECT_THROW(distance(SymMatrix(f2, 2), SymMatrix(f3, 2)), std::invalid_argument);
}

TEST(Distance, TriangleExhaustiveSym22) {
  auto f2 = gf::field_of_order(2);
  const auto all = enumerate_sym(f2, 2);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) ASSERT_LE(distance(a, c), distance(a, b) + distance(b, c));
}

TEST(Distance, TriangleRandom) {
  std::mt19937_64 rng(5);
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 5}, {3, 4}, {4, 4}, {7, 3}}) {
    auto f = gf::field_of_order(q);
    for (int s = 0; s < 500; ++s) {
      const auto a = random_sym(f, m, rng), b = random_sym(f, m, rng), c = random_sym(f, m, rng);
      ASSERT_LE(distance(a, c), distance(a, b) + distance(b, c));
      ASSERT_EQ(distance(a, b), distance(b, a));
    }
  }
}

TEST(Congruence, RankInvariant) {
  std::mt19937_64 rng(99);
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 5}, {3, 3}, {3, 4}, {4, 3}, {5, 4}}) {
    auto f = gf::field_of_order(q);
    for (int s = 0; s < 150; ++s) {
      const auto a = random_sym(f, m, rng);
      const auto p = random_invertible(*f, m, rng);
      const auto b = congruent(a, p);
      ASSERT_EQ(rank(b), rank(a));
    }
  }
}

TEST(Congruence, ShapeChecked) {
  auto f2 = gf::field_of_order(2);
  std::vector<Elem> p(5, 0);
  EXPECT_THROW(congruent(SymMatrix(f2, 2), p), std::invalid_argument);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_sym(gf::field_of_order(2), 2).size(), 8u);
  EXPECT_EQ(enumerate_sym(gf::field_of_order(2), 3).size(), 64u);
  EXPECT_EQ(enumerate_sym(gf::field_of_order(3), 2).size(), 27u);
}

TEST(Enumerate, LexicographicAndDistinct) {
  auto f3 = gf::field_of_order(3);
  const auto all = enumerate_sym(f3, 2);
  EXPECT_TRUE(all.front().is_zero());
  EXPECT_EQ(all[1].upper()[2], 1u);  // last coordinate moves fastest
  std::set<std::vector<Elem>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    seen.insert(std::vector<Elem>(all[i].upper().begin(), all[i].upper().end()));
    if (i > 0) {
      EXPECT_TRUE(std::lexicographical_compare(all[i - 1].upper().begin(), all[i - 1].upper().end(),
                                               all[i].upper().begin(), all[i].upper().end()));
    }
  }
  EXPECT_EQ(seen.size(), 27u);
  SymSpace space(f3, 2);
  for (std::uint64_t i = 0; i < space.size(); ++i) EXPECT_EQ(space.index_of(space.at(i)), i);
}

TEST(Enumerate, BudgetRefusal) {
  auto f2 = gf::field_of_order(2);
  EXPECT_THROW(enumerate_sym(f2, 3, 63), BudgetExceeded);
  EXPECT_NO_THROW(enumerate_sym(f2, 3, 64));
  EXPECT_THROW(rank_census(f2, 8), BudgetExceeded);
  try {
    SymSpace(f2, 8);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), kDefaultAmbientBudget);
  }
}

TEST(Census, Examples) {
  auto f2 = gf::field_of_order(2);
  EXPECT_EQ(rank_census(f2, 2).counts, (std::vector<ExactCount>{1, 3, 4}));
  EXPECT_EQ(rank_census(f2, 3).counts, (std::vector<ExactCount>{1, 7, 28, 28}));
  const auto p3 = rank_census(gf::field_of_order(3), 2);
  EXPECT_EQ(p3.counts[0], 1);
  ExactCount total = 0;
  for (const auto& c : p3.counts) total += c;
  EXPECT_EQ(total, 27);
}

TEST(Census, IndependentEnumerationValues) {
  EXPECT_EQ(rank_census(gf::field_of_order(2), 4).counts, (std::vector<ExactCount>{1, 15, 140, 420, 448}));
  EXPECT_EQ(rank_census(gf::field_of_order(3), 3).counts, (std::vector<ExactCount>{1, 26, 234, 468}));
  EXPECT_EQ(rank_census(gf::field_of_order(5), 2).counts, (std::vector<ExactCount>{1, 24, 100}));
  EXPECT_EQ(rank_census(gf::field_of_order(2), 1).counts, (std::vector<ExactCount>{1, 1}));
}

TEST(Census, MatchesClosedFormWithinBudget) {
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {7, 2}, {8, 2}, {9, 2}}) {
    const auto profile = rank_census(gf::field_of_order(q), m);
    ExactCount total = 0;
    for (unsigned t = 0; t <= m; ++t) {
      EXPECT_EQ(profile.counts[t], counting::sphere_size(q, m, t)) << q << " " << m << " " << t;
      total += profile.counts[t];
    }
    EXPECT_EQ(total, counting::ambient_size(q, m));
  }
}

TEST(Census, WorkerCountDoesNotChangeResult) {
  auto f2 = gf::field_of_order(2);
  const auto one = rank_census(f2, 4, kDefaultAmbientBudget, 1);
  for (unsigned w : {2u, 3u, 8u}) EXPECT_EQ(rank_census(f2, 4, kDefaultAmbientBudget, w).counts, one.counts);
}

TEST(Puncture, Examples) {
  auto f2 = gf::field_of_order(2);
  EXPECT_EQ(puncture_matrix(SymMatrix::identity(f2, 3), 2), SymMatrix::identity(f2, 2));
  for (unsigned k = 0; k < 4; ++k) EXPECT_TRUE(puncture_matrix(SymMatrix(f2, 4), k).is_zero());
  const auto m = SymMatrix::from_rows(f2, {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  const auto p = puncture_matrix(m, 0);
  EXPECT_EQ(p.order(), 2u);
  EXPECT_EQ(p(0, 0), 1u);
  EXPECT_EQ(p(0, 1), 1u);
  EXPECT_EQ(p(1, 1), 0u);
}

TEST(Puncture, Errors) {
  auto f2 = gf::field_of_order(2);
  EXPECT_THROW(puncture_matrix(SymMatrix::identity(f2, 1), 0), std::invalid_argument);
  EXPECT_THROW(puncture_matrix(SymMatrix::identity(f2, 3), 3), std::out_of_range);
}

TEST(Puncture, RankDropAtMostTwo) {
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    for (const auto& a : enumerate_sym(gf::field_of_order(q), m)) {
      const unsigned r = rank(a);
      for (unsigned k = 0; k < m; ++k) {
        const unsigned s = rank(puncture_matrix(a, k));
        ASSERT_LE(s, r);
        ASSERT_LE(r - s, 2u);
      }
      if (m == 3 && r == 3) {
        for (unsigned k = 0; k < m; ++k) ASSERT_GE(rank(puncture_matrix(a, k)), 1u);
      }
    }
  }
}

TEST(SymMatrixType, Validation) {
  auto f2 = gf::field_of_order(2);
  EXPECT_THROW(SymMatrix(f2, 0), std::invalid_argument);
  EXPECT_THROW(SymMatrix(nullptr, 2), std::invalid_argument);
  EXPECT_THROW(SymMatrix(f2, 2, {1, 0}), std::invalid_argument);
  EXPECT_THROW(SymMatrix(f2, 2, {1, 0, 2}), std::invalid_argument);
  EXPECT_THROW(SymMatrix::from_rows(f2, {{1, 1}, {0, 1}}), std::invalid_argument);
  auto a = SymMatrix(f2, 3);
  a.set(2, 0, 1);
  EXPECT_EQ(a(0, 2), 1u);
  const auto full = a.full();
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) EXPECT_EQ(full[i * 3 + j], full[j * 3 + i]);
}

TEST(SymMatrixType, Arithmetic) {
  auto f3 = gf::field_of_order(3);
  const auto id = SymMatrix::identity(f3, 2);
  EXPECT_TRUE((id - id).is_zero());
  EXPECT_EQ(id + id, id.scaled(2));
  EXPECT_EQ((id + id + id), SymMatrix(f3, 2));
}

TEST(SymMatrixType, JsonRoundTrip) {
  std::mt19937_64 rng(3);
  auto f9 = gf::field_of_order(9);
  for (int s = 0; s < 20; ++s) {
    const auto a = random_sym(f9, 3, rng);
    const auto j = to_json(a);
    EXPECT_EQ(j["m"], 3);
    EXPECT_EQ(j["upper"].size(), 6u);
    EXPECT_EQ(j["upper"][0].size(), 2u);
    EXPECT_EQ(sym_matrix_from_json(j, f9), a);
  }
  auto bad = to_json(SymMatrix::identity(f9, 2));
  bad["upper"].erase(0);
  EXPECT_THROW(sym_matrix_from_json(bad, f9), std::invalid_argument);
}

TEST(RankTable, AgreesWithRank) {
  auto f3 = gf::field_of_order(3);
  SymSpace space(f3, 3);
  const auto table = rank_table(space, 2);
  ASSERT_EQ(table.size(), space.size());
  for (std::uint64_t i = 0; i < space.size(); i += 7) EXPECT_EQ(table[i], rank(space.at(i)));
}
