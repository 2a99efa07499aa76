#include <gtest/gtest.h>

#include "symrank/counting.hpp"

using namespace symrank;
using namespace symrank::counting;

namespace {

ExactRatio frac(long long n, long long d) { return ExactRatio(n, d); }

const std::vector<std::uint64_t> kQs{2, 3, 4, 5};

}  // namespace

TEST(SphereSize, Examples) {
  EXPECT_EQ(sphere_size(2, 3, 1), 7);
  EXPECT_EQ(sphere_size(2, 3, 2), 28);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
    for (unsigned m = 1; m <= 6; ++m) EXPECT_EQ(sphere_size(q, m, 0), 1);
  }
}

TEST(SphereSize, EnumeratedValues) {
  const std::vector<std::tuple<std::uint64_t, unsigned, std::vector<long long>>> census{
      {2, 1, {1, 1}},         {2, 2, {1, 3, 4}},      {2, 3, {1, 7, 28, 28}},
      {2, 4, {1, 15, 140, 420, 448}},                  {3, 2, {1, 8, 18}},
      {3, 3, {1, 26, 234, 468}},                       {5, 2, {1, 24, 100}},
      {2, 5, {1, 31, 620, 4340, 13888, 13888}}};
  for (const auto& [q, m, counts] : census) {
    for (unsigned t = 0; t <= m; ++t) EXPECT_EQ(sphere_size(q, m, t), counts[t]) << q << "," << m << "," << t;
  }
  EXPECT_EQ(sphere_size(4, 2, 1), 15);
  EXPECT_EQ(sphere_size(4, 2, 2), 48);
}

TEST(SphereSize, Errors) {
  EXPECT_THROW(sphere_size(2, 3, 4), std::invalid_argument);
  EXPECT_THROW(sphere_size(6, 3, 1), std::invalid_argument);
  EXPECT_THROW(sphere_size(1, 3, 1), std::invalid_argument);
  EXPECT_THROW(sphere_size(2, 0, 0), std::invalid_argument);
  try {
    sphere_size(6, 3, 1);
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not a prime power"), std::string::npos);
  }
}

TEST(SphereSize, PartitionOfAmbient) {
  for (std::uint64_t q : kQs) {
    for (unsigned m = 1; m <= 6; ++m) {
      ExactCount sum = 0;
      for (unsigned t = 0; t <= m; ++t) sum += sphere_size(q, m, t);
      EXPECT_EQ(sum, ambient_size(q, m));
    }
  }
}

TEST(SphereSize, LargeParametersExact) {
  // beyond 64 bits; the sum identity still holds exactly
  ExactCount sum = 0;
  for (unsigned t = 0; t <= 20; ++t) sum += sphere_size(9, 20, t);
  EXPECT_EQ(sum, ipow(9, 210));
}

TEST(BallSize, Examples) {
  EXPECT_EQ(ball_size(2, 3, 1), 8);
  EXPECT_EQ(ball_size(2, 3, 3), 64);
  EXPECT_EQ(ball_size(2, 5, 1), 32);
  EXPECT_THROW(ball_size(2, 3, 4), std::invalid_argument);
}

TEST(BallSize, MonotoneAndFull) {
  for (std::uint64_t q : kQs) {
    for (unsigned m = 1; m <= 7; ++m) {
      for (unsigned t = 1; t <= m; ++t) EXPECT_GE(ball_size(q, m, t), ball_size(q, m, t - 1));
      EXPECT_EQ(ball_size(q, m, m), ambient_size(q, m));
    }
  }
}

TEST(Ball2, Examples) {
  EXPECT_EQ(ball2_closed_form(2, 2), 8);
  EXPECT_EQ(ball2_closed_form(2, 3), 36);
  EXPECT_EQ(ball2_closed_form(2, 5), 652);
  EXPECT_THROW(ball2_closed_form(2, 1), std::invalid_argument);
  EXPECT_THROW(ball2_closed_form(10, 3), std::invalid_argument);
}

TEST(Ball2, MatchesSum) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
    for (unsigned m = 2; m <= 12; ++m) EXPECT_EQ(ball2_closed_form(q, m), ball_size(q, m, 2));
  }
}

TEST(Bounds, SphereExamples) {
  const auto b = sphere_bounds(2, 3, 1);
  EXPECT_EQ(b.lower, 4);
  EXPECT_EQ(b.upper, 8);
  EXPECT_LT(b.lower, ExactRatio(7));
  EXPECT_LE(ExactRatio(7), b.upper);
  const auto z = sphere_bounds(3, 4, 0);
  EXPECT_EQ(z.lower, 1);
  EXPECT_EQ(z.upper, 1);
  EXPECT_EQ(ball_bounds(2, 3, 2).upper, 128);
  EXPECT_THROW(sphere_bounds(2, 3, 4), std::invalid_argument);
  EXPECT_THROW(ball_bounds(2, 3, 4), std::invalid_argument);
}

TEST(Bounds, Sandwich) {
  for (std::uint64_t q : kQs) {
    for (unsigned m = 1; m <= 8; ++m) {
      for (unsigned i = 0; i <= m; ++i) {
        const ExactRatio s(sphere_size(q, m, i));
        const ExactRatio b(ball_size(q, m, i));
        const auto sb = sphere_bounds(q, m, i);
        const auto bb = ball_bounds(q, m, i);
        if (i == 0 || (q == 2 && m == 1)) {
          // S_1 of Sym_2(1) is 1 = 2^0: the strict lower bound is tight here
          EXPECT_EQ(sb.lower, s);
        } else {
          EXPECT_LT(sb.lower, s);
        }
        EXPECT_LE(s, sb.upper);
        EXPECT_TRUE(bb.contains(b));
        EXPECT_LE(sb.lower, sb.upper);
      }
    }
  }
}

TEST(Singleton, Examples) {
  EXPECT_EQ(singleton_max_dim(5, 3), 10u);
  EXPECT_EQ(singleton_max_dim(4, 3), 5u);
  for (unsigned m = 1; m <= 9; ++m) EXPECT_EQ(singleton_max_dim(m, 1), m * (m + 1) / 2);
  EXPECT_EQ(singleton_max_dim(4, 4), 4u);
  EXPECT_EQ(singleton_max_dim(3, 2), 4u);
  EXPECT_THROW(singleton_max_dim(3, 4), std::invalid_argument);
  EXPECT_THROW(singleton_max_dim(3, 0), std::invalid_argument);
}

TEST(SpherePacking, Examples) {
  EXPECT_EQ(sphere_packing_max_size(2, 5, 3), 1024);
  EXPECT_EQ(sphere_packing_max_size(2, 3, 3), 8);
  for (std::uint64_t q : kQs) {
    for (unsigned m = 1; m <= 5; ++m) EXPECT_EQ(sphere_packing_max_size(q, m, 1), ambient_size(q, m));
  }
  EXPECT_EQ(sphere_packing_max_size(2, 5, 5), ExactCount(32768 / 652));
  EXPECT_THROW(sphere_packing_max_size(2, 3, 4), std::invalid_argument);
}

TEST(Density, UpperBoundExamples) {
  EXPECT_EQ(density_upper_bound(2, 5, 3), 1);
  EXPECT_EQ(density_upper_bound(2, 4, 3), frac(1, 2));
  EXPECT_EQ(density_upper_bound(2, 5, 5), frac(163, 256));
  EXPECT_EQ(density_upper_bound(2, 5, 5), frac(1956, 3072));
  EXPECT_EQ(density_upper_bound(3, 4, 3), frac(1, 3));
  EXPECT_EQ(density_upper_bound(2, 4, 4), frac(1, 4));
  EXPECT_EQ(density_upper_bound(2, 6, 4), frac(1, 8));
  EXPECT_EQ(density_upper_bound(2, 8, 4), frac(1, 16));
  EXPECT_EQ(density_upper_bound(2, 5, 4), frac(1, 16));
  EXPECT_THROW(density_upper_bound(2, 4, 5), std::invalid_argument);
}

TEST(Density, RefinedBoundsEqualMrdDensity) {
  // The t in {1, 2} bounds are attained: they equal q^k B_t / |Sym| with k the
  // Singleton dimension.
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (unsigned m = 3; m <= 12; ++m) {
      for (unsigned d = 3; d <= std::min(m, 6u); ++d) {
        EXPECT_EQ(density_upper_bound(q, m, d), mrd_density(q, m, d)) << q << "," << m << "," << d;
      }
    }
  }
}

TEST(Density, SixCaseValues) {
  // d = 6 bounds evaluated independently in rational arithmetic.
  EXPECT_EQ(density_upper_bound(2, 6, 6), mrd_density(2, 6, 6));
  EXPECT_EQ(mrd_density(2, 6, 6), ExactRatio(ipow(2, 6) * ball_size(2, 6, 2), ipow(2, 21)));
  EXPECT_EQ(mrd_density(2, 7, 6), ExactRatio(ipow(2, 8) * ball_size(2, 7, 2), ipow(2, 28)));
}

TEST(Density, OfFormula) {
  EXPECT_EQ(density_of(2, 4, 3, 5), frac(1, 2));
  EXPECT_EQ(density_of(2, 5, 5, 5), frac(163, 256));
  for (std::uint64_t q : kQs) EXPECT_EQ(density_of(q, 3, 1, 6), 1);
}

TEST(Density, MrdBoundsExamples) {
  auto b = mrd_density_bounds(2, 5, 3);
  EXPECT_EQ(b.lower, frac(1, 2));
  EXPECT_EQ(b.upper, 2);
  EXPECT_TRUE(b.contains(1));
  b = mrd_density_bounds(2, 4, 3);
  EXPECT_EQ(b.lower, frac(1, 4));
  EXPECT_EQ(b.upper, 1);
  EXPECT_TRUE(b.contains(frac(1, 2)));
  b = mrd_density_bounds(2, 4, 4);
  EXPECT_EQ(b.lower, frac(1, 8));
  EXPECT_EQ(b.upper, frac(1, 2));
  for (unsigned m = 1; m <= 7; m += 2) {
    EXPECT_EQ(mrd_density_bounds(3, m, 1).lower, 1);
    EXPECT_TRUE(mrd_density_bounds(3, m, 1).contains(1));
  }
}

TEST(Density, MrdBoundsBracketMrdDensity) {
  for (std::uint64_t q : kQs) {
    for (unsigned m = 1; m <= 12; ++m) {
      for (unsigned d = 1; d <= m; ++d) {
        const auto b = mrd_density_bounds(q, m, d);
        EXPECT_LE(b.lower, b.upper);
        EXPECT_TRUE(b.contains(mrd_density(q, m, d))) << q << "," << m << "," << d;
        EXPECT_GE(density_upper_bound(q, m, d), b.lower);
      }
    }
  }
}

TEST(Density, BelowOneForLargerRadius) {
  for (std::uint64_t q : kQs) {
    for (unsigned m = 5; m <= 16; ++m) {
      for (unsigned d = 5; d <= m; ++d) {
        const ExactRatio u = density_upper_bound(q, m, d);
        EXPECT_LT(u, 1) << q << "," << m << "," << d;
        if (packing_radius(d) >= 3) {
          EXPECT_LE(u, ExactRatio(1, q)) << q << "," << m << "," << d;
        }
      }
    }
  }
}

TEST(Density, UpperBoundDominatesMrd) {
  for (std::uint64_t q : kQs) {
    for (unsigned m = 1; m <= 14; ++m) {
      for (unsigned d = 1; d <= m; ++d) EXPECT_GE(density_upper_bound(q, m, d), mrd_density(q, m, d));
    }
  }
}

TEST(Density, DistanceOneIsTrivial) {
  for (std::uint64_t q : kQs) {
    for (unsigned m = 1; m <= 6; ++m) {
      EXPECT_EQ(density_upper_bound(q, m, 1), 1);
      EXPECT_EQ(mrd_density(q, m, 1), 1);
    }
  }
}

TEST(Verdict, Classification) {
  EXPECT_EQ(quasi_perfect_verdict(1), QuasiPerfectVerdict::ExistsTrivial);
  EXPECT_EQ(quasi_perfect_verdict(3), QuasiPerfectVerdict::ExistsOddOrders);
  for (unsigned d : {2u, 4u, 5u, 6u, 7u, 8u, 20u}) EXPECT_EQ(quasi_perfect_verdict(d), QuasiPerfectVerdict::None);
  EXPECT_THROW(quasi_perfect_verdict(0), std::invalid_argument);
  EXPECT_EQ(to_string(QuasiPerfectVerdict::ExistsOddOrders), "EXISTS_ODD_ORDERS");
  EXPECT_EQ(to_string(QuasiPerfectVerdict::ExistsTrivial), "EXISTS_TRIVIAL");
  EXPECT_EQ(to_string(QuasiPerfectVerdict::None), "NONE");
}

TEST(Exact, JsonAndStrings) {
  const ExactRatio r(163, 256);
  const auto j = to_json(r);
  EXPECT_EQ(j["num"], "163");
  EXPECT_EQ(j["den"], "256");
  EXPECT_EQ(ratio_from_json(j), r);
  EXPECT_EQ(to_fraction_string(r), "163/256");
  const ExactCount big = ipow(3, 100);
  EXPECT_EQ(count_from_decimal(to_decimal(big)), big);
  EXPECT_EQ(ratio_from_json(to_json(ExactRatio(big, ipow(2, 90)))), ExactRatio(big, ipow(2, 90)));
}
