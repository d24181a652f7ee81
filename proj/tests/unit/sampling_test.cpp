#include "qcount/errors.hpp"
#include "qcount/statevector.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace qcount;

TEST(SampleBit, Deterministic) {
    EXPECT_EQ(sample_bit(0.0, 1000, 17), 0u);
    EXPECT_EQ(sample_bit(1.0, 1024, 17), 1024u);
    EXPECT_EQ(sample_bit(0.3, 1000, 5), sample_bit(0.3, 1000, 5));
}

TEST(SampleBit, LargeSampleWithinFourSigma) {
    // sigma = sqrt(0.25 / 1e6) = 5e-4
    const auto ones = sample_bit(0.5, 1'000'000, 2019);
    EXPECT_NEAR(static_cast<double>(ones) / 1e6, 0.5, 0.002);
}

TEST(SampleBit, RejectsInvalidInput) {
    EXPECT_THROW(sample_bit(-0.1, 10, 0), DomainError);
    EXPECT_THROW(sample_bit(1.5, 10, 0), DomainError);
    EXPECT_THROW(sample_bit(std::nan(""), 10, 0), DomainError);
    EXPECT_THROW(sample_bit(0.5, 0, 0), DomainError);
}

TEST(SampleDistribution, SumsToShotsAndIsDeterministic) {
    const std::vector<double> p{0.1, 0.0, 0.6, 0.3};
    const auto a = sample_distribution(p, 5000, 3);
    const auto b = sample_distribution(p, 5000, 3);
    EXPECT_EQ(a, b);
    EXPECT_EQ(std::accumulate(a.begin(), a.end(), std::uint64_t{0}), 5000u);
    EXPECT_EQ(a[1], 0u);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double sigma = std::sqrt(p[i] * (1 - p[i]) / 5000);
        EXPECT_NEAR(static_cast<double>(a[i]) / 5000, p[i], 4 * sigma + 1e-12);
    }
}

TEST(DeriveSeed, DistinctStreams) {
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
    EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}
