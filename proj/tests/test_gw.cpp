#include <grassgw/gw.hpp>
#include <grassgw/pairing.hpp>

#include <gtest/gtest.h>

using namespace grassgw;

namespace
{
FormalDecomposition make(std::initializer_list< Summand > s)
{
    FormalDecomposition d;
    for (const auto& x : s)
        d.add(x.theory, x.shift, x.multiplicity);
    return d;
}

// Symmetric and asymmetric counts straight from enumeration.
std::pair< std::uint64_t, std::uint64_t > enumerated_counts(int k, int l)
{
    const Frame f(k, l);
    std::uint64_t s = 0, a = 0;
    for (const auto& p : enumerate_frame(f))
        (is_symmetric(p, f) ? s : a) += 1;
    return {s, a};
}
} // namespace

TEST(FormalDecomposition, MergesAndNormalizes)
{
    FormalDecomposition d;
    d.add(Theory::K, 5, 2).add(Theory::K, -1, 1).add(Theory::W, 6, 1).add(Theory::W, -2, 1).add(Theory::GW, 0, 0);
    EXPECT_EQ(d.summands().size(), 2u);
    EXPECT_EQ(d.multiplicity(Theory::K), 3u);
    EXPECT_EQ(d.multiplicity(Theory::W, 2), 2u);
}

TEST(GwDecompose, Examples)
{
    const int r = 3;
    EXPECT_TRUE(gw_decompose(1, 2, 1, r).same_summands(make({{Theory::K, 0, 1}})));
    EXPECT_TRUE(gw_decompose(2, 4, 2, r).same_summands(make({{Theory::GW, r, 2}, {Theory::K, 0, 2}})));
    EXPECT_TRUE(gw_decompose(2, 4, 1, r).same_summands(make({{Theory::GW, r - 2, 2}, {Theory::K, 0, 2}})));
    EXPECT_TRUE(gw_decompose(2, 3, 1, r).same_summands(make({{Theory::GW, r - 2, 1}, {Theory::K, 0, 1}})));
    EXPECT_THROW(gw_decompose(3, 2, 0, 0), std::domain_error);
    EXPECT_THROW(gw_decompose(-1, 2, 0, 0), std::domain_error);
}

TEST(GwDecompose, PointsAtEveryTwist)
{
    for (int n = 0; n <= 5; ++n)
        for (int t = -2; t <= 2; ++t)
        {
            EXPECT_TRUE(gw_decompose(0, n, t, 1).same_summands(make({{Theory::GW, 1, 1}})));
            EXPECT_TRUE(gw_decompose(n, n, t, 1).same_summands(make({{Theory::GW, 1, 1}})));
        }
}

TEST(GwDecompose, AlignedTwistMatchesEnumerationAndPairing)
{
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
        {
            const int l = n - k;
            const auto d = gw_decompose(k, n, l, 0);
            const auto [s, a] = enumerated_counts(k, l);
            if ((k * l) % 2 == 1)
            {
                EXPECT_EQ(s, 0u);
                EXPECT_TRUE(d.same_summands(make({{Theory::K, 0, a / 2}})));
                continue;
            }
            const int shift = classify_pairing(k, n) == PairingKind::SkewSymmetric ? -2 : 0;
            EXPECT_TRUE(d.same_summands(make({{Theory::GW, shift, s}, {Theory::K, 0, a / 2}}))) << k << "," << n;
        }
}

TEST(GwDecompose, TwistReducedModTwo)
{
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k)
            for (int t = -4; t <= 4; ++t)
                EXPECT_TRUE(gw_decompose(k, n, t, 1).same_summands(gw_decompose(k, n, t + 2, 1)));
}

TEST(GwDecompose, RankConservation)
{
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k < n; ++k)
        {
            const int l = n - k;
            const auto a = gw_decompose(k, n, l, 0), o = gw_decompose(k, n, l - 1, 0);
            EXPECT_EQ(2 * a.total(Theory::K) + a.total(Theory::GW), count_R(k, l));
            EXPECT_EQ(2 * o.total(Theory::K) + o.total(Theory::GW), count_R(k - 1, l) + count_R(k, l - 1));
        }
}

TEST(LDecompose, Examples)
{
    EXPECT_TRUE(l_decompose(1, 2, 1, 0).empty());
    EXPECT_TRUE(w_decompose(2, 4, 2, 1).same_summands(make({{Theory::W, 1, 2}})));
    EXPECT_TRUE(w_decompose(2, 4, 1, 1).same_summands(make({{Theory::W, -1, 2}})));
    EXPECT_EQ(w_decompose(2, 4, 1, 1).summands().front().shift, 3);
}

TEST(LDecompose, IsGwWithoutK)
{
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            for (int t = 0; t <= 1; ++t)
                for (int r = -3; r <= 3; ++r)
                {
                    const auto gw = gw_decompose(k, n, t, r);
                    FormalDecomposition expected;
                    for (const auto& s : gw.summands())
                        if (s.theory == Theory::GW)
                            expected.add(Theory::L, s.shift, s.multiplicity);
                    EXPECT_TRUE(l_decompose(k, n, t, r).same_summands(expected));
                    FormalDecomposition w;
                    for (const auto& s : gw.summands())
                        if (s.theory == Theory::GW)
                            w.add(Theory::W, s.shift, s.multiplicity);
                    EXPECT_TRUE(w_decompose(k, n, t, r).same_summands(w));
                }
}

TEST(KRank, Examples)
{
    EXPECT_EQ(k_rank(1, 2), 2u);
    EXPECT_EQ(k_rank(2, 4), 6u);
    EXPECT_EQ(k_rank(4, 9), 126u);
    EXPECT_EQ(k_decompose(2, 4, 0).multiplicity(Theory::K), 6u);
}

TEST(SplitFibration, WorkedInstance)
{
    const int r = 5;
    const auto lhs = gw_decompose(2, 4, 1, r);
    const auto a = gw_decompose(1, 3, 2, r - 2), b = gw_decompose(2, 3, 1, r);
    EXPECT_TRUE(a.same_summands(make({{Theory::GW, r - 2, 1}, {Theory::K, 0, 1}})));
    EXPECT_TRUE(b.same_summands(make({{Theory::GW, r - 2, 1}, {Theory::K, 0, 1}})));
    EXPECT_TRUE(lhs.same_summands(a + b));
    EXPECT_TRUE(split_fibration_check(2, 4, r).passed);
    EXPECT_TRUE(split_fibration_check(1, 2, r).passed);
    EXPECT_TRUE(gw_decompose(1, 2, 0, r).same_summands(gw_decompose(0, 1, 1, r - 1) + gw_decompose(1, 1, 0, r)));
}

TEST(SplitFibration, AllCellsUpToTen)
{
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            for (int r = -3; r <= 3; ++r)
            {
                const auto c = split_fibration_check(k, n, r);
                EXPECT_TRUE(c.passed) << (c.diagnostics.empty() ? "" : c.diagnostics.front());
            }
    EXPECT_THROW(split_fibration_check(3, 3, 0), std::domain_error);
}

TEST(SplitFibration, DetectsTamperedDecomposition)
{
    auto lhs = gw_decompose(3, 7, 3, 0);
    const auto rhs = gw_decompose(2, 6, 4, -4) + gw_decompose(3, 6, 3, 0);
    EXPECT_TRUE(lhs.same_summands(rhs));
    lhs.add(Theory::K, 0, 1);
    EXPECT_FALSE(lhs.same_summands(rhs));
}

TEST(TwistConvention, ExactOnlyAtTheTwoFormulaTwists)
{
    EXPECT_STREQ(twist_convention(2, 4, 2), "exact");
    EXPECT_STREQ(twist_convention(2, 4, 1), "exact");
    EXPECT_STREQ(twist_convention(2, 4, 0), "parity");
    EXPECT_STREQ(twist_convention(2, 4, 5), "parity");
}
