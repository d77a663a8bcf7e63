#include <grassgw/young.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace grassgw;

namespace
{
// Every k-subset of k+l step positions as an up-step set gives one diagram.
std::set< Partition > diagrams_from_paths(int k, int l)
{
    std::set< Partition > out;
    const int len = k + l;
    for (unsigned mask = 0; mask < (1u << len); ++mask)
    {
        if (__builtin_popcount(mask) != k)
            continue;
        BinaryPath p;
        for (int i = 0; i < len; ++i)
            p.bits.push_back((mask >> i) & 1u ? 0 : 1);
        out.insert(from_binary_path(p));
    }
    return out;
}

std::uint64_t pascal(int k, int l)
{
    std::vector< std::vector< std::uint64_t > > t(static_cast< std::size_t >(k + 1), std::vector< std::uint64_t >(static_cast< std::size_t >(l + 1), 1));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= l; ++j)
            t[i][j] = t[i - 1][j] + t[i][j - 1];
    return t[k][l];
}
} // namespace

TEST(Partition, TrimsTrailingZerosAndValidates)
{
    EXPECT_EQ(Partition({2, 0}), Partition({2}));
    EXPECT_EQ(Partition({2, 0}).length(), 1);
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({1, -1}), std::invalid_argument);
    EXPECT_EQ(Partition({3, 2, 1}).size(), 6);
}

TEST(EnumerateFrame, TwoByTwoOrder)
{
    const std::vector< Partition > expected = {{}, {1}, {1, 1}, {2}, {2, 1}, {2, 2}};
    EXPECT_EQ(enumerate_frame(Frame(2, 2)), expected);
}

TEST(EnumerateFrame, SmallAndMediumFrames)
{
    EXPECT_EQ(enumerate_frame(Frame(1, 0)), std::vector< Partition >{Partition{}});
    EXPECT_EQ(enumerate_frame(Frame(4, 5)).size(), 126u);
}

TEST(EnumerateFrame, MatchesPathOracleAndPascal)
{
    for (int k = 0; k <= 6; ++k)
        for (int l = 0; l <= 6; ++l)
        {
            const auto ys = enumerate_frame(Frame(k, l));
            const std::set< Partition > got(ys.begin(), ys.end());
            EXPECT_EQ(got.size(), ys.size());
            EXPECT_EQ(got, diagrams_from_paths(k, l)) << k << "x" << l;
            EXPECT_EQ(ys.size(), pascal(k, l));
        }
}

TEST(EnumerateFrame, OrderRefinesSize)
{
    const auto ys = enumerate_frame(Frame(4, 4));
    for (std::size_t i = 0; i + 1 < ys.size(); ++i)
    {
        EXPECT_LE(ys[i].size(), ys[i + 1].size());
        EXPECT_TRUE(young_less(ys[i], ys[i + 1]));
    }
}

TEST(Complement, Examples)
{
    EXPECT_EQ(complement(Partition({5, 2, 1}), Frame(4, 5)), Partition({5, 4, 3}));
    EXPECT_EQ(complement(Partition({2}), Frame(2, 2)), Partition({2}));
    EXPECT_EQ(complement(Partition{}, Frame(3, 4)), Partition({4, 4, 4}));
    EXPECT_THROW(complement(Partition({3}), Frame(2, 2)), std::domain_error);
    EXPECT_THROW(complement(Partition({1, 1, 1}), Frame(2, 2)), std::domain_error);
}

TEST(Complement, InvolutionAndSize)
{
    for (int k = 0; k <= 6; ++k)
        for (int l = 0; l <= 6; ++l)
            for (const auto& p : enumerate_frame(Frame(k, l)))
            {
                const auto c = complement(p, Frame(k, l));
                EXPECT_EQ(complement(c, Frame(k, l)), p);
                EXPECT_EQ(c.size(), k * l - p.size());
            }
}

TEST(Transpose, Examples)
{
    EXPECT_EQ(transpose(Partition({2, 1})), Partition({2, 1}));
    EXPECT_EQ(transpose(Partition({3, 1})), Partition({2, 1, 1}));
    EXPECT_EQ(transpose(Partition{}), Partition{});
    for (const auto& p : enumerate_frame(Frame(5, 5)))
        EXPECT_EQ(transpose(transpose(p)), p);
}

TEST(Symmetric, Examples)
{
    EXPECT_TRUE(is_symmetric(Partition({1}), Frame(2, 1)));
    EXPECT_FALSE(is_symmetric(Partition({2, 1}), Frame(2, 2)));
    EXPECT_TRUE(is_symmetric(Partition({2}), Frame(2, 2)));
}

TEST(BinaryPath, FigureExample)
{
    const auto p = to_binary_path(Partition({5, 2, 1}), Frame(4, 5));
    EXPECT_EQ(p.bits, (std::vector< int >{0, 1, 0, 1, 0, 1, 1, 1, 0}));
    EXPECT_EQ(from_binary_path(p), Partition({5, 2, 1}));
}

// The complement's path is the reversed path, so palindromes are exactly the
// symmetric diagrams; bit swapping preserves palindromes, so the dual path
// gives the same predicate.
TEST(BinaryPath, PalindromeConventionAgainstComplement)
{
    for (int k = 0; k <= 8; ++k)
        for (int l = 0; l <= 8; ++l)
        {
            const Frame f(k, l);
            for (const auto& p : enumerate_frame(f))
            {
                const auto path = to_binary_path(p, f);
                EXPECT_EQ(to_binary_path(complement(p, f), f), path.reversed());
                EXPECT_EQ(path.is_palindrome(), is_symmetric(p, f));
                EXPECT_EQ(path.dual().is_palindrome(), is_symmetric(p, f));
                EXPECT_EQ(std::count(path.bits.begin(), path.bits.end(), 0), k);
            }
        }
}

TEST(Counts, Examples)
{
    EXPECT_EQ(count_R(2, 2), 6u);
    EXPECT_EQ(count_S(2, 2), 2u);
    EXPECT_EQ(count_A(2, 2), 4u);
    EXPECT_EQ(count_S(2, 3), 2u);
    for (int k = 0; k <= 6; ++k)
    {
        EXPECT_EQ(count_S(k, 0), 1u);
        EXPECT_EQ(count_R(k, 0), 1u);
    }
}

TEST(Counts, EnumerationOracle)
{
    for (int k = 0; k <= 8; ++k)
        for (int l = 0; l <= 8; ++l)
        {
            const Frame f(k, l);
            std::uint64_t sym = 0;
            for (const auto& p : enumerate_frame(f))
                sym += is_symmetric(p, f);
            EXPECT_EQ(sym, count_symmetric(k, l));
            if ((k * l) % 2 == 0)
                EXPECT_EQ(sym, count_S(k, l));
            else
                EXPECT_EQ(sym, 0u);
            EXPECT_EQ(count_asymmetric(k, l) % 2, 0u);
            EXPECT_EQ(count_R(k, l), pascal(k, l));
        }
}

TEST(Counts, ClosedFormIsNonzeroOnOddFrames)
{
    EXPECT_EQ(count_S(1, 1), 1u);
    EXPECT_EQ(count_symmetric(1, 1), 0u);
    EXPECT_EQ(count_asymmetric(3, 5), count_R(3, 5));
}

TEST(Counts, RejectsLargeFrames)
{
    EXPECT_NO_THROW(count_R(15, 15));
    EXPECT_EQ(count_R(15, 15), 155117520u);
    EXPECT_THROW(count_R(16, 2), std::out_of_range);
    EXPECT_THROW(count_S(2, 16), std::out_of_range);
}

TEST(Permutation, ConstructionAndAlgebra)
{
    EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
    const Permutation a({2, 3, 1}), b({1, 3, 2});
    EXPECT_EQ((a * b).images(), (std::vector< int >{2, 1, 3}));
    EXPECT_EQ(a * a.inverse(), Permutation::identity(3));
    EXPECT_EQ(Permutation({3, 2, 1}).length(), 3);
    EXPECT_EQ(Permutation::transposition(4, 2, 3).images(), (std::vector< int >{1, 3, 2, 4}));
    EXPECT_EQ(a.act(std::vector< int >{10, 20, 30}), (std::vector< int >{20, 30, 10}));
}

TEST(Straightening, Examples)
{
    EXPECT_EQ(straightening_permutation(Partition({2, 1})).images(), (std::vector< int >{1, 3, 2}));
    EXPECT_EQ(straightening_permutation(Partition({4})), Permutation::identity(4));
    EXPECT_EQ(straightening_permutation(Partition({1, 1, 1})), Permutation::identity(3));
    EXPECT_THROW(straightening_permutation(Partition{}), std::domain_error);
}

// Position of cell (row i, col j) in row-major order of lambda^t goes to the
// position of cell (j, i) in row-major order of lambda.
TEST(Straightening, TransposesCells)
{
    for (const auto& p : enumerate_frame(Frame(4, 4)))
    {
        if (p.empty())
            continue;
        const auto t = transpose(p);
        const auto s = straightening_permutation(p);
        auto pos = [](const Partition& shape, int r, int c) {
            int q = 0;
            for (int i = 0; i < r; ++i)
                q += shape[i];
            return q + c + 1;
        };
        for (int i = 0; i < t.length(); ++i)
            for (int j = 0; j < t[i]; ++j)
                EXPECT_EQ(s(pos(t, i, j)), pos(p, j, i));
        EXPECT_EQ(s.degree(), p.size());
    }
}
