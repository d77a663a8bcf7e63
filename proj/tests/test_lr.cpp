#include <grassgw/bott.hpp>
#include <grassgw/lr.hpp>

#include <gtest/gtest.h>

using namespace grassgw;

namespace
{
using Poly = std::map< std::vector< int >, long long >;

// Schur polynomial in N variables as a sum over semistandard tableaux.
Poly schur_poly(const Partition& shape, int N)
{
    Poly out;
    std::vector< std::vector< int > > t(static_cast< std::size_t >(shape.length()));
    for (int i = 0; i < shape.length(); ++i)
        t[static_cast< std::size_t >(i)].assign(static_cast< std::size_t >(shape[i]), 0);
    std::vector< int > exps(static_cast< std::size_t >(N), 0);
    std::vector< std::pair< int, int > > cells;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape[i]; ++j)
            cells.emplace_back(i, j);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size())
        {
            out[exps] += 1;
            return;
        }
        const auto [i, j] = cells[idx];
        int lo = 1;
        if (j > 0)
            lo = std::max(lo, t[i][j - 1]);
        if (i > 0)
            lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= N; ++v)
        {
            t[i][j] = v;
            ++exps[static_cast< std::size_t >(v - 1)];
            self(self, idx + 1);
            --exps[static_cast< std::size_t >(v - 1)];
        }
    };
    rec(rec, 0);
    return out;
}

Poly multiply(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
        {
            auto e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            out[e] += ca * cb;
        }
    return out;
}

// Peel off the lexicographically largest monomial, which is a leading Schur term.
std::map< Partition, long long > schur_expand(Poly p, int N)
{
    std::map< Partition, long long > out;
    for (;;)
    {
        for (auto it = p.begin(); it != p.end();)
            it = it->second == 0 ? p.erase(it) : std::next(it);
        if (p.empty())
            return out;
        const auto [lead, c] = *p.rbegin();
        const Partition nu(lead);
        out[nu] += c;
        for (const auto& [e, v] : schur_poly(nu, N))
            p[e] -= c * v;
    }
}
} // namespace

TEST(LrCoefficient, Examples)
{
    EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({2})), 1u);
    EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})), 1u);
    EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({3})), 0u);
    EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({2})), 1u);
    const auto other = bar(dual_weight(GeneralizedWeight{2, 1})).bar;
    EXPECT_EQ(other, Partition({1}));
    EXPECT_EQ(lr_coefficient(Partition({1}), other, Partition({2})), 1u);
    EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})), 2u);
    EXPECT_EQ(lr_coefficient(Partition({2}), Partition{}, Partition({2})), 1u);
    EXPECT_EQ(lr_coefficient(Partition({2}), Partition({1}), Partition({1, 1, 1})), 0u);
}

TEST(LrCoefficient, AgreesWithSchurPolynomialOracle)
{
    const auto ys = enumerate_frame(Frame(3, 3));
    int compared = 0;
    for (const auto& a : ys)
        for (const auto& b : ys)
        {
            const int N = a.size() + b.size();
            if (N == 0 || N > 6)
                continue;
            const auto oracle = schur_expand(multiply(schur_poly(a, N), schur_poly(b, N)), N);
            const auto got = lr_product(a, b, N);
            ASSERT_EQ(got.size(), oracle.size()) << to_string(a) << " " << to_string(b);
            for (const auto& [nu, c] : oracle)
            {
                EXPECT_EQ(static_cast< long long >(lr_coefficient(a, b, nu)), c) << to_string(a) << to_string(b) << to_string(nu);
                ++compared;
            }
        }
    EXPECT_GT(compared, 100);
}

TEST(LrCoefficient, SymmetricInFactors)
{
    const auto ys = enumerate_frame(Frame(3, 3));
    for (const auto& a : ys)
        for (const auto& b : ys)
            for (const auto& c : enumerate_frame(Frame(4, 4)))
                EXPECT_EQ(lr_coefficient(a, b, c), lr_coefficient(b, a, c));
}

TEST(LrCoefficient, HornInequalitiesOnSupport)
{
    const auto ys = enumerate_frame(Frame(3, 3));
    for (const auto& a : ys)
        for (const auto& b : ys)
            for (const auto& [nu, c] : lr_product(a, b, 6))
            {
                ASSERT_GT(c, 0u);
                for (int i = 1; i <= 6; ++i)
                    for (int j = 1; i + j - 1 <= 6; ++j)
                        EXPECT_LE(nu[i + j - 2], a[i - 1] + b[j - 1]);
            }
}

TEST(Weights, DualAndBar)
{
    EXPECT_EQ(dual_weight(GeneralizedWeight{2, 1}), (GeneralizedWeight{-1, -2}));
    EXPECT_EQ(bar(dual_weight(GeneralizedWeight{2, 1})), (BarForm{Partition({1}), -2}));
    EXPECT_EQ(dual_weight(GeneralizedWeight{0, 0, 0}), (GeneralizedWeight{0, 0, 0}));
    EXPECT_EQ(bar(GeneralizedWeight{0, 0, 0}).shift, 0);
    EXPECT_THROW(GeneralizedWeight({1, 2}), std::invalid_argument);
    for (const auto& w : {GeneralizedWeight{3, 1, -2}, GeneralizedWeight{-1, -1}, GeneralizedWeight{4, 4, 0}})
    {
        const auto b = bar(w);
        EXPECT_EQ(GeneralizedWeight::from_partition(b.bar, w.length()).shifted(b.shift), w);
        EXPECT_EQ(dual_weight(dual_weight(w)), w);
    }
}

TEST(TensorDecompose, Examples)
{
    EXPECT_EQ(tensor_decompose(GeneralizedWeight{1, 0}, GeneralizedWeight{1, 1}, 2), (WeightMultiset{{GeneralizedWeight{2, 1}, 1}}));
    EXPECT_EQ(tensor_decompose(GeneralizedWeight{0, -1}, GeneralizedWeight{1, 1}, 2), (WeightMultiset{{GeneralizedWeight{1, 0}, 1}}));
    EXPECT_EQ(tensor_decompose(GeneralizedWeight{}, GeneralizedWeight{2, 1}, 2), (WeightMultiset{{GeneralizedWeight{2, 1}, 1}}));
    // Hom(S^l Q, O) is S^{-l} Q: pairing with S^l Q contains the trivial summand once.
    const auto t = tensor_decompose(GeneralizedWeight{2, 1, 0}, dual_weight(GeneralizedWeight{2, 1, 0}), 3);
    EXPECT_EQ(t.at(GeneralizedWeight{0, 0, 0}), 1u);
}

TEST(TensorDecompose, RowBoundDropsLongWeights)
{
    const auto t = tensor_decompose(GeneralizedWeight{1, 0}, GeneralizedWeight{1, 1}, 3);
    EXPECT_EQ(t.size(), 2u);
    EXPECT_EQ(t.at(GeneralizedWeight{1, 1, 1}), 1u);
}

TEST(TensorDecompose, DimensionCount)
{
    for (int n = 1; n <= 5; ++n)
    {
        const auto ys = enumerate_frame(Frame(std::min(3, n), 3));
        for (const auto& a : ys)
            for (const auto& b : ys)
            {
                std::uint64_t sum = 0;
                for (const auto& [w, c] : tensor_decompose(GeneralizedWeight::from_partition(a, n), GeneralizedWeight::from_partition(b, n), n))
                    sum += c * weyl_dimension(w, n);
                EXPECT_EQ(sum, weyl_dimension(GeneralizedWeight::from_partition(a, n), n) * weyl_dimension(GeneralizedWeight::from_partition(b, n), n));
            }
    }
}

TEST(Pieri, Examples)
{
    EXPECT_EQ(pieri(Partition({1}), 1, 2), (WeightMultiset{{GeneralizedWeight{2, 0}, 1}, {GeneralizedWeight{1, 1}, 1}}));
    EXPECT_EQ(pieri(Partition{}, 0, 2), (WeightMultiset{{GeneralizedWeight{0, 0}, 1}}));
    const auto det = pieri(Partition({3, 1, 1}), 3, 3);
    EXPECT_EQ(det.count(GeneralizedWeight{4, 2, 2}), 1u);
    EXPECT_TRUE(pieri(Partition{}, 3, 2).empty());
}

TEST(Pieri, MatchesTensorWithColumns)
{
    for (int k = 1; k <= 4; ++k)
        for (const auto& a : enumerate_frame(Frame(k, 4)))
            for (int m = 0; m <= k; ++m)
            {
                const auto col = GeneralizedWeight::from_partition(Partition(std::vector< int >(static_cast< std::size_t >(m), 1)), k);
                EXPECT_EQ(pieri(a, m, k), tensor_decompose(GeneralizedWeight::from_partition(a, k), col, k));
            }
}

TEST(LrLemma, HookComplementCoefficientIsOne)
{
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k)
            for (const auto& lam : enumerate_frame(Frame(k - 1, n - k)))
            {
                auto head = lam.padded(k - 1);
                head.insert(head.begin(), n - k);
                const auto other = bar(dual_weight(GeneralizedWeight(head))).bar;
                EXPECT_EQ(other, complement(lam, Frame(k - 1, n - k)));
                EXPECT_EQ(lr_coefficient(lam, other, Partition(std::vector< int >(static_cast< std::size_t >(k - 1), n - k))), 1u);
            }
}
