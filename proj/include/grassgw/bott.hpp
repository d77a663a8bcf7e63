#pragma once

#include "lr.hpp"

#include <optional>

namespace grassgw
{
// alpha = (q_block | r_block) describes S^q Q (x) S^r R on Gr(k, n).
struct FullWeight
{
    GeneralizedWeight q_block;
    GeneralizedWeight r_block;

    int k() const noexcept { return q_block.length(); }
    int n() const noexcept { return q_block.length() + r_block.length(); }
    std::vector< int > values() const
    {
        auto v = q_block.parts();
        v.insert(v.end(), r_block.parts().begin(), r_block.parts().end());
        return v;
    }
};

inline std::vector< int > rho(int n)
{
    std::vector< int > r(static_cast< std::size_t >(n));
    for (int i = 0; i < n; ++i)
        r[static_cast< std::size_t >(i)] = n - 1 - i;
    return r;
}

// (alpha).sigma = sigma(alpha + rho) - rho
inline std::vector< int > dotted_action(const std::vector< int >& alpha, const Permutation& sigma)
{
    if (static_cast< int >(alpha.size()) != sigma.degree())
        throw std::domain_error("dotted_action: length mismatch");
    const int n = sigma.degree();
    const auto r = rho(n);
    std::vector< int > shifted(alpha);
    for (int i = 0; i < n; ++i)
        shifted[static_cast< std::size_t >(i)] += r[static_cast< std::size_t >(i)];
    auto out = sigma.act(shifted);
    for (int i = 0; i < n; ++i)
        out[static_cast< std::size_t >(i)] -= r[static_cast< std::size_t >(i)];
    return out;
}

struct BottOutcome
{
    bool vanishes = true;
    int degree = 0;
    GeneralizedWeight nu;

    static BottOutcome vanishing() { return {}; }
    friend bool operator==(const BottOutcome&, const BottOutcome&) = default;
};

// Sort-based Bott algorithm on a raw integer weight of length n.
inline BottOutcome bott_raw(const std::vector< int >& alpha)
{
    const int n = static_cast< int >(alpha.size());
    const auto r = rho(n);
    std::vector< int > s(alpha);
    for (int i = 0; i < n; ++i)
        s[static_cast< std::size_t >(i)] += r[static_cast< std::size_t >(i)];
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
        {
            if (s[static_cast< std::size_t >(i)] == s[static_cast< std::size_t >(j)])
                return BottOutcome::vanishing();
            inversions += s[static_cast< std::size_t >(i)] < s[static_cast< std::size_t >(j)];
        }
    std::sort(s.begin(), s.end(), std::greater<>());
    for (int i = 0; i < n; ++i)
        s[static_cast< std::size_t >(i)] -= r[static_cast< std::size_t >(i)];
    return {false, inversions, GeneralizedWeight(s)};
}

inline BottOutcome bott(const FullWeight& alpha) { return bott_raw(alpha.values()); }

// Literal form of the algorithm: repeatedly apply (i,i+1) at the first ascent.
struct BottChain
{
    std::vector< int > steps; // position i stands for the transposition (i, i+1), 1-based
    std::vector< std::vector< int > > trace;
    BottOutcome outcome;
};

inline std::vector< int > apply_adjacent(const std::vector< int >& alpha, int i)
{
    if (i < 1 || i >= static_cast< int >(alpha.size()))
        throw std::domain_error("adjacent transposition out of range");
    auto out = alpha;
    const auto a = static_cast< std::size_t >(i - 1), b = static_cast< std::size_t >(i);
    out[a] = alpha[b] - 1;
    out[b] = alpha[a] + 1;
    return out;
}

inline std::vector< int > apply_chain(std::vector< int > alpha, const std::vector< int >& positions)
{
    for (int i : positions)
        alpha = apply_adjacent(alpha, i);
    return alpha;
}

// First i with alpha_{i+1} = alpha_i + 1, i.e. (i,i+1) fixes alpha; 0 if none.
inline int stabilizing_position(const std::vector< int >& alpha)
{
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
        if (alpha[i + 1] == alpha[i] + 1)
            return static_cast< int >(i) + 1;
    return 0;
}

// Whether the dotted reflection s_i (1-based) fixes alpha.
inline bool stabilized_by(const std::vector< int >& alpha, int i)
{
    return i >= 1 && static_cast< std::size_t >(i) < alpha.size() && alpha[static_cast< std::size_t >(i)] == alpha[static_cast< std::size_t >(i) - 1] + 1;
}

inline BottChain bott_chain(const std::vector< int >& alpha)
{
    BottChain ch;
    auto cur = alpha;
    ch.trace.push_back(cur);
    for (;;)
    {
        int ascent = 0;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            if (cur[i] < cur[i + 1])
            {
                ascent = static_cast< int >(i) + 1;
                break;
            }
        if (ascent == 0)
        {
            ch.outcome = {false, static_cast< int >(ch.steps.size()), GeneralizedWeight(cur)};
            return ch;
        }
        const auto a = static_cast< std::size_t >(ascent - 1);
        if (cur[a + 1] == cur[a] + 1)
        {
            ch.outcome = BottOutcome::vanishing();
            return ch;
        }
        cur = apply_adjacent(cur, ascent);
        ch.steps.push_back(ascent);
        ch.trace.push_back(cur);
    }
}

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t weyl_dimension(const GeneralizedWeight& nu, int n)
{
    if (nu.length() != n)
        throw std::domain_error("weyl_dimension: weight length differs from n");
    uint128 num = 1, den = 1;
    auto gcd128 = [](uint128 a, uint128 b) {
        while (b)
        {
            auto t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
        {
            const long long a = static_cast< long long >(nu[i]) - nu[j] + (j - i);
            if (a <= 0)
                throw std::domain_error("weyl_dimension: weight not nonincreasing");
            num *= static_cast< uint128 >(a);
            den *= static_cast< uint128 >(j - i);
            const auto g = gcd128(num, den);
            num /= g;
            den /= g;
            if (num >> 64)
                throw std::overflow_error("weyl_dimension overflow");
        }
    if (den != 1)
        throw std::logic_error("weyl_dimension: non-integral result");
    return static_cast< std::uint64_t >(num);
}

struct ExtTable
{
    std::map< std::pair< int, GeneralizedWeight >, std::uint64_t > entries;

    bool empty() const noexcept { return entries.empty(); }
    std::size_t size() const noexcept { return entries.size(); }
    void add(int degree, const GeneralizedWeight& nu, std::uint64_t mult) { entries[{degree, nu}] += mult; }
    int max_degree() const
    {
        int d = -1;
        for (const auto& [key, m] : entries)
            d = std::max(d, key.first);
        return d;
    }
    friend bool operator==(const ExtTable&, const ExtTable&) = default;
};

namespace detail
{
inline GeneralizedWeight pad_weight(const GeneralizedWeight& w, int k)
{
    if (w.length() > k)
        throw std::domain_error("weight longer than bundle rank");
    if (w.length() == k)
        return w;
    if (w.length() > 0 && w.last() < 0)
        throw std::domain_error("short weight with negative entries is ambiguous");
    auto v = w.parts();
    v.resize(static_cast< std::size_t >(k), 0);
    return GeneralizedWeight(v);
}

inline void check_grassmannian(int k, int n)
{
    if (k < 0 || n < 0 || k > n)
        throw std::domain_error("invalid Grassmannian dimensions");
}
} // namespace detail

// Cohomology of S^lambda Q (x) det(R)^p on Gr(k, n).
inline ExtTable cohomology_of_schur_bundle(int k, int n, const GeneralizedWeight& lambda, int detR_power)
{
    detail::check_grassmannian(k, n);
    FullWeight a{detail::pad_weight(lambda, k), GeneralizedWeight::constant(detR_power, n - k)};
    ExtTable t;
    const auto o = bott(a);
    if (!o.vanishes)
        t.add(o.degree, o.nu, 1);
    return t;
}

// RHom(S^source Q, S^target Q (x) det(Q)^t) on Gr(k, n).
inline ExtTable rhom_schur(int k, int n, const GeneralizedWeight& source, const GeneralizedWeight& target, int t)
{
    detail::check_grassmannian(k, n);
    const auto src = detail::pad_weight(source, k);
    const auto tgt = detail::pad_weight(target, k).shifted(t);
    ExtTable table;
    for (const auto& [w, mult] : tensor_decompose(tgt, dual_weight(src), k))
    {
        // det Q (x) det R is trivial, so det(Q)^c becomes det(R)^{-c}.
        const BarForm b = bar(w);
        FullWeight a{GeneralizedWeight::from_partition(b.bar, k), GeneralizedWeight::constant(-b.shift, n - k)};
        const auto o = bott(a);
        if (!o.vanishes)
            table.add(o.degree, o.nu, mult);
    }
    return table;
}

inline ExtTable rhom_schur(int k, int n, const Partition& source, const Partition& target, int t)
{
    return rhom_schur(k, n, GeneralizedWeight::from_partition(source, k), GeneralizedWeight::from_partition(target, k), t);
}
} // namespace grassgw
