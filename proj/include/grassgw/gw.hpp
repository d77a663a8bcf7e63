#pragma once

#include "young.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grassgw
{
enum class Theory
{
    GW,
    L,
    W,
    K
};

inline const char* to_string(Theory t)
{
    switch (t)
    {
    case Theory::GW: return "GW";
    case Theory::L: return "L";
    case Theory::W: return "W";
    case Theory::K: return "K";
    }
    return "?";
}

inline Theory theory_from_string(const std::string& s)
{
    if (s == "GW" || s == "gw")
        return Theory::GW;
    if (s == "L" || s == "l")
        return Theory::L;
    if (s == "W" || s == "w")
        return Theory::W;
    if (s == "K" || s == "k")
        return Theory::K;
    throw std::invalid_argument("unknown theory: " + s);
}

inline int mod4(int x) { return ((x % 4) + 4) % 4; }

struct Summand
{
    Theory theory;
    int shift;
    std::uint64_t multiplicity;
    friend bool operator==(const Summand&, const Summand&) = default;
};

enum class TwistClass
{
    Aligned, // twist = n - k mod 2
    Offset   // twist = n - k - 1 mod 2
};

inline TwistClass twist_class(int k, int n, int twist)
{
    return ((twist - (n - k)) % 2 == 0) ? TwistClass::Aligned : TwistClass::Offset;
}

// Twists n-k and n-k-1 are the ones with closed formulas; others go by parity.
inline const char* twist_convention(int k, int n, int twist)
{
    return (twist == n - k || twist == n - k - 1) ? "exact" : "parity";
}

struct DecompositionContext
{
    int k = 0;
    int n = 0;
    int twist = 0;
    Theory theory = Theory::GW;
    int shift = 0;
    friend bool operator==(const DecompositionContext&, const DecompositionContext&) = default;
};

class FormalDecomposition
{
public:
    FormalDecomposition() = default;
    explicit FormalDecomposition(DecompositionContext ctx) : ctx_(ctx) {}

    const DecompositionContext& context() const noexcept { return ctx_; }
    DecompositionContext& context() noexcept { return ctx_; }
    const std::vector< Summand >& summands() const noexcept { return summands_; }
    bool empty() const noexcept { return summands_.empty(); }

    // K summands are unshifted and W summands live mod 4.
    FormalDecomposition& add(Theory t, int shift, std::uint64_t mult)
    {
        if (mult == 0)
            return *this;
        if (t == Theory::K)
            shift = 0;
        else if (t == Theory::W)
            shift = mod4(shift);
        auto it = std::find_if(summands_.begin(), summands_.end(), [&](const Summand& s) { return s.theory == t && s.shift == shift; });
        if (it != summands_.end())
            it->multiplicity += mult;
        else
        {
            summands_.push_back({t, shift, mult});
            std::sort(summands_.begin(), summands_.end(), [](const Summand& a, const Summand& b) {
                if (a.theory != b.theory)
                    return a.theory < b.theory;
                return a.shift > b.shift;
            });
        }
        return *this;
    }

    std::uint64_t multiplicity(Theory t, int shift = 0) const
    {
        if (t == Theory::K)
            shift = 0;
        else if (t == Theory::W)
            shift = mod4(shift);
        for (const auto& s : summands_)
            if (s.theory == t && s.shift == shift)
                return s.multiplicity;
        return 0;
    }

    std::uint64_t total(Theory t) const
    {
        std::uint64_t m = 0;
        for (const auto& s : summands_)
            if (s.theory == t)
                m += s.multiplicity;
        return m;
    }

    // Multiset union; the context of the left operand is kept.
    friend FormalDecomposition operator+(FormalDecomposition a, const FormalDecomposition& b)
    {
        for (const auto& s : b.summands_)
            a.add(s.theory, s.shift, s.multiplicity);
        return a;
    }

    bool same_summands(const FormalDecomposition& o) const { return summands_ == o.summands_; }
    friend bool operator==(const FormalDecomposition&, const FormalDecomposition&) = default;

private:
    DecompositionContext ctx_;
    std::vector< Summand > summands_;
};

inline std::string to_string(const Summand& s)
{
    std::string out = to_string(s.theory);
    if (s.theory != Theory::K)
        out += "^" + std::to_string(s.shift);
    return out + " x" + std::to_string(s.multiplicity);
}

inline std::string to_string(const FormalDecomposition& d)
{
    if (d.empty())
        return "0";
    std::string out;
    for (const auto& s : d.summands())
    {
        if (!out.empty())
            out += " + ";
        out += to_string(s);
    }
    return out;
}

enum class FormulaCase
{
    Point,
    OddFrame,         // aligned, k(n-k) odd
    AlignedSkew,      // aligned, n-k odd and k = 2 mod 4
    AlignedSymmetric, // aligned, all other frames
    OffsetK0LEvenK1LOdd,
    OffsetKEvenLOdd,
    OffsetKOddLEven,
    OffsetK2LEven,
    OffsetK3LOdd
};

inline const char* to_string(FormulaCase c)
{
    switch (c)
    {
    case FormulaCase::Point: return "point";
    case FormulaCase::OddFrame: return "aligned: k(n-k) odd";
    case FormulaCase::AlignedSkew: return "aligned: n-k odd, k=2 mod 4";
    case FormulaCase::AlignedSymmetric: return "aligned: otherwise";
    case FormulaCase::OffsetK0LEvenK1LOdd: return "offset: k=0 mod 4 and n-k even, or k=1 mod 4 and n-k odd";
    case FormulaCase::OffsetKEvenLOdd: return "offset: k even, n-k odd";
    case FormulaCase::OffsetKOddLEven: return "offset: k odd, n-k even";
    case FormulaCase::OffsetK2LEven: return "offset: k=2 mod 4, n-k even";
    case FormulaCase::OffsetK3LOdd: return "offset: k=3 mod 4, n-k odd";
    }
    return "?";
}

inline void check_grassmannian_dims(int k, int n)
{
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("invalid Grassmannian Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
}

inline FormulaCase formula_case(int k, int n, int twist)
{
    check_grassmannian_dims(k, n);
    const int l = n - k;
    if (k == 0 || l == 0)
        return FormulaCase::Point;
    if (twist_class(k, n, twist) == TwistClass::Aligned)
    {
        if (k % 2 == 1 && l % 2 == 1)
            return FormulaCase::OddFrame;
        if (l % 2 == 1 && k % 4 == 2)
            return FormulaCase::AlignedSkew;
        return FormulaCase::AlignedSymmetric;
    }
    if ((k % 4 == 0 && l % 2 == 0) || (k % 4 == 1 && l % 2 == 1))
        return FormulaCase::OffsetK0LEvenK1LOdd;
    if (k % 2 == 0 && l % 2 == 1)
        return FormulaCase::OffsetKEvenLOdd;
    if (k % 2 == 1 && l % 2 == 0)
        return FormulaCase::OffsetKOddLEven;
    if (k % 4 == 2)
        return FormulaCase::OffsetK2LEven;
    return FormulaCase::OffsetK3LOdd;
}

// Only frames with k*l even enter the halved asymmetric counts below.
inline std::uint64_t half(std::uint64_t x)
{
    if (x % 2 != 0)
        throw std::logic_error("odd count where an even one is required");
    return x / 2;
}

inline FormalDecomposition gw_decompose(int k, int n, int twist, int r)
{
    FormalDecomposition d({k, n, twist, Theory::GW, r});
    const int l = n - k;
    using T = Theory;
    switch (formula_case(k, n, twist))
    {
    case FormulaCase::Point: d.add(T::GW, r, 1); break;
    case FormulaCase::OddFrame: d.add(T::K, 0, half(count_R(k, l))); break;
    case FormulaCase::AlignedSkew:
        d.add(T::GW, r - 2, count_S(k, l)).add(T::K, 0, half(count_A(k, l)));
        break;
    case FormulaCase::AlignedSymmetric: d.add(T::GW, r, count_S(k, l)).add(T::K, 0, half(count_A(k, l))); break;
    case FormulaCase::OffsetK0LEvenK1LOdd:
        d.add(T::GW, r - l, count_S(k - 1, l))
            .add(T::GW, r, count_S(k, l - 1))
            .add(T::K, 0, half(count_A(k - 1, l) + count_A(k, l - 1)));
        break;
    case FormulaCase::OffsetKEvenLOdd:
        d.add(T::GW, r, count_S(k, l - 1)).add(T::K, 0, half(count_R(k - 1, l) + count_A(k, l - 1)));
        break;
    case FormulaCase::OffsetKOddLEven:
        d.add(T::GW, r - l, count_S(k - 1, l)).add(T::K, 0, half(count_R(k, l - 1) + count_A(k - 1, l)));
        break;
    case FormulaCase::OffsetK2LEven:
        d.add(T::GW, r - l, count_S(k - 1, l))
            .add(T::GW, r - 2, count_S(k, l - 1))
            .add(T::K, 0, half(count_A(k - 1, l) + count_A(k, l - 1)));
        break;
    case FormulaCase::OffsetK3LOdd:
        d.add(T::GW, r - l - 2, count_S(k - 1, l))
            .add(T::GW, r, count_S(k, l - 1))
            .add(T::K, 0, half(count_A(k - 1, l) + count_A(k, l - 1)));
        break;
    }
    return d;
}

inline FormalDecomposition l_decompose(int k, int n, int twist, int r)
{
    FormalDecomposition d({k, n, twist, Theory::L, r});
    const auto gw = gw_decompose(k, n, twist, r);
    for (const auto& s : gw.summands())
        if (s.theory == Theory::GW)
            d.add(Theory::L, s.shift, s.multiplicity);
    return d;
}

// Each GW^{r+j} summand contributes W^{i+j}.
inline FormalDecomposition w_decompose(int k, int n, int twist, int i)
{
    FormalDecomposition d({k, n, twist, Theory::W, mod4(i)});
    const auto gw = gw_decompose(k, n, twist, 0);
    for (const auto& s : gw.summands())
        if (s.theory == Theory::GW)
            d.add(Theory::W, i + s.shift, s.multiplicity);
    return d;
}

inline std::uint64_t k_rank(int k, int n)
{
    check_grassmannian_dims(k, n);
    return binomial(n, k);
}

inline FormalDecomposition k_decompose(int k, int n, int twist)
{
    FormalDecomposition d({k, n, twist, Theory::K, 0});
    d.add(Theory::K, 0, k_rank(k, n));
    return d;
}

inline FormalDecomposition decompose(Theory t, int k, int n, int twist, int shift)
{
    switch (t)
    {
    case Theory::GW: return gw_decompose(k, n, twist, shift);
    case Theory::L: return l_decompose(k, n, twist, shift);
    case Theory::W: return w_decompose(k, n, twist, shift);
    case Theory::K: return k_decompose(k, n, twist);
    }
    throw std::invalid_argument("unknown theory");
}

struct SplitCheck
{
    bool passed = true;
    std::vector< std::string > diagnostics;
};

// Offset-twist answer on Gr(k,n) against the two aligned pieces Gr(k-1,n-1), Gr(k,n-1).
inline SplitCheck split_fibration_check(int k, int n, int r)
{
    if (k < 1 || k >= n)
        throw std::domain_error("split_fibration_check requires 1 <= k < n");
    SplitCheck out;
    const int l = n - k;
    auto compare = [&](const char* name, const FormalDecomposition& lhs, const FormalDecomposition& rhs) {
        if (!lhs.same_summands(rhs))
        {
            out.passed = false;
            out.diagnostics.push_back(std::string(name) + " Gr(" + std::to_string(k) + "," + std::to_string(n) + ") r=" + std::to_string(r) +
                                      ": expected " + to_string(rhs) + ", got " + to_string(lhs));
        }
    };
    compare("GW", gw_decompose(k, n, l - 1, r), gw_decompose(k - 1, n - 1, l, r - l) + gw_decompose(k, n - 1, l - 1, r));
    compare("L", l_decompose(k, n, l - 1, r), l_decompose(k - 1, n - 1, l, r - l) + l_decompose(k, n - 1, l - 1, r));
    compare("W", w_decompose(k, n, l - 1, r), w_decompose(k - 1, n - 1, l, r - l) + w_decompose(k, n - 1, l - 1, r));
    if (k_rank(k, n) != k_rank(k - 1, n - 1) + k_rank(k, n - 1))
    {
        out.passed = false;
        out.diagnostics.push_back("K rank Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
    }
    return out;
}
} // namespace grassgw
