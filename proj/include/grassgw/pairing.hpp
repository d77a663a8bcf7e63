#pragma once

#include "young.hpp"

namespace grassgw
{
enum class PairingKind
{
    Symmetric,
    SkewSymmetric
};

enum class Parity
{
    Even,
    Odd
};

inline const char* to_string(PairingKind k) { return k == PairingKind::Symmetric ? "symmetric" : "skew-symmetric"; }
inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// Parity of sum_i t_i * t_{l+1-i}, t the transpose padded to l = frame cols.
inline Parity diagram_parity(const Partition& lambda, const Frame& f)
{
    if (!is_symmetric(lambda, f))
        throw std::domain_error("diagram_parity: partition is not symmetric in frame");
    const auto t = transpose(lambda).padded(f.cols);
    long long sum = 0;
    for (int i = 0; i < f.cols; ++i)
        sum += static_cast< long long >(t[static_cast< std::size_t >(i)]) * t[static_cast< std::size_t >(f.cols - 1 - i)];
    return sum % 2 == 0 ? Parity::Even : Parity::Odd;
}

inline PairingKind classify_pairing(int k, int n)
{
    if (k < 0 || k > n)
        throw std::domain_error("classify_pairing: invalid Grassmannian");
    const int l = n - k;
    if (k % 2 == 1 && l % 2 == 1)
        throw std::domain_error("classify_pairing: k(n-k) odd, no symmetric partitions");
    return (l % 2 == 1 && k % 4 == 2) ? PairingKind::SkewSymmetric : PairingKind::Symmetric;
}
} // namespace grassgw
