#pragma once

#include "gw.hpp"

#include <optional>

namespace grassgw
{
enum class Direction
{
    Horizontal,
    Vertical
};

struct Segment
{
    Direction direction;
    int length;
    bool on_frame_border;
    friend bool operator==(const Segment&, const Segment&) = default;
};

// Maximal straight runs of the path from the lower-left to the upper-right corner.
struct BoundaryPath
{
    std::vector< Segment > segments;
};

inline BoundaryPath boundary_path(const Partition& p, const Frame& f)
{
    const auto bits = to_binary_path(p, f).bits;
    BoundaryPath out;
    int x = 0, y = 0;
    std::size_t i = 0;
    while (i < bits.size())
    {
        std::size_t j = i;
        while (j < bits.size() && bits[j] == bits[i])
            ++j;
        const int len = static_cast< int >(j - i);
        if (bits[i] == 1)
        {
            out.segments.push_back({Direction::Horizontal, len, y == 0 || y == f.rows});
            x += len;
        }
        else
        {
            out.segments.push_back({Direction::Vertical, len, x == 0 || x == f.cols});
            y += len;
        }
        i = j;
    }
    return out;
}

inline bool is_even_diagram(const Partition& p, const Frame& f)
{
    for (const auto& s : boundary_path(p, f).segments)
        if (!s.on_frame_border && s.length % 2 != 0)
            return false;
    return true;
}

enum class EvenDiagramClass
{
    FourBlocks,
    RowPlusBlocks,
    ColPlusBlocks,
    RowColPlusBlocks
};

inline const char* to_string(EvenDiagramClass c)
{
    switch (c)
    {
    case EvenDiagramClass::FourBlocks: return "four-blocks";
    case EvenDiagramClass::RowPlusBlocks: return "row+blocks";
    case EvenDiagramClass::ColPlusBlocks: return "column+blocks";
    case EvenDiagramClass::RowColPlusBlocks: return "row+column+blocks";
    }
    return "?";
}

namespace detail
{
// Rows pair up into equal even lengths, so the diagram tiles by 2x2 squares.
inline bool tiles_by_squares(const std::vector< int >& rows)
{
    for (std::size_t i = 0; i < rows.size(); i += 2)
    {
        const int a = rows[i], b = i + 1 < rows.size() ? rows[i + 1] : 0;
        if (a != b || a % 2 != 0)
            return false;
    }
    return true;
}

inline std::vector< int > drop_first(const std::vector< int >& v)
{
    return v.empty() ? v : std::vector< int >(v.begin() + 1, v.end());
}

inline std::vector< int > minus_one(std::vector< int > v)
{
    for (auto& x : v)
        --x;
    return v;
}
} // namespace detail

// Structural characterization, independent of the boundary-segment predicate.
inline std::vector< EvenDiagramClass > matching_classes(const Partition& p, const Frame& f)
{
    require_fits(p, f);
    const int d = f.rows, e = f.cols;
    const auto rows = p.parts();
    std::vector< EvenDiagramClass > out;
    if (detail::tiles_by_squares(rows))
        out.push_back(EvenDiagramClass::FourBlocks);
    if (e > 0 && e % 2 == 0 && p[0] == e && detail::tiles_by_squares(detail::drop_first(rows)))
        out.push_back(EvenDiagramClass::RowPlusBlocks);
    if (d > 0 && d % 2 == 0 && p.length() == d && detail::tiles_by_squares(transpose(Partition(detail::minus_one(rows))).parts()))
        out.push_back(EvenDiagramClass::ColPlusBlocks);
    if (d % 2 == 1 && e % 2 == 1 && p[0] == e && p.length() == d &&
        detail::tiles_by_squares(detail::minus_one(detail::drop_first(rows))))
        out.push_back(EvenDiagramClass::RowColPlusBlocks);
    return out;
}

inline std::optional< EvenDiagramClass > classify_even(const Partition& p, const Frame& f)
{
    const auto c = matching_classes(p, f);
    if (c.empty())
        return std::nullopt;
    return c.front();
}

// Half-perimeter of the outline mod 2.
inline int t_invariant(const Partition& p) { return p.empty() ? 0 : (p[0] + p.length()) % 2; }

inline int rho_invariant(const Partition& p) { return p.length(); }

inline FormalDecomposition witt_via_even_diagrams(int d, int e, int l, int i)
{
    FormalDecomposition out({d, d + e, l, Theory::W, mod4(i)});
    const Frame f(d, e);
    const int lp = ((l % 2) + 2) % 2;
    for (const auto& p : enumerate_frame(f))
        if (is_even_diagram(p, f) && t_invariant(p) == lp)
            out.add(Theory::W, i - p.size(), 1);
    return out;
}

inline std::uint64_t buffalo_total(int d, int m) { return count_R(d, m) - count_S(d, m); }

inline std::uint64_t beta(int d, int m, int l)
{
    const auto R = count_R(d, m), S = count_S(d, m);
    if (d % 2 == 0 || m % 2 == 0)
        return half(R - S);
    if (l % 2 != 0)
        return half(R);
    return half(R) - S;
}

namespace detail
{
inline bool center_first(const std::vector< Segment >& s)
{
    return s.size() > 1 && s[0].direction == Direction::Vertical;
}

// Smallest r >= 2 with s_2..s_{r-1} even and s_r vertical of odd length;
// the center needs a following segment s_{r+1}.
inline bool center_inner(const std::vector< Segment >& s)
{
    for (std::size_t r = 1; r < s.size(); ++r)
    {
        if (s[r].direction == Direction::Vertical && s[r].length % 2 == 1)
            return r + 1 < s.size();
        if (s[r].length % 2 == 1)
            return false;
    }
    return false;
}
} // namespace detail

inline int center_count(const Partition& p, const Frame& f)
{
    const auto s = boundary_path(p, f).segments;
    return static_cast< int >(detail::center_first(s)) + static_cast< int >(detail::center_inner(s));
}

inline bool is_k_even(const Partition& p, const Frame& f) { return center_count(p, f) > 0; }

// Closed formula for P^N with twist i.
inline FormalDecomposition projective_space_gw(int N, int i, int r)
{
    if (N < 0)
        throw std::domain_error("projective space of negative dimension");
    FormalDecomposition out({1, N + 1, i, Theory::GW, r});
    const bool i_even = ((i % 2) + 2) % 2 == 0;
    if (N % 2 == 0)
    {
        const auto m = static_cast< std::uint64_t >(N / 2);
        if (i_even)
            out.add(Theory::GW, r, 1).add(Theory::K, 0, m);
        else
            out.add(Theory::K, 0, m).add(Theory::GW, r - N, 1);
    }
    else if (i_even)
        out.add(Theory::GW, r, 1).add(Theory::K, 0, static_cast< std::uint64_t >((N - 1) / 2)).add(Theory::GW, r - N, 1);
    else
        out.add(Theory::K, 0, static_cast< std::uint64_t >((N + 1) / 2));
    return out;
}
} // namespace grassgw
