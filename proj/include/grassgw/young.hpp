#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace grassgw
{
// Weakly decreasing nonnegative parts, trailing zeros trimmed.
class Partition
{
public:
    Partition() = default;
    Partition(std::initializer_list< int > parts) : Partition(std::vector< int >(parts)) {}
    explicit Partition(std::vector< int > parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i)
        {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition: negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
    }

    const std::vector< int >& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast< int >(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    // 0-based row access; rows past the end read as zero.
    int operator[](int i) const noexcept
    {
        return i >= 0 && i < length() ? parts_[static_cast< std::size_t >(i)] : 0;
    }

    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    std::vector< int > padded(int rows) const
    {
        if (rows < length())
            throw std::domain_error("partition: longer than requested padding");
        std::vector< int > out(parts_);
        out.resize(static_cast< std::size_t >(rows), 0);
        return out;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector< int > parts_;
};

struct Frame
{
    int rows = 0;
    int cols = 0;

    Frame() = default;
    Frame(int k, int l) : rows(k), cols(l)
    {
        if (k < 0 || l < 0)
            throw std::domain_error("frame: negative dimension");
    }
    friend bool operator==(const Frame&, const Frame&) = default;
};

inline bool fits(const Partition& p, const Frame& f) noexcept
{
    return p.length() <= f.rows && p[0] <= f.cols;
}

inline void require_fits(const Partition& p, const Frame& f)
{
    if (!fits(p, f))
        throw std::domain_error("partition does not fit in frame");
}

inline std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i)
    {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

// Graded order: by size, then lexicographic on parts padded with zeros.
inline bool young_less(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    const int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

inline std::vector< Partition > enumerate_frame(const Frame& f)
{
    std::vector< Partition > out;
    std::vector< int > cur(static_cast< std::size_t >(f.rows), 0);
    auto rec = [&](auto&& self, int row, int cap) -> void {
        if (row == f.rows)
        {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= cap; ++v)
        {
            cur[static_cast< std::size_t >(row)] = v;
            self(self, row + 1, v);
        }
        cur[static_cast< std::size_t >(row)] = 0;
    };
    rec(rec, 0, f.cols);
    std::sort(out.begin(), out.end(), young_less);
    return out;
}

inline Partition complement(const Partition& p, const Frame& f)
{
    require_fits(p, f);
    std::vector< int > out(static_cast< std::size_t >(f.rows));
    for (int i = 0; i < f.rows; ++i)
        out[static_cast< std::size_t >(i)] = f.cols - p[f.rows - 1 - i];
    return Partition(out);
}

inline Partition transpose(const Partition& p)
{
    std::vector< int > out(static_cast< std::size_t >(p[0]), 0);
    for (int j = 0; j < p[0]; ++j)
        for (int i = 0; i < p.length() && p[i] > j; ++i)
            ++out[static_cast< std::size_t >(j)];
    return Partition(out);
}

inline bool is_symmetric(const Partition& p, const Frame& f)
{
    return complement(p, f) == p;
}

// Lattice path read from the lower-left corner: 1 = right step, 0 = up step.
struct BinaryPath
{
    std::vector< int > bits;

    bool is_palindrome() const { return std::equal(bits.begin(), bits.end(), bits.rbegin()); }
    BinaryPath dual() const
    {
        BinaryPath d{bits};
        for (auto& b : d.bits)
            b = 1 - b;
        return d;
    }
    BinaryPath reversed() const { return BinaryPath{{bits.rbegin(), bits.rend()}}; }
    friend bool operator==(const BinaryPath&, const BinaryPath&) = default;
};

inline BinaryPath to_binary_path(const Partition& p, const Frame& f)
{
    require_fits(p, f);
    BinaryPath path;
    path.bits.reserve(static_cast< std::size_t >(f.rows + f.cols));
    for (int i = f.rows - 1; i >= 0; --i)
    {
        path.bits.insert(path.bits.end(), static_cast< std::size_t >(p[i] - p[i + 1]), 1);
        path.bits.push_back(0);
    }
    path.bits.insert(path.bits.end(), static_cast< std::size_t >(f.cols - p[0]), 1);
    return path;
}

inline Partition from_binary_path(const BinaryPath& path)
{
    std::vector< int > rows_bottom_up;
    int width = 0;
    for (int b : path.bits)
    {
        if (b == 1)
            ++width;
        else
            rows_bottom_up.push_back(width);
    }
    return Partition(std::vector< int >(rows_bottom_up.rbegin(), rows_bottom_up.rend()));
}

// Closed forms are guarded to frames of at most this size on each side.
inline constexpr int max_closed_form_side = 15;

inline std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
    {
        const std::uint64_t num = static_cast< std::uint64_t >(n - k + i);
        const std::uint64_t g = std::gcd(r, static_cast< std::uint64_t >(i));
        const std::uint64_t a = r / g, d = static_cast< std::uint64_t >(i) / g;
        std::uint64_t hi;
        if (__builtin_mul_overflow(a, num / d, &hi))
            throw std::overflow_error("binomial overflow");
        r = hi;
    }
    return r;
}

namespace detail
{
inline void check_closed_form_frame(int k, int l)
{
    if (k < 0 || l < 0)
        throw std::domain_error("negative frame dimension");
    if (k > max_closed_form_side || l > max_closed_form_side)
        throw std::out_of_range("frame exceeds closed-form limit");
}
} // namespace detail

inline std::uint64_t count_R(int k, int l)
{
    detail::check_closed_form_frame(k, l);
    return binomial(k + l, k);
}

// Closed form C(k/2 + l/2, k/2). Nonzero even when k*l is odd, where no
// symmetric diagram exists; see count_symmetric for the enumerative count.
inline std::uint64_t count_S(int k, int l)
{
    detail::check_closed_form_frame(k, l);
    return binomial(k / 2 + l / 2, k / 2);
}

inline std::uint64_t count_A(int k, int l) { return count_R(k, l) - count_S(k, l); }

inline std::uint64_t count_symmetric(int k, int l)
{
    return (k % 2 == 1 && l % 2 == 1) ? 0 : count_S(k, l);
}

inline std::uint64_t count_asymmetric(int k, int l) { return count_R(k, l) - count_symmetric(k, l); }

class Permutation
{
public:
    Permutation() = default;
    explicit Permutation(std::vector< int > images) : images_(std::move(images))
    {
        std::vector< bool > seen(images_.size() + 1, false);
        for (int v : images_)
        {
            if (v < 1 || v > degree() || seen[static_cast< std::size_t >(v)])
                throw std::invalid_argument("permutation: images must be a bijection of 1..d");
            seen[static_cast< std::size_t >(v)] = true;
        }
    }

    static Permutation identity(int d)
    {
        std::vector< int > im(static_cast< std::size_t >(d));
        std::iota(im.begin(), im.end(), 1);
        return Permutation(im);
    }
    // Swaps i and j (1-based).
    static Permutation transposition(int d, int i, int j)
    {
        auto p = identity(d);
        if (i < 1 || j < 1 || i > d || j > d)
            throw std::domain_error("transposition outside 1..d");
        std::swap(p.images_[static_cast< std::size_t >(i - 1)], p.images_[static_cast< std::size_t >(j - 1)]);
        return p;
    }

    int degree() const noexcept { return static_cast< int >(images_.size()); }
    const std::vector< int >& images() const noexcept { return images_; }
    int operator()(int i) const { return images_.at(static_cast< std::size_t >(i - 1)); }

    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b)
    {
        if (a.degree() != b.degree())
            throw std::domain_error("permutation degree mismatch");
        std::vector< int > im(a.images_.size());
        for (int i = 1; i <= a.degree(); ++i)
            im[static_cast< std::size_t >(i - 1)] = a(b(i));
        return Permutation(im);
    }

    Permutation inverse() const
    {
        std::vector< int > im(images_.size());
        for (int i = 1; i <= degree(); ++i)
            im[static_cast< std::size_t >((*this)(i) - 1)] = i;
        return Permutation(im);
    }

    // Number of inversions.
    int length() const noexcept
    {
        int inv = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                inv += images_[i] > images_[j];
        return inv;
    }

    // sigma(v)_i = v_{sigma(i)}
    template < typename T >
    std::vector< T > act(const std::vector< T >& v) const
    {
        if (static_cast< int >(v.size()) != degree())
            throw std::domain_error("permutation and sequence length mismatch");
        std::vector< T > out(v.size());
        for (int i = 1; i <= degree(); ++i)
            out[static_cast< std::size_t >(i - 1)] = v[static_cast< std::size_t >((*this)(i) - 1)];
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector< int > images_;
};

inline Permutation straightening_permutation(const Partition& p)
{
    if (p.empty())
        throw std::domain_error("straightening permutation of the empty partition");
    const Partition t = transpose(p);
    std::vector< int > row_start(static_cast< std::size_t >(p.length()) + 1, 0);
    for (int j = 0; j < p.length(); ++j)
        row_start[static_cast< std::size_t >(j + 1)] = row_start[static_cast< std::size_t >(j)] + p[j];
    std::vector< int > im(static_cast< std::size_t >(p.size()));
    int pos = 0;
    for (int i = 1; i <= t.length(); ++i)
        for (int j = 1; j <= t[i - 1]; ++j)
            im[static_cast< std::size_t >(pos++)] = row_start[static_cast< std::size_t >(j - 1)] + i;
    return Permutation(im);
}
} // namespace grassgw
