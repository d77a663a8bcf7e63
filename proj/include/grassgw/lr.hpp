#pragma once

#include "young.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace grassgw
{
// Nonincreasing integer sequence of fixed length; entries may be negative.
class GeneralizedWeight
{
public:
    GeneralizedWeight() = default;
    GeneralizedWeight(std::initializer_list< int > parts) : GeneralizedWeight(std::vector< int >(parts)) {}
    explicit GeneralizedWeight(std::vector< int > parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] > parts_[i - 1])
                throw std::invalid_argument("weight: entries must be nonincreasing");
    }
    static GeneralizedWeight from_partition(const Partition& p, int length)
    {
        return GeneralizedWeight(p.padded(length));
    }
    static GeneralizedWeight constant(int value, int length)
    {
        return GeneralizedWeight(std::vector< int >(static_cast< std::size_t >(length), value));
    }

    const std::vector< int >& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast< int >(parts_.size()); }
    int operator[](int i) const { return parts_.at(static_cast< std::size_t >(i)); }
    int last() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
    bool is_constant() const noexcept
    {
        return parts_.empty() || parts_.front() == parts_.back();
    }

    GeneralizedWeight shifted(int c) const
    {
        auto v = parts_;
        for (auto& x : v)
            x += c;
        return GeneralizedWeight(v);
    }

    friend auto operator<=>(const GeneralizedWeight&, const GeneralizedWeight&) = default;
    friend bool operator==(const GeneralizedWeight&, const GeneralizedWeight&) = default;

private:
    std::vector< int > parts_;
};

inline std::string to_string(const GeneralizedWeight& w)
{
    std::string s = "(";
    for (int i = 0; i < w.length(); ++i)
    {
        if (i)
            s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

using WeightMultiset = std::map< GeneralizedWeight, std::uint64_t >;

// -(l_1,...,l_k) = (-l_k,...,-l_1)
inline GeneralizedWeight dual_weight(const GeneralizedWeight& w)
{
    std::vector< int > v(w.parts().rbegin(), w.parts().rend());
    for (auto& x : v)
        x = -x;
    return GeneralizedWeight(v);
}

struct BarForm
{
    Partition bar;
    int shift = 0;
    friend bool operator==(const BarForm&, const BarForm&) = default;
};

// w = bar + shift * (1,...,1) with the last entry of bar equal to zero.
inline BarForm bar(const GeneralizedWeight& w)
{
    const int c = w.last();
    std::vector< int > v = w.parts();
    for (auto& x : v)
        x -= c;
    return {Partition(v), c};
}

namespace detail
{
class LrCounter
{
public:
    LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu) : lam_(lambda), mu_(mu), nu_(nu)
    {
        for (int i = 0; i < nu_.length(); ++i)
            for (int j = nu_[i] - 1; j >= lam_[i]; --j)
                cells_.emplace_back(i, j);
        filling_.assign(static_cast< std::size_t >(nu_.length()), std::vector< int >(static_cast< std::size_t >(nu_[0]), 0));
        used_.assign(static_cast< std::size_t >(mu_.length()) + 1, 0);
    }

    std::uint64_t run()
    {
        count_ = 0;
        step(0);
        return count_;
    }

private:
    bool in_skew(int i, int j) const { return i >= 0 && j >= lam_[i] && j < nu_[i]; }

    void step(std::size_t idx)
    {
        if (idx == cells_.size())
        {
            ++count_;
            return;
        }
        const auto [i, j] = cells_[idx];
        int lo = 1, hi = mu_.length();
        if (in_skew(i, j + 1))
            hi = std::min(hi, filling_[static_cast< std::size_t >(i)][static_cast< std::size_t >(j + 1)]);
        if (in_skew(i - 1, j))
            lo = std::max(lo, filling_[static_cast< std::size_t >(i - 1)][static_cast< std::size_t >(j)] + 1);
        // An entry in row i of a lattice filling never exceeds i + 1.
        hi = std::min(hi, i + 1);
        for (int v = lo; v <= hi; ++v)
        {
            auto& u = used_[static_cast< std::size_t >(v)];
            if (u >= mu_[v - 1])
                continue;
            if (v > 1 && u + 1 > used_[static_cast< std::size_t >(v - 1)])
                continue;
            ++u;
            filling_[static_cast< std::size_t >(i)][static_cast< std::size_t >(j)] = v;
            step(idx + 1);
            --u;
        }
    }

    const Partition &lam_, &mu_, &nu_;
    std::vector< std::pair< int, int > > cells_;
    std::vector< std::vector< int > > filling_;
    std::vector< int > used_;
    std::uint64_t count_ = 0;
};
} // namespace detail

inline bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length())
        return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i])
            return false;
    return true;
}

// Counts LR tableaux of shape nu/lambda and content mu.
inline std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (nu.size() != lambda.size() + mu.size() || !contains(nu, lambda) || !contains(nu, mu))
        return 0;
    return detail::LrCounter(lambda, mu, nu).run();
}

// Product of Schur functors of partitions, keeping at most `rows` rows.
inline std::map< Partition, std::uint64_t > lr_product(const Partition& lambda, const Partition& mu, int rows)
{
    std::map< Partition, std::uint64_t > out;
    if (lambda.length() > rows || mu.length() > rows)
        return out;
    const int total = lambda.size() + mu.size();
    std::vector< int > cur(static_cast< std::size_t >(rows), 0);
    auto rec = [&](auto&& self, int i, int cap, int remaining) -> void {
        if (i == rows)
        {
            if (remaining == 0)
            {
                Partition nu(cur);
                if (auto c = lr_coefficient(lambda, mu, nu))
                    out.emplace(nu, c);
            }
            return;
        }
        const int lo = lambda[i], hi = std::min({cap, remaining, lambda[i] + mu[0]});
        for (int v = hi; v >= lo; --v)
        {
            cur[static_cast< std::size_t >(i)] = v;
            self(self, i + 1, v, remaining - v);
        }
        cur[static_cast< std::size_t >(i)] = 0;
    };
    rec(rec, 0, total, total);
    return out;
}

inline WeightMultiset tensor_decompose(const GeneralizedWeight& lambda, const GeneralizedWeight& mu, int rows)
{
    if (lambda.length() > rows || mu.length() > rows)
        throw std::domain_error("tensor_decompose: weight longer than row bound");
    auto pad = [rows](const GeneralizedWeight& w) {
        auto v = w.parts();
        const int fill = v.empty() ? 0 : std::min(0, v.back());
        if (fill < 0 && static_cast< int >(v.size()) < rows)
            throw std::domain_error("tensor_decompose: negative weight must have full length");
        v.resize(static_cast< std::size_t >(rows), 0);
        return GeneralizedWeight(v);
    };
    const BarForm a = bar(pad(lambda)), b = bar(pad(mu));
    WeightMultiset out;
    for (const auto& [nu, c] : lr_product(a.bar, b.bar, rows))
        out[GeneralizedWeight::from_partition(nu, rows).shifted(a.shift + b.shift)] += c;
    return out;
}

// Adds m boxes to lambda, no two in the same row.
inline WeightMultiset pieri(const Partition& lambda, int m, int rows)
{
    if (m < 0)
        throw std::domain_error("pieri: negative box count");
    WeightMultiset out;
    if (lambda.length() > rows)
        return out;
    std::vector< int > cur = lambda.padded(rows);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == rows)
        {
            if (left == 0)
                out[GeneralizedWeight(cur)] += 1;
            return;
        }
        self(self, i + 1, left);
        const bool room = i == 0 || cur[static_cast< std::size_t >(i)] + 1 <= cur[static_cast< std::size_t >(i - 1)];
        if (left > 0 && room)
        {
            ++cur[static_cast< std::size_t >(i)];
            self(self, i + 1, left - 1);
            --cur[static_cast< std::size_t >(i)];
        }
    };
    rec(rec, 0, m);
    return out;
}
} // namespace grassgw
