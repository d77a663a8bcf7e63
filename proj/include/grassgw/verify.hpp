#pragma once

#include "bott.hpp"
#include "crosscheck.hpp"
#include "gw.hpp"
#include "lr.hpp"
#include "pairing.hpp"
#include "young.hpp"

#include <functional>
#include <sstream>

namespace grassgw
{
struct VerifyFailure
{
    std::string cell;
    std::string expected;
    std::string got;
    friend auto operator<=>(const VerifyFailure&, const VerifyFailure&) = default;
};

struct VerifyReport
{
    std::string suite;
    std::vector< std::pair< std::string, int > > params;
    std::uint64_t checked = 0;
    std::vector< VerifyFailure > failures;

    bool passed() const noexcept { return failures.empty(); }

    template < typename A, typename B >
    void expect(bool ok, const std::string& cell, const A& expected, const B& got)
    {
        ++checked;
        if (!ok)
            failures.push_back({cell, stringify(expected), stringify(got)});
    }
    template < typename A >
    void expect_eq(const std::string& cell, const A& expected, const A& got)
    {
        expect(expected == got, cell, expected, got);
    }

    void finish() { std::sort(failures.begin(), failures.end()); }

private:
    template < typename A >
    static std::string stringify(const A& a)
    {
        if constexpr (std::is_convertible_v< A, std::string >)
            return std::string(a);
        else if constexpr (std::is_same_v< A, bool >)
            return a ? "true" : "false";
        else if constexpr (std::is_arithmetic_v< A >)
            return std::to_string(a);
        else
            return to_string(a);
    }
};

namespace detail
{
template < typename... Ts >
std::string cell(const Ts&... parts)
{
    std::ostringstream os;
    bool first = true;
    auto put = [&](const auto& p) {
        if (!first)
            os << ' ';
        first = false;
        if constexpr (std::is_same_v< std::decay_t< decltype(p) >, Partition > || std::is_same_v< std::decay_t< decltype(p) >, GeneralizedWeight >)
            os << to_string(p);
        else
            os << p;
    };
    (put(parts), ...);
    return os.str();
}

inline std::string join(const std::vector< int >& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline std::string ext_to_string(const ExtTable& t)
{
    if (t.empty())
        return "{}";
    std::string s;
    for (const auto& [key, m] : t.entries)
        s += "[H" + std::to_string(key.first) + " " + to_string(key.second) + " x" + std::to_string(m) + "]";
    return s;
}

inline bool single_constant_entry(const ExtTable& t, int degree)
{
    if (t.size() != 1)
        return false;
    const auto& [key, m] = *t.entries.begin();
    return key.first == degree && m == 1 && key.second.is_constant();
}

inline VerifyReport start(const std::string& suite, int max_n)
{
    VerifyReport r;
    r.suite = suite;
    r.params = {{"max_n", max_n}};
    return r;
}
} // namespace detail

// Enumeration against the closed counts; max_n bounds both frame sides.
inline VerifyReport verify_counts(int max_n = 10)
{
    auto rep = detail::start("counts", max_n);
    for (int k = 0; k <= max_n; ++k)
        for (int l = 0; l <= max_n; ++l)
        {
            const Frame f(k, l);
            const auto all = enumerate_frame(f);
            std::uint64_t sym = 0, pal = 0;
            for (const auto& p : all)
            {
                const bool s = is_symmetric(p, f);
                sym += s;
                pal += to_binary_path(p, f).is_palindrome() == s;
            }
            rep.expect_eq(detail::cell("R", k, l), count_R(k, l), static_cast< std::uint64_t >(all.size()));
            const std::uint64_t expected_sym = (k * l) % 2 == 1 ? 0 : count_S(k, l);
            rep.expect_eq(detail::cell("S", k, l), expected_sym, sym);
            rep.expect_eq(detail::cell("palindrome", k, l), static_cast< std::uint64_t >(all.size()), pal);
        }
    rep.finish();
    return rep;
}

// Pascal and symmetric-count recurrences over 0 <= k,l <= max_n.
inline VerifyReport verify_recurrences(int max_n = 12)
{
    auto rep = detail::start("recurrences", max_n);
    for (int k = 0; k <= max_n; ++k)
        for (int l = 0; l <= max_n; ++l)
        {
            if (k >= 1 && l >= 1)
                rep.expect_eq(detail::cell("R", k, l), count_R(k, l), count_R(k, l - 1) + count_R(k - 1, l));
            if (l % 2 == 1)
                rep.expect_eq(detail::cell("S l odd", k, l), count_S(k, l), count_S(k, l - 1));
            if (k >= 2 && l >= 2 && k % 2 == 0 && l % 2 == 0)
                rep.expect_eq(detail::cell("S k,l even", k, l), count_S(k, l), count_S(k - 1, l) + count_S(k, l - 1));
            rep.expect_eq(detail::cell("S transpose", k, l), count_S(k, l), count_S(l, k));
            rep.expect_eq(detail::cell("R transpose", k, l), count_R(k, l), count_R(l, k));
        }
    rep.finish();
    return rep;
}

// LR symmetry on the 4x4 frame, Pieri against columns, and the dimension
// count on the 3x3 frame for n <= max_n.
inline VerifyReport verify_lr(int max_n = 5)
{
    auto rep = detail::start("lr", max_n);
    const auto y4 = enumerate_frame(Frame(4, 4));
    for (const auto& a : y4)
        for (const auto& b : y4)
            for (const auto& c : y4)
            {
                if (c.size() != a.size() + b.size())
                    continue;
                const auto ab = lr_coefficient(a, b, c), ba = lr_coefficient(b, a, c);
                rep.expect_eq(detail::cell("symmetry", a, b, c), ab, ba);
            }
    for (const auto& a : y4)
        for (int m = 0; m <= 4; ++m)
        {
            const auto col = GeneralizedWeight::from_partition(Partition(std::vector< int >(static_cast< std::size_t >(m), 1)), 4);
            const auto lhs = pieri(a, m, 4);
            const auto rhs = tensor_decompose(GeneralizedWeight::from_partition(a, 4), col, 4);
            rep.expect(lhs == rhs, detail::cell("pieri", a, m), rhs.size(), lhs.size());
        }
    const auto y3 = enumerate_frame(Frame(3, 3));
    for (int n = 1; n <= max_n; ++n)
        for (const auto& a : y3)
            for (const auto& b : y3)
            {
                if (a.length() > n || b.length() > n)
                    continue;
                std::uint64_t sum = 0;
                bool horn = true;
                for (const auto& [nu, c] : lr_product(a, b, n))
                {
                    sum += c * weyl_dimension(GeneralizedWeight::from_partition(nu, n), n);
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; i + j - 1 <= n; ++j)
                            horn = horn && nu[i + j - 2] <= a[i - 1] + b[j - 1];
                }
                const auto expected = weyl_dimension(GeneralizedWeight::from_partition(a, n), n) *
                                      weyl_dimension(GeneralizedWeight::from_partition(b, n), n);
                rep.expect_eq(detail::cell("dimension n=", n, a, b), expected, sum);
                rep.expect(horn, detail::cell("horn n=", n, a, b), true, horn);
            }
    rep.finish();
    return rep;
}

// c^{(n-k)^{k-1}}_{lambda, bar(-(n-k,lambda))} = 1 for 2 <= k <= n <= max_n.
inline VerifyReport verify_lr_lemma(int max_n = 8)
{
    auto rep = detail::start("lr-lemma", max_n);
    for (int n = 2; n <= max_n; ++n)
        for (int k = 2; k <= n; ++k)
        {
            const int l = n - k;
            const Partition rect(std::vector< int >(static_cast< std::size_t >(k - 1), l));
            for (const auto& lam : enumerate_frame(Frame(k - 1, l)))
            {
                auto head = lam.padded(k - 1);
                head.insert(head.begin(), l);
                const auto other = bar(dual_weight(GeneralizedWeight(head))).bar;
                rep.expect_eq(detail::cell("k", k, "n", n, lam), std::uint64_t{1}, lr_coefficient(lam, other, rect));
            }
        }
    rep.finish();
    return rep;
}

namespace detail
{
inline std::uint64_t projective_line_bundle_dim(int n, int d, int degree)
{
    // H^0 and H^{n-1} of O(d) on P^{n-1}.
    const int N = n - 1;
    std::uint64_t h0 = d >= 0 ? binomial(N + d, N) : 0;
    std::uint64_t htop = d <= -n ? binomial(-d - 1, N) : 0;
    if (N == 0)
        return degree == 0 ? 1 : 0;
    if (degree == 0)
        return h0;
    if (degree == N)
        return htop;
    return 0;
}
} // namespace detail

// Line bundles on P^{n-1} for n <= max_n and |d| <= 6, plus agreement of the
// literal transposition chain with the sorting algorithm.
inline VerifyReport verify_bott(int max_n = 5)
{
    auto rep = detail::start("bott", max_n);
    {
        const auto o = bott({GeneralizedWeight{0}, GeneralizedWeight{2}});
        rep.expect(!o.vanishes && o.degree == 1 && weyl_dimension(o.nu, 2) == 1, "P1 O(-2)", "H1 dim 1",
                   o.vanishes ? std::string("vanishes") : "H" + std::to_string(o.degree) + " dim " + std::to_string(weyl_dimension(o.nu, 2)));
    }
    for (int n = 1; n <= max_n; ++n)
        for (int d = -6; d <= 6; ++d)
        {
            const auto t = cohomology_of_schur_bundle(1, n, GeneralizedWeight{d}, 0);
            for (int deg = 0; deg < n; ++deg)
            {
                std::uint64_t got = 0;
                for (const auto& [key, m] : t.entries)
                    if (key.first == deg)
                        got += m * weyl_dimension(key.second, n);
                rep.expect_eq(detail::cell("P", n - 1, "O(", d, ") H", deg), detail::projective_line_bundle_dim(n, d, deg), got);
            }
        }
    for (int d = -8; d <= 6; ++d)
    {
        const auto a = cohomology_of_schur_bundle(1, 2, GeneralizedWeight{d}, 0);
        const auto b = cohomology_of_schur_bundle(1, 2, GeneralizedWeight{-d - 2}, 0);
        auto dims = [](const ExtTable& t) {
            std::pair< int, std::uint64_t > p{-1, 0};
            for (const auto& [key, m] : t.entries)
                p = {key.first, m * weyl_dimension(key.second, 2)};
            return p;
        };
        const auto da = dims(a), db = dims(b);
        const bool ok = da.second == db.second && (da.second == 0 || da.first + db.first == 1);
        rep.expect(ok, detail::cell("Serre P1 d=", d), da.second, db.second);
    }
    for (int n = 1; n <= std::min(max_n, 4); ++n)
    {
        std::vector< int > a(static_cast< std::size_t >(n), -3);
        for (;;)
        {
            const auto s = bott_raw(a);
            const auto c = bott_chain(a).outcome;
            rep.expect(s == c, detail::cell("chain", detail::join(a)), s.degree, c.degree);
            std::size_t i = 0;
            while (i < a.size() && a[i] == 3)
                a[i++] = -3;
            if (i == a.size())
                break;
            ++a[i];
        }
    }
    rep.finish();
    return rep;
}

// Higher self-Ext vanishing of S^lambda Q on Gr(k,n) for n <= max_n.
inline VerifyReport verify_end_vanishing(int max_n = 7)
{
    auto rep = detail::start("end-vanishing", max_n);
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& lam : enumerate_frame(Frame(k, n - k)))
            {
                const auto t = rhom_schur(k, n, lam, lam, 0);
                rep.expect(detail::single_constant_entry(t, 0), detail::cell("Gr", k, n, lam), "[H0 constant x1]", detail::ext_to_string(t));
            }
    rep.finish();
    return rep;
}

// RHom(S^mu Q, S^lambda Q) = 0 whenever lambda precedes mu, n <= max_n.
inline VerifyReport verify_exceptional(int max_n = 6)
{
    auto rep = detail::start("exceptional", max_n);
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
        {
            const auto ys = enumerate_frame(Frame(k, n - k));
            for (std::size_t a = 0; a < ys.size(); ++a)
                for (std::size_t b = a + 1; b < ys.size(); ++b)
                {
                    const auto t = rhom_schur(k, n, ys[b], ys[a], 0);
                    rep.expect(t.empty(), detail::cell("Gr", k, n, "from", ys[b], "to", ys[a]), "{}", detail::ext_to_string(t));
                }
        }
    rep.finish();
    return rep;
}

namespace detail
{
inline GeneralizedWeight prepend(int head, const Partition& p, int len)
{
    auto v = p.padded(len);
    v.insert(v.begin(), head);
    return GeneralizedWeight(v);
}

inline GeneralizedWeight append_zero(const Partition& p, int len)
{
    auto v = p.padded(len);
    v.push_back(0);
    return GeneralizedWeight(v);
}

// Transpositions (from,from+1),(from+1,from+2),...,(to-1,to).
inline std::vector< int > rightward_chain(int from, int to)
{
    std::vector< int > c;
    for (int i = from; i < to; ++i)
        c.push_back(i);
    return c;
}
} // namespace detail

// Cohomological steps of the mutation argument on Gr(k,n), n <= max_n.
inline VerifyReport verify_mutation_vanishing(int max_n = 6)
{
    auto rep = detail::start("mutation-vanishing", max_n);
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
        {
            const int l = n - k;
            const auto ys = enumerate_frame(Frame(k - 1, l));
            for (std::size_t a = 0; a < ys.size(); ++a)
            {
                const auto& lam = ys[a];
                const auto head = detail::prepend(l, lam, k - 1);
                const auto tail = detail::append_zero(lam, k - 1);
                const auto t = rhom_schur(k, n, head, tail, -1);
                rep.expect(detail::single_constant_entry(t, l), detail::cell("F Gr", k, n, lam), "[H" + std::to_string(l) + " constant x1]",
                           detail::ext_to_string(t));
                for (std::size_t b = 0; b < ys.size(); ++b)
                {
                    if (b < a)
                    {
                        const auto u = rhom_schur(k, n, head, detail::append_zero(ys[b], k - 1), -1);
                        rep.expect(u.empty(), detail::cell("twisted Gr", k, n, lam, ys[b]), "{}", detail::ext_to_string(u));
                    }
                    if (b > a)
                    {
                        const auto u = rhom_schur(k, n, detail::prepend(l, ys[b], k - 1), head, 0);
                        rep.expect(u.empty(), detail::cell("heads Gr", k, n, ys[b], lam), "{}", detail::ext_to_string(u));
                    }
                }
            }
            if (l < 1)
                continue;
            // Truncated gamma against det(R)^{l+1} (moving gamma_{k-1}) and det(R)^l (moving gamma_k).
            for (const auto& g : enumerate_frame(Frame(k, 2 * l + 1)))
            {
                const auto gamma = GeneralizedWeight::from_partition(g, k);
                if (k >= 2 && g[k - 2] <= l - 1)
                {
                    const auto t = cohomology_of_schur_bundle(k, n, gamma, l + 1);
                    rep.expect(t.empty(), detail::cell("detR^(l+1) Gr", k, n, g), "{}", detail::ext_to_string(t));
                    const auto moved = apply_chain(FullWeight{gamma, GeneralizedWeight::constant(l + 1, l)}.values(),
                                                   detail::rightward_chain(k - 1, n - g[k - 2] - 1));
                    const int p = n - g[k - 2] - 1;
                    rep.expect(stabilized_by(moved, p), detail::cell("chain detR^(l+1) Gr", k, n, g), "fixed by s_" + std::to_string(p), detail::join(moved));
                }
                if (g[k - 1] <= l - 1)
                {
                    const auto t = cohomology_of_schur_bundle(k, n, gamma, l);
                    rep.expect(t.empty(), detail::cell("detR^l Gr", k, n, g), "{}", detail::ext_to_string(t));
                    const auto moved = apply_chain(FullWeight{gamma, GeneralizedWeight::constant(l, l)}.values(),
                                                   detail::rightward_chain(k, n - g[k - 1] - 1));
                    const int p = n - g[k - 1] - 1;
                    rep.expect(stabilized_by(moved, p), detail::cell("chain detR^l Gr", k, n, g), "fixed by s_" + std::to_string(p), detail::join(moved));
                }
            }
            // The worked permutation (k+1,k)(k+2,k+1)...(n,n-1): length n-k, lands on a constant weight.
            std::vector< int > alpha(static_cast< std::size_t >(k - 1), l);
            alpha.push_back(0);
            alpha.insert(alpha.end(), static_cast< std::size_t >(l), l + 1);
            auto sigma = Permutation::identity(n);
            for (int i = k; i < n; ++i)
                sigma = sigma * Permutation::transposition(n, i, i + 1);
            const auto image = dotted_action(alpha, sigma);
            rep.expect(sigma.length() == l && image == std::vector< int >(static_cast< std::size_t >(n), l), detail::cell("sigma0 Gr", k, n),
                       l, sigma.length());
        }
    rep.finish();
    return rep;
}

// Parity of every symmetric diagram against the frame-level classification,
// for 1 <= k <= max_n and 0 <= n-k <= max_n with k(n-k) even.
inline VerifyReport verify_pairing(int max_n = 8)
{
    auto rep = detail::start("pairing", max_n);
    for (int k = 1; k <= max_n; ++k)
        for (int l = 0; l <= max_n; ++l)
        {
            if ((k * l) % 2 == 1)
                continue;
            const Frame f(k, l);
            const auto kind = classify_pairing(k, k + l);
            for (const auto& p : enumerate_frame(f))
            {
                if (!is_symmetric(p, f))
                    continue;
                const auto par = diagram_parity(p, f);
                rep.expect((par == Parity::Odd) == (kind == PairingKind::SkewSymmetric), detail::cell("frame", k, l, p), to_string(kind),
                           to_string(par));
                if (l % 2 == 1)
                {
                    const int middle = transpose(p).padded(l)[static_cast< std::size_t >((l - 1) / 2)];
                    rep.expect_eq(detail::cell("middle column", k, l, p), k / 2, middle);
                }
            }
        }
    rep.finish();
    return rep;
}

// Split fibration identities for 1 <= k < n <= max_n and r in -3..3.
inline VerifyReport verify_split_fibration(int max_n = 10)
{
    auto rep = detail::start("split-fibration", max_n);
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; k < n; ++k)
            for (int r = -3; r <= 3; ++r)
            {
                const auto c = split_fibration_check(k, n, r);
                std::string diag;
                for (const auto& d : c.diagnostics)
                    diag += d + "; ";
                rep.expect(c.passed, detail::cell("Gr", k, n, "r", r), "split", diag);
                const auto gw = gw_decompose(k, n, n - k, r);
                rep.expect_eq(detail::cell("L from GW Gr", k, n, "r", r), gw.total(Theory::GW), l_decompose(k, n, n - k, r).total(Theory::L));
                rep.expect_eq(detail::cell("aligned rank Gr", k, n), count_R(k, n - k), 2 * gw.total(Theory::K) + gw.total(Theory::GW));
                const auto off = gw_decompose(k, n, n - k - 1, r);
                rep.expect_eq(detail::cell("offset rank Gr", k, n), count_R(k - 1, n - k) + count_R(k, n - k - 1),
                              2 * off.total(Theory::K) + off.total(Theory::GW));
            }
    rep.finish();
    return rep;
}

// Even-diagram Witt groups against the closed formulas, 1 <= d,e <= max_n,
// together with the four-class characterization on 0 <= d,e <= max_n.
inline VerifyReport verify_witt_crosscheck(int max_n = 6)
{
    auto rep = detail::start("witt-crosscheck", max_n);
    for (int d = 1; d <= max_n; ++d)
        for (int e = 1; e <= max_n; ++e)
            for (int l = 0; l <= 1; ++l)
                for (int i = 0; i <= 3; ++i)
                {
                    const auto a = witt_via_even_diagrams(d, e, l, i), b = w_decompose(d, d + e, l, i);
                    rep.expect(a.same_summands(b), detail::cell("d", d, "e", e, "l", l, "i", i), to_string(b), to_string(a));
                }
    for (int d = 0; d <= max_n; ++d)
        for (int e = 0; e <= max_n; ++e)
        {
            const Frame f(d, e);
            std::uint64_t counts[4] = {0, 0, 0, 0};
            for (const auto& p : enumerate_frame(f))
            {
                const auto classes = matching_classes(p, f);
                const bool even = is_even_diagram(p, f);
                rep.expect(even == !classes.empty() && classes.size() <= 1, detail::cell("class", d, e, p), even ? "one class" : "no class",
                           std::to_string(classes.size()) + " classes");
                if (classes.empty())
                    continue;
                const auto c = classes.front();
                ++counts[static_cast< int >(c)];
                int res = 0, tpar = 0;
                switch (c)
                {
                case EvenDiagramClass::FourBlocks: res = 0, tpar = 0; break;
                case EvenDiagramClass::RowPlusBlocks: res = e, tpar = 1; break;
                case EvenDiagramClass::ColPlusBlocks: res = d, tpar = 1; break;
                case EvenDiagramClass::RowColPlusBlocks: res = d + e - 1, tpar = 0; break;
                }
                rep.expect_eq(detail::cell("size mod 4", d, e, p), mod4(res), mod4(p.size()));
                rep.expect_eq(detail::cell("t", d, e, p), tpar, t_invariant(p));
            }
            const std::uint64_t expected[4] = {
                binomial(d / 2 + e / 2, d / 2),
                (e > 0 && e % 2 == 0 && d >= 1) ? count_S(d - 1, e) : 0,
                (d > 0 && d % 2 == 0 && e >= 1) ? count_S(d, e - 1) : 0,
                (d % 2 == 1 && e % 2 == 1) ? count_S(d - 1, e - 1) : 0,
            };
            for (int c = 0; c < 4; ++c)
                rep.expect_eq(detail::cell("class count", d, e, to_string(static_cast< EvenDiagramClass >(c))), expected[c], counts[c]);
        }
    rep.finish();
    return rep;
}

// Buffalo-check counts on 0 <= d,m <= max_n.
inline VerifyReport verify_beta(int max_n = 10)
{
    auto rep = detail::start("beta", max_n);
    for (int d = 0; d <= max_n; ++d)
        for (int m = 0; m <= max_n; ++m)
        {
            rep.expect_eq(detail::cell("sum", d, m), buffalo_total(d, m), beta(d, m, d) + beta(d, m, d + 1));
            if (d >= 1 || m >= 1)
                for (int l = 0; l <= 1; ++l)
                {
                    const int k = d, n = d + m;
                    const auto g = gw_decompose(k, n, l, 0);
                    rep.expect_eq(detail::cell("K", d, m, "l", l, to_string(formula_case(k, n, l))), beta(d, m, l), g.total(Theory::K));
                }
            const Frame f(d, m);
            std::uint64_t centers = 0;
            for (const auto& p : enumerate_frame(f))
                centers += static_cast< std::uint64_t >(center_count(p, f));
            rep.expect_eq(detail::cell("centers", d, m), buffalo_total(d, m), centers);
        }
    rep.finish();
    return rep;
}

// k = 1 against the projective-space formula, n <= max_n.
inline VerifyReport verify_projective(int max_n = 12)
{
    auto rep = detail::start("projective", max_n);
    for (int n = 1; n <= max_n; ++n)
        for (int twist = -2; twist <= 3; ++twist)
            for (int r = -3; r <= 3; ++r)
            {
                const auto a = gw_decompose(1, n, twist, r), b = projective_space_gw(n - 1, twist, r);
                rep.expect(a.same_summands(b), detail::cell("P", n - 1, "twist", twist, "r", r), to_string(b), to_string(a));
            }
    rep.finish();
    return rep;
}

struct SuiteInfo
{
    const char* name;
    int default_max_n;
    VerifyReport (*run)(int);
};

inline const std::vector< SuiteInfo >& suites()
{
    static const std::vector< SuiteInfo > all = {
        {"counts", 10, verify_counts},
        {"recurrences", 12, verify_recurrences},
        {"lr", 5, verify_lr},
        {"lr-lemma", 8, verify_lr_lemma},
        {"bott", 5, verify_bott},
        {"end-vanishing", 7, verify_end_vanishing},
        {"exceptional", 6, verify_exceptional},
        {"mutation-vanishing", 6, verify_mutation_vanishing},
        {"pairing", 8, verify_pairing},
        {"split-fibration", 10, verify_split_fibration},
        {"witt-crosscheck", 6, verify_witt_crosscheck},
        {"beta", 10, verify_beta},
        {"projective", 12, verify_projective},
    };
    return all;
}

inline const SuiteInfo* find_suite(const std::string& name)
{
    for (const auto& s : suites())
        if (name == s.name)
            return &s;
    return nullptr;
}
} // namespace grassgw
