#pragma once

#include "bott.hpp"
#include "crosscheck.hpp"
#include "gw.hpp"
#include "lr.hpp"
#include "serialize.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace grassgw
{
namespace cli
{
inline constexpr int exit_ok = 0;
inline constexpr int exit_failures = 1;
inline constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

// "3,1,-2" -> {3,1,-2}; the empty string is the empty sequence.
inline std::vector< int > parse_ints(const std::string& s)
{
    std::vector< int > out;
    if (s.empty())
        return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
    {
        std::size_t used = 0;
        int v = 0;
        try
        {
            v = std::stoi(tok, &used);
        }
        catch (const std::exception&)
        {
            throw UsageError("not an integer: '" + tok + "'");
        }
        if (used != tok.size())
            throw UsageError("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    if (!s.empty() && s.back() == ',')
        throw UsageError("trailing comma in '" + s + "'");
    return out;
}

inline Partition parse_partition(const std::string& s)
{
    try
    {
        return Partition(parse_ints(s));
    }
    catch (const UsageError&)
    {
        throw;
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
}

inline GeneralizedWeight parse_weight(const std::string& s)
{
    try
    {
        return GeneralizedWeight(parse_ints(s));
    }
    catch (const UsageError&)
    {
        throw;
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
}

inline std::string join(const std::vector< int >& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Shift written relative to a base symbol, e.g. "r-2".
inline std::string relative(const char* base, int offset)
{
    if (offset == 0)
        return base;
    return std::string(base) + (offset > 0 ? "+" : "") + std::to_string(offset);
}

inline std::string symbolic(const FormalDecomposition& d, const char* base)
{
    if (d.empty())
        return "0";
    std::string out;
    for (const auto& s : d.summands())
    {
        if (!out.empty())
            out += " + ";
        out += to_string(s.theory);
        if (s.theory == Theory::W)
            out += "^{" + relative(base, s.shift == 0 ? 0 : s.shift - 4) + "}";
        else if (s.theory != Theory::K)
            out += "^{" + relative(base, s.shift) + "}";
        out += "x" + std::to_string(s.multiplicity);
    }
    return out;
}

inline void emit_table(std::ostream& os, int max_n, const std::string& which)
{
    os << "k,n,n_minus_k,twist_class,case,gw,l,w,k_multiplicity,beta\n";
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k < n; ++k)
            for (int cls = 0; cls <= 1; ++cls)
            {
                const bool aligned = cls == 0;
                if ((which == "offset" && aligned) || (which == "aligned" && !aligned))
                    continue;
                const int l = n - k, twist = aligned ? l : l - 1;
                const auto gw = gw_decompose(k, n, twist, 0);
                os << k << "," << n << "," << l << "," << (aligned ? "aligned" : "offset") << ",\"" << to_string(formula_case(k, n, twist)) << "\","
                   << symbolic(gw, "r") << "," << symbolic(l_decompose(k, n, twist, 0), "r") << "," << symbolic(w_decompose(k, n, twist, 0), "i")
                   << "," << gw.total(Theory::K) << "," << beta(k, l, twist) << "\n";
            }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Formal GW, L, W and K decompositions of Grassmannians, with exhaustive identity checks"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_file;
    app.add_option("--out", out_file, "Write output to FILE instead of stdout");

    const std::vector< std::string > theories = {"gw", "l", "w", "k"};

    auto* dec = app.add_subcommand("decompose", "Decompose GW/L/W/K of Gr(k,n)");
    int k = 0, n = 0, twist = 0, shift = 0;
    std::string theory = "gw", format = "json";
    dec->add_option("--k", k, "Rank of the quotient bundle")->required();
    dec->add_option("--n", n, "Dimension of the ambient space")->required();
    auto* twist_opt = dec->add_option("--twist", twist, "Power of det Q (default n-k)");
    dec->add_option("--theory", theory, "gw | l | w | k")->check(CLI::IsMember(theories));
    dec->add_option("--shift", shift, "Ambient shift r (degree i for w)");
    dec->add_option("--format", format, "json | text | csv")->check(CLI::IsMember({"json", "text", "csv"}));

    auto* ver = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite;
    std::optional< int > max_n;
    std::string vformat = "text";
    ver->add_option("--suite", suite, "Suite name, or 'all'")->required();
    ver->add_option("--max-n", max_n, "Size bound for the sweep (suite-specific default)");
    ver->add_option("--format", vformat, "json | text")->check(CLI::IsMember({"json", "text"}));

    auto* en = app.add_subcommand("enumerate", "List Y(k,l) with annotations");
    int ek = 0, el = 0;
    std::string eformat = "text";
    en->add_option("--k", ek, "Rows")->required()->check(CLI::Range(0, max_closed_form_side));
    en->add_option("--l", el, "Columns")->required()->check(CLI::Range(0, max_closed_form_side));
    en->add_option("--format", eformat, "text | csv | json")->check(CLI::IsMember({"json", "text", "csv"}));

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient or tensor decomposition");
    std::string lam_s, mu_s, nu_s, lformat = "text";
    std::optional< int > rows;
    lr->add_option("--lambda", lam_s, "Comma-separated weight")->required();
    lr->add_option("--mu", mu_s, "Comma-separated weight")->required();
    auto* nu_opt = lr->add_option("--nu", nu_s, "Target partition; omit for the full decomposition");
    lr->add_option("--rows", rows, "Row bound k for the decomposition");
    lr->add_option("--format", lformat, "text | json")->check(CLI::IsMember({"json", "text"}));

    auto* bt = app.add_subcommand("bott", "Bott's algorithm on a raw weight");
    std::string weight_s, bformat = "text";
    std::optional< int > bn, bk;
    bt->add_option("--weight", weight_s, "Comma-separated integers alpha_1..alpha_n")->required();
    bt->add_option("--n", bn, "Length check for the weight");
    bt->add_option("--k", bk, "Split into Q and R blocks and check each is nonincreasing");
    bt->add_option("--format", bformat, "text | json")->check(CLI::IsMember({"json", "text"}));

    auto* tb = app.add_subcommand("table", "Closed-formula case table as CSV");
    int tmax = 8;
    std::string which = "offset";
    tb->add_option("--max-n", tmax, "Largest n")->check(CLI::Range(2, max_closed_form_side + 1));
    tb->add_option("--twists", which, "offset | aligned | both")->check(CLI::IsMember({"offset", "aligned", "both"}));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    std::ostringstream buf;
    int code = exit_ok;
    try
    {
        if (*dec)
        {
            if (!*twist_opt)
                twist = n - k;
            const auto t = theory_from_string(theory);
            const auto d = decompose(t, k, n, twist, shift);
            if (format == "json")
                buf << to_json(d).dump(2) << "\n";
            else if (format == "text")
                buf << to_text(d);
            else
                buf << to_csv(d);
        }
        else if (*ver)
        {
            std::vector< const SuiteInfo* > chosen;
            if (suite == "all")
                for (const auto& s : suites())
                    chosen.push_back(&s);
            else if (const auto* s = find_suite(suite))
                chosen.push_back(s);
            else
                throw UsageError("unknown suite '" + suite + "'");
            if (max_n && *max_n < 0)
                throw UsageError("--max-n must be nonnegative");
            json all = json::array();
            for (const auto* s : chosen)
            {
                const auto rep = s->run(max_n ? *max_n : s->default_max_n);
                if (!rep.passed())
                    code = exit_failures;
                if (vformat == "json")
                    all.push_back(to_json(rep));
                else
                    buf << to_text(rep);
            }
            if (vformat == "json")
                buf << (chosen.size() == 1 ? all[0] : all).dump(2) << "\n";
        }
        else if (*en)
        {
            const Frame f(ek, el);
            const auto ys = enumerate_frame(f);
            std::uint64_t sym = 0;
            json rows_j = json::array();
            if (eformat == "csv")
                buf << "index,partition,size,symmetric,even,class,t,centers\n";
            std::ostringstream body;
            for (std::size_t i = 0; i < ys.size(); ++i)
            {
                const auto& p = ys[i];
                const bool s = is_symmetric(p, f), ev = is_even_diagram(p, f);
                sym += s;
                const auto cls = classify_even(p, f);
                const std::string cname = cls ? to_string(*cls) : "";
                const int t = t_invariant(p), centers = center_count(p, f);
                if (eformat == "csv")
                    buf << i << ",\"" << join(p.parts()) << "\"," << p.size() << "," << s << "," << ev << "," << cname << "," << t << "," << centers << "\n";
                else if (eformat == "json")
                    rows_j.push_back({{"index", i},
                                      {"partition", p.parts()},
                                      {"size", p.size()},
                                      {"symmetric", s},
                                      {"even", ev},
                                      {"class", cls ? json(cname) : json(nullptr)},
                                      {"t", t},
                                      {"centers", centers}});
                else
                    body << i << " " << to_string(p) << " size=" << p.size() << (s ? " symmetric" : "") << (ev ? " even:" + cname : "") << " t=" << t
                         << " centers=" << centers << "\n";
            }
            if (eformat == "json")
                buf << json{{"frame", {{"k", ek}, {"l", el}}}, {"count", ys.size()}, {"symmetric", sym}, {"diagrams", rows_j}}.dump(2) << "\n";
            else if (eformat == "text")
                buf << "Y(" << ek << "," << el << "): " << ys.size() << " diagrams, " << sym << " symmetric\n" << body.str();
        }
        else if (*lr)
        {
            if (*nu_opt)
            {
                const auto c = lr_coefficient(parse_partition(lam_s), parse_partition(mu_s), parse_partition(nu_s));
                if (lformat == "json")
                    buf << json{{"coefficient", c}}.dump() << "\n";
                else
                    buf << c << "\n";
            }
            else
            {
                const auto a = parse_weight(lam_s), b = parse_weight(mu_s);
                const int r = rows ? *rows : std::max(1, a.length() + b.length());
                if (r < 0)
                    throw UsageError("--rows must be nonnegative");
                json terms = json::array();
                for (const auto& [w, m] : tensor_decompose(a, b, r))
                {
                    if (lformat == "json")
                        terms.push_back({{"weight", w.parts()}, {"multiplicity", m}});
                    else
                        buf << join(w.parts()) << " x" << m << "\n";
                }
                if (lformat == "json")
                    buf << json{{"rows", r}, {"terms", terms}}.dump(2) << "\n";
            }
        }
        else if (*bt)
        {
            const auto alpha = parse_ints(weight_s);
            if (bn && *bn != static_cast< int >(alpha.size()))
                throw UsageError("weight length differs from --n");
            if (bk)
            {
                if (*bk < 0 || *bk > static_cast< int >(alpha.size()))
                    throw UsageError("--k out of range");
                GeneralizedWeight(std::vector< int >(alpha.begin(), alpha.begin() + *bk));
                GeneralizedWeight(std::vector< int >(alpha.begin() + *bk, alpha.end()));
            }
            const auto o = bott_raw(alpha);
            const int len = static_cast< int >(alpha.size());
            if (bformat == "json")
            {
                json j{{"weight", alpha}, {"vanishes", o.vanishes}};
                if (!o.vanishes)
                {
                    j["degree"] = o.degree;
                    j["nu"] = o.nu.parts();
                    j["dimension"] = weyl_dimension(o.nu, len);
                }
                buf << j.dump() << "\n";
            }
            else if (o.vanishes)
                buf << "vanishes\n";
            else
                buf << "degree " << o.degree << ", nu " << join(o.nu.parts()) << ", dimension " << weyl_dimension(o.nu, len) << "\n";
        }
        else if (*tb)
            emit_table(buf, tmax, which);
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::domain_error& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::out_of_range& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (!out_file.empty())
    {
        std::ofstream f(out_file, std::ios::binary);
        if (!f)
        {
            err << "error: cannot open " << out_file << "\n";
            return exit_usage;
        }
        f << buf.str();
    }
    else
        out << buf.str();
    return code;
}
} // namespace cli
} // namespace grassgw
