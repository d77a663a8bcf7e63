#pragma once

#include "gw.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace grassgw
{
using json = nlohmann::ordered_json;

inline json to_json(const FormalDecomposition& d)
{
    const auto& c = d.context();
    json j;
    j["grassmannian"] = {{"k", c.k}, {"n", c.n}};
    j["twist"] = c.twist;
    j["twist_convention"] = twist_convention(c.k, c.n, c.twist);
    j["theory"] = to_string(c.theory);
    j["shift"] = c.shift;
    j["summands"] = json::array();
    for (const auto& s : d.summands())
        j["summands"].push_back({{"theory", to_string(s.theory)}, {"shift", s.shift}, {"multiplicity", s.multiplicity}});
    return j;
}

inline FormalDecomposition decomposition_from_json(const json& j)
{
    try
    {
        DecompositionContext c;
        c.k = j.at("grassmannian").at("k").get< int >();
        c.n = j.at("grassmannian").at("n").get< int >();
        c.twist = j.at("twist").get< int >();
        c.theory = theory_from_string(j.at("theory").get< std::string >());
        c.shift = j.at("shift").get< int >();
        const auto conv = j.at("twist_convention").get< std::string >();
        if (conv != twist_convention(c.k, c.n, c.twist))
            throw std::invalid_argument("twist_convention does not match twist");
        FormalDecomposition d(c);
        for (const auto& s : j.at("summands"))
        {
            const auto m = s.at("multiplicity").get< std::uint64_t >();
            if (m == 0)
                throw std::invalid_argument("zero multiplicity");
            d.add(theory_from_string(s.at("theory").get< std::string >()), s.at("shift").get< int >(), m);
        }
        return d;
    }
    catch (const json::exception& e)
    {
        throw std::invalid_argument(std::string("malformed decomposition: ") + e.what());
    }
}

inline std::string to_text(const FormalDecomposition& d)
{
    const auto& c = d.context();
    std::ostringstream os;
    os << "Gr(" << c.k << "," << c.n << ") twist " << c.twist << " (" << twist_convention(c.k, c.n, c.twist) << ") " << to_string(c.theory);
    if (c.theory != Theory::K)
        os << " shift " << c.shift;
    os << "\n";
    if (d.empty())
        os << "  0\n";
    for (const auto& s : d.summands())
        os << "  " << to_string(s) << "\n";
    return os.str();
}

inline std::string to_csv(const FormalDecomposition& d)
{
    const auto& c = d.context();
    std::ostringstream os;
    os << "k,n,twist,twist_convention,theory,shift,multiplicity\n";
    for (const auto& s : d.summands())
        os << c.k << "," << c.n << "," << c.twist << "," << twist_convention(c.k, c.n, c.twist) << "," << to_string(s.theory) << "," << s.shift << ","
           << s.multiplicity << "\n";
    return os.str();
}

inline json to_json(const VerifyReport& r)
{
    json j;
    j["suite"] = r.suite;
    j["params"] = json::object();
    for (const auto& [k, v] : r.params)
        j["params"][k] = v;
    j["checked"] = r.checked;
    j["passed"] = r.passed();
    j["failures"] = json::array();
    for (const auto& f : r.failures)
        j["failures"].push_back({{"cell", f.cell}, {"expected", f.expected}, {"got", f.got}});
    return j;
}

inline std::string to_text(const VerifyReport& r)
{
    std::ostringstream os;
    os << r.suite;
    for (const auto& [k, v] : r.params)
        os << " " << k << "=" << v;
    os << ": checked " << r.checked << ", failures " << r.failures.size() << (r.passed() ? " PASS" : " FAIL") << "\n";
    for (const auto& f : r.failures)
        os << "  " << f.cell << ": expected " << f.expected << ", got " << f.got << "\n";
    return os.str();
}
} // namespace grassgw
