#include "loophom/report.hpp"

#include <iomanip>
#include <sstream>

namespace loophom {

namespace {

using nlohmann::json;

json integers(const std::vector<mpz_class>& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(json_integer(x));
    return out;
}

std::string join(const std::vector<mpz_class>& v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k)
        out += (k ? ", " : "") + v[k].get_str();
    return out;
}

std::string expectation_label(const CensusRow& row)
{
    if (row.expected)
        return std::string(verdict_name(*row.expected));
    return row.mixed() ? "unclassified (mixed)" : "unclassified";
}

}  // namespace

json json_integer(const mpz_class& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

json to_json(const Params& p)
{
    return {{"a", json_integer(p.a)},   {"b", json_integer(p.b)},   {"c", json_integer(p.c)},
            {"d", json_integer(p.d)},   {"a2", json_integer(p.a2)}, {"b2", json_integer(p.b2)}};
}

json to_json(const std::vector<CoeffEntry>& seq)
{
    json out = json::array();
    for (const auto& e : seq)
        out.push_back({{"m", e.m}, {"a_m", e.a.get_str()}, {"b_m", e.b.get_str()}});
    return out;
}

json to_json(const TorsionReport& rep)
{
    json degrees = json::array();
    for (const auto& g : rep.degrees)
        degrees.push_back({{"n", g.degree}, {"free_rank", g.free_rank}, {"divisors", integers(g.divisors)}});
    return {{"algebra", std::string(algebra_name(rep.algebra))},
            {"params", to_json(rep.params)},
            {"convention", std::string(convention_name(rep.convention))},
            {"degrees", degrees},
            {"computed_primes", integers(rep.computed_primes)},
            {"predicted_primes", integers(rep.predicted_primes)},
            {"agree", rep.agree},
            {"warnings", rep.warnings}};
}

json to_json(const PrimeClassification& pc)
{
    json out = {{"p", pc.p},
                {"verdict", std::string(verdict_name(pc.verdict))},
                {"mechanism", std::string(mechanism_name(pc.mechanism))},
                {"witness", pc.witness ? json(*pc.witness) : json(nullptr)},
                {"residues", {{"mod24", pc.mod24}, {"mod12", pc.mod12}, {"mod8", pc.mod8}}},
                {"legendre3", pc.legendre3},
                {"legendre_minus2", pc.legendre_minus2},
                {"expected", pc.expected ? json(std::string(verdict_name(*pc.expected))) : json(nullptr)},
                {"contradicts_expectation", pc.contradicts_expectation()}};
    return out;
}

json to_json(const std::vector<CensusRow>& rows)
{
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"class", r.residue},
                       {"count", r.count},
                       {"torsion", r.torsion},
                       {"non_torsion", r.non_torsion},
                       {"paper_expectation", expectation_label(r)},
                       {"discrepancies", r.discrepancies}});
    return out;
}

json to_json(const PowerSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) {
        if (c.get_den() == 1)
            coeffs.push_back(json_integer(c.get_num()));
        else
            coeffs.push_back(c.get_str());
    }
    return {{"order", s.order()}, {"coefficients", coeffs}, {"text", s.to_string()}};
}

json to_json(const PreservationReport& rep)
{
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"x", std::string(acting_name(e.x))},
                           {"relation", e.relation},
                           {"degree", e.degree},
                           {"member", e.member}});
    return {{"convention", std::string(convention_name(rep.convention))},
            {"passed", rep.passed()},
            {"entries", entries}};
}

json to_json(const SemiTensorReport& rep)
{
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"n", r.degree}, {"ax_dim", r.ax_dim}, {"predicted_dim", r.predicted_dim},
                        {"agree", r.agree()}});
    return {{"field", rep.field.name()},
            {"convention", std::string(convention_name(rep.convention))},
            {"passed", rep.passed()},
            {"rows", rows}};
}

json to_json(const DivisorReport& rep)
{
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"n", r.degree},
                        {"ax_elementary_divisors", integers(r.ax_elementary)},
                        {"predicted_elementary_divisors", integers(r.predicted_elementary)},
                        {"agree", r.agree()}});
    return {{"convention", std::string(convention_name(rep.convention))},
            {"passed", rep.passed()},
            {"rows", rows}};
}

std::string render_text(const std::vector<CoeffEntry>& seq)
{
    std::ostringstream out;
    out << std::setw(4) << "m" << "  " << std::setw(24) << "a_m" << "  " << std::setw(24) << "b_m" << '\n';
    for (const auto& e : seq)
        out << std::setw(4) << e.m << "  " << std::setw(24) << e.a.get_str() << "  " << std::setw(24)
            << e.b.get_str() << '\n';
    return out.str();
}

std::string render_text(const TorsionReport& rep)
{
    std::ostringstream out;
    out << "algebra " << algebra_name(rep.algebra) << ", params " << rep.params.to_string()
        << ", convention " << convention_name(rep.convention) << '\n';
    out << std::setw(4) << "n" << "  " << std::setw(10) << "free_rank" << "  divisors\n";
    for (const auto& g : rep.degrees) {
        out << std::setw(4) << g.degree << "  " << std::setw(10) << g.free_rank << "  ";
        if (g.divisors.empty()) {
            out << "-";
        } else {
            // collapse runs: 11^94 means 94 copies of Z/11
            for (std::size_t k = 0; k < g.divisors.size();) {
                std::size_t run = k;
                while (run < g.divisors.size() && g.divisors[run] == g.divisors[k])
                    ++run;
                out << (k ? " " : "") << "Z/" << g.divisors[k].get_str();
                if (run - k > 1)
                    out << "^" << run - k;
                k = run;
            }
        }
        out << '\n';
    }
    out << "computed primes:  {" << join(rep.computed_primes) << "}\n";
    out << "predicted primes: {" << join(rep.predicted_primes) << "}\n";
    out << "agree: " << (rep.agree ? "true" : "false") << '\n';
    for (const auto& w : rep.warnings)
        out << "warning: " << w << '\n';
    return out.str();
}

std::string render_text(const PrimeClassification& pc)
{
    std::ostringstream out;
    out << "p = " << pc.p << " (mod 24: " << pc.mod24 << ", mod 12: " << pc.mod12
        << ", mod 8: " << pc.mod8 << ")\n";
    out << "legendre(3/p) = " << pc.legendre3 << ", legendre(-2/p) = " << pc.legendre_minus2 << '\n';
    out << "verdict: " << verdict_name(pc.verdict) << " via " << mechanism_name(pc.mechanism);
    if (pc.witness)
        out << ", m = " << *pc.witness;
    out << '\n';
    if (pc.contradicts_expectation())
        out << "note: the quadratic-residue argument predicts " << verdict_name(*pc.expected)
            << " for class " << pc.mod24 << " mod 24, but the exhaustive search disagrees\n";
    return out.str();
}

std::string render_text(const std::vector<CensusRow>& rows)
{
    std::ostringstream out;
    out << std::setw(5) << "class" << std::setw(8) << "count" << std::setw(9) << "torsion"
        << std::setw(13) << "non_torsion" << std::setw(9) << "rate%" << "  " << std::left
        << std::setw(22) << "expectation" << std::right << "discrepancies\n";
    for (const auto& r : rows) {
        // hundredths of a percent, truncated
        std::uint64_t bp = r.count ? r.torsion * 10000 / r.count : 0;
        std::ostringstream rate;
        rate << bp / 100 << '.' << std::setw(2) << std::setfill('0') << bp % 100;
        out << std::setw(5) << r.residue << std::setw(8) << r.count << std::setw(9) << r.torsion
            << std::setw(13) << r.non_torsion << std::setw(9) << rate.str() << "  " << std::left << std::setw(22) << expectation_label(r) << std::right;
        out << r.discrepancies.size();
        if (!r.discrepancies.empty()) {
            out << " [";
            for (std::size_t k = 0; k < r.discrepancies.size() && k < 6; ++k)
                out << (k ? " " : "") << r.discrepancies[k];
            if (r.discrepancies.size() > 6)
                out << " ...";
            out << "]";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace loophom
