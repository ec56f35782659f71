#include "loophom/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "loophom/gradedz.hpp"
#include "loophom/numtheory.hpp"
#include "loophom/report.hpp"
#include "loophom/series.hpp"
#include "loophom/verify.hpp"

namespace loophom {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct Globals
{
    std::string params;
    std::string theorem2;
    std::string algebra;
    std::string field = "Q";
    std::string convention = "graded";
    std::string out;
    int max_degree = -1;
    bool json = false;
};

// Resolved run configuration.
struct RunConfig
{
    Params params = Params::theorem1();
    std::optional<std::vector<std::uint64_t>> excluded;
    SignConvention convention = SignConvention::graded;
    Field field;
    std::optional<AlgebraKind> algebra;
    int max_degree = -1;
    bool json = false;

    AlgebraKind algebra_or(AlgebraKind fallback) const { return algebra.value_or(fallback); }
    int degree_for(AlgebraKind k) const
    {
        if (max_degree >= 0)
            return max_degree;
        return k == AlgebraKind::E ? 5 : 4;
    }
    bool is_theorem1() const { return !excluded && params == Params::theorem1(); }
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep))
        parts.push_back(piece);
    return parts;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what)
{
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        if (!s.empty() && s[0] != '-')
            v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw UsageError(what + ": expected a nonnegative integer, got '" + s + "'");
    return v;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    for (const auto& s : split(text, ','))
        out.push_back(parse_u64(s, "prime list"));
    if (out.empty())
        throw UsageError("prime list is empty");
    return out;
}

RunConfig resolve(const Globals& g)
{
    RunConfig rc;
    try {
        if (!g.params.empty() && !g.theorem2.empty())
            throw UsageError("--params and --theorem2 are mutually exclusive");
        if (!g.params.empty())
            rc.params = Params::parse(g.params);
        if (!g.theorem2.empty()) {
            rc.excluded = parse_prime_list(g.theorem2);
            rc.params = theorem2_params(*rc.excluded);
        }
        rc.convention = convention_from_name(g.convention);
        rc.field = Field::parse(g.field == "q" ? "Q" : g.field);
        if (!g.algebra.empty())
            rc.algebra = algebra_from_name(g.algebra);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (g.max_degree != -1 && (g.max_degree < 0 || g.max_degree > 7))
        throw UsageError("--max-degree must lie in 0..7");
    rc.max_degree = g.max_degree;
    rc.json = g.json;
    return rc;
}

struct Output
{
    std::string text;
    int code = kExitOk;
};

Output emit(const RunConfig& rc, const json& j, const std::string& text, int code = kExitOk)
{
    return {rc.json ? j.dump(2) + "\n" : text, code};
}

RelationSet relations_for(const RunConfig& rc, AlgebraKind kind, int degree)
{
    if (kind == AlgebraKind::AX)
        return relation_set_AX(rc.params, rc.convention);
    return relation_set_E(rc.params, std::max(degree, 2), rc.convention);
}

Output cmd_recurrence(const RunConfig& rc, int terms)
{
    if (terms < 2)
        throw UsageError("--terms must be at least 2");
    auto seq = coeff_sequence(rc.params, terms);
    json j = {{"params", to_json(rc.params)}, {"rows", to_json(seq)}};
    return emit(rc, j, render_text(seq));
}

Output cmd_torsion(const RunConfig& rc, std::ostream& err)
{
    const AlgebraKind kind = rc.algebra_or(AlgebraKind::E);
    const int n = rc.degree_for(kind);
    if (kind == AlgebraKind::AX && n > 4)
        throw UsageError("A_X torsion is supported up to degree 4");
    err << "[torsion-primes] algebra " << algebra_name(kind) << ", degrees 0.." << n << std::endl;
    RelationSet rels = relations_for(rc, kind, n);
    TorsionReport rep = torsion_primes_up_to(rels, n, coeff_sequence(rc.params, std::max(n, 2)));
    return emit(rc, to_json(rep), render_text(rep));
}

Output cmd_classify(const RunConfig& rc, const std::string& prime_text)
{
    const std::uint64_t p = parse_u64(prime_text, "prime");
    PrimeClassification pc;
    try {
        if (rc.is_theorem1() && p != 2 && p != 3)
            pc = classify_prime_theorem1(p);
        else
            pc = classify_prime_general(rc.params, p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return emit(rc, to_json(pc), render_text(pc));
}

Output cmd_hilbert(const RunConfig& rc, long g2, long r4, std::ostream& err)
{
    const AlgebraKind kind = rc.algebra_or(AlgebraKind::AX);
    const int n = rc.degree_for(kind);
    err << "[hilbert] algebra " << algebra_name(kind) << " over " << rc.field.name() << ", degrees 0.." << n
        << std::endl;
    PowerSeries a = dimension_series(relations_for(rc, kind, n), rc.field, n);
    PowerSeries pinv = roos_inverse(a, g2, r4, n);
    PowerSeries p = roos_poincare(a, g2, r4, n);
    bool nonneg = p.integral();
    for (const auto& c : p.coefficients())
        nonneg = nonneg && sgn(c) >= 0;
    json j = {{"algebra", std::string(algebra_name(kind))},
              {"field", rc.field.name()},
              {"convention", std::string(convention_name(rc.convention))},
              {"g2", g2},
              {"r4", r4},
              {"hilbert", to_json(a)},
              {"poincare_inverse", to_json(pinv)},
              {"poincare", to_json(p)},
              {"poincare_nonnegative_integral", nonneg}};
    std::ostringstream text;
    text << "A(t)      = " << a.to_string() << '\n'
         << "P(t)^-1   = " << pinv.to_string() << '\n'
         << "P(t)      = " << p.to_string() << '\n'
         << "P nonnegative integral: " << (nonneg ? "true" : "false") << '\n';
    return emit(rc, j, text.str());
}

Output cmd_order(const RunConfig& rc, const std::string& element_text, const std::string& rho_text)
{
    if (element_text.empty() == rho_text.empty())
        throw UsageError("order needs exactly one of <element> or --rho i,m");
    const AlgebraKind kind = rc.algebra_or(AlgebraKind::E);
    Element e;
    std::string label;
    if (!rho_text.empty()) {
        auto parts = split(rho_text, ',');
        if (parts.size() != 2)
            throw UsageError("--rho expects i,m");
        const auto i = parse_u64(parts[0], "--rho i"), m = parse_u64(parts[1], "--rho m");
        if (i < 1 || i > 4 || m < 2 || m > 7)
            throw UsageError("--rho needs 1 <= i <= 4 and 2 <= m <= 7");
        e = rho(static_cast<int>(i), static_cast<int>(m), rc.convention);
        label = "rho_" + parts[0] + "_" + parts[1];
    } else {
        try {
            e = Element::parse(element_text);
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        label = element_text;
    }
    const int n = e.degree();
    if (e.is_zero() || n < 0)
        throw UsageError("order needs a nonzero homogeneous element");
    if (n > 7)
        throw UsageError("element degree above 7 is out of range");
    if (alphabet_span(e) > (kind == AlgebraKind::E ? Alphabet::F() : Alphabet::AX()).size)
        throw UsageError("element uses generators outside the chosen algebra");
    ElementOrder ord = element_order(e, relations_for(rc, kind, n), n);
    json j = {{"element", e.to_string()},
              {"label", label},
              {"algebra", std::string(algebra_name(kind))},
              {"convention", std::string(convention_name(rc.convention))},
              {"degree", n},
              {"finite", ord.has_value()},
              {"order", ord ? json_integer(*ord) : json(nullptr)}};
    std::string text = "order(" + label + ") in degree " + std::to_string(n) + " of " +
                       std::string(algebra_name(kind)) + ": " + (ord ? ord->get_str() : "infinite") + "\n";
    return emit(rc, j, text);
}

Output cmd_census(const RunConfig& rc, std::uint64_t bound, std::ostream& err)
{
    if (bound < 25)
        throw UsageError("--bound must be at least 25");
    const CensusMode mode = rc.is_theorem1() ? CensusMode::theorem1 : CensusMode::general;
    err << "[census] primes below " << bound << std::endl;
    auto rows = census(bound, mode, rc.params);
    json j = {{"bound", bound},
              {"mode", mode == CensusMode::theorem1 ? "theorem1" : "general"},
              {"params", to_json(rc.params)},
              {"rows", to_json(rows)}};
    return emit(rc, j, render_text(rows));
}

Output cmd_theorem2(const RunConfig& rc, const std::string& primes_text, std::uint64_t bound)
{
    std::vector<std::uint64_t> excluded;
    Params params;
    try {
        excluded = parse_prime_list(primes_text);
        params = theorem2_params(excluded);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (bound < 2)
        throw UsageError("--bound must be at least 2");
    const std::set<std::uint64_t> ex(excluded.begin(), excluded.end());
    json rows = json::array();
    std::ostringstream text;
    text << "params " << params.to_string() << " (a_m = 1 + " << params.a.get_str() << "(m-2))\n";
    bool consistent = true;
    for (std::uint64_t q : primes_below(bound)) {
        auto s = divides_some_am(params, q);
        const bool torsion_q = s.witness.has_value();
        const bool expected = ex.count(q) == 0;
        consistent = consistent && torsion_q == expected;
        rows.push_back({{"q", q},
                        {"torsion", torsion_q},
                        {"witness", s.witness ? json(*s.witness) : json(nullptr)},
                        {"excluded", !expected},
                        {"agrees", torsion_q == expected}});
        if (torsion_q != expected)
            text << "mismatch at q = " << q << '\n';
    }
    text << "primes below " << bound << ": torsion iff outside {" << primes_text << "}: "
         << (consistent ? "holds" : "FAILS") << '\n';
    json j = {{"excluded", excluded}, {"params", to_json(params)}, {"bound", bound},
              {"rows", rows},         {"consistent", consistent}};
    return emit(rc, j, text.str(), consistent ? kExitOk : kExitFailed);
}

Output cmd_export(const RunConfig& rc)
{
    const AlgebraKind kind = rc.algebra_or(AlgebraKind::E);
    const int n = rc.degree_for(kind);
    RelationSet rels = relation_set(kind, rc.params, std::max(n, 2), rc.convention);
    json relations = json::array();
    for (const auto& r : rels.relations)
        relations.push_back({{"tag", r.tag}, {"degree", r.degree}, {"element", r.element.to_string()}});
    json j = {{"algebra", std::string(algebra_name(kind))},
              {"params", to_json(rc.params)},
              {"convention", std::string(convention_name(rc.convention))},
              {"max_degree", rels.max_degree},
              {"relations", relations},
              {"warnings", rels.warnings}};
    return emit(rc, j, rels.to_text());
}

Output cmd_verify(const RunConfig& rc, const std::string& relation_path, std::ostream& err)
{
    VerifyConfig vc;
    vc.params = rc.params;
    vc.convention = rc.convention;
    vc.max_degree = rc.max_degree >= 0 ? rc.max_degree : 5;
    if (vc.max_degree < 3)
        throw UsageError("verify needs --max-degree >= 3");
    vc.theorem2_excluded = rc.excluded;
    if (!relation_path.empty()) {
        std::ifstream in(relation_path);
        if (!in)
            throw UsageError("cannot read relation file " + relation_path);
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            vc.relation_file = RelationSet::from_text(buf.str());
        } catch (const std::invalid_argument& e) {
            VerifyReport rep;
            rep.convention = rc.convention;
            rep.checks.push_back({"relation-file", false, e.what()});
            return emit(rc, rep.to_json(), rep.to_text(), kExitFailed);
        }
    }
    VerifyReport rep = run_verify(vc, &err);
    return emit(rc, rep.to_json(), rep.to_text(), rep.passed() ? kExitOk : kExitFailed);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Torsion in loop-space homology via explicit quotient algebras", "loophom"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--params", g.params, "a,b,c,d,a2,b2 (default 0,4,-3,1,11,5)");
    app.add_option("--theorem2", g.theorem2, "comma separated excluded primes p1,p2,...");
    app.add_option("--max-degree", g.max_degree, "top degree (default 5 for E, 4 for AX)");
    app.add_option("--algebra", g.algebra, "E or AX");
    app.add_option("--field", g.field, "a prime q, or Q");
    app.add_option("--convention", g.convention, "graded or ungraded");
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--out", g.out, "write the report to PATH instead of stdout");

    std::function<Output(const RunConfig&)> action;

    int terms = 10;
    auto* rec = app.add_subcommand("recurrence", "table of (m, a_m, b_m)");
    rec->add_option("--terms", terms, "largest m (default 10)");
    rec->callback([&] { action = [&](const RunConfig& rc) { return cmd_recurrence(rc, terms); }; });

    auto* tor = app.add_subcommand("torsion-primes", "elementary divisors and torsion primes by degree");
    tor->callback([&] { action = [&](const RunConfig& rc) { return cmd_torsion(rc, err); }; });

    std::string prime_text;
    auto* cls = app.add_subcommand("classify", "torsion verdict for one prime");
    cls->add_option("p", prime_text, "prime")->required();
    cls->callback([&] { action = [&](const RunConfig& rc) { return cmd_classify(rc, prime_text); }; });

    long g2 = 8, r4 = 13;
    auto* hil = app.add_subcommand("hilbert", "Hilbert series A(t) and Poincare series P(t)");
    hil->add_option("--g2", g2, "coefficient of t^2 (default 8)");
    hil->add_option("--r4", r4, "coefficient of t^3 (default 13)");
    hil->callback([&] { action = [&](const RunConfig& rc) { return cmd_hilbert(rc, g2, r4, err); }; });

    std::string element_text, rho_text;
    auto* ord = app.add_subcommand("order", "additive order of an element of E or A_X");
    ord->add_option("element", element_text, "element such as 1*u1.w - 1*w.u1");
    ord->add_option("--rho", rho_text, "i,m for rho_{i,m}");
    ord->callback([&] { action = [&](const RunConfig& rc) { return cmd_order(rc, element_text, rho_text); }; });

    std::uint64_t census_bound = 100000;
    auto* cen = app.add_subcommand("census", "torsion verdicts grouped by residue mod 24");
    cen->add_option("--bound", census_bound, "primes below this bound (default 100000)");
    cen->callback([&] { action = [&](const RunConfig& rc) { return cmd_census(rc, census_bound, err); }; });

    std::string t2_primes;
    std::uint64_t t2_bound = 200;
    auto* t2 = app.add_subcommand("theorem2", "check torsion iff q is outside the excluded set");
    t2->add_option("primes", t2_primes, "comma separated primes")->required();
    t2->add_option("--bound", t2_bound, "primes below this bound (default 200)");
    t2->callback([&] { action = [&](const RunConfig& rc) { return cmd_theorem2(rc, t2_primes, t2_bound); }; });

    auto* exp = app.add_subcommand("export-relations", "write the relation set");
    exp->callback([&] { action = [&](const RunConfig& rc) { return cmd_export(rc); }; });

    std::string relation_path;
    auto* ver = app.add_subcommand("verify", "run the consistency suite");
    ver->add_option("--relations", relation_path, "relation file to check and use");
    ver->callback([&] { action = [&](const RunConfig& rc) { return cmd_verify(rc, relation_path, err); }; });

    std::vector<std::string> argv_store;
    argv_store.push_back("loophom");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Output result;
    try {
        RunConfig rc = resolve(g);
        result = action(rc);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }

    if (g.out.empty()) {
        out << result.text;
    } else {
        std::ofstream file(g.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << g.out << '\n';
            return kExitUsage;
        }
        file << result.text;
    }
    return result.code;
}

}  // namespace loophom
