#include "loophom/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace loophom {

namespace {

Element g(Gen x)
{
    return Element(x);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        out.push_back(item);
    return out;
}

mpz_class parse_integer(const std::string& s)
{
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

}  // namespace

Params Params::theorem1()
{
    return {0, 4, -3, 1, 11, 5};
}

Params Params::parse(const std::string& text)
{
    auto parts = split(text, ',');
    if (parts.size() != 6)
        throw std::invalid_argument("expected six comma-separated integers a,b,c,d,a2,b2");
    return {parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]),
            parse_integer(parts[3]), parse_integer(parts[4]), parse_integer(parts[5])};
}

std::string Params::to_string() const
{
    return a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() + "," +
           a2.get_str() + "," + b2.get_str();
}

std::vector<CoeffEntry> coeff_sequence(const Params& p, int max_m)
{
    if (max_m < 2)
        throw std::invalid_argument("coeff_sequence needs max_m >= 2");
    std::vector<CoeffEntry> out;
    out.push_back({2, p.a2, p.b2});
    for (int m = 3; m <= max_m; ++m) {
        const auto& prev = out.back();
        out.push_back({m, p.a + p.b * prev.a + p.c * prev.b, p.d * prev.a});
    }
    return out;
}

Element sigma(int i, int m, SignConvention conv)
{
    if (i < 1 || i > 4 || m < 1)
        throw std::invalid_argument("sigma(i, m) needs 1 <= i <= 4, m >= 1");
    Element s(static_cast<Gen>(i - 1));
    for (int k = 1; k < m; ++k)
        s = bracket(s, g(Gen::v), conv);
    return s;
}

Element rho(int i, int m, SignConvention conv)
{
    if (m < 2)
        throw std::invalid_argument("rho(i, m) needs m >= 2");
    return bracket(sigma(i, m - 1, conv), g(Gen::w), conv);
}

Element tau(int m, const Params& p, SignConvention conv)
{
    if (m < 2)
        throw std::invalid_argument("tau(m) needs m >= 2");
    const CoeffEntry e = coeff_sequence(p, m).back();
    return rho(1, m, conv) + e.a * rho(2, m, conv) + e.b * rho(3, m, conv);
}

std::string_view algebra_name(AlgebraKind k)
{
    return k == AlgebraKind::E ? "E" : "AX";
}

AlgebraKind algebra_from_name(std::string_view name)
{
    if (name == "E")
        return AlgebraKind::E;
    if (name == "AX")
        return AlgebraKind::AX;
    throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

RelationSet relation_set_E(const Params& p, int max_degree, SignConvention conv)
{
    if (max_degree < 2)
        throw std::invalid_argument("relation_set_E needs max_degree >= 2");
    RelationSet rs;
    rs.kind = AlgebraKind::E;
    rs.alphabet = Alphabet::F();
    rs.params = p;
    rs.convention = conv;
    rs.max_degree = max_degree;

    auto seq = coeff_sequence(p, max_degree);
    for (int m = 2; m <= max_degree; ++m)
        rs.relations.push_back({tau(m, p, conv), m, "tau_" + std::to_string(m)});
    for (int m = 2; m + 1 <= max_degree; ++m) {
        const mpz_class& am = seq[static_cast<std::size_t>(m - 2)].a;
        std::string tag = "a_" + std::to_string(m) + "*rho_4_" + std::to_string(m + 1);
        if (am == 0) {
            rs.warnings.push_back("a_" + std::to_string(m) + " = 0: relation " + tag + " omitted");
            continue;
        }
        rs.relations.push_back({am * rho(4, m + 1, conv), m + 1, tag});
    }
    return rs;
}

RelationSet relation_set_AX(const Params& p, SignConvention conv)
{
    auto br = [conv](Gen x, Gen y) { return bracket(g(x), g(y), conv); };
    using enum Gen;

    std::vector<Element> rels = {
        br(x1, u1) - br(u1, v) - p.a * br(u2, v),
        br(x1, u2) - p.b * br(u2, v) - p.d * br(u3, v),
        br(x1, u3) - p.c * br(u2, v),
        br(x1, u4),
        br(x1, v),
        br(x1, w),
        br(x2, u1),
        br(x2, u3),
        br(x2, u4),
        br(x2, v),
        br(x2, w),
        br(x2, u2) - br(u4, v),
        br(u1, w) + p.a2 * br(u2, w) + p.b2 * br(u3, w),
    };

    RelationSet rs;
    rs.kind = AlgebraKind::AX;
    rs.alphabet = Alphabet::AX();
    rs.params = p;
    rs.convention = conv;
    rs.max_degree = 2;
    for (std::size_t k = 0; k < rels.size(); ++k)
        rs.relations.push_back({std::move(rels[k]), 2, "AX_" + std::to_string(k + 1)});
    return rs;
}

RelationSet relation_set(AlgebraKind kind, const Params& p, int max_degree, SignConvention conv)
{
    return kind == AlgebraKind::E ? relation_set_E(p, max_degree, conv)
                                  : relation_set_AX(p, conv);
}

// Format:
//   # algebra=E gens=u1,...,w params=a,b,c,d,a2,b2 convention=graded max_degree=N tags=t1;t2;...
//   # warning: ...            (zero or more)
//   <element>                 (one per relation, in tag order)
std::string RelationSet::to_text() const
{
    std::ostringstream out;
    out << "# algebra=" << algebra_name(kind) << " gens=";
    for (int i = 0; i < alphabet.size; ++i)
        out << (i ? "," : "") << gen_name(static_cast<Gen>(i));
    out << " params=" << params.to_string() << " convention=" << convention_name(convention)
        << " max_degree=" << max_degree << " tags=";
    for (std::size_t k = 0; k < relations.size(); ++k)
        out << (k ? ";" : "") << relations[k].tag;
    out << '\n';
    for (const auto& w : warnings)
        out << "# warning: " << w << '\n';
    for (const auto& r : relations)
        out << r.element.to_string() << '\n';
    return out.str();
}

RelationSet RelationSet::from_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::invalid_argument("relation file: missing header line");

    RelationSet rs;
    std::vector<std::string> tags;
    bool have_gens = false, have_params = false;
    for (const auto& field : split(line.substr(2), ' ')) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("relation file: bad header field '" + field + "'");
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "algebra") {
            rs.kind = algebra_from_name(value);
        } else if (key == "gens") {
            auto names = split(value, ',');
            for (std::size_t i = 0; i < names.size(); ++i)
                if (gen_from_name(names[i]) != static_cast<Gen>(i))
                    throw std::invalid_argument("relation file: generators out of order");
            rs.alphabet.size = static_cast<int>(names.size());
            have_gens = true;
        } else if (key == "params") {
            rs.params = Params::parse(value);
            have_params = true;
        } else if (key == "convention") {
            rs.convention = convention_from_name(value);
        } else if (key == "max_degree") {
            rs.max_degree = std::stoi(value);
        } else if (key == "tags") {
            tags = split(value, ';');
        } else {
            throw std::invalid_argument("relation file: unknown header key '" + key + "'");
        }
    }
    if (!have_gens || !have_params)
        throw std::invalid_argument("relation file: header lacks gens or params");

    std::size_t k = 0;
    while (std::getline(in, line)) {
        if (line.rfind("# warning: ", 0) == 0) {
            rs.warnings.push_back(line.substr(11));
            continue;
        }
        if (line.empty())
            continue;
        if (k >= tags.size())
            throw std::invalid_argument("relation file: more relations than tags");
        Element e = Element::parse(line);
        if (!e.is_homogeneous() || e.is_zero())
            throw std::invalid_argument("relation file: relation " + tags[k] +
                                        " is zero or inhomogeneous");
        if (alphabet_span(e) > rs.alphabet.size)
            throw std::invalid_argument("relation file: relation " + tags[k] +
                                        " uses a generator outside the header alphabet");
        rs.relations.push_back({std::move(e), 0, tags[k]});
        rs.relations.back().degree = rs.relations.back().element.degree();
        ++k;
    }
    if (k != tags.size())
        throw std::invalid_argument("relation file: fewer relations than tags");
    return rs;
}

}  // namespace loophom
