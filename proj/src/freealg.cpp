#include "loophom/freealg.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace loophom {

namespace {

constexpr std::array<std::string_view, kMaxGenerators> kNames = {
    "u1", "u2", "u3", "u4", "v", "w", "x1", "x2"};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Word parse_word(std::string_view text)
{
    text = trim(text);
    if (text == "1")
        return {};
    Word w;
    while (!text.empty()) {
        auto dot = text.find('.');
        w.push_back(gen_from_name(trim(text.substr(0, dot))));
        if (dot == std::string_view::npos)
            break;
        text.remove_prefix(dot + 1);
        if (text.empty())
            throw std::invalid_argument("trailing '.' in word");
    }
    return w;
}

}  // namespace

std::string_view gen_name(Gen g)
{
    return kNames.at(static_cast<std::size_t>(g));
}

Gen gen_from_name(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name)
            return static_cast<Gen>(i);
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::vector<Gen> Alphabet::generators() const
{
    std::vector<Gen> out;
    for (int i = 0; i < size; ++i)
        out.push_back(static_cast<Gen>(i));
    return out;
}

std::int64_t word_index(const Word& w, int g)
{
    std::int64_t idx = 0;
    for (Gen x : w)
        idx = idx * g + static_cast<int>(x);
    return idx;
}

Word word_at(std::int64_t index, int length, int g)
{
    Word w(static_cast<std::size_t>(length));
    for (int k = length - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = static_cast<Gen>(index % g);
        index /= g;
    }
    return w;
}

std::vector<Word> words_of_degree(int n, Alphabet alphabet)
{
    if (n < 0)
        throw std::invalid_argument("negative degree");
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i)
        count *= alphabet.size;
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i)
        out.push_back(word_at(i, n, alphabet.size));
    return out;
}

std::string_view convention_name(SignConvention c)
{
    return c == SignConvention::graded ? "graded" : "ungraded";
}

SignConvention convention_from_name(std::string_view name)
{
    if (name == "graded")
        return SignConvention::graded;
    if (name == "ungraded")
        return SignConvention::ungraded;
    throw std::invalid_argument("unknown sign convention '" + std::string(name) + "'");
}

Element::Element(Gen g) : Element(Word{g}) {}

Element::Element(Word w, mpz_class coeff)
{
    if (coeff != 0)
        terms_.emplace(std::move(w), std::move(coeff));
}

mpz_class Element::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int Element::degree() const
{
    if (terms_.empty())
        return 0;
    auto n = terms_.begin()->first.size();
    // length-lex: first and last word bound all lengths
    if (terms_.rbegin()->first.size() != n)
        return -1;
    return static_cast<int>(n);
}

bool Element::is_homogeneous() const
{
    return degree() >= 0;
}

bool Element::is_homogeneous_of(int n) const
{
    return terms_.empty() || degree() == n;
}

void Element::add_term(const Word& w, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

Element& Element::operator*=(const mpz_class& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_)
        c *= s;
    return *this;
}

Element operator*(const Element& f, const Element& g)
{
    Element out;
    for (const auto& [wf, cf] : f.terms_) {
        for (const auto& [wg, cg] : g.terms_) {
            Word w = wf;
            w.insert(w.end(), wg.begin(), wg.end());
            out.add_term(w, cf * cg);
        }
    }
    return out;
}

Element multiply(const Element& f, const Element& g)
{
    return f * g;
}

Element bracket(const Element& f, const Element& g, SignConvention conv)
{
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw std::invalid_argument("bracket of inhomogeneous elements");
    Element fg = f * g;
    Element gf = g * f;
    bool odd = conv == SignConvention::graded && (f.degree() * g.degree()) % 2 == 1;
    return odd ? fg + gf : fg - gf;
}

int alphabet_span(const Element& e)
{
    int span = 0;
    for (const auto& [w, c] : e.terms())
        for (Gen x : w)
            span = std::max(span, static_cast<int>(x) + 1);
    return span;
}

std::string Element::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += c.get_str();
        out += '*';
        if (w.empty()) {
            out += '1';
            continue;
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                out += '.';
            out += gen_name(w[i]);
        }
    }
    return out;
}

Element Element::parse(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        throw std::invalid_argument("empty element text");
    Element out;
    if (text == "0")
        return out;
    bool negate = false;
    while (true) {
        // " - " is accepted as a separator too, negating the next term
        auto sep = std::min(text.find(" + "), text.find(" - "));
        std::string_view term = trim(text.substr(0, sep));
        auto star = term.find('*');
        if (star == std::string_view::npos)
            throw std::invalid_argument("term without '*': " + std::string(term));
        mpz_class c;
        std::string num(trim(term.substr(0, star)));
        if (num.empty() || c.set_str(num, 10) != 0)
            throw std::invalid_argument("bad coefficient: " + num);
        out.add_term(parse_word(term.substr(star + 1)), negate ? mpz_class(-c) : c);
        if (sep == std::string_view::npos)
            break;
        negate = text[sep + 1] == '-';
        text.remove_prefix(sep + 3);
    }
    return out;
}

}  // namespace loophom
