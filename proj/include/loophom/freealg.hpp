// Free tensor algebra over the integers on degree-1 generators.
//
// Generators are drawn from the fixed ordered alphabet
//   u1 < u2 < u3 < u4 < v < w < x1 < x2
// and an algebra context uses a prefix of it: the first six letters for F,
// all eight for the ambient algebra of A_X. Words are ordered length-lex,
// which for a fixed length coincides with reading the word as a base-g
// numeral; DegreeMatrix column indices rely on that.

#ifndef LOOPHOM_FREEALG_HPP
#define LOOPHOM_FREEALG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace loophom {

enum class Gen : std::uint8_t { u1 = 0, u2, u3, u4, v, w, x1, x2 };

inline constexpr int kMaxGenerators = 8;

std::string_view gen_name(Gen g);
Gen gen_from_name(std::string_view name);  // throws std::invalid_argument

/// Number of generators in an algebra context (a prefix of the alphabet).
struct Alphabet
{
    int size = 6;

    static constexpr Alphabet F() { return {6}; }
    static constexpr Alphabet AX() { return {8}; }

    bool contains(Gen g) const { return static_cast<int>(g) < size; }
    std::vector<Gen> generators() const;
};

/// A monomial; the empty word is the unit.
using Word = std::vector<Gen>;

struct LengthLex
{
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// Position of `w` among words of the same length (base-g numeral).
std::int64_t word_index(const Word& w, int g);
Word word_at(std::int64_t index, int length, int g);

std::vector<Word> words_of_degree(int n, Alphabet alphabet);

enum class SignConvention { graded, ungraded };

std::string_view convention_name(SignConvention c);
SignConvention convention_from_name(std::string_view name);

/// Finitely supported integer combination of words, kept canonical:
/// no stored coefficient is zero.
class Element
{
  public:
    using Terms = std::map<Word, mpz_class, LengthLex>;

    Element() = default;
    explicit Element(Gen g);
    Element(Word w, mpz_class coeff = 1);

    static Element unit() { return Element(Word{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of `w` (zero when absent).
    mpz_class coeff(const Word& w) const;

    /// Common length of all words, or -1 when inhomogeneous. Zero counts as
    /// homogeneous of every degree and reports 0.
    int degree() const;
    bool is_homogeneous() const;
    bool is_homogeneous_of(int n) const;

    void add_term(const Word& w, const mpz_class& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const mpz_class& s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= -1; }
    friend Element operator*(const mpz_class& s, Element a) { return a *= s; }
    friend Element operator*(const Element& f, const Element& g);

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    /// "<int>*<gen>.<gen>..." terms joined by " + "; unit word "1"; zero "0".
    /// parse also takes " - " between terms.
    std::string to_string() const;
    static Element parse(std::string_view text);  // throws std::invalid_argument

  private:
    Terms terms_;
};

Element multiply(const Element& f, const Element& g);

/// Graded: fg - (-1)^{|f||g|} gf. Ungraded: fg - gf.
/// Throws std::invalid_argument on inhomogeneous input.
Element bracket(const Element& f, const Element& g, SignConvention conv);

/// Largest generator index used, plus one (0 for scalars).
int alphabet_span(const Element& e);

}  // namespace loophom

#endif
