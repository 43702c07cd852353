#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "parabraid/rational.hpp"

namespace parabraid {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator^(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

enum class Sign : std::uint8_t { plus = 0, minus = 1 };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// One creation/annihilation symbol B[mode][+|-]. Modes are 1-based.
struct GenSym {
    int mode = 1;
    Sign sign = Sign::plus;

    friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

inline GenSym raise_sym(int mode) { return GenSym{mode, Sign::plus}; }
inline GenSym lower_sym(int mode) { return GenSym{mode, Sign::minus}; }

std::string to_string(const GenSym& g);

// A monomial of the free algebra: an ordered string of generator symbols.
// The empty word is the unit I.  Words compare degree-first, then
// lexicographically on their symbols, so every map keyed by Word iterates
// in the canonical order used for echelon forms and serialized output.
struct Word {
    std::vector<GenSym> syms;

    Word() = default;
    explicit Word(std::vector<GenSym> s) : syms(std::move(s)) {}
    Word(std::initializer_list<GenSym> s) : syms(s) {}

    int degree() const { return static_cast<int>(syms.size()); }
    Parity parity() const { return static_cast<Parity>(syms.size() % 2); }
    bool is_unit() const { return syms.empty(); }

    Word concat(const Word& other) const;

    friend bool operator==(const Word& a, const Word& b) { return a.syms == b.syms; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.syms.size() != b.syms.size())
            return a.syms.size() <=> b.syms.size();
        return a.syms <=> b.syms;
    }
};

std::string to_string(const Word& w);

// Formal rational combination of words.  Zero coefficients are never stored.
class NCPoly {
  public:
    using TermMap = std::map<Word, Rational>;

    NCPoly() = default;
    static NCPoly zero() { return NCPoly(); }
    static NCPoly unit() { return term(Word{}, 1); }
    static NCPoly gen(const GenSym& g) { return term(Word{{g}}, 1); }
    static NCPoly term(Word w, Rational c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Largest degree among terms (the filtration degree); -1 for the zero polynomial.
    int top_degree() const;

    // Coefficient of a word, zero if absent.
    Rational coeff(const Word& w) const;

    // Homogeneous parity if every word shares one, otherwise nullopt-like flag.
    bool homogeneous(Parity* out = nullptr) const;

    void add_term(const Word& w, const Rational& c);

    NCPoly& operator+=(const NCPoly& other);
    NCPoly& operator-=(const NCPoly& other);
    NCPoly& operator*=(const Rational& c);

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
    friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
    friend NCPoly operator-(NCPoly a) { return a *= Rational(-1); }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

    friend NCPoly mul(const NCPoly& p, const NCPoly& q);

  private:
    TermMap terms_;
};

std::string to_string(const NCPoly& p);

// pq - qp
NCPoly bracket(const NCPoly& p, const NCPoly& q);
// pq + qp
NCPoly antibracket(const NCPoly& p, const NCPoly& q);
// abc - cba
NCPoly triple_minus(const NCPoly& a, const NCPoly& b, const NCPoly& c);

// Relator families over modes 1..m.  Identically-zero relators are dropped
// and exact duplicates removed; order of the survivors is deterministic.
std::vector<NCPoly> boson_relators(int m);
std::vector<NCPoly> paraboson_relators(int m);
std::vector<NCPoly> gamma2_relators(int m);

}  // namespace parabraid
