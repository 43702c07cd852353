#pragma once

#include <map>
#include <string>
#include <vector>

#include "parabraid/freealg.hpp"

namespace parabraid {

// Element of the q-fold braided tensor power of the free algebra: a rational
// combination of q-tuples of words.  Multiplication inserts the sign
// (-1)^{|b||c|} every time two odd components interchange.
class TensorPoly {
  public:
    using Tuple = std::vector<Word>;
    using TermMap = std::map<Tuple, Rational>;

    explicit TensorPoly(int arity) : arity_(arity) {}
    static TensorPoly unit(int arity);
    static TensorPoly from_ncpoly(const NCPoly& p);  // arity 1
    NCPoly to_ncpoly() const;                        // requires arity 1

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Tuple& t, const Rational& c);

    TensorPoly& operator+=(const TensorPoly& other);
    TensorPoly& operator-=(const TensorPoly& other);
    TensorPoly& operator*=(const Rational& c);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(const Rational& c, TensorPoly a) { return a *= c; }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

  private:
    int arity_;
    TermMap terms_;
};

std::string to_string(const TensorPoly& t);

// Braided product of equal-arity tensor polynomials.
TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b);

// Coproduct: unit group-like, generators primitive, extended as an algebra
// homomorphism into the braided tensor square.
TensorPoly coproduct(const NCPoly& p);

// q-fold version (arity q >= 2), memoized per word.
TensorPoly iterated_coproduct(const NCPoly& p, int arity);

// Splices the coproduct of the component at `position`, raising arity by one.
TensorPoly apply_coproduct_at(const TensorPoly& t, int position);
// Applies the counit to the component at `position`, lowering arity by one.
TensorPoly apply_counit_at(const TensorPoly& t, int position);
// Applies the antipode to the component at `position`.
TensorPoly apply_antipode_at(const TensorPoly& t, int position);
// Multiplies all components out into the free algebra.
NCPoly multiply_out(const TensorPoly& t);

Rational counit(const NCPoly& p);
NCPoly antipode(const NCPoly& p);

struct HopfAxiomCheck {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass; offending difference otherwise
};

struct HopfAxiomReport {
    bool pass = false;
    std::vector<HopfAxiomCheck> checks;
};

// Coassociativity, counit and antipode laws on every generator with
// mode <= m, plus position-independence of the iterated coproduct up to
// arity 4.
HopfAxiomReport check_hopf_axioms(int m);

}  // namespace parabraid
