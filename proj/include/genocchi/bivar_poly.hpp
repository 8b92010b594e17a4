#ifndef GENOCCHI_BIVAR_POLY_HPP
#define GENOCCHI_BIVAR_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "genocchi/rational.hpp"

namespace genocchi {

enum class Var { x, y };

// Sparse polynomial in x and y over Rational.
//
// Canonical form: terms sorted by (degx descending, degy descending), no
// zero coefficient ever stored. Structural equality is semantic equality.
class BivarPoly {
public:
    struct Term {
        unsigned degx;
        unsigned degy;
        Rational coeff;

        bool operator==(const Term& o) const {
            return degx == o.degx && degy == o.degy && coeff == o.coeff;
        }
    };

    BivarPoly() = default;
    BivarPoly(const Rational& c);
    BivarPoly(long c) : BivarPoly(Rational(c)) {}

    static BivarPoly variable(Var v);
    static BivarPoly x() { return variable(Var::x); }
    static BivarPoly y() { return variable(Var::y); }
    static BivarPoly monomial(unsigned degx, unsigned degy, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    // True for the zero polynomial too.
    bool is_constant() const;
    // Coefficient at (0,0).
    Rational constant_value() const;
    // Degree in one variable; -1 for the zero polynomial.
    int degree(Var v) const;

    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    // Coefficient of x^degx y^degy (zero if absent).
    Rational coeff(unsigned degx, unsigned degy) const;

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

    BivarPoly& operator*=(const Rational& c);
    friend BivarPoly operator*(BivarPoly p, const Rational& c) { p *= c; return p; }
    friend BivarPoly operator*(const Rational& c, BivarPoly p) { p *= c; return p; }

    // this += c * p, single merge pass.
    void add_scaled(const BivarPoly& p, const Rational& c);

    BivarPoly pow(unsigned e) const;

    // Simultaneous substitution x <- x_val, y <- y_val, expanded to
    // canonical form.
    BivarPoly substitute(const BivarPoly& x_val, const BivarPoly& y_val) const;

    // Formal partial derivative applied `times` times.
    BivarPoly partial(Var v, unsigned times = 1) const;

    Rational evaluate(const Rational& x_val, const Rational& y_val) const;

    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    // Human-readable form for diagnostics, e.g. "3*x^2 + 6*y - 3".
    std::string str() const;

    // Canonical term order: degx descending, then degy descending.
    static bool term_before(unsigned ax, unsigned ay, unsigned bx, unsigned by) {
        return ax != bx ? ax > bx : ay > by;
    }

private:
    friend class PolyAccum;
    std::vector<Term> terms_;
};

// Dense accumulation grid for convolution-style sums of many scaled
// polynomials. Bounded degrees only; callers size it from known degree caps.
class PolyAccum {
public:
    PolyAccum(unsigned degx_cap, unsigned degy_cap);

    void clear();
    void add_term(unsigned degx, unsigned degy, const Rational& c);
    // += c * p
    void add_scaled(const BivarPoly& p, const Rational& c);
    // += a * b (full convolution of term maps)
    void add_product(const BivarPoly& a, const BivarPoly& b);
    // Canonical snapshot of the accumulated value.
    BivarPoly to_poly() const;

private:
    Rational& slot(unsigned dx, unsigned dy) { return slots_[dx * (ny_ + 1) + dy]; }

    unsigned nx_, ny_;
    std::vector<Rational> slots_;
    std::vector<uint8_t> dirty_;
    std::vector<uint32_t> touched_;
};

}  // namespace genocchi

#endif
