#ifndef GENOCCHI_EGF_SERIES_HPP
#define GENOCCHI_EGF_SERIES_HPP

#include <vector>

#include "genocchi/bivar_poly.hpp"

namespace genocchi {

// Truncated series in the formal variable t with BivarPoly coefficients,
// terms t^0 .. t^order retained.
//
// Coefficients are stored in ORDINARY normalization; the EGF coefficient of
// t^n is n! * ordinary_coeff(n) and is produced only at extraction. All
// arithmetic requires equal orders; nothing is truncated silently.
class EgfSeries {
public:
    explicit EgfSeries(unsigned order) : coeffs_(order + 1) {}

    // c * t^k (ordinary coefficient c), zero if k > order.
    static EgfSeries monomial(unsigned k, const BivarPoly& c, unsigned order);
    static EgfSeries constant(const Rational& c, unsigned order) {
        return monomial(0, BivarPoly(c), order);
    }
    // exp(c * t^j): ordinary coefficient of t^{j*m} is c^m / m!. Requires j >= 1.
    static EgfSeries exp_linear(const BivarPoly& c, unsigned j, unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }

    const BivarPoly& ordinary_coeff(unsigned n) const;
    // n! * ordinary_coeff(n); throws if n exceeds the truncation order.
    BivarPoly egf_coeff(unsigned n) const;
    void set_ordinary_coeff(unsigned n, BivarPoly value);

    EgfSeries& operator+=(const EgfSeries& o);
    friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { a += b; return a; }
    // Cauchy product truncated at the common order.
    friend EgfSeries operator*(const EgfSeries& a, const EgfSeries& b);

    // Multiplicative inverse; requires the t^0 coefficient to be a nonzero
    // constant (the only units of the coefficient ring).
    EgfSeries inverse() const;

    // Repeated product; pow(0) is the series 1.
    EgfSeries pow(unsigned e) const;

    // Copy truncated to a lower (or equal) order.
    EgfSeries truncated(unsigned new_order) const;

    bool operator==(const EgfSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const EgfSeries& o) const { return !(*this == o); }

private:
    std::vector<BivarPoly> coeffs_;
};

}  // namespace genocchi

#endif
