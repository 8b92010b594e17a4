#include "genocchi/egf_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace genocchi {

namespace {

void require_same_order(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}

}  // namespace

EgfSeries EgfSeries::monomial(unsigned k, const BivarPoly& c, unsigned order) {
    EgfSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
}

EgfSeries EgfSeries::exp_linear(const BivarPoly& c, unsigned j, unsigned order) {
    if (j == 0) throw std::invalid_argument("exp_linear requires j >= 1");
    EgfSeries s(order);
    s.coeffs_[0] = BivarPoly(Rational(1));
    BivarPoly power(Rational(1));   // c^m / m!
    for (unsigned m = 1; m * j <= order; ++m) {
        power = power * c;
        power *= Rational(1, static_cast<long>(m));
        s.coeffs_[m * j] = power;
    }
    return s;
}

const BivarPoly& EgfSeries::ordinary_coeff(unsigned n) const {
    if (n >= coeffs_.size())
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " exceeds series order " + std::to_string(order()));
    return coeffs_[n];
}

BivarPoly EgfSeries::egf_coeff(unsigned n) const {
    BivarPoly p = ordinary_coeff(n);
    p *= Rational(factorial(n));
    return p;
}

void EgfSeries::set_ordinary_coeff(unsigned n, BivarPoly value) {
    if (n >= coeffs_.size())
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " exceeds series order " + std::to_string(order()));
    coeffs_[n] = std::move(value);
}

EgfSeries& EgfSeries::operator+=(const EgfSeries& o) {
    require_same_order(*this, o);
    for (unsigned n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

EgfSeries operator*(const EgfSeries& a, const EgfSeries& b) {
    require_same_order(a, b);
    const unsigned N = a.order();
    EgfSeries r(N);
    int dx = -1, dy = -1;
    for (unsigned n = 0; n <= N; ++n) {
        dx = std::max({dx, a.coeffs_[n].degree(Var::x), b.coeffs_[n].degree(Var::x)});
        dy = std::max({dy, a.coeffs_[n].degree(Var::y), b.coeffs_[n].degree(Var::y)});
    }
    if (dx < 0 && dy < 0) return r;   // one factor is identically zero
    PolyAccum acc(static_cast<unsigned>(std::max(dx, 0) * 2),
                  static_cast<unsigned>(std::max(dy, 0) * 2));
    for (unsigned n = 0; n <= N; ++n) {
        acc.clear();
        for (unsigned k = 0; k <= n; ++k) {
            const BivarPoly& pa = a.coeffs_[k];
            const BivarPoly& pb = b.coeffs_[n - k];
            if (pa.is_zero() || pb.is_zero()) continue;
            if (pb.is_constant())
                acc.add_scaled(pa, pb.constant_value());
            else if (pa.is_constant())
                acc.add_scaled(pb, pa.constant_value());
            else
                acc.add_product(pa, pb);
        }
        r.coeffs_[n] = acc.to_poly();
    }
    return r;
}

EgfSeries EgfSeries::inverse() const {
    const BivarPoly& lead = coeffs_[0];
    if (lead.is_zero() || !lead.is_constant())
        throw std::domain_error("leading coefficient not a unit");
    const Rational a0_inv = lead.constant_value().inverse();
    const unsigned N = order();
    EgfSeries r(N);
    r.coeffs_[0] = BivarPoly(a0_inv);
    // b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}
    for (unsigned n = 1; n <= N; ++n) {
        BivarPoly acc;
        for (unsigned k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
        acc *= -a0_inv;
        r.coeffs_[n] = std::move(acc);
    }
    return r;
}

EgfSeries EgfSeries::pow(unsigned e) const {
    EgfSeries r = constant(Rational(1), order());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

EgfSeries EgfSeries::truncated(unsigned new_order) const {
    if (new_order > order())
        throw std::invalid_argument("cannot truncate to a higher order");
    EgfSeries r(new_order);
    for (unsigned n = 0; n <= new_order; ++n) r.coeffs_[n] = coeffs_[n];
    return r;
}

}  // namespace genocchi
