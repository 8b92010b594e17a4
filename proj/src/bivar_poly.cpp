#include "genocchi/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genocchi {

BivarPoly::BivarPoly(const Rational& c) {
    if (!c.is_zero()) terms_.push_back({0, 0, c});
}

BivarPoly BivarPoly::variable(Var v) {
    BivarPoly p;
    p.terms_.push_back({v == Var::x ? 1u : 0u, v == Var::y ? 1u : 0u, Rational(1)});
    return p;
}

BivarPoly BivarPoly::monomial(unsigned degx, unsigned degy, const Rational& c) {
    BivarPoly p;
    if (!c.is_zero()) p.terms_.push_back({degx, degy, c});
    return p;
}

bool BivarPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].degx == 0 && terms_[0].degy == 0);
}

Rational BivarPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    const Term& last = terms_.back();
    return (last.degx == 0 && last.degy == 0) ? last.coeff : Rational(0);
}

int BivarPoly::degree(Var v) const {
    if (terms_.empty()) return -1;
    if (v == Var::x) return static_cast<int>(terms_.front().degx);
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.degy);
    return static_cast<int>(d);
}

Rational BivarPoly::coeff(unsigned degx, unsigned degy) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{degx, degy},
                               [](const Term& t, const std::pair<unsigned, unsigned>& k) {
                                   return term_before(t.degx, t.degy, k.first, k.second);
                               });
    if (it != terms_.end() && it->degx == degx && it->degy == degy) return it->coeff;
    return Rational(0);
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.degx, t.degy, -t.coeff});
    return r;
}

void BivarPoly::add_scaled(const BivarPoly& p, const Rational& c) {
    if (p.is_zero() || c.is_zero()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + p.terms_.size());
    auto a = terms_.begin();
    auto b = p.terms_.begin();
    while (a != terms_.end() && b != p.terms_.end()) {
        if (a->degx == b->degx && a->degy == b->degy) {
            Rational sum = a->coeff;
            sum.add_mul(b->coeff, c);
            if (!sum.is_zero()) merged.push_back({a->degx, a->degy, std::move(sum)});
            ++a;
            ++b;
        } else if (term_before(a->degx, a->degy, b->degx, b->degy)) {
            merged.push_back(*a++);
        } else {
            merged.push_back({b->degx, b->degy, b->coeff * c});
            ++b;
        }
    }
    merged.insert(merged.end(), a, terms_.end());
    for (; b != p.terms_.end(); ++b) merged.push_back({b->degx, b->degy, b->coeff * c});
    terms_ = std::move(merged);
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    add_scaled(o, Rational(1));
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    add_scaled(o, Rational(-1));
    return *this;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    r += b;
    return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    r -= b;
    return r;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.coeff *= c;
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return BivarPoly();
    if (a.is_constant()) return b * a.constant_value();
    if (b.is_constant()) return a * b.constant_value();
    PolyAccum acc(static_cast<unsigned>(a.degree(Var::x) + b.degree(Var::x)),
                  static_cast<unsigned>(a.degree(Var::y) + b.degree(Var::y)));
    acc.add_product(a, b);
    return acc.to_poly();
}

BivarPoly BivarPoly::pow(unsigned e) const {
    BivarPoly r(Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

BivarPoly BivarPoly::substitute(const BivarPoly& x_val, const BivarPoly& y_val) const {
    if (terms_.empty()) return BivarPoly();
    // power tables up to the degrees actually present
    const unsigned dx = static_cast<unsigned>(degree(Var::x));
    const unsigned dy = static_cast<unsigned>(degree(Var::y));
    std::vector<BivarPoly> xp(dx + 1), yp(dy + 1);
    xp[0] = BivarPoly(Rational(1));
    for (unsigned i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x_val;
    yp[0] = BivarPoly(Rational(1));
    for (unsigned i = 1; i <= dy; ++i) yp[i] = yp[i - 1] * y_val;
    BivarPoly r;
    for (const Term& t : terms_) {
        BivarPoly m = xp[t.degx] * yp[t.degy];
        r.add_scaled(m, t.coeff);
    }
    return r;
}

BivarPoly BivarPoly::partial(Var v, unsigned times) const {
    if (times == 0) return *this;
    BivarPoly r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        const unsigned d = (v == Var::x) ? t.degx : t.degy;
        if (d < times) continue;
        Rational c = t.coeff;
        for (unsigned i = 0; i < times; ++i) c *= Rational(static_cast<long>(d - i));
        if (v == Var::x)
            r.terms_.push_back({t.degx - times, t.degy, std::move(c)});
        else
            r.terms_.push_back({t.degx, t.degy - times, std::move(c)});
    }
    // term order is preserved by uniform exponent shifts
    return r;
}

Rational BivarPoly::evaluate(const Rational& x_val, const Rational& y_val) const {
    if (terms_.empty()) return Rational(0);
    const unsigned dx = static_cast<unsigned>(degree(Var::x));
    const unsigned dy = static_cast<unsigned>(degree(Var::y));
    std::vector<Rational> xp(dx + 1, Rational(1)), yp(dy + 1, Rational(1));
    for (unsigned i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x_val;
    for (unsigned i = 1; i <= dy; ++i) yp[i] = yp[i - 1] * y_val;
    Rational r(0);
    for (const Term& t : terms_) {
        Rational m = t.coeff * xp[t.degx];
        r.add_mul(m, yp[t.degy]);
    }
    return r;
}

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        const bool has_var = t.degx > 0 || t.degy > 0;
        const bool unit = c == Rational(1);
        if (!unit || !has_var) {
            if (c.is_integer())
                os << c.numerator().get_str();
            else
                os << c.str();
            if (has_var) os << "*";
        }
        if (t.degx > 0) {
            os << "x";
            if (t.degx > 1) os << "^" << t.degx;
            if (t.degy > 0) os << "*";
        }
        if (t.degy > 0) {
            os << "y";
            if (t.degy > 1) os << "^" << t.degy;
        }
    }
    return os.str();
}

PolyAccum::PolyAccum(unsigned degx_cap, unsigned degy_cap)
    : nx_(degx_cap),
      ny_(degy_cap),
      slots_((degx_cap + 1) * (degy_cap + 1)),
      dirty_((degx_cap + 1) * (degy_cap + 1), 0) {}

void PolyAccum::clear() {
    for (uint32_t i : touched_) {
        slots_[i] = Rational(0);
        dirty_[i] = 0;
    }
    touched_.clear();
}

void PolyAccum::add_term(unsigned degx, unsigned degy, const Rational& c) {
    const uint32_t i = degx * (ny_ + 1) + degy;
    if (!dirty_[i]) {
        dirty_[i] = 1;
        touched_.push_back(i);
    }
    slots_[i] += c;
}

void PolyAccum::add_scaled(const BivarPoly& p, const Rational& c) {
    if (c.is_zero()) return;
    for (const BivarPoly::Term& t : p.terms_) {
        const uint32_t i = t.degx * (ny_ + 1) + t.degy;
        if (!dirty_[i]) {
            dirty_[i] = 1;
            touched_.push_back(i);
        }
        slots_[i].add_mul(t.coeff, c);
    }
}

void PolyAccum::add_product(const BivarPoly& a, const BivarPoly& b) {
    for (const BivarPoly::Term& ta : a.terms_) {
        const uint32_t base = ta.degx * (ny_ + 1) + ta.degy;
        for (const BivarPoly::Term& tb : b.terms_) {
            const uint32_t i = base + tb.degx * (ny_ + 1) + tb.degy;
            if (!dirty_[i]) {
                dirty_[i] = 1;
                touched_.push_back(i);
            }
            slots_[i].add_mul(ta.coeff, tb.coeff);
        }
    }
}

BivarPoly PolyAccum::to_poly() const {
    BivarPoly r;
    r.terms_.reserve(touched_.size());
    std::vector<uint32_t> idx = touched_;
    std::sort(idx.begin(), idx.end(), std::greater<uint32_t>());
    for (uint32_t i : idx) {
        if (slots_[i].is_zero()) continue;
        r.terms_.push_back({i / (ny_ + 1), i % (ny_ + 1), slots_[i]});
    }
    return r;
}

}  // namespace genocchi
