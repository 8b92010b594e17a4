#include "genocchi/families.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace genocchi {

namespace {

struct NameEntry {
    Family family;
    const char* name;
};

constexpr NameEntry kNames[] = {
    {Family::ClassicalGenocchi, "classical-genocchi"},
    {Family::SecondKindGenocchi, "second-kind-genocchi"},
    {Family::SecondKindEuler, "second-kind-euler"},
    {Family::GouldHopper, "gould-hopper"},
    {Family::HermiteGenocchi, "hermite-genocchi"},
    {Family::HermiteEuler, "hermite-euler"},
};

// Shared memo for the two denominator inverses; inversion is the only
// O(order^2) big-rational step, everything else is cheap by comparison.
class InverseMemo {
  public:
    explicit InverseMemo(EgfSeries (*build)(unsigned)) : build_(build) {}

    EgfSeries at(unsigned order) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(order);
        if (it == cache_.end()) {
            it = cache_.emplace(order, build_(order)).first;
        }
        return it->second;
    }

  private:
    EgfSeries (*build_)(unsigned);
    std::mutex mutex_;
    std::map<unsigned, EgfSeries> cache_;
};

EgfSeries build_second_kind_inverse(unsigned order) {
    EgfSeries den = EgfSeries::exp_linear(BivarPoly(1L), 1, order) +
                    EgfSeries::exp_linear(BivarPoly(-1L), 1, order);
    return den.inverse();
}

EgfSeries build_classical_inverse(unsigned order) {
    EgfSeries den = EgfSeries::exp_linear(BivarPoly(1L), 1, order) +
                    EgfSeries::constant(Rational(1), order);
    return den.inverse();
}

EgfSeries exp_x(unsigned order) {
    return EgfSeries::exp_linear(BivarPoly::x(), 1, order);
}

EgfSeries exp_y(unsigned j, unsigned order) {
    return EgfSeries::exp_linear(BivarPoly::y(), j, order);
}

std::vector<BivarPoly> egf_table(const EgfSeries& s, unsigned n_max) {
    std::vector<BivarPoly> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        out.push_back(s.egf_coeff(n));
    }
    return out;
}

void require_gould_hopper_j(unsigned j) {
    if (j < 2) {
        throw std::invalid_argument("gould-hopper requires j >= 2");
    }
}

void require_hermite_j(unsigned j) {
    if (j < 1) {
        throw std::invalid_argument("hermite families require j >= 1");
    }
}

}  // namespace

const char* family_name(Family f) {
    for (const auto& entry : kNames) {
        if (entry.family == f) return entry.name;
    }
    throw std::invalid_argument("unknown family");
}

Family family_from_name(const std::string& name) {
    for (const auto& entry : kNames) {
        if (name == entry.name) return entry.family;
    }
    throw std::invalid_argument("unknown family name: " + name);
}

bool family_has_j(Family f) {
    return f == Family::GouldHopper || f == Family::HermiteGenocchi ||
           f == Family::HermiteEuler;
}

bool family_has_a(Family f) {
    return f == Family::SecondKindGenocchi || f == Family::SecondKindEuler ||
           f == Family::HermiteGenocchi || f == Family::HermiteEuler;
}

bool family_has_numbers(Family f) {
    return f == Family::ClassicalGenocchi || f == Family::SecondKindGenocchi ||
           f == Family::SecondKindEuler;
}

void FamilySpec::validate() const {
    if (family_has_j(family)) {
        if (family == Family::GouldHopper) {
            require_gould_hopper_j(j);
        } else {
            require_hermite_j(j);
        }
    }
}

EgfSeries second_kind_denominator_inverse(unsigned order) {
    static InverseMemo memo(&build_second_kind_inverse);
    return memo.at(order);
}

EgfSeries classical_denominator_inverse(unsigned order) {
    static InverseMemo memo(&build_classical_inverse);
    return memo.at(order);
}

EgfSeries second_kind_genocchi_kernel(unsigned order, unsigned a) {
    EgfSeries base = EgfSeries::monomial(1, BivarPoly(2L), order) *
                     second_kind_denominator_inverse(order);
    return base.pow(a);
}

EgfSeries second_kind_euler_kernel(unsigned order, unsigned a) {
    EgfSeries base = EgfSeries::constant(Rational(2), order) *
                     second_kind_denominator_inverse(order);
    return base.pow(a);
}

EgfSeries classical_genocchi_kernel(unsigned order, unsigned a) {
    EgfSeries base = EgfSeries::monomial(1, BivarPoly(2L), order) *
                     classical_denominator_inverse(order);
    return base.pow(a);
}

EgfSeries classical_euler_kernel(unsigned order, unsigned a) {
    EgfSeries base = EgfSeries::constant(Rational(2), order) *
                     classical_denominator_inverse(order);
    return base.pow(a);
}

std::vector<BivarPoly> classical_genocchi_table(unsigned n_max, bool symbolic) {
    EgfSeries s = classical_genocchi_kernel(n_max, 1);
    if (symbolic) s = s * exp_x(n_max);
    return egf_table(s, n_max);
}

std::vector<BivarPoly> second_kind_genocchi_table(unsigned n_max, unsigned a,
                                                  bool symbolic) {
    EgfSeries s = second_kind_genocchi_kernel(n_max, a);
    if (symbolic) s = s * exp_x(n_max);
    return egf_table(s, n_max);
}

std::vector<BivarPoly> second_kind_euler_table(unsigned n_max, unsigned a,
                                               bool symbolic) {
    EgfSeries s = second_kind_euler_kernel(n_max, a);
    if (symbolic) s = s * exp_x(n_max);
    return egf_table(s, n_max);
}

std::vector<BivarPoly> gould_hopper_table(unsigned n_max, unsigned j) {
    require_gould_hopper_j(j);
    return egf_table(exp_x(n_max) * exp_y(j, n_max), n_max);
}

std::vector<BivarPoly> hermite_genocchi_table(unsigned n_max, unsigned j, unsigned a) {
    require_hermite_j(j);
    EgfSeries s = second_kind_genocchi_kernel(n_max, a) * exp_x(n_max) * exp_y(j, n_max);
    return egf_table(s, n_max);
}

std::vector<BivarPoly> hermite_euler_table(unsigned n_max, unsigned j, unsigned a) {
    require_hermite_j(j);
    EgfSeries s = second_kind_euler_kernel(n_max, a) * exp_x(n_max) * exp_y(j, n_max);
    return egf_table(s, n_max);
}

BivarPoly classical_genocchi(unsigned n, bool symbolic) {
    return classical_genocchi_table(n, symbolic).back();
}

BivarPoly second_kind_genocchi(unsigned n, unsigned a, bool symbolic) {
    return second_kind_genocchi_table(n, a, symbolic).back();
}

BivarPoly second_kind_euler(unsigned n, unsigned a, bool symbolic) {
    return second_kind_euler_table(n, a, symbolic).back();
}

BivarPoly gould_hopper(unsigned n, unsigned j) {
    return gould_hopper_table(n, j).back();
}

BivarPoly hermite_genocchi(unsigned n, unsigned j, unsigned a) {
    return hermite_genocchi_table(n, j, a).back();
}

BivarPoly hermite_euler(unsigned n, unsigned j, unsigned a) {
    return hermite_euler_table(n, j, a).back();
}

std::vector<BivarPoly> family_table(const FamilySpec& spec, unsigned n_max, bool numbers) {
    spec.validate();
    if (numbers && !family_has_numbers(spec.family)) {
        throw std::invalid_argument("family has no numbers sequence");
    }
    switch (spec.family) {
        case Family::ClassicalGenocchi:
            return classical_genocchi_table(n_max, !numbers);
        case Family::SecondKindGenocchi:
            return second_kind_genocchi_table(n_max, spec.a, !numbers);
        case Family::SecondKindEuler:
            return second_kind_euler_table(n_max, spec.a, !numbers);
        case Family::GouldHopper:
            return gould_hopper_table(n_max, spec.j);
        case Family::HermiteGenocchi:
            return hermite_genocchi_table(n_max, spec.j, spec.a);
        case Family::HermiteEuler:
            return hermite_euler_table(n_max, spec.j, spec.a);
    }
    throw std::invalid_argument("unknown family");
}

FamilyValue family_value(const FamilySpec& spec, unsigned n, bool numbers) {
    return FamilyValue{n, family_table(spec, n, numbers).back()};
}

Rational evaluate(const FamilyValue& v, const Rational& x_val, const Rational& y_val) {
    return v.value.evaluate(x_val, y_val);
}

// ------------------------------------------------------------------
// Closed-form routes.
// ------------------------------------------------------------------

BivarPoly classical_genocchi_binomial(unsigned n) {
    std::vector<BivarPoly> numbers = classical_genocchi_table(n, /*symbolic=*/false);
    BivarPoly out;
    for (unsigned k = 0; k <= n; ++k) {
        if (numbers[k].is_zero()) continue;
        Rational c = Rational(binomial(n, k)) * numbers[k].constant_value();
        out += BivarPoly::monomial(n - k, 0, c);
    }
    return out;
}

BivarPoly second_kind_genocchi_binomial(unsigned n) {
    std::vector<BivarPoly> numbers =
        second_kind_genocchi_table(n, 1, /*symbolic=*/false);
    BivarPoly out;
    for (unsigned k = 0; k <= n; ++k) {
        if (numbers[k].is_zero()) continue;
        Rational c = Rational(binomial(n, k)) * numbers[k].constant_value();
        out += BivarPoly::monomial(n - k, 0, c);
    }
    return out;
}

BivarPoly gould_hopper_floor_sum(unsigned n, unsigned j) {
    require_gould_hopper_j(j);
    BivarPoly out;
    mpz_class n_fact = factorial(n);
    for (unsigned r = 0; j * r <= n; ++r) {
        mpz_class den = factorial(r) * factorial(n - j * r);
        out += BivarPoly::monomial(n - j * r, r, Rational(n_fact, den));
    }
    return out;
}

}  // namespace genocchi
