#ifndef GENOCCHI_FAMILIES_HPP
#define GENOCCHI_FAMILIES_HPP

#include <string>
#include <vector>

#include "genocchi/egf_series.hpp"

namespace genocchi {

enum class Family {
    ClassicalGenocchi,
    SecondKindGenocchi,
    SecondKindEuler,
    GouldHopper,
    HermiteGenocchi,
    HermiteEuler,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// True if the family carries the Hermite order j / the higher order a.
bool family_has_j(Family f);
bool family_has_a(Family f);
// True if the family has a numbers (non-symbolic) sequence.
bool family_has_numbers(Family f);

struct FamilySpec {
    Family family;
    unsigned j = 2;
    unsigned a = 1;

    // Rejects parameter combinations the family does not define
    // (e.g. Gould-Hopper with j < 2).
    void validate() const;
};

struct FamilyValue {
    unsigned n;
    BivarPoly value;
};

// ------------------------------------------------------------------
// Generating-function routes (the canonical definition of each family).
// All results are EGF-normalized polynomials.
// ------------------------------------------------------------------

// 2t/(e^t + 1) * e^{xt}; numbers sequence when symbolic is false (the
// exponential factor is omitted entirely, not substituted at x = 0).
BivarPoly classical_genocchi(unsigned n, bool symbolic = true);
// (2t/(e^t + e^{-t}))^a * e^{xt}
BivarPoly second_kind_genocchi(unsigned n, unsigned a = 1, bool symbolic = true);
// (2/(e^t + e^{-t}))^a * e^{xt}
BivarPoly second_kind_euler(unsigned n, unsigned a = 1, bool symbolic = true);
// e^{xt + yt^j}, j >= 2
BivarPoly gould_hopper(unsigned n, unsigned j);
// (2t/(e^t + e^{-t}))^a * e^{xt + yt^j}, j >= 1
BivarPoly hermite_genocchi(unsigned n, unsigned j, unsigned a = 1);
// (2/(e^t + e^{-t}))^a * e^{xt + yt^j}, j >= 1
BivarPoly hermite_euler(unsigned n, unsigned j, unsigned a = 1);

// Whole-table variants: values for n = 0..n_max from one series build.
std::vector<BivarPoly> classical_genocchi_table(unsigned n_max, bool symbolic = true);
std::vector<BivarPoly> second_kind_genocchi_table(unsigned n_max, unsigned a = 1,
                                                  bool symbolic = true);
std::vector<BivarPoly> second_kind_euler_table(unsigned n_max, unsigned a = 1,
                                               bool symbolic = true);
std::vector<BivarPoly> gould_hopper_table(unsigned n_max, unsigned j);
std::vector<BivarPoly> hermite_genocchi_table(unsigned n_max, unsigned j, unsigned a = 1);
std::vector<BivarPoly> hermite_euler_table(unsigned n_max, unsigned j, unsigned a = 1);

// Dispatch on a validated FamilySpec (numbers = non-symbolic sequence).
std::vector<BivarPoly> family_table(const FamilySpec& spec, unsigned n_max, bool numbers);
FamilyValue family_value(const FamilySpec& spec, unsigned n, bool numbers);

Rational evaluate(const FamilyValue& v, const Rational& x_val, const Rational& y_val);

// ------------------------------------------------------------------
// Closed-form verification routes. Never the source of truth; they exist
// so every family can be computed two independent ways.
// ------------------------------------------------------------------

// G_n(x) = sum_k C(n,k) G_k x^{n-k}
BivarPoly classical_genocchi_binomial(unsigned n);
// (second kind, a = 1) sum_k C(n,k) x^{n-k} G_k
BivarPoly second_kind_genocchi_binomial(unsigned n);
// n! sum_{r=0..floor(n/j)} x^{n-jr} y^r / (r! (n-jr)!)
BivarPoly gould_hopper_floor_sum(unsigned n, unsigned j);

// ------------------------------------------------------------------
// Series-level access for the verifier (shared kernel memo behind it).
// ------------------------------------------------------------------

// Memoized 1/(e^t + e^{-t}) at the given truncation order. Thread safe,
// computed at most once per order.
EgfSeries second_kind_denominator_inverse(unsigned order);
// Memoized 1/(e^t + 1).
EgfSeries classical_denominator_inverse(unsigned order);

// (2t/(e^t + e^{-t}))^a at the given order.
EgfSeries second_kind_genocchi_kernel(unsigned order, unsigned a);
// (2/(e^t + e^{-t}))^a.
EgfSeries second_kind_euler_kernel(unsigned order, unsigned a);
// (2t/(e^t + 1))^a.
EgfSeries classical_genocchi_kernel(unsigned order, unsigned a);
// (2/(e^t + 1))^a.
EgfSeries classical_euler_kernel(unsigned order, unsigned a);

}  // namespace genocchi

#endif
