#ifndef GENOCCHI_IDENTITIES_HPP
#define GENOCCHI_IDENTITIES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "genocchi/bivar_poly.hpp"

namespace genocchi {

// One member per displayed identity; run_all reports in this order.
enum class IdentityId {
    GENO_BINOM,
    SKG_BINOM,
    SKG_RESCALE,
    SKG_TRIPLE_MULTINOMIAL,
    SKG_EULER_RATIO,
    LEMMA1_ADDITION,
    LEMMA1_EULER_CONV,
    HG_EULER_QUOTIENT,
    HG_DERIVATIVE,
    THM1_FLOOR_SUM,
    THM2_ADDITION,
    THM3_CONVOLUTION,
    HEAT_EQUATION,
};

const char* identity_name(IdentityId id);
IdentityId identity_from_name(const std::string& name);
const std::vector<IdentityId>& all_identities();

enum class CheckStatus { Pass, Fail, Observational };

const char* status_name(CheckStatus s);

// Witness for one unequal comparison; params are (n, j, a, b) with 0 in
// slots the identity does not use.
struct IdentityFailure {
    std::array<unsigned, 4> params;
    BivarPoly lhs;
    BivarPoly rhs;
};

struct IdentityReport {
    IdentityId identity;
    std::vector<std::array<unsigned, 4>> grid;  // every tuple tested
    CheckStatus status = CheckStatus::Pass;
    std::vector<IdentityFailure> failures;
    std::vector<std::string> notes;
    std::int64_t elapsed_ms = 0;

    // Observational findings do not fail the suite.
    bool passed() const { return status != CheckStatus::Fail; }
};

struct VerifierConfig {
    unsigned n_max = 24;
    unsigned a_max = 3;
    unsigned b_max = 3;
    std::vector<unsigned> j_set = {2, 3};
    unsigned jobs = 1;
    std::vector<IdentityId> selection;  // empty selects every identity
};

// Deterministic distinct rational evaluation points: 0, 1, -1, 1/2, -2/3,
// then 2, -2, 3, -3, ...
std::vector<Rational> evaluation_grid(std::size_t count);

IdentityReport check_geno_binom(unsigned n_max);
IdentityReport check_skg_binom(unsigned n_max);
IdentityReport check_skg_rescale(unsigned n_max);
IdentityReport check_skg_triple_multinomial(unsigned n_max);
IdentityReport check_euler_ratio(unsigned n_max, const std::vector<unsigned>& j_set);
IdentityReport check_lemma1_addition(unsigned n_max, unsigned a_max, unsigned b_max);
IdentityReport check_lemma1_euler_conv(unsigned n_max, unsigned a_max);
IdentityReport check_hg_euler_quotient(unsigned n_max, const std::vector<unsigned>& j_set,
                                       unsigned a_max);
IdentityReport check_derivative(unsigned n_max, const std::vector<unsigned>& j_set,
                                unsigned a_max);
IdentityReport check_thm1_floor_sum(unsigned n_max);
IdentityReport check_thm2_addition(unsigned n_max, const std::vector<unsigned>& j_set,
                                   unsigned a_max, unsigned b_max);
IdentityReport check_thm3_convolution(unsigned n_max, unsigned a_max);
IdentityReport check_heat_equation(unsigned n_max, const std::vector<unsigned>& j_set);

IdentityReport run_check(IdentityId id, const VerifierConfig& cfg);

// Runs the selected checks (all of them by default). Reports come back in
// selection order no matter how many workers cfg.jobs allows.
std::vector<IdentityReport> run_all(const VerifierConfig& cfg);

bool all_passed(const std::vector<IdentityReport>& reports);

}  // namespace genocchi

#endif
