#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurlab/lp.hpp"

namespace schurlab::lp::families {

// A registered dual certificate together with the closed-form value
// const + coeff * eps' that the certificate is recorded to attain.
// "recorded" entries reproduce the source material verbatim; "adjusted"
// entries fix a sign-infeasible multiplier and are marked as such.
struct CertificateEntry {
    std::string name;  // "recorded" | "adjusted"
    DualCertificate cert;
    LogLin form_const;
    LogLin form_eps;
    std::string note;
};

struct Family {
    std::string label;        // e.g. "4c-2", "5c-10", "r3-basic"
    int r = 0;                // number of colours
    std::string description;  // class profile the constraints were derived for
    bool core = false;        // member of the 15-row standard suite
    std::vector<CertificateEntry> certificates;

    // row data before eps substitution: coeffs per variable, rhs = c0 + ceps * eps'
    std::vector<std::string> var_names;
    std::vector<std::string> row_labels;
    std::vector<std::vector<Rational>> row_coeffs;
    std::vector<Rational> rhs_const;
    std::vector<Rational> rhs_eps;

    LinearProgram build(const Rational& eps_prime) const;
};

const std::vector<Family>& registry();
const Family& family(const std::string& label);
std::vector<std::string> core_labels();  // r3-basic plus the fourteen case families
bool has_family(const std::string& label);

// max{ (1/2) log r, (1/4) log(r * floor(r^2/4)) } for r in {3,4,5}
LogLin threshold(int r);

// checks 0 <= eps' <= 1/100 as the registered constraint data presumes
void check_eps_range(const Rational& eps_prime);

struct SufficiencyResult {
    bool sufficient = false;
    LogLin optimum;
    LogLin bound;  // threshold(r) + eps
    SimplexResult solve;
};

// true iff the exact simplex optimum of the family at eps' stays within
// threshold(r) + eps, decided by exact sign.
SufficiencyResult check_sufficient(const std::string& label, const Rational& eps_prime,
                                   const Rational& eps);

}  // namespace schurlab::lp::families
