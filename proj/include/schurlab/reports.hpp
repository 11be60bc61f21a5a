#pragma once

#include <string>
#include <vector>

#include "schurlab/util.hpp"

namespace schurlab::reports {

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::vector<std::string> lines;
};

// The ten acceptance checks, runnable individually (1..10).
Criterion run_criterion(int id, unsigned jobs = 0);

// Named bundles behind `schurlab reproduce`.
//   thm2colours -> exhaustive two-colour table (criterion 1)
//   bounds      -> construction lower-bound identities, n <= 12, r <= 5
//   lemma-suff  -> certificate + sufficiency suite (criteria 2, 3, 4)
//   lemmas-6x   -> structural lemmas at n = 10 (criterion 8)
std::vector<Criterion> run_bundle(const std::string& report_id, unsigned jobs = 0);

bool known_bundle(const std::string& report_id);

}  // namespace schurlab::reports
