#pragma once

#include <string>
#include <vector>

#include "schurlab/loglin.hpp"
#include "schurlab/util.hpp"

namespace schurlab::lp {

using loglin::LogLin;

// max c.x subject to A x <= b, x >= 0; A and b rational, c log-linear.
struct LinearProgram {
    std::vector<std::string> var_names;
    std::vector<std::string> row_labels;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<LogLin> objective;

    std::size_t num_vars() const { return var_names.size(); }
    std::size_t num_rows() const { return rows.size(); }
    void validate() const;
};

enum class SolveStatus { optimal, infeasible, unbounded };

struct SimplexResult {
    SolveStatus status = SolveStatus::optimal;
    LogLin optimum;
    std::vector<Rational> argmax;
    unsigned pivots = 0;
    std::vector<std::pair<int, int>> pivot_log;  // (entering, leaving) for determinism checks
};

// Exact two-phase primal simplex with Bland's rule. Phase I is purely
// rational; phase II keeps ratio tests rational and delegates reduced-cost
// comparisons to exact log-linear sign decisions, so irrationality never
// enters the tableau. Optimality is certified by vanishing reduced costs.
SimplexResult simplex_max(const LinearProgram& lp);

struct DualCertificate {
    std::vector<LogLin> y;  // one multiplier per primal row
};

struct DualCheck {
    bool feasible = false;
    LogLin objective;  // b.y regardless of feasibility
    std::string detail;
};

// Checks y >= 0 and A^T y >= c by exact sign decisions; weak duality then
// makes b.y an upper bound for every primal-feasible objective value.
DualCheck verify_dual(const LinearProgram& lp, const DualCertificate& cert);

}  // namespace schurlab::lp
