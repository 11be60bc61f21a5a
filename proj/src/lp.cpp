#include "schurlab/lp.hpp"

#include <algorithm>

namespace schurlab::lp {

void LinearProgram::validate() const {
    if (rows.size() != rhs.size() || rows.size() != row_labels.size())
        throw InputError("inconsistent row count");
    if (objective.size() != var_names.size()) throw InputError("objective length mismatch");
    for (const auto& row : rows)
        if (row.size() != var_names.size()) throw InputError("row length mismatch");
}

namespace {

// Dense exact tableau over the structural + slack (+ artificial) columns.
// basis[i] is the column owning row i. Costs are kept per-column; reduced
// costs are recomputed from the tableau on demand (the instances are tiny).
struct Tableau {
    std::size_t m, n_total;
    std::vector<std::vector<Rational>> a;  // m rows, n_total cols
    std::vector<Rational> b;               // m entries, kept >= 0
    std::vector<int> basis;

    void pivot(std::size_t row, std::size_t col) {
        Rational p = a[row][col];
        for (auto& v : a[row]) v /= p;
        b[row] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row) continue;
            Rational f = a[i][col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n_total; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        basis[row] = static_cast<int>(col);
    }
};

// One Bland iteration for max: entering = lowest-index column with positive
// reduced cost, leave by exact ratio test with lowest basis index on ties.
// cost(j) must return the objective coefficient of column j.
template <typename CostFn, typename SignFn>
int bland_step(Tableau& t, const CostFn& cost, const SignFn& positive,
               std::vector<std::pair<int, int>>* log) {
    for (std::size_t j = 0; j < t.n_total; ++j) {
        bool basic = false;
        for (std::size_t i = 0; i < t.m; ++i)
            if (t.basis[i] == static_cast<int>(j)) basic = true;
        if (basic) continue;
        auto rc = cost(j);
        for (std::size_t i = 0; i < t.m; ++i) {
            auto cb = cost(static_cast<std::size_t>(t.basis[i]));
            if (t.a[i][j] != 0) rc -= loglin::scale(cb, t.a[i][j]);
        }
        if (!positive(rc)) continue;
        // ratio test
        bool found = false;
        std::size_t leave = 0;
        Rational best;
        for (std::size_t i = 0; i < t.m; ++i) {
            if (t.a[i][j] <= 0) continue;
            Rational ratio = t.b[i] / t.a[i][j];
            if (!found || ratio < best ||
                (ratio == best && t.basis[i] < t.basis[leave])) {
                best = ratio;
                leave = i;
                found = true;
            }
        }
        if (!found) return -static_cast<int>(j) - 2;  // unbounded along column j
        if (log) log->emplace_back(static_cast<int>(j), t.basis[leave]);
        t.pivot(leave, j);
        return 1;
    }
    return 0;  // optimal
}

}  // namespace

SimplexResult simplex_max(const LinearProgram& lp) {
    lp.validate();
    SimplexResult res;
    std::size_t n = lp.num_vars(), m = lp.num_rows();

    Tableau t;
    t.m = m;
    t.n_total = n + m;  // structural + slack; artificials appended below as needed
    t.a.assign(m, std::vector<Rational>(t.n_total, Rational(0)));
    t.b = lp.rhs;
    t.basis.assign(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.a[i][j] = lp.rows[i][j];
        t.a[i][n + i] = 1;
    }
    std::vector<std::size_t> artificial_rows;
    for (std::size_t i = 0; i < m; ++i) {
        if (t.b[i] < 0) {
            for (auto& v : t.a[i]) v = -v;
            t.b[i] = -t.b[i];
            artificial_rows.push_back(i);
        } else {
            t.basis[i] = static_cast<int>(n + i);
        }
    }
    std::size_t n_art_base = t.n_total;
    for (std::size_t k = 0; k < artificial_rows.size(); ++k) {
        for (std::size_t i = 0; i < m; ++i) t.a[i].push_back(Rational(0));
        t.a[artificial_rows[k]][n_art_base + k] = 1;
        t.basis[artificial_rows[k]] = static_cast<int>(n_art_base + k);
    }
    t.n_total = n_art_base + artificial_rows.size();

    if (!artificial_rows.empty()) {
        // phase I: maximise -sum(artificials), purely rational costs
        auto cost1 = [&](std::size_t j) {
            return LogLin(Rational(j >= n_art_base ? -1 : 0));
        };
        auto pos1 = [](const LogLin& v) { return sgn(v.q0) > 0; };
        for (;;) {
            int step = bland_step(t, cost1, pos1, nullptr);
            ++res.pivots;
            if (step == 0) break;
            if (step < -1) throw std::runtime_error("phase I cannot be unbounded");
        }
        Rational infeas(0);
        for (std::size_t i = 0; i < m; ++i)
            if (t.basis[i] >= static_cast<int>(n_art_base)) infeas += t.b[i];
        if (infeas > 0) {
            res.status = SolveStatus::infeasible;
            return res;
        }
        // drive residual artificials out of the basis (degenerate rows)
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < static_cast<int>(n_art_base)) continue;
            bool pivoted = false;
            for (std::size_t j = 0; j < n_art_base && !pivoted; ++j) {
                if (t.a[i][j] != 0) {
                    t.pivot(i, j);
                    pivoted = true;
                }
            }
            // a fully zero row is redundant; the artificial stays basic at zero
        }
        for (std::size_t i = 0; i < m; ++i) t.a[i].resize(n_art_base);
        t.n_total = n_art_base;
    }

    // phase II with log-linear costs
    auto cost2 = [&](std::size_t j) { return j < n ? lp.objective[j] : LogLin(); };
    auto pos2 = [](const LogLin& v) { return loglin::sign(v) > 0; };
    for (;;) {
        int step = bland_step(t, cost2, pos2, &res.pivot_log);
        ++res.pivots;
        if (step == 0) break;
        if (step < -1) {
            res.status = SolveStatus::unbounded;
            return res;
        }
    }

    res.status = SolveStatus::optimal;
    res.argmax.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= 0 && t.basis[i] < static_cast<int>(n))
            res.argmax[static_cast<std::size_t>(t.basis[i])] = t.b[i];
    res.optimum = LogLin();
    for (std::size_t j = 0; j < n; ++j)
        if (res.argmax[j] != 0) res.optimum += loglin::scale(lp.objective[j], res.argmax[j]);
    return res;
}

DualCheck verify_dual(const LinearProgram& lp, const DualCertificate& cert) {
    lp.validate();
    if (cert.y.size() != lp.num_rows()) throw InputError("certificate length mismatch");
    DualCheck out;
    out.feasible = true;
    for (std::size_t i = 0; i < cert.y.size(); ++i) {
        if (loglin::sign(cert.y[i]) < 0) {
            out.feasible = false;
            out.detail += "y[" + std::to_string(i) + "] < 0 (row " + lp.row_labels[i] + "); ";
        }
    }
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        LogLin lhs;
        for (std::size_t i = 0; i < lp.num_rows(); ++i)
            if (lp.rows[i][j] != 0) lhs += loglin::scale(cert.y[i], lp.rows[i][j]);
        if (loglin::sign(lhs - lp.objective[j]) < 0) {
            out.feasible = false;
            out.detail += "column " + lp.var_names[j] + ": A^T y < c; ";
        }
    }
    out.objective = LogLin();
    for (std::size_t i = 0; i < lp.num_rows(); ++i)
        if (lp.rhs[i] != 0) out.objective += loglin::scale(cert.y[i], lp.rhs[i]);
    return out;
}

}  // namespace schurlab::lp
