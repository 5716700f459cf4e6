#ifndef MAXMINPB_SIMPLEX_HPP
#define MAXMINPB_SIMPLEX_HPP

#include "maxminpb/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace maxminpb {

// Dense exact simplex for:  maximize c^T z  s.t.  A z <= rhs,  z >= 0.
// Every right-hand side must be non-negative so the all-slack basis is
// feasible; the LPs this library builds satisfy that by construction.
//
// Templated over the number type: Rat64 (fast, throws RatOverflow when a
// tableau entry leaves int64 range) or BigRat (arbitrary precision). Both
// pivot identically, so a retry after overflow lands on the same vertex.

template <class Num>
struct SimplexProblem {
    std::size_t num_vars = 0;
    std::vector<std::vector<Num>> rows; // coefficient rows, each num_vars wide
    std::vector<Num> rhs;               // parallel to rows, all >= 0
    std::vector<Num> objective;         // num_vars wide
};

template <class Num>
struct SimplexOutcome {
    std::vector<Num> solution;   // structural variables only
    Num objective_value{};
    std::vector<int> basis;      // basic column per row (slacks >= num_vars)
    std::size_t pivots = 0;
};

enum class PivotRule {
    Bland,        // smallest-index entering column; never cycles
    DantzigBland, // largest reduced cost, falls back to Bland on degeneracy
};

namespace detail {

// entering column under Bland: smallest index with positive reduced cost
template <class Num>
int entering_bland(const std::vector<Num>& obj) {
    for (std::size_t j = 0; j < obj.size(); ++j)
        if (obj[j] > Num(0)) return static_cast<int>(j);
    return -1;
}

template <class Num>
int entering_dantzig(const std::vector<Num>& obj) {
    int best = -1;
    for (std::size_t j = 0; j < obj.size(); ++j)
        if (obj[j] > Num(0) && (best < 0 || obj[j] > obj[best]))
            best = static_cast<int>(j);
    return best;
}

} // namespace detail

template <class Num>
SimplexOutcome<Num> simplex_maximize(const SimplexProblem<Num>& prob,
                                     PivotRule rule = PivotRule::Bland) {
    const std::size_t m = prob.rows.size();
    const std::size_t n = prob.num_vars;
    if (prob.rhs.size() != m || prob.objective.size() != n)
        throw std::invalid_argument("simplex: inconsistent problem dimensions");
    for (const auto& row : prob.rows)
        if (row.size() != n)
            throw std::invalid_argument("simplex: ragged coefficient row");
    for (const auto& b : prob.rhs)
        if (b < Num(0))
            throw std::invalid_argument("simplex: negative rhs (needs phase 1)");

    const std::size_t cols = n + m;
    // tableau rows carry structural + slack columns; rhs kept separately
    std::vector<std::vector<Num>> tab(m, std::vector<Num>(cols, Num(0)));
    std::vector<Num> rhs = prob.rhs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = prob.rows[i][j];
        tab[i][n + i] = Num(1);
    }
    std::vector<Num> obj(cols, Num(0));
    for (std::size_t j = 0; j < n; ++j) obj[j] = prob.objective[j];
    std::vector<int> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = static_cast<int>(n + i);

    // Dantzig is the fast default path; a streak of degenerate pivots flips
    // to Bland, whose finiteness guarantee rules out cycling.
    constexpr std::size_t kDegenerateStreakLimit = 32;
    std::size_t degenerate_streak = 0;
    bool bland_mode = (rule == PivotRule::Bland);

    std::size_t pivots = 0;
    constexpr std::size_t kPivotCap = 200000; // bug trap, not a tunable
    while (true) {
        int e = bland_mode ? detail::entering_bland(obj)
                           : detail::entering_dantzig(obj);
        if (e < 0) break; // optimal

        // ratio test; ties by smallest basic-variable index (Bland)
        int leave = -1;
        Num best_ratio{};
        for (std::size_t i = 0; i < m; ++i) {
            if (!(tab[i][e] > Num(0))) continue;
            Num ratio = rhs[i] / tab[i][e];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("simplex: unbounded objective");

        if (rhs[leave] == Num(0)) {
            if (++degenerate_streak >= kDegenerateStreakLimit) bland_mode = true;
        } else {
            degenerate_streak = 0;
            if (rule == PivotRule::DantzigBland) bland_mode = false;
        }

        // pivot on (leave, e)
        const Num pivot = tab[leave][e];
        for (std::size_t j = 0; j < cols; ++j) tab[leave][j] /= pivot;
        rhs[leave] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (static_cast<int>(i) == leave || is_zero(tab[i][e])) continue;
            const Num f = tab[i][e];
            for (std::size_t j = 0; j < cols; ++j)
                if (!is_zero(tab[leave][j])) tab[i][j] -= f * tab[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        if (!is_zero(obj[e])) {
            const Num f = obj[e];
            for (std::size_t j = 0; j < cols; ++j)
                if (!is_zero(tab[leave][j])) obj[j] -= f * tab[leave][j];
        }
        basis[leave] = e;

        if (++pivots > kPivotCap)
            throw std::logic_error("simplex: pivot cap exceeded (cycling bug?)");
    }

    SimplexOutcome<Num> out;
    out.basis = basis;
    out.pivots = pivots;
    out.solution.assign(n, Num(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < static_cast<int>(n)) out.solution[basis[i]] = rhs[i];
    Num value(0);
    for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(out.solution[j]))
            value += prob.objective[j] * out.solution[j];
    out.objective_value = value;
    return out;
}

} // namespace maxminpb

#endif
