#include "pcoh/lp.hpp"

#include <algorithm>

namespace pcoh {

LpOutcome lp_max(const LpInput& in) {
    const int n = in.dim;
    const int m = static_cast<int>(in.rows.size());
    const int rhs = n + m;  // column index of the right-hand side

    // Tableau over columns [original vars | slacks | rhs]; basis starts at the slacks.
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (const auto& [j, v] : in.rows[i].entries()) t[i][j] = v;
        t[i][n + i] = 1;
        t[i][rhs] = 1;
    }
    std::vector<Rat> reduced(n + m, Rat(0));
    for (const auto& [j, v] : in.objective.entries()) reduced[j] = v;
    Rat value(0);
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland: entering column = smallest index with positive reduced cost.
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (reduced[j] > 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;  // optimal

        // Ratio test; ties broken by smallest basic variable index (Bland).
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][rhs] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return {false, Rat(0), RatVec()};  // unbounded direction

        // Pivot on (leave, enter).
        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (int j = 0; j <= rhs; ++j) t[i][j] -= f * t[leave][j];
        }
        Rat f = reduced[enter];
        for (int j = 0; j < n + m; ++j) reduced[j] -= f * t[leave][j];
        value += f * t[leave][rhs];
        basis[leave] = enter;
    }

    RatVec arg;
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) arg.set(basis[i], t[i][rhs]);
    return {true, value, arg};
}

int rat_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace pcoh
