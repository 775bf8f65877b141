// Acceptance gate: runs every verification suite at its pinned options and
// prints one pass/fail line per criterion. A criterion passes when all of
// its checks hold and the suite finishes inside its time budget. The exit
// code is the number of failed criteria.

#include <cstdio>
#include <string>
#include <vector>

#include "pcoh/suite.hpp"

namespace {

struct Criterion {
    int number;
    const char* suite;
    const char* summary;
    long long budget_ms;
};

// Budgets are part of the contract and pinned here, not configurable.
const std::vector<Criterion> kCriteria = {
    {1, "example-3-6", "two-point product tensor: cube ball, mixed member, separation", 1000},
    {2, "closure", "biorthogonal closure agrees with the grid fixpoint oracle", 300000},
    {3, "coherence", "monoidal coherence laws hold as exact matrix identities", 60000},
    {4, "universal", "bilinear maps factor uniquely through the tensor", 60000},
    {5, "exponential", "dereliction, digging, Seely and Kleisli laws at fixed degrees", 60000},
    {6, "stability", "iterated differences pass exhaustively; floor-sqrt rejected", 60000},
    {7, "stream", "tree-cut shift equalizer has leaf dimension and leaf-mass norm", 10000},
    {8, "kernels", "substochastic kernels round-trip and compose functorially", 10000},
    {9, "norm-oracle", "stored-facet norms agree with an independent linear program", 60000},
};

}  // namespace

int main() {
    pcoh::SuiteOptions opts;  // pinned defaults: seed 1, dims 3, degree 4, grid 1/4
    int failed = 0;
    for (const auto& c : kCriteria) {
        pcoh::SuiteReport rep = pcoh::run_suite(c.suite, opts);
        bool in_budget = rep.wall_ms <= c.budget_ms;
        bool pass = rep.all_passed() && in_budget;
        if (!pass) ++failed;
        std::printf("criterion %d [%-11s] %s  %zu checks, %d failures, %lld ms (budget %lld ms)  %s\n",
                    c.number, c.suite, pass ? "PASS" : "FAIL", rep.checks.size(),
                    rep.failed_count(), rep.wall_ms, c.budget_ms, c.summary);
        if (!rep.all_passed())
            for (const auto& chk : rep.checks)
                if (!chk.passed)
                    std::printf("    failed: %s :: %s :: %s\n", chk.instance.c_str(),
                                chk.name.c_str(), chk.witness.c_str());
        if (!in_budget) std::printf("    over budget by %lld ms\n", rep.wall_ms - c.budget_ms);
    }
    std::printf("acceptance: %d of %zu criteria passed\n",
                static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
    return failed;
}
