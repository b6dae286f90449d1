#include "polyalg/search.hpp"

#include <algorithm>
#include <cmath>

#include "polyalg/parallel.hpp"

namespace polyalg {

std::pair<double, CVec> refine_ascent(const SearchProblem& problem, CVec start,
                                      int refine_steps) {
    CVec best = problem.project(start);
    double best_val = problem.objective(best);
    double step = problem.step_init;
    const int n = static_cast<int>(best.size());
    for (int sweep = 0; sweep < refine_steps; ++sweep) {
        const double sweep_start = best_val;
        bool improved = false;
        for (int c = 0; c < 2 * n; ++c) {
            const int idx = c / 2;
            const Cx delta = (c % 2 == 0) ? Cx(step, 0.0) : Cx(0.0, step);
            for (const double sign : {1.0, -1.0}) {
                CVec cand = best;
                cand[idx] += sign * delta;
                cand = problem.project(cand);
                const double v = problem.objective(cand);
                if (v > best_val) {
                    best_val = v;
                    best = std::move(cand);
                    improved = true;
                }
            }
        }
        if (!improved) {
            step *= 0.5;
            if (step < 1e-10) break;
        } else if (best_val - sweep_start < 1e-12 * std::max(1.0, std::abs(best_val))) {
            break;
        }
    }
    return {best_val, best};
}

std::pair<double, CVec> seeded_max_search(const SearchProblem& problem,
                                          const SearchBudget& budget) {
    constexpr long kBlock = 64;
    const long samples = std::max<long>(1, budget.samples);

    auto make_candidate = [&](long i) {
        Rng rng(derive_seed(budget.seed, problem.stream, static_cast<std::uint64_t>(i)));
        return problem.project(problem.sample(rng));
    };

    // Raw pass.
    std::vector<double> raw(samples);
    parallel_for(samples, [&](long i) { raw[i] = problem.objective(make_candidate(i)); });

    long best_raw_idx = 0;
    for (long i = 1; i < samples; ++i)
        if (raw[i] > raw[best_raw_idx]) best_raw_idx = i;

    // Refinement pass: smart starts plus the best candidate of each full block.
    std::vector<CVec> starts = problem.smart_starts;
    const long full_blocks = samples / kBlock;
    std::vector<long> block_best(full_blocks);
    for (long b = 0; b < full_blocks; ++b) {
        long arg = b * kBlock;
        for (long i = b * kBlock; i < (b + 1) * kBlock; ++i)
            if (raw[i] > raw[arg]) arg = i;
        block_best[b] = arg;
    }
    // Partial blocks are never refined: the refined-start family must be
    // nested as `samples` grows or monotonicity breaks.
    for (long b = 0; b < full_blocks; ++b) starts.push_back(make_candidate(block_best[b]));

    std::vector<std::pair<double, CVec>> refined(starts.size());
    parallel_for(static_cast<long>(starts.size()), [&](long s) {
        refined[s] = refine_ascent(problem, starts[s], budget.refine_steps);
    });

    double best_val = raw[best_raw_idx];
    CVec best_vec = make_candidate(best_raw_idx);
    for (const auto& [v, x] : refined) {
        if (v > best_val) {
            best_val = v;
            best_vec = x;
        }
    }
    return {best_val, best_vec};
}

}  // namespace polyalg
