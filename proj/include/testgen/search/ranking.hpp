#pragma once

#include <cstddef>
#include <vector>

#include "testgen/fitness/goals.hpp"
#include "testgen/search/archive.hpp"
#include "testgen/search/context.hpp"

// Selection building blocks of the built-in algorithms, kept apart so they can
// be checked in isolation.
namespace testgen::search {

// objectives[i][g]: fitness of individual i on target g (lower is better).
// Front 0 holds, per target, the best individual (shorter test on ties); the
// rest are non-dominated fronts. Stops once at least `wanted` are placed.
[[nodiscard]] std::vector<std::vector<std::size_t>>
preference_fronts(const std::vector<std::vector<double>>& objectives, const std::vector<std::size_t>& lengths,
                  std::size_t wanted);

[[nodiscard]] bool dominates(const std::vector<double>& a, const std::vector<double>& b);

// Crowding distance of each front member, in front order; boundary points
// get infinity.
[[nodiscard]] std::vector<double> crowding_distances(const std::vector<std::vector<double>>& objectives,
                                                     const std::vector<std::size_t>& front);

// Uncovered goals whose enclosing branch is absent or already archived.
[[nodiscard]] std::vector<fitness::CoverageGoal> dynamic_targets(const fitness::ModuleGoals& goals,
                                                                 const std::vector<fitness::CoverageGoal>& uncovered,
                                                                 const Archive& archive);

struct MioSchedule {
    double random_probability = 0.0;
    std::size_t bucket_cap = 1;
};
// Linear interpolation from the initial settings to the focused phase.
[[nodiscard]] MioSchedule mio_schedule(const SearchConfig& config, double progress);

// Linear ranking selection: maps r in [0, 1) to an index in [0, n), biased
// towards 0 by `bias` in [1, 2].
[[nodiscard]] std::size_t rank_index(double bias, std::size_t n, double r);

}  // namespace testgen::search
