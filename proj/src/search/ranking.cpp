#include "testgen/search/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace testgen::search {

bool dominates(const std::vector<double>& a, const std::vector<double>& b)
{
    bool better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) better = true;
    }
    return better;
}

std::vector<std::vector<std::size_t>>
preference_fronts(const std::vector<std::vector<double>>& objectives, const std::vector<std::size_t>& lengths,
                  std::size_t wanted)
{
    const std::size_t count = objectives.size();
    std::vector<std::vector<std::size_t>> fronts;
    if (count == 0) return fronts;
    const std::size_t targets = objectives.front().size();
    std::vector<bool> placed(count, false);

    std::vector<std::size_t> preferred;
    for (std::size_t g = 0; g < targets; ++g) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < count; ++i) {
            const double fi = objectives[i][g];
            const double fb = objectives[best][g];
            if (fi < fb || (fi == fb && lengths[i] < lengths[best])) best = i;
        }
        if (!placed[best]) {
            placed[best] = true;
            preferred.push_back(best);
        }
    }
    std::sort(preferred.begin(), preferred.end());
    std::size_t admitted = preferred.size();
    if (!preferred.empty()) fronts.push_back(std::move(preferred));

    while (admitted < wanted) {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < count; ++i) {
            if (placed[i]) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < count && !dominated; ++j) {
                dominated = j != i && !placed[j] && dominates(objectives[j], objectives[i]);
            }
            if (!dominated) front.push_back(i);
        }
        if (front.empty()) break;
        for (std::size_t i : front) placed[i] = true;
        admitted += front.size();
        fronts.push_back(std::move(front));
    }
    return fronts;
}

std::vector<double> crowding_distances(const std::vector<std::vector<double>>& objectives,
                                       const std::vector<std::size_t>& front)
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> out(front.size(), 0.0);
    if (front.empty()) return out;
    const std::size_t m_count = objectives[front.front()].size();
    if (m_count == 0) {
        std::fill(out.begin(), out.end(), inf);
        return out;
    }
    std::vector<std::size_t> order(front.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    for (std::size_t m = 0; m < m_count; ++m) {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return objectives[front[a]][m] < objectives[front[b]][m];
        });
        const double lo = objectives[front[order.front()]][m];
        const double hi = objectives[front[order.back()]][m];
        out[order.front()] = inf;
        out[order.back()] = inf;
        if (hi <= lo) continue;
        for (std::size_t k = 1; k + 1 < order.size(); ++k) {
            out[order[k]] += (objectives[front[order[k + 1]]][m] - objectives[front[order[k - 1]]][m]) / (hi - lo);
        }
    }
    return out;
}

std::vector<fitness::CoverageGoal> dynamic_targets(const fitness::ModuleGoals& goals,
                                                   const std::vector<fitness::CoverageGoal>& uncovered,
                                                   const Archive& archive)
{
    std::vector<fitness::CoverageGoal> out;
    for (const auto& goal : uncovered) {
        const auto parent = goals.parent(goal);
        if (parent && !archive.covers(*parent)) continue;
        out.push_back(goal);
    }
    return out;
}

MioSchedule mio_schedule(const SearchConfig& config, double progress)
{
    const double p = config.mio_focus_start > 0.0 ? std::clamp(progress / config.mio_focus_start, 0.0, 1.0) : 1.0;
    MioSchedule s;
    s.random_probability = config.mio_initial_random_probability * (1.0 - p);
    const double n = static_cast<double>(std::max<std::size_t>(1, config.mio_max_bucket));
    s.bucket_cap = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(n - (n - 1.0) * p)));
    return s;
}

std::size_t rank_index(double bias, std::size_t n, double r)
{
    if (n == 0) return 0;
    const double size = static_cast<double>(n);
    double index = size * r;
    if (bias > 1.0) {
        index = size * (bias - std::sqrt(bias * bias - 4.0 * (bias - 1.0) * r)) / 2.0 / (bias - 1.0);
    }
    return std::min(n - 1, static_cast<std::size_t>(index));
}

}  // namespace testgen::search
