#include "degdiam/search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <thread>

namespace degdiam {
namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

bool add_saturating(std::int64_t& acc, std::int64_t v) {
    if (__builtin_add_overflow(acc, v, &acc)) {
        acc = kInt64Max;
        return false;
    }
    return true;
}

}  // namespace

MooreBound moore_bound(int delta, int diameter) {
    if (delta < 2) throw BadParameter("delta must be >= 2, got " + std::to_string(delta));
    if (diameter < 1)
        throw BadParameter("diameter must be >= 1, got " + std::to_string(diameter));
    if (delta == 2) return {2 * static_cast<std::int64_t>(diameter) + 1, false};
    MooreBound b{1, false};
    std::int64_t term = delta;
    for (int d = 1; d <= diameter; ++d) {
        if (!add_saturating(b.value, term)) {
            b.saturated = true;
            return b;
        }
        if (d < diameter && __builtin_mul_overflow(term, delta - 1, &term)) {
            b.value = kInt64Max;
            b.saturated = true;
            return b;
        }
    }
    return b;
}

GeneratorSet sample_generator_set(const Group& group, int delta, SplitMix64& rng) {
    const std::int64_t order = group.order();
    if (delta < 2) throw BadParameter("delta must be >= 2, got " + std::to_string(delta));
    if (delta > order - 1)
        throw InfeasibleDegree("delta " + std::to_string(delta) + " exceeds |G| - 1 = " +
                               std::to_string(order - 1));
    const bool has_involutions = (order % 2 == 0);  // Cauchy: |G| even <=> order-2 element
    if (delta % 2 == 1 && !has_involutions)
        throw InfeasibleDegree("odd delta " + std::to_string(delta) +
                               " in a group of odd order (no involutions exist)");

    const Element id = group.identity();

    if (delta == order - 1) {
        // Only one such set: everything except the identity.
        std::vector<Element> all;
        all.reserve(static_cast<std::size_t>(order - 1));
        for (std::int64_t i = 1; i < order; ++i) all.push_back(group.unindex(i));
        return GeneratorSet::close_under_inverses(group, all);
    }

    // i involutions + p inverse pairs with 2p + i = delta.
    std::vector<int> feasible;
    for (int i = delta % 2; i <= delta; i += 2) feasible.push_back(i);
    if (!has_involutions) feasible.assign(1, 0);
    const int involutions =
        feasible[static_cast<std::size_t>(rng.next_below(feasible.size()))];
    const int pairs = (delta - involutions) / 2;

    const std::uint64_t budget = 64 * static_cast<std::uint64_t>(delta);
    std::set<Element> chosen;
    std::vector<Element> raw;
    auto draw_slot = [&](bool want_involution) {
        for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
            const Element e =
                group.unindex(static_cast<std::int64_t>(rng.next_below(
                    static_cast<std::uint64_t>(order))));
            if (e == id || chosen.count(e)) continue;
            const Element inv = group.inverse(e);
            if (want_involution != (inv == e)) continue;
            if (!want_involution && chosen.count(inv)) continue;
            raw.push_back(e);
            chosen.insert(e);
            chosen.insert(inv);
            return;
        }
        throw RetryBudgetExhausted("no " +
                                   std::string(want_involution ? "involution" : "inverse pair") +
                                   " found in " + std::to_string(budget) + " draws");
    };
    for (int k = 0; k < involutions; ++k) draw_slot(true);
    for (int k = 0; k < pairs; ++k) draw_slot(false);
    return GeneratorSet::close_under_inverses(group, raw);
}

namespace {

struct WorkerState {
    std::vector<SearchHit> hits;
    std::int64_t connected = 0;
    std::optional<int> best_diameter;
};

void run_trials(const SearchConfig& config, std::int64_t from, std::int64_t to,
                WorkerState& state) {
    for (std::int64_t t = from; t < to; ++t) {
        SplitMix64 rng = SplitMix64::for_trial(config.seed, static_cast<std::uint64_t>(t));
        std::optional<GeneratorSet> set;
        try {
            set.emplace(sample_generator_set(config.group, config.delta, rng));
        } catch (const RetryBudgetExhausted&) {
            continue;  // a failed trial, not a failed search
        }
        const CayleyStats stats = bfs_stats(*set);
        if (!stats.connected) continue;
        ++state.connected;
        if (!state.best_diameter || *stats.diameter < *state.best_diameter)
            state.best_diameter = *stats.diameter;
        if (stats.degree == config.delta && *stats.diameter <= config.target_diameter &&
            static_cast<std::int64_t>(state.hits.size()) < config.max_hits)
            state.hits.push_back({t, *set, stats});
    }
}

}  // namespace

SearchResult random_search(const SearchConfig& config, int threads) {
    const std::int64_t order = config.group.order();
    if (config.trials < 0)
        throw BadParameter("trials must be >= 0, got " + std::to_string(config.trials));
    if (config.max_hits < 0)
        throw BadParameter("max_hits must be >= 0, got " + std::to_string(config.max_hits));
    if (config.delta < 2)
        throw BadParameter("delta must be >= 2, got " + std::to_string(config.delta));
    if (config.delta > order - 1)
        throw InfeasibleDegree("delta " + std::to_string(config.delta) +
                               " exceeds |G| - 1 = " + std::to_string(order - 1));
    if (config.delta % 2 == 1 && order % 2 == 1)
        throw InfeasibleDegree("odd delta " + std::to_string(config.delta) +
                               " in a group of odd order (no involutions exist)");
    const MooreBound bound = moore_bound(config.delta, config.target_diameter);
    if (!bound.saturated && bound.value < order)
        throw MooreInfeasible("no graph of degree " + std::to_string(config.delta) +
                              " and diameter " + std::to_string(config.target_diameter) +
                              " can have " + std::to_string(order) +
                              " vertices (bound " + std::to_string(bound.value) + ")");

    const std::int64_t T = config.trials;
    int workers = std::max(1, threads);
    workers = static_cast<int>(std::min<std::int64_t>(workers, std::max<std::int64_t>(T, 1)));

    std::vector<WorkerState> states(static_cast<std::size_t>(workers));
    const std::int64_t block = (T + workers - 1) / workers;
    if (workers == 1) {
        run_trials(config, 0, T, states[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            const std::int64_t from = std::min<std::int64_t>(w * block, T);
            const std::int64_t to = std::min<std::int64_t>(from + block, T);
            pool.emplace_back(run_trials, std::cref(config), from, to,
                              std::ref(states[static_cast<std::size_t>(w)]));
        }
        for (auto& th : pool) th.join();
    }

    SearchResult result;
    result.summary.trials = T;
    for (const WorkerState& s : states) {
        result.summary.connected += s.connected;
        if (s.best_diameter &&
            (!result.summary.best_diameter || *s.best_diameter < *result.summary.best_diameter))
            result.summary.best_diameter = s.best_diameter;
        for (const SearchHit& h : s.hits) result.hits.push_back(h);
    }
    std::sort(result.hits.begin(), result.hits.end(),
              [](const SearchHit& a, const SearchHit& b) { return a.trial_index < b.trial_index; });
    if (static_cast<std::int64_t>(result.hits.size()) > config.max_hits)
        result.hits.erase(result.hits.begin() + static_cast<std::ptrdiff_t>(config.max_hits),
                          result.hits.end());
    return result;
}

namespace {

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t n) {
    __int128 acc = 1, base = a % n;
    while (e > 0) {
        if (e & 1) acc = acc * base % n;
        base = base * base % n;
        e >>= 1;
    }
    return static_cast<std::int64_t>(acc);
}

// Multiplicative order of the unit a mod n by brute powering.
std::int64_t unit_order(std::int64_t a, std::int64_t n) {
    __int128 v = a % n;
    std::int64_t k = 1;
    while (v != 1) {
        v = v * a % n;
        ++k;
    }
    return k;
}

}  // namespace

std::vector<SemidirectCyclicSpec> enumerate_cyclic_specs(int delta, int diameter,
                                                         std::int64_t min_order,
                                                         std::size_t limit, bool exhaustive) {
    if (min_order < 1)
        throw BadParameter("min_order must be >= 1, got " + std::to_string(min_order));
    std::vector<SemidirectCyclicSpec> out;
    if (limit == 0) return out;
    const MooreBound bound = moore_bound(delta, diameter);
    for (std::int64_t N = bound.value; N >= std::max<std::int64_t>(min_order, 2); --N) {
        std::vector<std::int64_t> divisors;
        for (std::int64_t d = 1; d * d <= N; ++d) {
            if (N % d != 0) continue;
            divisors.push_back(d);
            if (d != N / d) divisors.push_back(N / d);
        }
        std::sort(divisors.begin(), divisors.end());
        for (const std::int64_t m : divisors) {
            const std::int64_t n = N / m;
            if (n < 2) continue;
            // Units whose multiplicative order divides m, keyed by order.
            std::vector<std::pair<std::int64_t, std::int64_t>> units;  // (order, a)
            for (std::int64_t a = 1; a < n; ++a) {
                if (std::gcd(a, n) != 1) continue;
                // ord(a) | m iff a^m = 1; the cheap test gates the brute walk.
                if (pow_mod(a, m, n) != 1) continue;
                units.emplace_back(unit_order(a, n), a);
            }
            if (units.empty()) continue;
            std::sort(units.begin(), units.end(), [](const auto& p, const auto& q) {
                return p.first != q.first ? p.first > q.first : p.second < q.second;
            });
            const std::size_t take = exhaustive ? units.size() : 1;
            for (std::size_t i = 0; i < take; ++i) {
                out.push_back(SemidirectCyclicSpec{m, n, units[i].second});
                if (out.size() == limit) return out;
            }
        }
    }
    return out;
}

}  // namespace degdiam
