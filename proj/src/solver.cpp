#include "kct/solver.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kct {

namespace {

constexpr long long kHuge = std::numeric_limits<long long>::max() / 2;

// Exact binomial coefficient, saturating at `cap` instead of overflowing.
long long choose_saturated(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long res = 1;
    for (int i = 1; i <= k; ++i) {
        const long long num = n - k + i;
        if (res > cap / num) return cap;
        res = res * num / i;  // res * num is C(n-k+i, i) * i, divisible by i
        if (res >= cap) return cap;
    }
    return res;
}

// Lexicographic rank -> k-combination of {0..n-1}.
std::vector<VertexId> unrank_combination(long long r, int n, int k) {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(k));
    int c = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            const long long block = choose_saturated(n - 1 - c, k - 1 - i, kHuge);
            if (r < block) break;
            r -= block;
            ++c;
        }
        out.push_back(static_cast<VertexId>(c));
        ++c;
    }
    return out;
}

bool next_combination(std::vector<VertexId>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

// Voronoi partition radius of a center set; returns abort_at early once the
// running maximum reaches it (callers only care about strictly smaller R).
dist_t subset_radius(const DistanceMatrix& dm, const std::vector<VertexId>& cs, dist_t abort_at) {
    dist_t r = 0;
    const auto n = static_cast<VertexId>(dm.size());
    for (VertexId v = 0; v < n; ++v) {
        dist_t best = dm.at(v, cs[0]);
        for (std::size_t t = 1; t < cs.size() && best > 0; ++t)
            best = std::min(best, dm.at(v, cs[t]));
        r = std::max(r, best);
        if (r >= abort_at) return abort_at;
    }
    return r;
}

// Radius plus smallest per-center max, with smallest-id tie assignment.
void subset_radius_and_min(const DistanceMatrix& dm, const std::vector<VertexId>& cs,
                           dist_t& r_out, dist_t& min_out) {
    const auto n = static_cast<VertexId>(dm.size());
    std::vector<dist_t> cmax(cs.size(), 0);
    dist_t r = 0;
    for (VertexId v = 0; v < n; ++v) {
        std::size_t best = 0;
        dist_t bd = dm.at(v, cs[0]);
        for (std::size_t t = 1; t < cs.size(); ++t) {
            const dist_t d = dm.at(v, cs[t]);
            if (d < bd) {
                bd = d;
                best = t;
            }
        }
        cmax[best] = std::max(cmax[best], bd);
        r = std::max(r, bd);
    }
    r_out = r;
    min_out = *std::min_element(cmax.begin(), cmax.end());
}

std::vector<VertexId> apply_swap(const std::vector<VertexId>& centers, VertexId out, VertexId in) {
    std::vector<VertexId> next;
    next.reserve(centers.size());
    for (VertexId c : centers)
        if (c != out) next.push_back(c);
    next.insert(std::upper_bound(next.begin(), next.end(), in), in);
    return next;
}

// First candidate (in order) the predicate accepts, or -1. The parallel
// path evaluates fixed-size blocks speculatively and then takes the
// earliest hit, so the chosen index matches the serial scan.
template <class Accept>
long long first_accepted(const std::vector<VertexId>& cands, bool parallel, const Accept& accept) {
    const auto m = static_cast<long long>(cands.size());
    if (!parallel) {
        for (long long i = 0; i < m; ++i)
            if (accept(cands[i])) return i;
        return -1;
    }
    constexpr long long kBlock = 64;
    std::vector<char> hit(kBlock);
    for (long long base = 0; base < m; base += kBlock) {
        const long long cnt = std::min(kBlock, m - base);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < cnt; ++i) hit[i] = accept(cands[base + i]) ? 1 : 0;
        for (long long i = 0; i < cnt; ++i)
            if (hit[i]) return base + i;
    }
    return -1;
}

std::vector<VertexId> swap_candidates(const RoadGraph& g, VertexId center, int hops,
                                      const std::vector<VertexId>& taken) {
    auto nb = n_hop_neighborhood(g, center, hops);
    std::vector<VertexId> cands;
    cands.reserve(nb.size());
    for (VertexId w : nb)
        if (!std::binary_search(taken.begin(), taken.end(), w)) cands.push_back(w);
    return cands;
}

void validate_hops(int n) {
    if (n < 1 || n > 30)
        throw InputError("neighborhood hop count out of range 1..30: " + std::to_string(n));
}

std::vector<VertexId> local_search_impl(const RoadGraph& g, const DistanceMatrix& dm,
                                        std::span<const VertexId> centers, int n,
                                        Objective objective, LocalSearchDetail* detail,
                                        int max_fixpoint_iters, bool parallel) {
    validate_hops(n);
    (void)objective;  // single objective today; the enum fixes the call shape
    auto cur = voronoi_partition(dm, centers);  // validates the center set
    std::vector<VertexId> cs;
    cs.reserve(cur.tus.size());
    for (const auto& tu : cur.tus) cs.push_back(tu.center);
    dist_t cur_r = cur.partition_radius;
    while (true) {
        bool improved = false;
        const std::vector<VertexId> snapshot = cs;
        for (VertexId c : snapshot) {
            auto cands = swap_candidates(g, c, n, cs);
            const dist_t bar = cur_r;
            const auto idx = first_accepted(cands, parallel, [&](VertexId w) {
                return subset_radius(dm, apply_swap(cs, c, w), bar) < bar;
            });
            if (idx < 0) continue;
            cs = apply_swap(cs, c, cands[static_cast<std::size_t>(idx)]);
            cur_r = subset_radius(dm, cs, kUnreachable);
            improved = true;
        }
        if (!improved) break;
        if (detail) detail->pass_radii.push_back(cur_r);
    }
    auto fp = shift_recompute_fixpoint(g, dm, cs, max_fixpoint_iters);
    auto result = fp.centers;
    if (detail) detail->fixpoint = std::move(fp);
    return result;
}

}  // namespace

std::vector<VertexId> greedy_farthest_first(const DistanceMatrix& dm, int k, VertexId start) {
    const auto n = static_cast<VertexId>(dm.size());
    if (k < 1 || k > n)
        throw InputError("k out of range 1.." + std::to_string(n) + ": " + std::to_string(k));
    if (start < 0 || start >= n)
        throw InputError("start vertex out of range: " + std::to_string(start));
    const auto start_row = dm.row(start);
    std::vector<dist_t> dist_to_set(start_row.begin(), start_row.end());
    std::vector<VertexId> out{start};
    while (static_cast<int>(out.size()) < k) {
        VertexId pick = 0;
        dist_t best = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (dist_to_set[v] > best) {  // strict: ties keep the smaller id
                best = dist_to_set[v];
                pick = v;
            }
        }
        out.push_back(pick);
        const auto row = dm.row(pick);
        for (VertexId v = 0; v < n; ++v) dist_to_set[v] = std::min(dist_to_set[v], row[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> local_search(const RoadGraph& g, const DistanceMatrix& dm,
                                   std::span<const VertexId> centers, int n, Objective objective,
                                   LocalSearchDetail* detail, int max_fixpoint_iters) {
    return local_search_impl(g, dm, centers, n, objective, detail, max_fixpoint_iters, true);
}

std::vector<VertexId> local_search_serial(const RoadGraph& g, const DistanceMatrix& dm,
                                          std::span<const VertexId> centers, int n,
                                          Objective objective, LocalSearchDetail* detail,
                                          int max_fixpoint_iters) {
    return local_search_impl(g, dm, centers, n, objective, detail, max_fixpoint_iters, false);
}

std::vector<VertexId> balance_min_radius(const RoadGraph& g, const DistanceMatrix& dm,
                                         std::span<const VertexId> centers, int n,
                                         BalanceDetail* detail, int max_fixpoint_iters) {
    validate_hops(n);
    auto input_partition = voronoi_partition(dm, centers);
    std::vector<VertexId> input;
    input.reserve(input_partition.tus.size());
    for (const auto& tu : input_partition.tus) input.push_back(tu.center);
    const dist_t r_star = input_partition.partition_radius;
    dist_t cur_min = radius_stats(input_partition).min;
    std::vector<VertexId> cs = input;
    while (true) {
        bool improved = false;
        const std::vector<VertexId> snapshot = cs;
        for (VertexId c : snapshot) {
            auto cands = swap_candidates(g, c, n, cs);
            const dist_t floor_min = cur_min;
            const auto idx = first_accepted(cands, true, [&](VertexId w) {
                dist_t r = 0;
                dist_t mn = 0;
                subset_radius_and_min(dm, apply_swap(cs, c, w), r, mn);
                return r <= r_star && mn > floor_min;
            });
            if (idx < 0) continue;
            cs = apply_swap(cs, c, cands[static_cast<std::size_t>(idx)]);
            dist_t r = 0;
            subset_radius_and_min(dm, cs, r, cur_min);
            improved = true;
        }
        if (!improved) break;
        if (detail) detail->pass_min_radii.push_back(cur_min);
    }
    auto fp = shift_recompute_fixpoint(g, dm, cs, max_fixpoint_iters);
    std::vector<VertexId> result;
    bool rolled_back = false;
    if (fp.partition.partition_radius > r_star) {
        result = input;  // the closing fixpoint broke the radius cap
        rolled_back = true;
    } else {
        result = fp.centers;
    }
    if (detail) {
        detail->fixpoint = std::move(fp);
        detail->rolled_back = rolled_back;
    }
    return result;
}

Solution solve(const RoadGraph& g, const DistanceMatrix& dm, const SolverConfig& cfg) {
    const auto n = static_cast<VertexId>(dm.size());
    if (cfg.k < 1 || cfg.k > n)
        throw InputError("k out of range 1.." + std::to_string(n) + ": " + std::to_string(cfg.k));
    validate_hops(cfg.neighborhood_n);
    if (cfg.max_fixpoint_iters < 1) throw InputError("max_fixpoint_iters must be positive");
    Solution sol;
    if (cfg.seed_vertex) {
        sol.start_vertex = *cfg.seed_vertex;
    } else {
        std::mt19937_64 rng(cfg.rng_seed);
        sol.start_vertex = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n));
    }

    auto seeds = greedy_farthest_first(dm, cfg.k, sol.start_vertex);
    sol.stage_trace.push_back({"greedy", subset_radius(dm, seeds, kUnreachable)});

    auto fp0 = shift_recompute_fixpoint(g, dm, seeds, cfg.max_fixpoint_iters);
    sol.converged = fp0.converged;
    sol.stage_trace.push_back({"shift_fixpoint", fp0.partition.partition_radius});

    LocalSearchDetail ls;
    auto cs = local_search(g, dm, fp0.centers, cfg.neighborhood_n, Objective::MIN_MAX_RADIUS, &ls,
                           cfg.max_fixpoint_iters);
    for (std::size_t i = 0; i < ls.pass_radii.size(); ++i)
        sol.stage_trace.push_back({"local_pass_" + std::to_string(i + 1), ls.pass_radii[i]});
    sol.stage_trace.push_back({"local_fixpoint", ls.fixpoint.partition.partition_radius});
    sol.converged = sol.converged && ls.fixpoint.converged;
    CenteredPartition part = std::move(ls.fixpoint.partition);

    if (cfg.balance) {
        BalanceDetail bd;
        cs = balance_min_radius(g, dm, cs, cfg.neighborhood_n, &bd, cfg.max_fixpoint_iters);
        if (!bd.rolled_back) {
            part = std::move(bd.fixpoint.partition);
            sol.converged = sol.converged && bd.fixpoint.converged;
        }
        sol.stage_trace.push_back({"balance", part.partition_radius});
    }

    auto rep = check_center_constraint(g, part);
    if (!rep.all_ok) {
        // The fixpoint cycled without settling on a shift-fixed set. Keep
        // the cells and move each center into its cell's center set; that
        // satisfies the constraint and cannot raise any radius.
        auto shifted = shift_centers(g, dm, cs);
        auto tus = part.tus;
        for (VertexId s : shifted) tus[static_cast<std::size_t>(part.tu_of[s])].center = s;
        part = centered_partition(dm, std::move(tus));
        cs = std::move(shifted);
        rep = check_center_constraint(g, part);
        sol.converged = false;
    }

    sol.centers = std::move(cs);
    sol.R = part.partition_radius;
    sol.min_radius = radius_stats(part).min;
    sol.partition = std::move(part);
    sol.constraint_ok = rep.all_ok;
    return sol;
}

namespace {

struct ChunkBest {
    dist_t r = kUnreachable;
    long long rank = -1;
    std::vector<VertexId> set;
};

bool subset_feasible(const RoadGraph& g, const DistanceMatrix& dm,
                     const std::vector<VertexId>& cs) {
    return check_center_constraint(g, voronoi_partition(dm, cs)).all_ok;
}

void scan_rank_range(const RoadGraph& g, const DistanceMatrix& dm, int n, int k, bool constrained,
                     long long begin, long long end, ChunkBest& best) {
    auto idx = unrank_combination(begin, n, k);
    for (long long r = begin; r < end; ++r) {
        const dist_t radius = subset_radius(dm, idx, best.r);
        if (radius < best.r && (!constrained || subset_feasible(g, dm, idx))) {
            best.r = radius;
            best.rank = r;
            best.set = idx;
        }
        if (r + 1 < end) next_combination(idx, n);
    }
}

ExactResult exact_impl(const RoadGraph& g, const DistanceMatrix& dm, int k, bool constrained,
                       long long budget, bool parallel) {
    const auto n = static_cast<int>(dm.size());
    if (k < 1 || k > n)
        throw InputError("k out of range 1.." + std::to_string(n) + ": " + std::to_string(k));
    if (budget < 1) throw InputError("budget must be positive");
    const long long total = choose_saturated(n, k, kHuge);
    if (total > budget)
        throw BudgetError("exhaustive search needs " +
                          (total >= kHuge ? std::string("more than ") + std::to_string(kHuge)
                                          : std::to_string(total)) +
                          " subsets, budget is " + std::to_string(budget));

    long long nchunks = 1;
    if (parallel) {
#ifdef _OPENMP
        nchunks = std::min<long long>(total, 8LL * std::max(1, omp_get_max_threads()));
#endif
    }
    std::vector<ChunkBest> bests(static_cast<std::size_t>(nchunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long c = 0; c < nchunks; ++c) {
        const auto begin = static_cast<long long>(static_cast<__int128>(total) * c / nchunks);
        const auto end = static_cast<long long>(static_cast<__int128>(total) * (c + 1) / nchunks);
        if (begin < end)
            scan_rank_range(g, dm, n, k, constrained, begin, end,
                            bests[static_cast<std::size_t>(c)]);
    }
    ChunkBest best;
    for (auto& cb : bests) {
        if (cb.rank < 0) continue;
        if (cb.r < best.r || (cb.r == best.r && (best.rank < 0 || cb.rank < best.rank)))
            best = std::move(cb);
    }
    if (best.rank < 0) throw MetricError("no center placement satisfies the center constraint");
    ExactResult res;
    res.centers = std::move(best.set);
    res.R = best.r;
    res.subsets_checked = total;
    return res;
}

}  // namespace

ExactResult exact_solver(const RoadGraph& g, const DistanceMatrix& dm, int k, bool constrained,
                         long long budget) {
    return exact_impl(g, dm, k, constrained, budget, true);
}

ExactResult exact_solver_serial(const RoadGraph& g, const DistanceMatrix& dm, int k,
                                bool constrained, long long budget) {
    return exact_impl(g, dm, k, constrained, budget, false);
}

std::vector<SweepRow> sweep(const RoadGraph& g, const DistanceMatrix& dm, int k_min, int k_max,
                            const SolverConfig& cfg, std::vector<int>* nonmonotone_ks) {
    const auto n = static_cast<int>(dm.size());
    if (k_min < 1 || k_max < k_min || k_max > n)
        throw InputError("bad k range " + std::to_string(k_min) + ".." + std::to_string(k_max));
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    dist_t prev_r = -1;
    bool have_prev = false;
    for (int k = k_min; k <= k_max; ++k) {
        SweepRow row;
        row.k = k;
        try {
            SolverConfig per_k = cfg;
            per_k.k = k;
            auto sol = solve(g, dm, per_k);
            row.R = sol.R;
            row.min_radius = sol.min_radius;
            const auto st = radius_stats(sol.partition);
            row.mean_radius_minutes = st.mean_minutes;
            row.stddev_radius_minutes = st.stddev_minutes;
            row.centers = std::move(sol.centers);
            if (have_prev && row.R > prev_r && nonmonotone_ks) nonmonotone_ks->push_back(k);
            prev_r = row.R;
            have_prev = true;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kct
