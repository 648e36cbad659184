#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kct/partition.hpp"

namespace kct {

struct SolverConfig {
    int k = 1;
    std::optional<VertexId> seed_vertex;  // greedy start; random when absent
    int neighborhood_n = 5;               // hop radius for swap candidates, 1..30
    bool balance = false;                 // raise the smallest radius after minimizing R
    int max_fixpoint_iters = 100;         // cap on shift+recompute rounds
    std::uint64_t rng_seed = 0;           // draws the start vertex when seed_vertex absent
};

struct StageRadius {
    std::string stage;
    dist_t radius = 0;
};

struct Solution {
    std::vector<VertexId> centers;
    CenteredPartition partition;
    dist_t R = 0;           // max TU radius
    dist_t min_radius = 0;  // min TU radius
    std::vector<StageRadius> stage_trace;
    bool constraint_ok = false;
    VertexId start_vertex = 0;  // recorded so random-seeded runs can be replayed
    bool converged = true;      // no iteration cap was exhausted along the way
};

// Farthest-first traversal: starts from `start`, then repeatedly adds the
// vertex whose distance to the chosen set is largest (smallest id on ties).
std::vector<VertexId> greedy_farthest_first(const DistanceMatrix& dm, int k, VertexId start);

enum class Objective { MIN_MAX_RADIUS };

struct LocalSearchDetail {
    std::vector<dist_t> pass_radii;  // Voronoi radius after each improving pass
    FixpointResult fixpoint;         // terminal shift+recompute run
};

// First-improvement descent. Each pass scans centers in id order; per
// center, candidates from its n-hop neighborhood are tried in id order
// against the Voronoi partition of the swapped set, and the first strict
// improvement is kept. Stops when a full pass accepts nothing, then runs
// shift_recompute_fixpoint once to restore the center constraint.
// Candidate evaluation inside a scan runs in parallel; the accepted move
// is always the one sequential order would pick.
std::vector<VertexId> local_search(const RoadGraph& g, const DistanceMatrix& dm,
                                   std::span<const VertexId> centers, int n,
                                   Objective objective = Objective::MIN_MAX_RADIUS,
                                   LocalSearchDetail* detail = nullptr, int max_fixpoint_iters = 100);

// Same scan evaluated one candidate at a time; reference for the parallel path.
std::vector<VertexId> local_search_serial(const RoadGraph& g, const DistanceMatrix& dm,
                                          std::span<const VertexId> centers, int n,
                                          Objective objective = Objective::MIN_MAX_RADIUS,
                                          LocalSearchDetail* detail = nullptr,
                                          int max_fixpoint_iters = 100);

struct BalanceDetail {
    std::vector<dist_t> pass_min_radii;  // min TU radius after each improving pass
    FixpointResult fixpoint;
    bool rolled_back = false;  // final fixpoint pushed R past the cap
};

// Lexicographic polish: accepts a swap only when the new Voronoi radius
// stays within the input radius R* and the smallest TU radius strictly
// grows. Ends with shift_recompute_fixpoint; if that raises R above R*,
// the input centers are restored.
std::vector<VertexId> balance_min_radius(const RoadGraph& g, const DistanceMatrix& dm,
                                         std::span<const VertexId> centers, int n,
                                         BalanceDetail* detail = nullptr,
                                         int max_fixpoint_iters = 100);

// Full pipeline: greedy seeding, shift-recompute fixpoint, local search,
// optional balance step. The result always satisfies the center constraint.
Solution solve(const RoadGraph& g, const DistanceMatrix& dm, const SolverConfig& cfg);

struct ExactResult {
    std::vector<VertexId> centers;  // lexicographically smallest optimum
    dist_t R = 0;
    long long subsets_checked = 0;
};

// Exhaustive search over all k-subsets in lexicographic order. With
// `constrained` set, a subset only counts when every Voronoi cell's center
// lies in its induced subgraph's center set. Throws BudgetError (stating
// the count) when C(n,k) exceeds `budget`. Enumeration is split into rank
// chunks that run in parallel and merge deterministically.
ExactResult exact_solver(const RoadGraph& g, const DistanceMatrix& dm, int k,
                         bool constrained = true, long long budget = 100000000LL);
ExactResult exact_solver_serial(const RoadGraph& g, const DistanceMatrix& dm, int k,
                                bool constrained = true, long long budget = 100000000LL);

struct SweepRow {
    int k = 0;
    dist_t R = 0;
    dist_t min_radius = 0;
    double mean_radius_minutes = 0.0;
    double stddev_radius_minutes = 0.0;
    std::vector<VertexId> centers;
    std::string error;  // nonempty when solve failed for this k
};

// Runs solve for each k in [k_min, k_max]. Per-k failures land in the
// row's error field instead of aborting the sweep. Rows whose R exceeds
// the previous row's R are reported through `nonmonotone_ks`.
std::vector<SweepRow> sweep(const RoadGraph& g, const DistanceMatrix& dm, int k_min, int k_max,
                            const SolverConfig& cfg = {},
                            std::vector<int>* nonmonotone_ks = nullptr);

}  // namespace kct
