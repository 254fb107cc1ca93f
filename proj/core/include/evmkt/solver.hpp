#pragma once

#include <vector>

#include "evmkt/market.hpp"

namespace evmkt {

/// Input to exact winner determination: per-EV bids, a per-slot capacity
/// vector (generalizing N*1, N*1 - x_i(0) and N*1 - e_j), and an optional
/// per-EV admissibility mask over bundle indices.
///
/// An empty `allowed` means every bundle is admissible for every EV.
/// Callers that restrict the empty bundle (mask entry 0 false) must
/// guarantee a feasible profile exists; the solver throws otherwise.
struct SolveSpec {
  std::vector<Valuation> bids;
  std::vector<int> capacity;                // length T, entries >= 0
  std::vector<std::vector<bool>> allowed;   // per EV, length |universe|
};

struct SolveResult {
  std::vector<Allocation> profile;
  double welfare = 0.0;
  std::vector<double> contribution;  // per-EV b_i'x_i, welfare = their sum
};

/// Exact social-welfare maximization over feasible masked profiles.
///
/// Depth-first search over EVs in input order with per-slot load pruning
/// and an optimistic remaining-bid bound. Ties are broken toward the
/// lexicographically smallest bundle-index sequence in EV input order.
/// Throws std::invalid_argument on dimension mismatches.
SolveResult max_welfare(const SolveSpec& spec, const BundleUniverse& universe);

/// Welfare maximization restricted to bundles worth at least the utility
/// guarantee: EV i may receive bundle j only if v_{i,j} >= g_i, and the
/// empty bundle only if g_i <= 0. Keeping the day-ahead profile is always
/// admissible, so a solution exists whenever `day_ahead` is valid.
SolveResult constrained_max_welfare(const std::vector<Valuation>& valuations,
                                    const DayAheadState& day_ahead,
                                    const std::vector<int>& capacity,
                                    const BundleUniverse& universe,
                                    double tol = kDefaultTolerance);

/// Admissibility masks induced by Definition-10-style guarantees.
std::vector<std::vector<bool>> guarantee_masks(
    const std::vector<Valuation>& valuations, const DayAheadState& day_ahead,
    const BundleUniverse& universe, double tol = kDefaultTolerance);

/// Sum of everyone-but-i's bid value under the given profile
/// (SW_{-i}(b, X) when the profile is the optimum for b).
double sw_minus_i(const SolveResult& result, const std::vector<Valuation>& bids,
                  std::size_t i);

}  // namespace evmkt
