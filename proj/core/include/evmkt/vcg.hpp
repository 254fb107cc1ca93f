#pragma once

#include <vector>

#include "evmkt/market.hpp"
#include "evmkt/solver.hpp"

namespace evmkt {

struct VcgOutcome {
  SolveResult result;
  std::vector<double> payments;  // externality payments, one per EV
};

/// Validates bid vectors for an auction round: correct length,
/// non-negative entries, zero bid on the empty bundle.
void validate_bids(const std::vector<Valuation>& bids,
                   const BundleUniverse& universe);

/// One-shot VCG at the given capacity: efficient allocation, payment_i =
/// SW_{-i}(b_{-i}, X_{-i}) - SW_{-i}(b, X) with EV i simply removed.
VcgOutcome vcg_outcome(const std::vector<Valuation>& bids,
                       const BundleUniverse& universe,
                       const std::vector<int>& capacity);

/// Day-ahead VCG auction at full capacity N*1. The resulting allocations
/// and payments form the endowments for the real-time mechanisms.
VcgOutcome day_ahead_vcg(const std::vector<Valuation>& bids,
                         const BundleUniverse& universe, int ports);

DayAheadState to_day_ahead_state(const VcgOutcome& outcome);

/// Two-period VCG: efficient real-time allocation at full capacity, with
/// each counterfactual economy X_{-i} shrunk by EV i's endowment
/// (capacity N*1 - x_i(0)). Final payments are p_i(0) + p_i(1).
MechanismOutcome tp_vcg(const MarketInstance& instance,
                        const DayAheadState& day_ahead,
                        const std::vector<Valuation>& bids);

/// One-shot VCG on the real-time bids, packaged as a MechanismOutcome.
/// Reservations are abandoned: day-ahead payments are not charged.
MechanismOutcome one_shot_vcg(const MarketInstance& instance,
                              const std::vector<Valuation>& bids);

/// Constrained-efficient allocation (Definition-10 masks computed from
/// the bids) with VCG-style payments on the masked problem; X_{-i} is
/// endowment-reduced as in tp_vcg. Has no IC guarantee.
MechanismOutcome constrained_efficient_outcome(const MarketInstance& instance,
                                               const DayAheadState& day_ahead,
                                               const std::vector<Valuation>& bids,
                                               double tol = kDefaultTolerance);

/// Per-bundle reserve-price vector for EV i derived from day-ahead bids:
/// entry j = SW_{-i}(b_{-i}, X_{-i}) - SW_{-i}(b_{-i}, X_{-i,j}) where
/// X_{-i,j} removes the slots of bundle j from capacity. Entry 1 is 0.
std::vector<double> day_ahead_reserve_vector(
    const std::vector<Valuation>& bids, std::size_t i,
    const BundleUniverse& universe, int ports);

/// Welfare and utilities at the instance's true valuations.
MechanismOutcome finalize_outcome(const MarketInstance& instance,
                                  std::vector<Allocation> allocation,
                                  std::vector<double> payment_day_ahead,
                                  std::vector<double> payment_real_time);

}  // namespace evmkt
