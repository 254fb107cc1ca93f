#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evmkt/posted_price.hpp"

namespace evmkt {

enum class Property { ic, ir, eff, ra, bb, ns, ce };

/// `holds` is reserved for checks that exhaust the deviation space (the
/// posted-price bid range Theta is finite); auction IC over continuous
/// bids can at best report holds_on_sampled_deviations.
enum class Verdict { holds, violated, holds_on_sampled_deviations };

std::string to_string(Property p);
std::string to_string(Verdict v);
std::optional<Property> parse_property(const std::string& name);

/// Replayable evidence for a violated verdict.
struct Witness {
  std::string ev_id;
  double amount = 0.0;  // utility gain / negative payment / welfare gap
  std::optional<Valuation> deviation_bid;      // auction IC deviations
  std::optional<Response> deviation_response;  // posted-price IC deviations
  std::optional<std::size_t> query_index;
  std::string detail;
};

struct PropertyReport {
  Property property = Property::ir;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  std::string evidence;
};

/// Finite surrogate for the dominant-strategy quantifier: per-EV
/// alternative bid vectors, always containing the truthful report.
struct DeviationSet {
  std::vector<std::vector<Valuation>> per_ev;
};

/// Truthful report, the EV's support list, scaled copies of the truth
/// (x0, x0.5, x0.9, x1.1, x2) and `n_random` seeded perturbations, all
/// sanitized to valid bids.
DeviationSet default_deviations(const MarketInstance& instance,
                                const BundleUniverse& universe,
                                std::uint64_t seed, int n_random = 20);

/// Outcome-level checks (Definitions 4-8 plus constrained efficiency):
///   IR:  utility_i >= 0 for all i
///   Eff: welfare(outcome) >= max_welfare(v)
///   RA:  utility_i >= g_i for all i
///   BB:  sum_i p_i(0) + p_i(1) >= 0
///   NS:  p_i(0) + p_i(1) >= 0 for all i
///   CE:  welfare >= constrained optimum and v_i'x_i >= g_i for all i
std::vector<PropertyReport> check_outcome_properties(
    const MarketInstance& instance, const DayAheadState& day_ahead,
    const MechanismOutcome& outcome, const std::vector<Property>& which,
    double tol = kDefaultTolerance);

using MechanismFn =
    std::function<MechanismOutcome(const std::vector<Valuation>& bids)>;

/// Re-runs the mechanism under every deviation and compares the
/// deviator's utility at its true valuation. Any strict gain beyond tol
/// is a violation; otherwise holds_on_sampled_deviations.
PropertyReport check_ic_sampled(const MechanismFn& mechanism,
                                const MarketInstance& instance,
                                const DeviationSet& deviations,
                                double tol = kDefaultTolerance);

/// Exhaustive IC check for a posted-price run: at every query, no
/// response in {keep} u offered beats the chosen one. Verdict `holds`.
PropertyReport check_posted_ic(const PostedPriceResult& run,
                               const MarketInstance& instance,
                               const DayAheadState& day_ahead,
                               double tol = kDefaultTolerance);

/// The two-situation incentive system around constrained efficiency:
/// with the pivotal EV's constrained-efficient bundles k (profile A) and
/// l (profile B) and payments p, q, incentive compatibility needs
///   vA_k - p >= vA_l - q   and   vB_l - q >= vB_k - p,
/// i.e. vB_k - vB_l <= p - q <= vA_k - vA_l.
struct CePairReport {
  bool applicable = false;
  std::string reason;
  std::size_t pivot = 0;
  int bundle_a = kEmptyBundle;
  int bundle_b = kEmptyBundle;
  double upper = 0.0;  // vA_k - vA_l
  double lower = 0.0;  // vB_k - vB_l
  bool feasible = false;
  std::string inequalities;
};

/// `profile_a` and `profile_b` are full valuation profiles sharing the
/// day-ahead state; the pivotal EV is the unique one whose valuations
/// differ (the first EV when none do).
CePairReport check_ce_payment_infeasibility(
    const MarketInstance& instance, const std::vector<Valuation>& profile_a,
    const std::vector<Valuation>& profile_b, const DayAheadState& day_ahead,
    double tol = kDefaultTolerance);

struct RationalizabilityResult {
  bool rationalizable = false;
  std::vector<Valuation> witness;  // empty unless rationalizable
};

/// Definition-9 test: some valuation profile in the product support makes
/// the allocation welfare-optimal with every payment in [0, v_i'x_i].
RationalizabilityResult rationalizable(
    const std::vector<Allocation>& profile, const std::vector<double>& payments,
    const std::vector<std::vector<Valuation>>& supports,
    const BundleUniverse& universe, int ports, double tol = kDefaultTolerance);

/// Can any efficient allocation be paired with payments that satisfy
/// both reservation awareness and no-subsidy? Enumerates every efficient
/// profile; max_payment_bound[i] is the largest RA-compatible payment
/// for EV i across them (negative means RA forces a subsidy).
struct JointFeasibility {
  bool feasible = false;
  std::vector<double> max_payment_bound;
  int efficient_profiles = 0;
};

JointFeasibility check_joint_feasibility(const MarketInstance& instance,
                                         const DayAheadState& day_ahead,
                                         double tol = kDefaultTolerance);

}  // namespace evmkt
