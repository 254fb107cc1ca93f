#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evmkt/market.hpp"
#include "evmkt/vcg.hpp"

namespace evmkt {

/// A queried EV's choice: keep the day-ahead allocation, or cancel it
/// (full refund) and buy bundle `bundle_index` at the posted price.
/// The range of choices is Theta = {keep} u [|universe|]; re-selecting
/// the empty bundle is the exit option.
struct Response {
  bool keep = true;
  int bundle_index = kEmptyBundle;

  friend bool operator==(const Response&, const Response&) = default;
};

struct QueryRecord {
  std::size_t ev = 0;               // index into the instance
  std::vector<int> offered;         // available bundle indices, ascending
  std::vector<double> prices;       // full price vector, prices[0] = 0
  Response response;
  double payment_delta = 0.0;       // p(1) for this EV
};

/// Reserve prices faced by one EV. The rule sees the query history so
/// response-dependent rules stay expressible; the two built-in rules
/// ignore it.
struct PriceRule {
  std::string description;
  std::function<std::vector<double>(std::size_t ev,
                                    const std::vector<QueryRecord>& history)>
      prices_for;
};

/// h_{i,j} = p_i(0) for every non-empty bundle, h_{i,1} = 0. EVs without
/// a day-ahead bundle face `default_reserve` instead.
std::vector<double> simple_reserve(const DayAheadEntry& day_ahead,
                                   int universe_size,
                                   double default_reserve = 0.0);

PriceRule simple_reserve_rule(const DayAheadState& day_ahead,
                              double default_reserve = 0.0);

/// Reserve vectors from a day-ahead VCG auction (day_ahead_reserve_vector
/// per EV, computed once from the day-ahead bids).
PriceRule day_ahead_vcg_reserve_rule(const std::vector<Valuation>& day_ahead_bids,
                                     const BundleUniverse& universe, int ports);

/// Fixed per-EV price vectors.
PriceRule explicit_price_rule(std::vector<std::vector<double>> vectors);

/// Bundles EV `ev` could switch to: j is offered iff replacing the EV's
/// current holding with j keeps the whole profile feasible. Queried EVs
/// hold their chosen bundles, unqueried EVs their day-ahead bundles.
/// The empty bundle is always offered.
std::vector<int> available_bundles(const std::vector<Allocation>& holdings,
                                   std::size_t ev,
                                   const BundleUniverse& universe, int ports);

/// Utility-maximizing truthful response over {keep} and the offered
/// bundles; ties prefer keep, then the lowest bundle index.
Response best_response(const Valuation& v, const DayAheadEntry& day_ahead,
                       const std::vector<int>& offered,
                       const std::vector<double>& prices);

struct PostedPriceResult {
  MechanismOutcome outcome;
  std::vector<QueryRecord> trace;
};

/// Runs the sequential posted-price mechanism: queries EVs in `order`,
/// offering available bundles at the rule's prices; keep costs nothing,
/// re-selecting bundle j costs h_{i,j} - p_i(0) (cancel with full refund).
/// Throws std::invalid_argument when the rule emits a negative price or
/// a nonzero price for the empty bundle.
PostedPriceResult run_posted_price(const MarketInstance& instance,
                                   const DayAheadState& day_ahead,
                                   const std::vector<std::size_t>& order,
                                   const PriceRule& rule,
                                   double tol = kDefaultTolerance);

/// delta(v, x(0), p(0)): total realized value of day-ahead bundles worth
/// less than their day-ahead payment.
double delta(const MarketInstance& instance, const DayAheadState& day_ahead);

struct EfficiencyBound {
  double gap = 0.0;      // optimal welfare minus achieved welfare
  double epsilon = 0.0;  // optimal welfare minus day-ahead welfare
  double delta = 0.0;
  bool holds = false;    // gap <= epsilon + delta (+ tol)
};

/// Checks the (epsilon + delta)-efficiency bound for a posted-price run
/// under the simple reserve rule.
EfficiencyBound efficiency_bound_check(const PostedPriceResult& run,
                                       const MarketInstance& instance,
                                       const DayAheadState& day_ahead,
                                       double tol = kDefaultTolerance);

/// Per-query welfare accounting: the queried EV's holding value may drop
/// by at most its delta contribution v_i'x_i(0) * 1[v_i'x_i(0) < p_i(0)].
/// Returns the first offending query index, or -1 when all pass.
int check_query_accounting(const PostedPriceResult& run,
                           const MarketInstance& instance,
                           const DayAheadState& day_ahead,
                           double tol = kDefaultTolerance);

}  // namespace evmkt
