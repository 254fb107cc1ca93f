#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evmkt/market.hpp"

namespace evmkt {

enum class ValuationMode { explicit_values, max_selector, additive };

/// A valuation given either directly per bundle or as per-slot values
/// completed by the max-selector rule (bundle value = max slot value) or
/// the additive rule (bundle value = sum of slot values).
struct ValuationSpec {
  ValuationMode mode = ValuationMode::explicit_values;
  std::vector<double> slot_values;    // length T (max_selector / additive)
  std::vector<double> bundle_values;  // length |universe| (explicit)
};

Valuation realize(const ValuationSpec& spec, const BundleUniverse& universe);

struct DayAheadSpec {
  Bundle bundle;
  double payment = 0.0;
};

struct ScenarioEv {
  std::string id;
  std::optional<DayAheadSpec> day_ahead;
  ValuationSpec valuation;  // realized (real-time) valuation
  std::vector<ValuationSpec> support;
  /// Reported day-ahead valuation, needed by the day-ahead-VCG price rule.
  std::optional<ValuationSpec> day_ahead_bid;
};

enum class MechanismKind { vcg, tp_vcg, posted_price, constrained_eff };
enum class PriceRuleKind { simple, day_ahead_vcg_vector, explicit_vectors };

std::string to_string(MechanismKind k);
std::string to_string(PriceRuleKind k);
std::optional<MechanismKind> parse_mechanism(const std::string& name);
std::optional<PriceRuleKind> parse_price_rule_kind(const std::string& name);

struct PriceRuleSpec {
  PriceRuleKind kind = PriceRuleKind::simple;
  double default_reserve = 0.0;                 // simple rule, unallocated EVs
  std::vector<std::vector<double>> vectors;     // explicit rule, per EV
};

struct MechanismConfig {
  MechanismKind kind = MechanismKind::vcg;
  std::vector<std::string> order;  // EV ids; empty means input order
  PriceRuleSpec price_rule;
  std::optional<std::uint64_t> deviation_seed;
};

struct Scenario {
  std::string name;
  int slots = 0;  // T
  int ports = 0;  // N
  std::vector<ScenarioEv> evs;
  MechanismConfig mechanism;
  std::string notes;
};

/// Materializes the scenario's market instance (valuations and supports
/// realized against the bundle universe); validates invariants.
MarketInstance instance_of(const Scenario& scenario);

/// Materializes and validates the scenario's day-ahead state.
DayAheadState day_ahead_of(const Scenario& scenario);

/// Day-ahead bid vectors, present only when every EV carries one.
std::optional<std::vector<Valuation>> day_ahead_bids_of(const Scenario& scenario);

/// The five built-in scenarios reproducing the worked examples:
/// ex1-bb, ex2-incomp, ex3-ce, ex4-order, exB-welfare.
std::vector<Scenario> paper_examples();

/// Built-in scenario by name; throws std::invalid_argument when unknown.
Scenario builtin_scenario(const std::string& name);
std::vector<std::string> builtin_names();

enum class ValuationClass { max_selector, additive };
std::string to_string(ValuationClass c);
std::optional<ValuationClass> parse_valuation_class(const std::string& name);

/// Random desk-scale scenario: per-slot day-ahead and realized values
/// drawn uniformly from [0, 1]; the day-ahead state comes from a VCG
/// auction on the day-ahead draws. With `adversarial` set, realized
/// values are rescaled so day-ahead winners value their endowments low
/// and entrants value bundles high. Deterministic per seed: values are
/// mt19937_64 outputs mapped to doubles via (x >> 11) * 2^-53, drawn as
/// T day-ahead then T realized slot values per EV in input order.
/// Bounds: T <= 6, n_evs <= 6.
Scenario generate_scenario(ValuationClass klass, int slots, int ports,
                           int n_evs, std::uint64_t seed,
                           bool adversarial = false);

struct PaperCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs a built-in scenario against its annotated expected outputs.
std::vector<PaperCheck> paper_example_checks(const Scenario& scenario,
                                             double tol = kDefaultTolerance);

}  // namespace evmkt
