#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evmkt/bundles.hpp"

namespace evmkt {

/// Default absolute tolerance for all monetary comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

/// One EV's allocation: the 1-based index of its bundle in the universe.
/// Index 1 (the empty bundle) means unallocated.
struct Allocation {
  int bundle_index = kEmptyBundle;

  bool unallocated() const { return bundle_index == kEmptyBundle; }
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// A monetary valuation (or bid) over the bundle universe.
/// values[j-1] is the value of bundle j; values[0] must be 0 and all
/// entries non-negative.
struct Valuation {
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  /// Value of a 1-based bundle index.
  double value(int bundle_index) const { return values[bundle_index - 1]; }
  double value(Allocation x) const { return values[x.bundle_index - 1]; }
};

struct Ev {
  std::string id;
  Valuation valuation;
  /// Optional finite set of possible valuation realizations (V_i).
  std::vector<Valuation> support;
};

struct MarketInstance {
  int slots = 0;  // T
  int ports = 0;  // N
  std::vector<Ev> evs;

  int num_evs() const { return static_cast<int>(evs.size()); }
};

/// Day-ahead outcome carried into the real-time market as an endowment.
struct DayAheadEntry {
  Allocation allocation;
  double payment = 0.0;  // p_i(0), non-negative
};

struct DayAheadState {
  std::vector<DayAheadEntry> entries;  // aligned with instance EV order

  int size() const { return static_cast<int>(entries.size()); }
};

/// Final outcome of a mechanism: real-time allocations, split payments,
/// social welfare and utilities valued at the true valuations.
struct MechanismOutcome {
  std::vector<Allocation> allocation;       // x = x(1)
  std::vector<double> payment_day_ahead;    // p(0)
  std::vector<double> payment_real_time;    // p(1)
  double social_welfare = 0.0;
  std::vector<double> utility;

  double total_payment(std::size_t i) const {
    return payment_day_ahead[i] + payment_real_time[i];
  }
};

/// Quasilinear utility v'x - p.
double utility(const Valuation& v, Allocation x, double payment);

/// True iff the slot-wise load of the profile never exceeds `ports`.
bool is_feasible(const std::vector<Allocation>& profile,
                 const BundleUniverse& universe, int ports);

/// Per-slot load vector of an allocation profile.
std::vector<int> profile_load(const std::vector<Allocation>& profile,
                              const BundleUniverse& universe);

/// Utility guarantee g_i = v_i'x_i(0) - p_i(0).
double guarantee(const Valuation& v, const DayAheadEntry& day_ahead);

/// The capacity vector N*1 of length T.
std::vector<int> uniform_capacity(int slots, int ports);

/// Index of the EV with the given id; throws std::invalid_argument on
/// unknown ids.
std::size_t ev_index(const MarketInstance& instance, std::string_view id);

/// Validates instance invariants (sizes, valuation shape, v_{i,1} = 0,
/// non-negativity, unique ids); throws std::invalid_argument on failure.
void validate_instance(const MarketInstance& instance);

/// Validates a valuation against a universe; `what` names the offender
/// in error messages.
void validate_valuation(const Valuation& v, const BundleUniverse& universe,
                        const std::string& what);

/// Validates a day-ahead state against an instance: aligned size,
/// feasible profile, non-negative payments.
void validate_day_ahead(const DayAheadState& state,
                        const MarketInstance& instance,
                        const BundleUniverse& universe);

/// An all-empty day-ahead state with zero payments.
DayAheadState empty_day_ahead(int num_evs);

}  // namespace evmkt
