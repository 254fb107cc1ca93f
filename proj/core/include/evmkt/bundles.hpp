#pragma once

#include <vector>

namespace evmkt {

/// A charging session: a run of consecutive slots on one port.
/// `duration == 0` is the empty bundle "()"; otherwise slots
/// `start, start+1, ..., start+duration-1` (slots are 1-based).
struct Bundle {
  int start = 0;
  int duration = 0;

  bool empty() const { return duration == 0; }
  int last() const { return start + duration - 1; }
  bool contains(int slot) const {
    return duration > 0 && slot >= start && slot <= last();
  }
  friend bool operator==(const Bundle&, const Bundle&) = default;
};

/// The ordered set of all bundles over T slots, |universe| = 1 + T(T+1)/2.
///
/// Bundle indices are 1-based; index 1 is the empty bundle. Non-empty
/// bundles are listed duration-major, start-ascending:
///   (), (1), (2), ..., (T), (1,2), (2,3), ..., (1,...,T).
class BundleUniverse {
 public:
  explicit BundleUniverse(int slot_count);

  int slot_count() const { return slots_; }
  int size() const { return static_cast<int>(bundles_.size()); }

  /// Bundle at a 1-based index; throws std::out_of_range when invalid.
  const Bundle& bundle(int index) const;

  /// 1-based index of a bundle; throws std::invalid_argument when the
  /// bundle does not fit in [1, T].
  int index_of(const Bundle& b) const;

  const std::vector<Bundle>& bundles() const { return bundles_; }

  static int universe_size(int slot_count) {
    return 1 + slot_count * (slot_count + 1) / 2;
  }

 private:
  int slots_;
  std::vector<Bundle> bundles_;
};

/// Universe index of the empty bundle (not being allocated).
inline constexpr int kEmptyBundle = 1;

/// Builds the canonical bundle universe for T slots; T must be >= 1.
BundleUniverse enumerate_bundles(int slot_count);

/// Converts a bundle to its slot occupancy vector of length T
/// (entry t-1 is 1 iff slot t is covered).
std::vector<int> slot_vector(const Bundle& b, int slot_count);

}  // namespace evmkt
