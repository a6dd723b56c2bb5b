#ifndef MSYM_CALCULUS_HPP
#define MSYM_CALCULUS_HPP

#include <string>
#include <vector>

#include "msym/multiform.hpp"

namespace msym {

/// Diagonal flat metric, entries +1 or -1.
struct Metric {
  int D = 0;
  std::vector<int> flags;

  static Metric euclidean(int D);
  /// Index 0 is timelike.
  static Metric minkowski(int D);
  /// Throws ValidationError for unknown names.
  static Metric parse(const std::string& name, int D);
  int det_sign() const;
  std::string name() const;
};

/// Slots are 0-based. All operators below are exact.

/// d acting on one slot: d(f dx^I) = sum_nu d_nu f dx^nu ^ dx^I. When the slot
/// is already at degree D the result is zero and *top_degree is set.
MultiForm d_i(const MultiForm& t, int slot, bool* top_degree = nullptr);

/// d_{k-1} o ... o d_0, unprojected.
MultiForm d_composite(const MultiForm& t, int arity, bool* top_degree = nullptr);

/// delta^(k): d on the first k slots, then Young projection onto
/// (p_1+1, ..., p_k+1, p_{k+1}, ..., p_N). Throws ShapeError when that label
/// is not weakly decreasing.
MultiForm delta(const MultiForm& t, int arity, bool* top_degree = nullptr);
MultiForm delta_N(const MultiForm& t, bool* top_degree = nullptr);

/// H^(k) = Pi(d_k ... d_1 B). Rejects ("not meaningful") labels that are not
/// weakly decreasing with ShapeError.
MultiForm cumulative_field_strength(const MultiForm& b, int k);

/// Pi(d_slot B) on a single slot, with the same label check.
MultiForm slot_field_strength(const MultiForm& b, int slot);

/// Hodge star on one slot: *dx^I = (prod_{mu in I} g^{mu mu}) eps(I, I^c) dx^{I^c}.
MultiForm hodge_i(const MultiForm& t, int slot, const Metric& g);
/// Successive stars on the listed slots.
MultiForm hodge_slots(const MultiForm& t, const std::vector<int>& slots, const Metric& g);

/// Sign of the permutation (I, complement of I) of (0, ..., D-1).
int complement_sign(const Block& block, int D);
Block complement(const Block& block, int D);

}  // namespace msym

#endif  // MSYM_CALCULUS_HPP
