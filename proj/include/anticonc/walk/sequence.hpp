#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "anticonc/group/element.hpp"
#include "anticonc/group/finite_group.hpp"

namespace anticonc::walk {

using group::ElementIndex;
using group::FiniteGroup;
using group::GroupElement;

/// The sequence A_1, ..., A_n whose random signed product is studied.
/// Elements must be non-identity and share one ambient group.
class SignedSequence {
 public:
  explicit SignedSequence(std::vector<GroupElement> elements, std::optional<std::int64_t> max_abs_entry = {});

  /// Resolves indices of an enumerated group into elements.
  static SignedSequence from_indices(const FiniteGroup& group, const std::vector<ElementIndex>& indices);

  std::size_t length() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const std::vector<std::uint64_t>& orders() const noexcept { return orders_; }

  /// s: the minimum element order.
  std::uint64_t min_order() const noexcept { return min_order_; }
  /// N(sigma): number of elements whose order is at least sigma.
  std::size_t count_order_at_least(std::uint64_t sigma) const;
  /// K for integer-entry constructions, when supplied.
  std::optional<std::int64_t> max_abs_entry() const noexcept { return max_abs_entry_; }

  SignedSequence reversed() const;

  /// Element indices in `group`; throws NotInGroup for foreign elements.
  std::vector<ElementIndex> resolve(const FiniteGroup& group) const;

 private:
  std::vector<GroupElement> elements_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t min_order_ = 0;
  std::optional<std::int64_t> max_abs_entry_;
};

}  // namespace anticonc::walk
