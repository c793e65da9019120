#include "anticonc/walk/sequence.hpp"

#include <algorithm>

#include "anticonc/util/error.hpp"

namespace anticonc::walk {

SignedSequence::SignedSequence(std::vector<GroupElement> elements, std::optional<std::int64_t> max_abs_entry)
    : elements_(std::move(elements)), max_abs_entry_(max_abs_entry) {
  if (elements_.empty()) throw Error(Errc::invalid_input, "sequence must contain at least one element");
  const auto& amb = elements_.front().ambient();
  orders_.reserve(elements_.size());
  for (const auto& g : elements_) {
    if (!(g.ambient() == amb)) throw Error(Errc::mixed_variants, "sequence elements live in different groups");
    if (g.is_identity()) throw Error(Errc::not_non_trivial, "sequence elements must be non-identity");
    orders_.push_back(group::raw_order(g));
  }
  min_order_ = *std::min_element(orders_.begin(), orders_.end());
}

SignedSequence SignedSequence::from_indices(const FiniteGroup& group, const std::vector<ElementIndex>& indices) {
  std::vector<GroupElement> els;
  els.reserve(indices.size());
  for (ElementIndex i : indices) {
    if (i >= group.order()) throw Error(Errc::not_in_group, "element index out of range");
    els.push_back(group.element(i));
  }
  return SignedSequence(std::move(els));
}

std::size_t SignedSequence::count_order_at_least(std::uint64_t sigma) const {
  return static_cast<std::size_t>(std::count_if(orders_.begin(), orders_.end(), [&](auto k) { return k >= sigma; }));
}

SignedSequence SignedSequence::reversed() const {
  std::vector<GroupElement> rev(elements_.rbegin(), elements_.rend());
  return SignedSequence(std::move(rev), max_abs_entry_);
}

std::vector<ElementIndex> SignedSequence::resolve(const FiniteGroup& group) const {
  std::vector<ElementIndex> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(group.index_of(g));
  return out;
}

}  // namespace anticonc::walk
