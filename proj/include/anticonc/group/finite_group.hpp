#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "anticonc/group/element.hpp"

namespace anticonc::group {

using ElementIndex = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = 4'000'000;
inline constexpr std::size_t kDenseTableLimit = 4096;

/// A fully enumerated finite group. Element 0 is the identity; the remaining
/// elements follow breadth-first discovery order from the generators, each
/// BFS layer sorted by canonical encoding. Immutable after construction.
class FiniteGroup {
 public:
  /// Closure of the generators under right multiplication by generators and
  /// their inverses. Throws CapExceeded once more than `cap` elements appear
  /// and MixedVariants when generators do not share an ambient group.
  static FiniteGroup close(std::span<const GroupElement> generators, std::size_t cap = kDefaultClosureCap);

  std::size_t order() const noexcept { return count_; }
  const Ambient& ambient() const noexcept { return ambient_; }
  std::size_t word_count() const noexcept { return words_per_; }

  std::span<const Word> words(ElementIndex i) const {
    return {words_.data() + static_cast<std::size_t>(i) * words_per_, words_per_};
  }
  GroupElement element(ElementIndex i) const;

  std::optional<ElementIndex> find(std::span<const Word> w) const;
  std::optional<ElementIndex> find(const GroupElement& g) const;
  /// Throws NotInGroup when g is not an element.
  ElementIndex index_of(const GroupElement& g) const;

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return inverses_[a]; }
  static constexpr ElementIndex identity() noexcept { return 0; }

  const std::vector<ElementIndex>& generators() const noexcept { return generators_; }
  bool has_dense_table() const noexcept { return !table_.empty(); }

 private:
  FiniteGroup() = default;

  std::uint64_t hash_words(std::span<const Word> w) const;
  std::size_t probe(std::span<const Word> w) const;  // slot holding w, or the empty slot where it belongs
  void insert_slot(std::size_t slot, ElementIndex idx) { slots_[slot] = idx; }
  void rehash(std::size_t capacity);

  static constexpr ElementIndex kEmpty = 0xFFFFFFFFU;

  Ambient ambient_;
  std::size_t words_per_ = 0;
  std::size_t count_ = 0;
  std::vector<Word> words_;
  std::vector<ElementIndex> slots_;
  std::size_t slot_mask_ = 0;
  std::vector<ElementIndex> inverses_;
  std::vector<ElementIndex> generators_;
  std::vector<ElementIndex> table_;
};

/// Smallest k >= 1 with g^k = 1.
std::uint64_t element_order(const FiniteGroup& group, ElementIndex g);
std::uint64_t element_order(const FiniteGroup& group, const GroupElement& g);

/// g^k at the index level.
ElementIndex power(const FiniteGroup& group, ElementIndex g, std::uint64_t k);

struct ConjugacyClasses {
  std::vector<std::uint32_t> class_of;          // per element
  std::vector<ElementIndex> representatives;    // smallest index in each class
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> offsets;             // members of class c: members[offsets[c] .. offsets[c+1])
  std::vector<ElementIndex> members;

  std::size_t count() const noexcept { return representatives.size(); }
  std::span<const ElementIndex> members_of(std::size_t c) const {
    return {members.data() + offsets[c], offsets[c + 1] - offsets[c]};
  }
};

/// Classes ordered by representative index, so the identity class is first.
ConjugacyClasses conjugacy_classes(const FiniteGroup& group);

struct CenterAndCentralizer {
  std::vector<ElementIndex> center;   // ascending indices
  std::size_t centralizer_order = 0;  // |C_G(g)|
};

CenterAndCentralizer center_and_centralizer(const FiniteGroup& group, const GroupElement& g);
std::vector<ElementIndex> center(const FiniteGroup& group);
std::size_t centralizer_order(const FiniteGroup& group, ElementIndex g);

}  // namespace anticonc::group
