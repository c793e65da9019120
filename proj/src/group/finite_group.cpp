#include "anticonc/group/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "anticonc/util/error.hpp"

namespace anticonc::group {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30U;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27U;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31U;
  return x;
}

}  // namespace

std::uint64_t FiniteGroup::hash_words(std::span<const Word> w) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (Word x : w) h = mix64(h ^ x) + 0x9e3779b97f4a7c15ULL;
  return h;
}

std::size_t FiniteGroup::probe(std::span<const Word> w) const {
  std::size_t h = hash_words(w) & slot_mask_;
  while (true) {
    const ElementIndex idx = slots_[h];
    if (idx == kEmpty) return h;
    const auto stored = words(idx);
    if (std::equal(stored.begin(), stored.end(), w.begin())) return h;
    h = (h + 1) & slot_mask_;
  }
}

void FiniteGroup::rehash(std::size_t capacity) {
  slots_.assign(capacity, kEmpty);
  slot_mask_ = capacity - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    slots_[probe(words(static_cast<ElementIndex>(i)))] = static_cast<ElementIndex>(i);
  }
}

FiniteGroup FiniteGroup::close(std::span<const GroupElement> generators, std::size_t cap) {
  if (generators.empty()) throw Error(Errc::invalid_input, "closure needs at least one generator");
  if (cap == 0) throw Error(Errc::invalid_input, "closure cap must be positive");
  FiniteGroup g;
  g.ambient_ = generators.front().ambient();
  for (const auto& gen : generators) {
    if (!(gen.ambient() == g.ambient_)) throw Error(Errc::mixed_variants, "generators do not share an ambient group");
  }
  const std::size_t wc = g.ambient_.word_count();
  g.words_per_ = wc;
  g.rehash(1024);

  std::vector<Word> buf(wc);
  g.ambient_.identity(buf);
  g.words_.insert(g.words_.end(), buf.begin(), buf.end());
  g.count_ = 1;
  g.slots_[g.probe(buf)] = 0;

  std::vector<std::vector<Word>> multipliers;
  for (const auto& gen : generators) {
    multipliers.emplace_back(gen.words().begin(), gen.words().end());
    const GroupElement inv = gen.inverse();
    multipliers.emplace_back(inv.words().begin(), inv.words().end());
  }

  std::vector<Word> current(wc);
  std::size_t layer_begin = 0;
  std::size_t layer_end = 1;
  while (layer_begin < layer_end) {
    const std::size_t new_begin = g.count_;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const auto src = g.words(static_cast<ElementIndex>(i));
      std::copy(src.begin(), src.end(), current.begin());
      for (const auto& s : multipliers) {
        g.ambient_.multiply(current, s, buf);
        const std::size_t slot = g.probe(buf);
        if (g.slots_[slot] != kEmpty) continue;
        if (g.count_ >= cap) {
          throw Error(Errc::cap_exceeded, "group closure exceeds cap of " + std::to_string(cap) + " elements");
        }
        g.words_.insert(g.words_.end(), buf.begin(), buf.end());
        g.slots_[slot] = static_cast<ElementIndex>(g.count_);
        ++g.count_;
        if (2 * g.count_ > g.slots_.size()) g.rehash(2 * g.slots_.size());
      }
    }
    // sort the freshly discovered layer by canonical encoding
    const std::size_t block = g.count_ - new_begin;
    if (block > 1) {
      std::vector<ElementIndex> order(block);
      std::iota(order.begin(), order.end(), static_cast<ElementIndex>(new_begin));
      std::sort(order.begin(), order.end(), [&](ElementIndex a, ElementIndex b) {
        const auto wa = g.words(a);
        const auto wb = g.words(b);
        return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
      });
      std::vector<std::size_t> slot_of(block);
      for (std::size_t k = 0; k < block; ++k) {
        slot_of[k] = g.probe(g.words(static_cast<ElementIndex>(new_begin + k)));
      }
      std::vector<Word> sorted(block * wc);
      for (std::size_t k = 0; k < block; ++k) {
        const auto w = g.words(order[k]);
        std::copy(w.begin(), w.end(), sorted.begin() + static_cast<std::ptrdiff_t>(k * wc));
      }
      for (std::size_t k = 0; k < block; ++k) {
        g.slots_[slot_of[order[k] - new_begin]] = static_cast<ElementIndex>(new_begin + k);
      }
      std::copy(sorted.begin(), sorted.end(), g.words_.begin() + static_cast<std::ptrdiff_t>(new_begin * wc));
    }
    layer_begin = layer_end;
    layer_end = g.count_;
  }
  g.words_.shrink_to_fit();

  g.inverses_.resize(g.count_);
  for (std::size_t i = 0; i < g.count_; ++i) {
    g.ambient_.inverse(g.words(static_cast<ElementIndex>(i)), buf);
    g.inverses_[i] = g.slots_[g.probe(buf)];
  }
  for (const auto& gen : generators) g.generators_.push_back(g.slots_[g.probe(gen.words())]);

  if (g.count_ <= kDenseTableLimit) {
    const std::size_t n = g.count_;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        g.ambient_.multiply(g.words(static_cast<ElementIndex>(a)), g.words(static_cast<ElementIndex>(b)), buf);
        g.table_[a * n + b] = g.slots_[g.probe(buf)];
      }
    }
  }
  return g;
}

GroupElement FiniteGroup::element(ElementIndex i) const {
  const auto w = words(i);
  return GroupElement(ambient_, std::vector<Word>(w.begin(), w.end()));
}

std::optional<ElementIndex> FiniteGroup::find(std::span<const Word> w) const {
  if (w.size() != words_per_) return std::nullopt;
  const ElementIndex idx = slots_[probe(w)];
  if (idx == kEmpty) return std::nullopt;
  return idx;
}

std::optional<ElementIndex> FiniteGroup::find(const GroupElement& g) const {
  if (!(g.ambient() == ambient_)) return std::nullopt;
  return find(g.words());
}

ElementIndex FiniteGroup::index_of(const GroupElement& g) const {
  const auto idx = find(g);
  if (!idx) throw Error(Errc::not_in_group, "element is not in the group");
  return *idx;
}

ElementIndex FiniteGroup::multiply(ElementIndex a, ElementIndex b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * count_ + b];
  thread_local std::vector<Word> buf;
  buf.resize(words_per_);
  ambient_.multiply(words(a), words(b), buf);
  return slots_[probe(buf)];
}

std::uint64_t element_order(const FiniteGroup& group, ElementIndex g) {
  std::uint64_t k = 1;
  ElementIndex x = g;
  while (x != FiniteGroup::identity()) {
    x = group.multiply(x, g);
    ++k;
  }
  return k;
}

std::uint64_t element_order(const FiniteGroup& group, const GroupElement& g) {
  return element_order(group, group.index_of(g));
}

ElementIndex power(const FiniteGroup& group, ElementIndex g, std::uint64_t k) {
  ElementIndex result = FiniteGroup::identity();
  ElementIndex base = g;
  while (k > 0) {
    if (k & 1U) result = group.multiply(result, base);
    base = group.multiply(base, base);
    k >>= 1U;
  }
  return result;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& group) {
  constexpr std::uint32_t kUnset = 0xFFFFFFFFU;
  const std::size_t n = group.order();
  ConjugacyClasses cc;
  cc.class_of.assign(n, kUnset);
  std::vector<ElementIndex> orbit;
  std::vector<std::vector<ElementIndex>> lists;
  for (std::size_t start = 0; start < n; ++start) {
    if (cc.class_of[start] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(cc.representatives.size());
    cc.representatives.push_back(static_cast<ElementIndex>(start));
    orbit.assign(1, static_cast<ElementIndex>(start));
    cc.class_of[start] = c;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const ElementIndex x = orbit[head];
      for (ElementIndex s : group.generators()) {
        // s^-1 x s; conjugating by every generator reaches the whole class
        const ElementIndex y = group.multiply(group.multiply(group.inverse(s), x), s);
        if (cc.class_of[y] == kUnset) {
          cc.class_of[y] = c;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lists.push_back(orbit);
  }
  cc.offsets.push_back(0);
  for (const auto& l : lists) {
    cc.sizes.push_back(l.size());
    cc.members.insert(cc.members.end(), l.begin(), l.end());
    cc.offsets.push_back(cc.members.size());
  }
  return cc;
}

std::vector<ElementIndex> center(const FiniteGroup& group) {
  std::vector<ElementIndex> z;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto x = static_cast<ElementIndex>(i);
    bool central = true;
    for (ElementIndex s : group.generators()) {
      if (group.multiply(x, s) != group.multiply(s, x)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return z;
}

std::size_t centralizer_order(const FiniteGroup& group, ElementIndex g) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < group.order(); ++i) {
    const auto x = static_cast<ElementIndex>(i);
    if (group.multiply(x, g) == group.multiply(g, x)) ++count;
  }
  return count;
}

CenterAndCentralizer center_and_centralizer(const FiniteGroup& group, const GroupElement& g) {
  const ElementIndex gi = group.index_of(g);
  return {center(group), centralizer_order(group, gi)};
}

}  // namespace anticonc::group
