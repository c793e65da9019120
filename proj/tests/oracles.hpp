#pragma once

// Independent reference computations for the tests. Nothing here touches
// the enumeration tables, the convolution or the decompositions under test:
// products are formed element by element and counts by full enumeration.

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "anticonc/group/element.hpp"

namespace oracle {

using anticonc::group::GroupElement;

/// Counts of every signed product over all 2^n sign vectors, keyed by element.
inline std::map<GroupElement, std::uint64_t> brute_signed_products(const std::vector<GroupElement>& seq) {
  std::map<GroupElement, std::uint64_t> counts;
  const std::size_t n = seq.size();
  std::vector<GroupElement> inv;
  for (const auto& a : seq) inv.push_back(a.inverse());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    GroupElement g = GroupElement::identity(seq.front().ambient());
    for (std::size_t i = 0; i < n; ++i) g = g * ((mask >> i) & 1 ? inv[i] : seq[i]);
    ++counts[g];
  }
  return counts;
}

inline std::uint64_t brute_max_count(const std::vector<GroupElement>& seq) {
  std::uint64_t best = 0;
  for (const auto& [g, c] : brute_signed_products(seq)) best = std::max(best, c);
  return best;
}

/// Order by repeated multiplication.
inline std::uint64_t brute_order(const GroupElement& g) {
  GroupElement x = g;
  std::uint64_t k = 1;
  while (!x.is_identity()) {
    x = x * g;
    ++k;
  }
  return k;
}

/// Class sizes by conjugating every element by every element.
inline std::vector<std::size_t> brute_class_sizes(const std::vector<GroupElement>& elements) {
  std::map<GroupElement, std::size_t> owner;
  std::vector<std::size_t> sizes;
  for (const auto& g : elements) {
    if (owner.contains(g)) continue;
    const std::size_t id = sizes.size();
    std::size_t size = 0;
    for (const auto& x : elements) {
      const auto c = x * g * x.inverse();
      if (!owner.contains(c)) {
        owner[c] = id;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Central elements by a full commutation scan.
inline std::size_t brute_center_order(const std::vector<GroupElement>& elements) {
  std::size_t z = 0;
  for (const auto& g : elements) {
    bool central = true;
    for (const auto& x : elements) {
      if (!(g * x == x * g)) {
        central = false;
        break;
      }
    }
    z += central ? 1 : 0;
  }
  return z;
}

/// Row n of Pascal's triangle, built by additions only.
inline std::vector<mpz_class> pascal_row(unsigned n) {
  std::vector<mpz_class> row{1};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<mpz_class> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row.swap(next);
  }
  return row;
}

/// max over b of #{signs : sum ±a_i = b}, by enumeration (n <= ~22).
inline std::uint64_t brute_signed_sum_max(const std::vector<std::int64_t>& a) {
  std::map<std::int64_t, std::uint64_t> counts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (mask >> i) & 1 ? -a[i] : a[i];
    ++counts[s];
  }
  std::uint64_t best = 0;
  for (const auto& [b, c] : counts) best = std::max(best, c);
  return best;
}

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> trial_factor(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Multiplicative order of a mod p by stepping.
inline std::uint64_t mult_order(std::uint64_t a, std::uint64_t p) {
  std::uint64_t x = a % p, k = 1;
  while (x != 1) {
    x = x * a % p;
    ++k;
  }
  return k;
}

}  // namespace oracle
