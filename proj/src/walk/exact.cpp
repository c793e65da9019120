#include "anticonc/walk/exact.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "anticonc/util/error.hpp"

namespace anticonc::walk {

double DyadicRational::to_double() const {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, numerator.get_mpz_t());
  return std::ldexp(mant, static_cast<int>(exp) - static_cast<int>(denom_exp));
}

bool DyadicRational::at_least_reciprocal(std::uint64_t s) const {
  mpz_class lhs = numerator * mpz_class(std::to_string(s));
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 2, denom_exp);
  return lhs >= rhs;
}

double ExactDistribution::probability(ElementIndex b) const { return DyadicRational{counts.at(b), denom_exp}.to_double(); }

mpz_class ExactDistribution::total() const {
  mpz_class t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

std::vector<ElementIndex> ExactDistribution::support() const {
  std::vector<ElementIndex> s;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) s.push_back(static_cast<ElementIndex>(i));
  }
  return s;
}

namespace {

void check_sequence(const FiniteGroup& group, std::span<const ElementIndex> sequence) {
  if (sequence.empty()) throw Error(Errc::invalid_input, "sequence must be non-empty");
  if (sequence.size() > kMaxSequenceLength) {
    throw Error(Errc::invalid_input, "sequence length exceeds " + std::to_string(kMaxSequenceLength));
  }
  for (ElementIndex a : sequence) {
    if (a >= group.order()) throw Error(Errc::not_in_group, "sequence element index out of range");
    if (a == FiniteGroup::identity()) throw Error(Errc::not_non_trivial, "sequence elements must be non-identity");
  }
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 256) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

/// Runs the convolution, calling `on_step(step, counts, support)` after each
/// step. Each new count is pulled from its two predecessors,
/// D_i(h) = D_{i-1}(h A_i^{-1}) + D_{i-1}(h A_i), which is exactly the push
/// rule D_i(g A_i) += D_{i-1}(g), D_i(g A_i^{-1}) += D_{i-1}(g).
template <typename OnStep>
std::vector<mpz_class> convolve(const FiniteGroup& group, std::span<const ElementIndex> sequence, unsigned threads,
                                OnStep&& on_step) {
  check_sequence(group, sequence);
  const std::size_t n = group.order();
  std::vector<mpz_class> counts(n);
  std::vector<mpz_class> next(n);
  std::vector<std::uint8_t> mark(n, 0);
  std::vector<ElementIndex> support{FiniteGroup::identity()};
  std::vector<ElementIndex> targets;
  counts[FiniteGroup::identity()] = 1;

  for (std::size_t step = 0; step < sequence.size(); ++step) {
    const ElementIndex a = sequence[step];
    const ElementIndex a_inv = group.inverse(a);
    targets.clear();
    for (ElementIndex g : support) {
      for (ElementIndex t : {group.multiply(g, a), group.multiply(g, a_inv)}) {
        if (!mark[t]) {
          mark[t] = 1;
          targets.push_back(t);
        }
      }
    }
    std::sort(targets.begin(), targets.end());
    parallel_for(targets.size(), threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const ElementIndex h = targets[k];
        mpz_add(next[h].get_mpz_t(), counts[group.multiply(h, a_inv)].get_mpz_t(),
                counts[group.multiply(h, a)].get_mpz_t());
      }
    });
    for (ElementIndex g : support) counts[g] = 0;
    for (ElementIndex t : targets) mark[t] = 0;
    counts.swap(next);
    support.swap(targets);
    on_step(step, counts, support);
  }
  return counts;
}

RhoResult max_over(const std::vector<mpz_class>& counts, const std::vector<ElementIndex>& support, unsigned exp) {
  RhoResult r;
  r.denom_exp = exp;
  r.count = 0;
  for (ElementIndex g : support) {
    const int order = cmp(counts[g], r.count);
    if (order > 0) {
      r.count = counts[g];
      r.maximizers.assign(1, g);
    } else if (order == 0) {
      r.maximizers.push_back(g);
    }
  }
  std::sort(r.maximizers.begin(), r.maximizers.end());
  return r;
}

}  // namespace

ExactDistribution exact_distribution(const FiniteGroup& group, std::span<const ElementIndex> sequence,
                                     unsigned threads) {
  ExactDistribution d;
  d.counts = convolve(group, sequence, threads, [](auto, const auto&, const auto&) {});
  d.denom_exp = static_cast<unsigned>(sequence.size());
  return d;
}

ExactDistribution exact_distribution(const FiniteGroup& group, const SignedSequence& sequence, unsigned threads) {
  const auto idx = sequence.resolve(group);
  return exact_distribution(group, idx, threads);
}

SparseDistribution exact_distribution_sparse(const FiniteGroup& group, std::span<const ElementIndex> sequence) {
  check_sequence(group, sequence);
  SparseDistribution d;
  d.counts.emplace(FiniteGroup::identity(), 1);
  for (ElementIndex a : sequence) {
    const ElementIndex a_inv = group.inverse(a);
    std::map<ElementIndex, mpz_class> next;
    for (const auto& [g, c] : d.counts) {
      next[group.multiply(g, a)] += c;
      next[group.multiply(g, a_inv)] += c;
    }
    d.counts.swap(next);
  }
  d.denom_exp = static_cast<unsigned>(sequence.size());
  return d;
}

RhoResult rho_of(const ExactDistribution& dist) {
  return max_over(dist.counts, dist.support(), dist.denom_exp);
}

RhoResult rho_exact(const FiniteGroup& group, std::span<const ElementIndex> sequence, unsigned threads) {
  if (group.order() > kDenseDistributionLimit) {
    const auto sparse = exact_distribution_sparse(group, sequence);
    RhoResult r;
    r.denom_exp = sparse.denom_exp;
    r.count = 0;
    for (const auto& [g, c] : sparse.counts) {
      if (c > r.count) {
        r.count = c;
        r.maximizers.assign(1, g);
      } else if (c == r.count) {
        r.maximizers.push_back(g);
      }
    }
    return r;
  }
  std::vector<ElementIndex> final_support;
  auto counts = convolve(group, sequence, threads, [&](std::size_t step, const auto&, const auto& support) {
    if (step + 1 == sequence.size()) final_support = support;
  });
  return max_over(counts, final_support, static_cast<unsigned>(sequence.size()));
}

RhoResult rho_exact(const FiniteGroup& group, const SignedSequence& sequence, unsigned threads) {
  const auto idx = sequence.resolve(group);
  return rho_exact(group, idx, threads);
}

std::vector<RhoResult> rho_prefix_sweep(const FiniteGroup& group, std::span<const ElementIndex> sequence,
                                        unsigned threads) {
  std::vector<RhoResult> rows;
  convolve(group, sequence, threads, [&](std::size_t step, const auto& counts, const auto& support) {
    rows.push_back(max_over(counts, support, static_cast<unsigned>(step + 1)));
  });
  return rows;
}

}  // namespace anticonc::walk
