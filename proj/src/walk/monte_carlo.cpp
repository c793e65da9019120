#include "anticonc/walk/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "anticonc/util/error.hpp"

namespace anticonc::walk {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

std::uint64_t sign_word(std::uint64_t seed, std::uint64_t sample, std::uint64_t block) {
  return splitmix64(splitmix64(seed ^ splitmix64(sample)) + block);
}

struct WordsHash {
  std::size_t operator()(const std::vector<group::Word>& w) const noexcept {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (auto x : w) h = splitmix64(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

using CountMap = std::unordered_map<std::vector<group::Word>, std::uint64_t, WordsHash>;

}  // namespace

bool sample_sign(std::uint64_t seed, std::uint64_t sample, std::size_t step) {
  return ((sign_word(seed, sample, step / 64) >> (step % 64)) & 1U) != 0;
}

MonteCarloResult rho_monte_carlo(const SignedSequence& sequence, std::uint64_t samples, std::uint64_t seed,
                                 unsigned threads, std::size_t distinct_cap) {
  if (samples == 0) throw Error(Errc::invalid_input, "samples must be >= 1");
  const auto& amb = sequence.elements().front().ambient();
  const std::size_t wc = amb.word_count();
  const std::size_t n = sequence.length();
  std::vector<std::vector<group::Word>> forward;
  std::vector<std::vector<group::Word>> backward;
  for (const auto& g : sequence.elements()) {
    forward.emplace_back(g.words().begin(), g.words().end());
    const auto inv = g.inverse();
    backward.emplace_back(inv.words().begin(), inv.words().end());
  }

  const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, samples));
  std::vector<CountMap> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      const std::uint64_t chunk = (samples + workers - 1) / workers;
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(samples, begin + chunk);
      std::vector<group::Word> x(wc), tmp(wc);
      auto& local = partial[w];
      for (std::uint64_t k = begin; k < end; ++k) {
        amb.identity(x);
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i % 64 == 0) bits = sign_word(seed, k, i / 64);
          const auto& factor = ((bits >> (i % 64)) & 1U) ? backward[i] : forward[i];
          amb.multiply(x, factor, tmp);
          x.swap(tmp);
        }
        ++local[x];
        if (local.size() > distinct_cap) throw Error(Errc::cap_exceeded, "distinct product cap exceeded");
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CountMap merged = std::move(partial[0]);
  for (unsigned w = 1; w < workers; ++w) {
    for (auto& [key, c] : partial[w]) merged[key] += c;
  }
  if (merged.size() > distinct_cap) throw Error(Errc::cap_exceeded, "distinct product cap exceeded");

  MonteCarloResult r;
  r.samples = samples;
  r.distinct_products = merged.size();
  for (const auto& [key, c] : merged) {
    if (c > r.max_count || (c == r.max_count && key < r.argmax_encoding)) {
      r.max_count = c;
      r.argmax_encoding = key;
    }
  }
  r.plug_in_max_frequency = static_cast<double>(r.max_count) / static_cast<double>(samples);
  const double p = r.plug_in_max_frequency;
  r.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return r;
}

}  // namespace anticonc::walk
