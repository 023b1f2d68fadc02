#pragma once

// Minimal seeded property checking with greedy shrinking.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace thresholds::testing {

using Rng = std::mt19937_64;

// THRESHOLDS_SEED overrides the default so a failure can be replayed.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("THRESHOLDS_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240611;
}

template <typename T>
struct Gen {
  std::function<T(Rng&)> generate;
  std::function<std::vector<T>(const T&)> shrink = [](const T&) { return std::vector<T>{}; };
  std::function<std::string(const T&)> show;
};

struct PropertyOutcome {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

// Runs prop on `cases` generated values. A failing value (false or an
// exception) is shrunk greedily and reported with the seed.
template <typename T>
PropertyOutcome check_property(const std::string& name, const Gen<T>& gen, const std::function<bool(const T&)>& prop,
                               int cases = 100, std::uint64_t seed = default_seed()) {
  auto fails = [&](const T& x, std::string* why) {
    try {
      if (prop(x)) return false;
      if (why) *why = "property returned false";
      return true;
    } catch (const std::exception& e) {
      if (why) *why = std::string("exception: ") + e.what();
      return true;
    }
  };
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    T value = gen.generate(rng);
    std::string why;
    if (!fails(value, &why)) continue;
    int steps = 0;
    for (bool progress = true; progress && steps < 500;) {
      progress = false;
      for (const T& candidate : gen.shrink(value)) {
        ++steps;
        std::string candidate_why;
        if (fails(candidate, &candidate_why)) {
          value = candidate;
          why = candidate_why;
          progress = true;
          break;
        }
      }
    }
    std::ostringstream msg;
    msg << "property '" << name << "' failed (seed " << seed << ", case " << i << ", " << steps
        << " shrink steps)\n  minimized counterexample: " << gen.show(value) << "\n  " << why;
    return {false, msg.str()};
  }
  return {};
}

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Candidates for a vector of small integers: drop one entry (above min_size),
// then decrement one entry (above floor).
inline std::vector<std::vector<std::uint64_t>> shrink_vector(const std::vector<std::uint64_t>& v, std::size_t min_size,
                                                             std::uint64_t floor) {
  std::vector<std::vector<std::uint64_t>> out;
  if (v.size() > min_size)
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto w = v;
      w.erase(w.begin() + static_cast<long>(i));
      out.push_back(std::move(w));
    }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > floor) {
      auto w = v;
      w[i] = v[i] / 2 >= floor && v[i] / 2 < v[i] - 1 ? v[i] / 2 : v[i] - 1;
      out.push_back(std::move(w));
    }
  return out;
}

inline std::string show_vector(const std::vector<std::uint64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace thresholds::testing
