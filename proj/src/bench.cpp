#include "gibsum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace gibsum {

namespace {

template <typename F>
double median_seconds(int runs, F&& f) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(runs));
  for (int i = 0; i < runs; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
}

}  // namespace

BenchResult run_bench(const IdentityDescriptor& desc, const SequenceSpec& spec, ShiftedRange r,
                      int runs, bool with_oracle) {
  if (runs < 1) throw std::invalid_argument("run_bench: runs must be >= 1");
  BenchResult result;
  Ratio closed;
  result.closed_seconds = median_seconds(runs, [&] { closed = evaluate_closed(desc, spec, r); });
  result.value = closed.to_string();
  result.digits = static_cast<std::size_t>(
      std::count_if(result.value.begin(), result.value.end(),
                    [](char c) { return c >= '0' && c <= '9'; }));
  result.leading_digits = result.value.substr(0, 20);
  if (with_oracle) {
    Ratio oracle;
    result.oracle_seconds =
        median_seconds(runs, [&] { oracle = evaluate_oracle(desc, spec, r); });
    result.match = oracle == closed;
  }
  return result;
}

}  // namespace gibsum
