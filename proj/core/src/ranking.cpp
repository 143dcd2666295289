#include <algorithm>
#include <numeric>

#include "degcorr/error.hpp"
#include "degcorr/measures.hpp"
#include "degcorr/rng.hpp"

namespace degcorr {

namespace {

// Indices sorted by value descending; equal values keep ascending index order.
std::vector<std::size_t> descending_order(std::span<const Degree> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  const Degree lo = *min_it;
  const Degree hi = *max_it;
  if (lo >= 0 && static_cast<std::uint64_t>(hi) <= 4 * static_cast<std::uint64_t>(n) + 1024) {
    // Degrees never exceed |E|: counting sort.
    const auto buckets = static_cast<std::size_t>(hi) + 1;
    std::vector<std::size_t> start(buckets + 1, 0);
    for (Degree v : values) ++start[static_cast<std::size_t>(hi - v) + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    for (std::size_t i = 0; i < n; ++i) order[start[static_cast<std::size_t>(hi - values[i])]++] = i;
    return order;
  }
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return order;
}

}  // namespace

RankVector rank_with_ties(std::span<const Degree> values, TiePolicy policy) {
  if (values.empty()) throw Error(ErrorCode::invalid_argument, "cannot rank an empty sequence");
  const std::size_t n = values.size();
  const std::vector<std::size_t> order = descending_order(values);
  RankVector ranks{std::vector<std::int64_t>(n)};
  Rng rng(policy.seed());
  std::vector<std::int64_t> slots;

  std::size_t lo = 0;
  while (lo < n) {
    std::size_t hi = lo + 1;
    while (hi < n && values[order[hi]] == values[order[lo]]) ++hi;
    // Group occupies ranks lo+1 .. hi.
    switch (policy.kind()) {
      case TiePolicy::Kind::average: {
        const auto twice = static_cast<std::int64_t>(lo + 1 + hi);
        for (std::size_t k = lo; k < hi; ++k) ranks.twice[order[k]] = twice;
        break;
      }
      case TiePolicy::Kind::by_index:
        for (std::size_t k = lo; k < hi; ++k) ranks.twice[order[k]] = 2 * static_cast<std::int64_t>(k + 1);
        break;
      case TiePolicy::Kind::by_reverse_index:
        for (std::size_t k = lo; k < hi; ++k) {
          ranks.twice[order[k]] = 2 * static_cast<std::int64_t>(hi - (k - lo));
        }
        break;
      case TiePolicy::Kind::uniform_random:
        if (hi - lo == 1) {
          ranks.twice[order[lo]] = 2 * static_cast<std::int64_t>(hi);
          break;
        }
        slots.resize(hi - lo);
        for (std::size_t k = 0; k < slots.size(); ++k) slots[k] = 2 * static_cast<std::int64_t>(lo + 1 + k);
        rng.shuffle(std::span<std::int64_t>(slots));
        for (std::size_t k = lo; k < hi; ++k) ranks.twice[order[k]] = slots[k - lo];
        break;
    }
    lo = hi;
  }
  return ranks;
}

}  // namespace degcorr
