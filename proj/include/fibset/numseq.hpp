#pragma once

// Integer sequences whose members certify pair-sums.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibset/errors.hpp"

namespace fibset {

enum class SequenceKind { Fibonacci, Lucas, Custom };

inline std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Fibonacci: return "fibonacci";
    case SequenceKind::Lucas: return "lucas";
    case SequenceKind::Custom: return "custom";
  }
  return "?";
}

// Canonical indexing: f_0 = 0, f_1 = 1, f_2 = 1, f_3 = 2, ...
inline std::uint64_t fibonacci(int k) {
  if (k < 0 || k > 93) throw DomainError("fibonacci: index out of range");
  std::uint64_t a = 0, b = 1;
  for (int j = 0; j < k; ++j) {
    a = std::exchange(b, a + b);
  }
  return a;
}

// All Fibonacci values <= limit starting from f_0, with the repeated 1 kept.
inline std::vector<std::uint64_t> fib_upto(std::uint64_t limit) {
  if (limit < 1) throw DomainError("fib_upto: limit must be >= 1");
  std::vector<std::uint64_t> out;
  std::uint64_t a = 0, b = 1;
  while (a <= limit) {
    out.push_back(a);
    if (b > limit) break;
    a = std::exchange(b, a + b);
  }
  return out;
}

/// Admissible pair-sums up to a bound. Immutable once built.
///
/// Membership is answered from a dense table, so queries are O(1); a query
/// above `bound()` throws instead of returning false, because the caller
/// cannot distinguish "not a member" from "never generated".
class SumSequence {
 public:
  static SumSequence fibonacci(std::uint64_t bound) {
    check_bound(bound);
    std::vector<std::uint64_t> m;
    for (auto f : fib_upto(bound)) {
      if (f >= 1) m.push_back(f);
    }
    return SumSequence(SequenceKind::Fibonacci, std::move(m), bound);
  }

  // Lucas numbers L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}.
  static SumSequence lucas(std::uint64_t bound) {
    check_bound(bound);
    std::vector<std::uint64_t> m;
    std::uint64_t a = 2, b = 1;
    while (a <= bound || b <= bound) {
      if (a <= bound) m.push_back(a);
      a = std::exchange(b, a + b);
    }
    return SumSequence(SequenceKind::Lucas, std::move(m), bound);
  }

  // Everything not listed is a non-member up to `bound`.
  static SumSequence custom(std::vector<std::uint64_t> members, std::uint64_t bound) {
    check_bound(bound);
    for (auto x : members) {
      if (x < 1) throw DomainError("custom sequence: members must be positive");
    }
    std::erase_if(members, [bound](std::uint64_t x) { return x > bound; });
    return SumSequence(SequenceKind::Custom, std::move(members), bound);
  }

  // Same kind, regenerated (or for Custom, re-bounded) up to `bound`.
  SumSequence extended(std::uint64_t bound) const {
    switch (kind_) {
      case SequenceKind::Fibonacci: return fibonacci(bound);
      case SequenceKind::Lucas: return lucas(bound);
      case SequenceKind::Custom: return custom(members_, bound);
    }
    return *this;
  }

  bool contains(std::uint64_t x) const {
    if (x < 1) throw DomainError("sum-sequence query must be a positive integer");
    if (x > bound_) {
      throw BoundError("sum-sequence query " + std::to_string(x) + " exceeds bound " +
                       std::to_string(bound_));
    }
    return table_[x] != 0;
  }

  // Throws BoundError unless sums over {1..n} can all be certified.
  void require_ground(int n) const {
    if (n >= 1 && bound_ < 2 * static_cast<std::uint64_t>(n)) {
      throw BoundError("sum-sequence bound " + std::to_string(bound_) +
                       " is below 2n = " + std::to_string(2 * n));
    }
  }

  SequenceKind kind() const { return kind_; }
  std::uint64_t bound() const { return bound_; }
  const std::vector<std::uint64_t>& members() const { return members_; }

 private:
  static constexpr std::uint64_t kMaxBound = std::uint64_t{1} << 26;

  static void check_bound(std::uint64_t bound) {
    if (bound < 1) throw DomainError("sum-sequence bound must be >= 1");
    if (bound > kMaxBound) throw CapacityError("sum-sequence bound too large");
  }

  SumSequence(SequenceKind kind, std::vector<std::uint64_t> members, std::uint64_t bound)
      : kind_(kind), bound_(bound), members_(std::move(members)), table_(bound + 1, 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (auto x : members_) table_[x] = 1;
  }

  SequenceKind kind_;
  std::uint64_t bound_;
  std::vector<std::uint64_t> members_;
  std::vector<std::uint8_t> table_;
};

inline bool is_sum_member(std::uint64_t x, const SumSequence& seq) { return seq.contains(x); }

struct FibIndex {
  int k;
};

// Largest k >= 2 with f_k <= n. At Fibonacci n two k satisfy
// f_k <= n <= f_{k+1}; only the larger one makes the edge-count formula right.
inline FibIndex fib_index(std::uint64_t n) {
  if (n < 1) throw DomainError("fib_index: n must be >= 1");
  int k = 2;
  while (fibonacci(k + 1) <= n) ++k;
  return {k};
}

/// Number of edges of the Fibonacci-sum graph on {1..n} from the closed form
///
///   n + (f_k+1)/2 - floor(4(k+1)/3)/2                          if 2n <= f_{k+2}
///   2n + (f_k+1)/2 - floor(4(k+1)/3)/2 - ceil((f_{k+2}-1)/2)   otherwise
///
/// with k = fib_index(n). Evaluated in doubled integer arithmetic; an odd or
/// negative doubled value means the indexing is wrong.
inline std::uint64_t closed_form_edge_count(std::uint64_t n) {
  const int k = fib_index(n).k;
  const auto fk = static_cast<std::int64_t>(fibonacci(k));
  const auto fk2 = static_cast<std::int64_t>(fibonacci(k + 2));
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t floor_term = (4 * (k + 1)) / 3;
  std::int64_t twice = 0;
  if (2 * nn <= fk2) {
    twice = 2 * nn + (fk + 1) - floor_term;
  } else {
    const std::int64_t ceil_term = fk2 / 2;  // ceil((f-1)/2) == floor(f/2)
    twice = 4 * nn + (fk + 1) - floor_term - 2 * ceil_term;
  }
  if (twice < 0 || twice % 2 != 0) {
    throw ConsistencyError("closed_form_edge_count: non-integral value at n=" +
                           std::to_string(n));
  }
  return static_cast<std::uint64_t>(twice / 2);
}

}  // namespace fibset
