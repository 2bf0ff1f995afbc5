#pragma once

// Implicit sorted arrays whose union contains every candidate value of the
// line-constrained problem. Indices j, t, k, a, b are 1-based as in the
// definitions: lambda(i, j, k) = x_j - (a_k + 2r(j - i) + r).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mbc/core.hpp"
#include "mbc/search.hpp"

namespace mbc {

double lambda1_value(std::size_t i, std::size_t j, std::size_t k, const Instance& inst);

// A run k1..k2 of consecutive barrier indices.
struct CandidateGroup {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  // Barrier indices of the group ordered by the first element of B[j, k].
  std::vector<std::size_t> sigma;
  // (a_{k2} - a_k) mod 2r for k = sigma[s]; offset of B[j, k] over lambda(1, j, k2).
  std::vector<double> offsets;
  std::int64_t alpha_n = 0;  // lists per barrier at j = n
  std::int64_t beta_n = 0;   // prefix count of elements at j = n
  std::int64_t delta = 0;    // prefix count of barrier indices

  std::size_t size() const { return k2 - k1 + 1; }
};

enum class CandidateSide { kLeft, kRight };

// B[1..n] for one side. Groups are stored in increasing order of their
// values, which is decreasing order of barrier index.
struct Lambda1Arrays {
  CandidateSide side = CandidateSide::kLeft;
  double r = 1;
  std::vector<double> xs;  // sensor x in the construction frame, sorted
  std::vector<double> as;  // barrier left ends in the construction frame
  std::vector<CandidateGroup> groups;

  std::size_t n() const { return xs.size(); }
  std::int64_t alpha(std::size_t g, std::size_t j) const;
  std::int64_t beta(std::size_t g, std::size_t j) const;
  std::int64_t length(std::size_t j) const;
  // lambda(1, j, k2) of group g.
  double group_min(std::size_t g, std::size_t j) const;
  // t-th smallest element of B[j], 1 <= t <= length(j). O(log m).
  double eval(std::size_t j, std::int64_t t) const;
};

// Groups at j = n, per-group permutation and prefix sums. O(m log m).
Lambda1Arrays build_lambda1_arrays(const Instance& inst);
// Same from raw sorted coordinates; used for the mirrored side.
Lambda1Arrays build_lambda1_arrays(std::span<const double> xs, std::span<const double> as, double r,
                                   CandidateSide side = CandidateSide::kLeft);

double eval_B(std::size_t j, std::int64_t t, const Lambda1Arrays& arrays);

// Arrays of the right-aligned candidates b_k - r - 2r(j - i) - x_i, built on
// the reflection x -> -x.
Lambda1Arrays mirror_lambda2(const Instance& inst);

// n arrays over z_i = x_i - 2r i sorted ascending: A_a[b] = (Z[a] - Z[n+1-b]) / 2.
struct Lambda3Arrays {
  std::vector<double> z;  // sorted

  std::size_t n() const { return z.size(); }
  double eval(std::size_t a, std::size_t b) const { return (z[a - 1] - z[n() - b]) / 2; }
};

Lambda3Arrays lambda3_arrays(const Instance& inst);

// Search handles with negative values clamped to 0.
std::vector<SortedArrayHandle> handles(const Lambda1Arrays& arrays);
std::vector<SortedArrayHandle> handles(const Lambda3Arrays& arrays);

struct CandidateValue {
  enum class Source { kLambda1, kLambda2, kLambda3 };
  double value = 0;
  Source source = Source::kLambda1;
  std::size_t p = 0;   // j for Lambda1/2, a for Lambda3
  std::int64_t q = 0;  // t for Lambda1/2, b for Lambda3
};

// Every element of every array, unclamped; throws TooLarge beyond max_size.
std::vector<CandidateValue> materialize(const Lambda1Arrays& arrays, std::size_t max_size);
std::vector<CandidateValue> materialize(const Lambda3Arrays& arrays, std::size_t max_size);

}  // namespace mbc
