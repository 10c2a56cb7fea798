#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "partzeta/series.hpp"

namespace pz {

/// Nonincreasing list of positive parts.
struct Partition {
  std::vector<unsigned long> parts;

  unsigned long size() const;
  std::size_t length() const { return parts.size(); }
  /// Product of the parts; 1 for the empty partition.
  BigInt norm() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Set M of admissible parts.
///
/// A class (a, m) stands for {a + m j : j >= 1}. Members are the union of all
/// classes and explicit parts; with neither present every positive integer is
/// a member. `min_part` filters everything. Part 1, when a member, may occur
/// at most `max_ones` times (unbounded when unset), and at most once under
/// `distinct`.
///
/// Text form: terms joined by '|', each one of `a+mN` (optionally written
/// `a+mN:a+mN`), `mN`, `N`, `finite:{p,q,...}`, `geq:b`, `ones:k`, `distinct`.
class PartSet {
 public:
  std::vector<std::pair<unsigned long, unsigned long>> classes;
  std::set<unsigned long> explicit_parts;
  unsigned long min_part = 1;
  bool distinct = false;
  std::optional<unsigned long> max_ones;

  static PartSet parse(const std::string& text);
  static PartSet congruence(unsigned long a, unsigned long m);
  std::string to_string() const;

  bool contains(unsigned long n) const;
  /// Part 1 is a member with unbounded multiplicity.
  bool divergent() const;
  /// How many copies of part 1 a partition may hold (0 if 1 is not a member).
  unsigned long ones_limit() const;

  /// Period L of membership beyond `periodic_start()`.
  unsigned long period() const;
  /// Every n >= this value satisfies contains(n) == contains(n + period()).
  unsigned long periodic_start() const;
  /// Disjoint decomposition of the members >= start into progressions
  /// {r + L j : j >= 0}, returned as the list of first terms r in [start, start + L).
  std::vector<unsigned long> progression_heads(unsigned long start) const;

  std::vector<unsigned long> members_upto(unsigned long bound) const;
  bool empty_set() const;
};

/// Partitions of n with parts in `constraints` (and exactly `length` parts if
/// given), in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(unsigned long n, const PartSet& constraints = {},
                                            std::optional<std::size_t> length = std::nullopt);

/// c_n = sum over partitions of n of prod f(part), through q^T. Computed from
/// the product prod (1 - f(n) q^n)^(-1) and by direct enumeration; a mismatch
/// throws InternalDefect.
TruncatedSeries<Rational> product_sum_expand(const std::function<Rational(unsigned long)>& f, unsigned order);

struct BruteZeta {
  HPReal value;
  std::string truncation_note;
};

/// Sum of norm^(-s) over partitions with parts <= part_bound satisfying the
/// constraints and at most `length_bound` parts different from 1 (copies of
/// part 1 do not change the norm and are counted separately). All summands
/// are positive, so the result is a lower bound for the zeta value.
BruteZeta brute_zeta(const PartSet& constraints, const HPReal& s, unsigned long part_bound, unsigned long length_bound);

/// Number of multisets from M with product n.
BigInt multiplicative_partition_count(unsigned long n, const PartSet& constraints);

/// Dirichlet coefficients a_1..a_X of prod_{j in M, j<=X} (1 - w(j) j^(-s))^(-1)
/// (or prod (1 + w(j) j^(-s)) for distinct parts); index 0 unused.
std::vector<HPReal> weighted_multiplicative_coefficients(const PartSet& constraints, unsigned long bound,
                                                         const std::function<HPReal(unsigned long)>& weight);

}  // namespace pz
