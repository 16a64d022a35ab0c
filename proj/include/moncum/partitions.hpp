#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moncum/rational.hpp"
#include "moncum/sequences.hpp"

namespace moncum {

/// Partition of {1..n} into nonempty blocks. Canonical form: every block
/// sorted ascending, blocks ordered by their minimum element.
class SetPartition {
 public:
  /// Validates disjointness and coverage, then canonicalizes.
  /// Throws MalformedInput otherwise.
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int ground_size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  /// "1,4|2,3"
  std::string to_string() const;
  /// Inverse of to_string for a ground set {1..n} with n = max element.
  static SetPartition parse(std::string_view text);

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  friend class PartitionBuilder;
  SetPartition() = default;

  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// A set partition together with a linear order of its blocks. ranks()[i] is
/// the rank (1 = lowest) of blocks()[i]; {V_1 < V_2 < ...} has rank(V_i) = i.
class OrderedSetPartition {
 public:
  /// Throws MalformedInput unless `ranks` is a permutation of 1..block_count.
  OrderedSetPartition(SetPartition partition, std::vector<int> ranks);

  /// Builds from blocks listed lowest rank first.
  static OrderedSetPartition from_chain(int n, std::vector<std::vector<int>> lowest_first);

  const SetPartition& partition() const { return partition_; }
  const std::vector<int>& ranks() const { return ranks_; }

  /// "1,4|2,3#1,2"
  std::string to_string() const;
  static OrderedSetPartition parse(std::string_view text);

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

 private:
  SetPartition partition_;
  std::vector<int> ranks_;
};

enum class PartitionFamily { All, NonCrossing, Interval, Ordered, Monotone };

std::string_view to_string(PartitionFamily family);
std::optional<PartitionFamily> parse_family(std::string_view text);

/// Largest n each enumerator accepts. The environment variable
/// MONCUM_MAX_PARTITION_N, when set to a positive integer, replaces all three.
struct EnumerationBounds {
  int set_partitions = 12;  // all, non-crossing, interval
  int ordered = 9;
  int monotone = 10;
};

inline constexpr std::string_view kBoundEnvVar = "MONCUM_MAX_PARTITION_N";

EnumerationBounds enumeration_bounds();
int enumeration_bound(PartitionFamily family);
/// Throws Size naming the bound when n is outside [1, bound].
void check_enumeration_bound(PartitionFamily family, int n);

/// Streams every partition of {1..n} in a deterministic order. The reference
/// passed to `visit` is only valid during the call.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> enumerate_partitions(int n);

bool is_noncrossing(const SetPartition& p);
bool is_interval(const SetPartition& p);

/// All block_count()! orderings of the blocks of p.
std::vector<OrderedSetPartition> enumerate_ordered(const SetPartition& p);

/// True iff p is non-crossing and every block nested inside another block
/// ranks strictly higher than it.
bool is_monotone_order(const OrderedSetPartition& q);

/// Monotone partitions of {1..n}, generated by repeatedly choosing the
/// highest remaining block as a run of consecutive remaining elements.
void for_each_monotone(int n, const std::function<void(const OrderedSetPartition&)>& visit);
std::vector<OrderedSetPartition> enumerate_monotone(int n);

/// Drops the highest-ranked block and relabels the remaining elements
/// order-preservingly onto {1..m}. Precondition: at least two blocks.
OrderedSetPartition without_highest_block(const OrderedSetPartition& q);

/// Streams members of a family as canonical text. Ordered and Monotone emit
/// the "#ranks" form.
void for_each_in_family(PartitionFamily family, int n,
                        const std::function<void(const std::string&)>& visit);
std::uint64_t count_family(PartitionFamily family, int n);

/// r(pi) = product over blocks V of r_{|V|}. Truncation error if some block
/// is longer than r.
Rational partition_weight(const SetPartition& p, std::span<const Rational> r);
Rational partition_weight(const SetPartition& p, const CumulantSequence& r);

/// Members of a family with a given block-size multiset.
struct BlockSizeClass {
  std::vector<int> sizes;  // descending
  std::uint64_t count = 0;
};

/// Family members of {1..n} grouped by block sizes, computed by enumeration
/// and cached. Sorted by `sizes`.
const std::vector<BlockSizeClass>& block_size_classes(PartitionFamily family, int n);

}  // namespace moncum
