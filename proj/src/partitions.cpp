#include "moncum/partitions.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "moncum/error.hpp"

namespace moncum {

// Grants the enumerators unchecked, in-place access to SetPartition.
class PartitionBuilder {
 public:
  explicit PartitionBuilder(int n) { p_.n_ = n; }

  std::vector<std::vector<int>>& blocks() { return p_.blocks_; }
  const SetPartition& get() const { return p_; }

  static SetPartition adopt(int n, std::vector<std::vector<int>> blocks) {
    SetPartition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    return p;
  }

 private:
  SetPartition p_;
};

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::MalformedInput, "bad integer list: \"" + std::string(text) + "\"");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// Canonical (min-sorted) blocks plus ranks, from a lowest-first chain.
std::pair<std::vector<std::vector<int>>, std::vector<int>> canonicalize_chain(
    std::vector<std::vector<int>> lowest_first) {
  std::vector<std::size_t> idx(lowest_first.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (auto& b : lowest_first) std::sort(b.begin(), b.end());
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return lowest_first[a].front() < lowest_first[b].front();
  });
  std::vector<std::vector<int>> blocks;
  std::vector<int> ranks;
  blocks.reserve(idx.size());
  ranks.reserve(idx.size());
  for (std::size_t i : idx) {
    blocks.push_back(std::move(lowest_first[i]));
    ranks.push_back(static_cast<int>(i) + 1);
  }
  return {std::move(blocks), std::move(ranks)};
}

// V nested strictly inside W (spans; meaningful for non-crossing partitions).
bool nested_inside(const std::vector<int>& v, const std::vector<int>& w) {
  return w.front() < v.front() && v.back() < w.back();
}

void partitions_rec(int next, int n, PartitionBuilder& builder,
                    const std::function<void(const SetPartition&)>& visit) {
  if (next > n) {
    visit(builder.get());
    return;
  }
  auto& blocks = builder.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(next);
    partitions_rec(next + 1, n, builder, visit);
    builder.blocks()[b].pop_back();
  }
  blocks.push_back({next});
  partitions_rec(next + 1, n, builder, visit);
  builder.blocks().pop_back();
}

constexpr int kMaxGround = 31;

// Peeling enumeration of monotone partitions. `remaining` holds the not yet
// assigned elements in increasing order; the chosen highest block must be a
// run of consecutive entries of `remaining`. Blocks are reported top-down.
struct MonotonePeeler {
  using Visit = std::function<void(const std::vector<std::vector<int>>& top_down)>;

  void run(const std::array<int, kMaxGround>& remaining, int count) {
    if (count == 0) {
      visit(chosen);
      return;
    }
    for (int start = 0; start < count; ++start) {
      for (int len = 1; start + len <= count; ++len) {
        std::vector<int> block(remaining.begin() + start, remaining.begin() + start + len);
        std::array<int, kMaxGround> rest{};
        int r = 0;
        for (int i = 0; i < count; ++i) {
          if (i < start || i >= start + len) rest[r++] = remaining[i];
        }
        chosen.push_back(std::move(block));
        run(rest, r);
        chosen.pop_back();
      }
    }
  }

  Visit visit;
  std::vector<std::vector<int>> chosen;
};

void peel_monotone(int n, const MonotonePeeler::Visit& visit) {
  MonotonePeeler peeler{visit, {}};
  std::array<int, kMaxGround> all{};
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  peeler.run(all, n);
}

int env_bound() {
  const char* raw = std::getenv(std::string(kBoundEnvVar).c_str());
  if (raw == nullptr) return 0;
  int value = 0;
  const std::string_view s(raw);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value <= 0) return 0;
  return std::min(value, kMaxGround - 1);
}

std::vector<int> sizes_desc(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace

// ---------------------------------------------------------------------------
// SetPartition / OrderedSetPartition

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw Error(ErrorCode::MalformedInput, "ground set size must be >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw Error(ErrorCode::MalformedInput, "empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n) {
        throw Error(ErrorCode::MalformedInput,
                    "element " + std::to_string(x) + " outside {1.." + std::to_string(n) + "}");
      }
      if (seen[x]) {
        throw Error(ErrorCode::MalformedInput, "element " + std::to_string(x) + " repeated");
      }
      seen[x] = 1;
      ++covered;
    }
  }
  if (covered != n) throw Error(ErrorCode::MalformedInput, "blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::string SetPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    out += join_ints(blocks_[i]);
  }
  return out;
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  int n = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t bar = std::min(text.find('|', pos), text.size());
    blocks.push_back(parse_int_list(text.substr(pos, bar - pos)));
    for (int x : blocks.back()) n = std::max(n, x);
    pos = bar + 1;
  }
  return SetPartition(n, std::move(blocks));
}

OrderedSetPartition::OrderedSetPartition(SetPartition partition, std::vector<int> ranks)
    : partition_(std::move(partition)), ranks_(std::move(ranks)) {
  const std::size_t k = partition_.block_count();
  std::vector<int> sorted = ranks_;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == k;
  for (std::size_t i = 0; ok && i < k; ++i) ok = sorted[i] == static_cast<int>(i) + 1;
  if (!ok) {
    throw Error(ErrorCode::MalformedInput, "ranks must be a permutation of 1.." +
                                               std::to_string(k));
  }
}

OrderedSetPartition OrderedSetPartition::from_chain(
    int n, std::vector<std::vector<int>> lowest_first) {
  const std::size_t k = lowest_first.size();
  for (auto& b : lowest_first) std::sort(b.begin(), b.end());
  for (const auto& b : lowest_first) {
    if (b.empty()) throw Error(ErrorCode::MalformedInput, "empty block");
  }
  auto [blocks, ranks] = canonicalize_chain(std::move(lowest_first));
  SetPartition p(n, std::move(blocks));
  if (p.block_count() != k) throw Error(ErrorCode::MalformedInput, "bad chain");
  return OrderedSetPartition(std::move(p), std::move(ranks));
}

std::string OrderedSetPartition::to_string() const {
  return partition_.to_string() + '#' + join_ints(ranks_);
}

OrderedSetPartition OrderedSetPartition::parse(std::string_view text) {
  const std::size_t hash = text.find('#');
  if (hash == std::string_view::npos) {
    throw Error(ErrorCode::MalformedInput, "ordered partition needs '#ranks'");
  }
  const std::string_view block_text = text.substr(0, hash);
  std::vector<std::vector<int>> blocks;
  int n = 0;
  std::size_t pos = 0;
  while (pos <= block_text.size()) {
    const std::size_t bar = std::min(block_text.find('|', pos), block_text.size());
    blocks.push_back(parse_int_list(block_text.substr(pos, bar - pos)));
    for (int x : blocks.back()) n = std::max(n, x);
    pos = bar + 1;
  }
  const std::vector<int> ranks = parse_int_list(text.substr(hash + 1));
  if (ranks.size() != blocks.size()) {
    throw Error(ErrorCode::MalformedInput, "one rank per block required");
  }
  // Ranks follow the blocks as written, which need not be canonical.
  std::vector<std::vector<int>> lowest_first(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (ranks[b] < 1 || ranks[b] > static_cast<int>(blocks.size()) ||
        !lowest_first[ranks[b] - 1].empty()) {
      throw Error(ErrorCode::MalformedInput, "ranks must be a permutation of 1.." +
                                                 std::to_string(blocks.size()));
    }
    lowest_first[ranks[b] - 1] = std::move(blocks[b]);
  }
  return from_chain(n, std::move(lowest_first));
}

// ---------------------------------------------------------------------------
// families and bounds

std::string_view to_string(PartitionFamily family) {
  switch (family) {
    case PartitionFamily::All: return "all";
    case PartitionFamily::NonCrossing: return "noncrossing";
    case PartitionFamily::Interval: return "interval";
    case PartitionFamily::Ordered: return "ordered";
    case PartitionFamily::Monotone: return "monotone";
  }
  return "unknown";
}

std::optional<PartitionFamily> parse_family(std::string_view text) {
  for (auto f : {PartitionFamily::All, PartitionFamily::NonCrossing, PartitionFamily::Interval,
                 PartitionFamily::Ordered, PartitionFamily::Monotone}) {
    if (text == to_string(f)) return f;
  }
  return std::nullopt;
}

EnumerationBounds enumeration_bounds() {
  EnumerationBounds bounds;
  if (const int override_n = env_bound(); override_n > 0) {
    bounds.set_partitions = bounds.ordered = bounds.monotone = override_n;
  }
  return bounds;
}

int enumeration_bound(PartitionFamily family) {
  const EnumerationBounds b = enumeration_bounds();
  switch (family) {
    case PartitionFamily::Ordered: return b.ordered;
    case PartitionFamily::Monotone: return b.monotone;
    default: return b.set_partitions;
  }
}

void check_enumeration_bound(PartitionFamily family, int n) {
  const int bound = enumeration_bound(family);
  if (n < 1 || n > bound) {
    throw Error(ErrorCode::Size, "n = " + std::to_string(n) + " outside [1, " +
                                     std::to_string(bound) + "] for family " +
                                     std::string(to_string(family)) + " (override with " +
                                     std::string(kBoundEnvVar) + ")");
  }
}

// ---------------------------------------------------------------------------
// enumeration and predicates

void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  check_enumeration_bound(PartitionFamily::All, n);
  PartitionBuilder builder(n);
  builder.blocks().reserve(static_cast<std::size_t>(n));
  partitions_rec(1, n, builder, visit);
}

std::vector<SetPartition> enumerate_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_noncrossing(const SetPartition& p) {
  const auto& blocks = p.blocks();
  std::vector<int> owner(static_cast<std::size_t>(p.ground_size()) + 1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) owner[x] = static_cast<int>(b);
  }
  // Between consecutive elements a < c of one block, every element must
  // belong to a block lying entirely strictly between them.
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      const int a = block[i];
      const int c = block[i + 1];
      for (int x = a + 1; x < c; ++x) {
        const auto& other = blocks[owner[x]];
        if (other.front() < a || other.back() > c) return false;
      }
    }
  }
  return true;
}

bool is_interval(const SetPartition& p) {
  return std::all_of(p.blocks().begin(), p.blocks().end(), [](const auto& b) {
    return b.back() - b.front() + 1 == static_cast<int>(b.size());
  });
}

std::vector<OrderedSetPartition> enumerate_ordered(const SetPartition& p) {
  std::vector<int> ranks(p.block_count());
  std::iota(ranks.begin(), ranks.end(), 1);
  std::vector<OrderedSetPartition> out;
  do {
    out.emplace_back(p, ranks);
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return out;
}

bool is_monotone_order(const OrderedSetPartition& q) {
  const SetPartition& p = q.partition();
  if (!is_noncrossing(p)) return false;
  const auto& blocks = p.blocks();
  const auto& ranks = q.ranks();
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    for (std::size_t w = 0; w < blocks.size(); ++w) {
      if (v != w && nested_inside(blocks[v], blocks[w]) && ranks[v] <= ranks[w]) {
        return false;
      }
    }
  }
  return true;
}

void for_each_monotone(int n, const std::function<void(const OrderedSetPartition&)>& visit) {
  check_enumeration_bound(PartitionFamily::Monotone, n);
  peel_monotone(n, [&](const std::vector<std::vector<int>>& top_down) {
    std::vector<std::vector<int>> lowest_first(top_down.rbegin(), top_down.rend());
    auto [blocks, ranks] = canonicalize_chain(std::move(lowest_first));
    visit(OrderedSetPartition(PartitionBuilder::adopt(n, std::move(blocks)), std::move(ranks)));
  });
}

std::vector<OrderedSetPartition> enumerate_monotone(int n) {
  std::vector<OrderedSetPartition> out;
  for_each_monotone(n, [&](const OrderedSetPartition& q) { out.push_back(q); });
  std::sort(out.begin(), out.end());
  return out;
}

OrderedSetPartition without_highest_block(const OrderedSetPartition& q) {
  const auto& blocks = q.partition().blocks();
  const auto& ranks = q.ranks();
  if (blocks.size() < 2) {
    throw Error(ErrorCode::Precondition, "cannot remove the only block");
  }
  const int top = static_cast<int>(blocks.size());
  std::vector<int> removed;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (ranks[b] == top) removed = blocks[b];
  }
  const int n = q.partition().ground_size();
  std::vector<int> relabel(static_cast<std::size_t>(n) + 1, 0);
  int next = 0;
  for (int x = 1; x <= n; ++x) {
    if (!std::binary_search(removed.begin(), removed.end(), x)) relabel[x] = ++next;
  }
  std::vector<std::vector<int>> lowest_first(blocks.size() - 1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (ranks[b] == top) continue;
    auto& target = lowest_first[ranks[b] - 1];
    for (int x : blocks[b]) target.push_back(relabel[x]);
  }
  return OrderedSetPartition::from_chain(next, std::move(lowest_first));
}

void for_each_in_family(PartitionFamily family, int n,
                        const std::function<void(const std::string&)>& visit) {
  check_enumeration_bound(family, n);
  switch (family) {
    case PartitionFamily::All:
      for_each_partition(n, [&](const SetPartition& p) { visit(p.to_string()); });
      return;
    case PartitionFamily::NonCrossing:
      for_each_partition(n, [&](const SetPartition& p) {
        if (is_noncrossing(p)) visit(p.to_string());
      });
      return;
    case PartitionFamily::Interval:
      for_each_partition(n, [&](const SetPartition& p) {
        if (is_interval(p)) visit(p.to_string());
      });
      return;
    case PartitionFamily::Ordered:
      for_each_partition(n, [&](const SetPartition& p) {
        for (const auto& q : enumerate_ordered(p)) visit(q.to_string());
      });
      return;
    case PartitionFamily::Monotone:
      for_each_monotone(n, [&](const OrderedSetPartition& q) { visit(q.to_string()); });
      return;
  }
}

std::uint64_t count_family(PartitionFamily family, int n) {
  std::uint64_t total = 0;
  for (const auto& cls : block_size_classes(family, n)) total += cls.count;
  return total;
}

// ---------------------------------------------------------------------------
// weights

Rational partition_weight(const SetPartition& p, std::span<const Rational> r) {
  Rational w(1);
  for (const auto& block : p.blocks()) {
    if (block.size() > r.size()) {
      throw Error(ErrorCode::Truncation, "block of size " + std::to_string(block.size()) +
                                             " needs r_" + std::to_string(block.size()) +
                                             ", have " + std::to_string(r.size()));
    }
    w *= r[block.size() - 1];
  }
  return w;
}

Rational partition_weight(const SetPartition& p, const CumulantSequence& r) {
  return partition_weight(p, r.values());
}

const std::vector<BlockSizeClass>& block_size_classes(PartitionFamily family, int n) {
  check_enumeration_bound(family, n);
  static std::mutex mutex;
  static std::map<std::pair<PartitionFamily, int>, std::vector<BlockSizeClass>> cache;

  std::lock_guard lock(mutex);
  if (auto it = cache.find({family, n}); it != cache.end()) return it->second;

  std::map<std::vector<int>, std::uint64_t> counts;
  const auto tally = [&](const std::vector<std::vector<int>>& blocks, std::uint64_t times) {
    counts[sizes_desc(blocks)] += times;
  };
  switch (family) {
    case PartitionFamily::All:
      for_each_partition(n, [&](const SetPartition& p) { tally(p.blocks(), 1); });
      break;
    case PartitionFamily::NonCrossing:
      for_each_partition(n, [&](const SetPartition& p) {
        if (is_noncrossing(p)) tally(p.blocks(), 1);
      });
      break;
    case PartitionFamily::Interval:
      for_each_partition(n, [&](const SetPartition& p) {
        if (is_interval(p)) tally(p.blocks(), 1);
      });
      break;
    case PartitionFamily::Ordered:
      for_each_partition(n, [&](const SetPartition& p) {
        std::uint64_t orderings = 1;
        for (std::uint64_t k = 2; k <= p.block_count(); ++k) orderings *= k;
        tally(p.blocks(), orderings);
      });
      break;
    case PartitionFamily::Monotone:
      peel_monotone(n, [&](const std::vector<std::vector<int>>& top_down) { tally(top_down, 1); });
      break;
  }

  std::vector<BlockSizeClass> classes;
  classes.reserve(counts.size());
  for (auto& [sizes, count] : counts) classes.push_back({sizes, count});
  return cache.emplace(std::pair{family, n}, std::move(classes)).first->second;
}

}  // namespace moncum
