#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "moncum/rational.hpp"

namespace moncum {

enum class IndependenceKind { Commutative, Free, Boolean, Monotone };

inline constexpr IndependenceKind kAllKinds[] = {
    IndependenceKind::Commutative, IndependenceKind::Free, IndependenceKind::Boolean,
    IndependenceKind::Monotone};

std::string_view to_string(IndependenceKind kind);
/// Accepts "commutative" (or "classical"), "free", "boolean", "monotone".
std::optional<IndependenceKind> parse_kind(std::string_view text);

/// Provenance flags carried alongside computed sequences. Not part of equality.
struct SequenceNotes {
  /// Inputs had different orders and were cut to the smaller one.
  bool order_truncated = false;
  /// Produced by a formal-only evaluation (e.g. a negative flow time).
  bool formal_only = false;
};

/// Truncated moment sequence (M_0 = 1, M_1, ..., M_n). No positivity is
/// imposed; any rational sequence starting with 1 is accepted.
class MomentSequence {
 public:
  /// Throws MalformedInput if empty or M_0 != 1.
  explicit MomentSequence(std::vector<Rational> moments, SequenceNotes notes = {});

  /// Moments of the point mass at `a`: a^k.
  static MomentSequence point_mass(const Rational& a, std::size_t order);

  std::size_t order() const { return moments_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return moments_[k]; }
  std::span<const Rational> values() const { return moments_; }

  /// Truncation error if the requested order exceeds the stored one.
  MomentSequence truncated(std::size_t order) const;

  const SequenceNotes& notes() const { return notes_; }
  MomentSequence with_notes(SequenceNotes notes) const;

  friend bool operator==(const MomentSequence& a, const MomentSequence& b) {
    return a.moments_ == b.moments_;
  }

 private:
  std::vector<Rational> moments_;
  SequenceNotes notes_;
};

/// Cumulants (r_1, ..., r_n) for one notion of independence.
class CumulantSequence {
 public:
  /// Throws MalformedInput if `values` is empty.
  CumulantSequence(IndependenceKind kind, std::vector<Rational> values);

  IndependenceKind kind() const { return kind_; }
  std::size_t order() const { return values_.size(); }
  /// 1-based: value(1) is r_1.
  const Rational& value(std::size_t n) const { return values_[n - 1]; }
  std::span<const Rational> values() const { return values_; }

  CumulantSequence truncated(std::size_t order) const;

  friend bool operator==(const CumulantSequence&, const CumulantSequence&) = default;

 private:
  IndependenceKind kind_;
  std::vector<Rational> values_;
};

/// Truncation error unless the sequence reaches `order`.
void require_order(const CumulantSequence& r, std::size_t order);
void require_order(const MomentSequence& m, std::size_t order);

}  // namespace moncum
