#include "moncum/sequences.hpp"

#include <string>

#include "moncum/error.hpp"

namespace moncum {

std::string_view to_string(IndependenceKind kind) {
  switch (kind) {
    case IndependenceKind::Commutative: return "commutative";
    case IndependenceKind::Free: return "free";
    case IndependenceKind::Boolean: return "boolean";
    case IndependenceKind::Monotone: return "monotone";
  }
  return "unknown";
}

std::optional<IndependenceKind> parse_kind(std::string_view text) {
  if (text == "commutative" || text == "classical") return IndependenceKind::Commutative;
  if (text == "free") return IndependenceKind::Free;
  if (text == "boolean") return IndependenceKind::Boolean;
  if (text == "monotone") return IndependenceKind::Monotone;
  return std::nullopt;
}

MomentSequence::MomentSequence(std::vector<Rational> moments, SequenceNotes notes)
    : moments_(std::move(moments)), notes_(notes) {
  if (moments_.empty()) {
    throw Error(ErrorCode::MalformedInput, "moment sequence must contain M_0");
  }
  if (moments_[0] != Rational(1)) {
    throw Error(ErrorCode::MalformedInput,
                "moment sequence must start with M_0 = 1, got " + moments_[0].to_string());
  }
}

MomentSequence MomentSequence::point_mass(const Rational& a, std::size_t order) {
  std::vector<Rational> m(order + 1);
  m[0] = Rational(1);
  for (std::size_t k = 1; k <= order; ++k) m[k] = m[k - 1] * a;
  return MomentSequence(std::move(m));
}

MomentSequence MomentSequence::truncated(std::size_t order) const {
  require_order(*this, order);
  return MomentSequence(std::vector<Rational>(moments_.begin(), moments_.begin() + order + 1),
                        notes_);
}

MomentSequence MomentSequence::with_notes(SequenceNotes notes) const {
  MomentSequence out = *this;
  out.notes_ = notes;
  return out;
}

CumulantSequence::CumulantSequence(IndependenceKind kind, std::vector<Rational> values)
    : kind_(kind), values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::MalformedInput, "cumulant sequence must contain r_1");
  }
}

CumulantSequence CumulantSequence::truncated(std::size_t order) const {
  require_order(*this, order);
  return CumulantSequence(kind_,
                          std::vector<Rational>(values_.begin(), values_.begin() + order));
}

void require_order(const CumulantSequence& r, std::size_t order) {
  if (r.order() < order) {
    throw Error(ErrorCode::Truncation, "need cumulants up to order " + std::to_string(order) +
                                           ", have " + std::to_string(r.order()));
  }
}

void require_order(const MomentSequence& m, std::size_t order) {
  if (m.order() < order) {
    throw Error(ErrorCode::Truncation, "need moments up to order " + std::to_string(order) +
                                           ", have " + std::to_string(m.order()));
  }
}

}  // namespace moncum
