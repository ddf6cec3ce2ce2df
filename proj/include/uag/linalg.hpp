#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uag/field.hpp"

namespace uag {

/// Vector over a finite field of order <= 256.
using FVec = std::vector<std::uint8_t>;

/// Incrementally built subspace of F^length. Each inserted independent
/// vector becomes a "raw" basis vector; echelon rows remember their
/// expression in raw vectors so that span members can be written back as
/// combinations of what was inserted.
class Span {
 public:
  Span(FieldPtr field, std::size_t length);

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return raw_.size(); }
  const std::vector<FVec>& raw() const noexcept { return raw_; }
  const FiniteField& field() const noexcept { return *field_; }

  /// Inserts v; returns true when v was independent of the current span.
  bool add(const FVec& v);
  bool contains(const FVec& v) const;
  /// Coefficients c with v = sum_i c_i raw_i; v must lie in the span.
  FVec coordinates(const FVec& v) const;

 private:
  /// Reduces v in place; returns the combination subtracted (over raw vectors).
  FVec reduce(FVec& v) const;

  FieldPtr field_;
  std::size_t length_;
  std::vector<FVec> raw_;
  std::vector<FVec> rows_;       // echelon rows, pivot entry normalized to 1
  std::vector<FVec> row_combo_;  // rows_[j] = sum_i row_combo_[j][i] raw_[i]
  std::vector<std::size_t> pivots_;
};

/// Combinations c (over the given rows) spanning { c : sum_i c_i rows_i
/// vanishes on `cols` }.
std::vector<FVec> restricted_kernel(const FiniteField& field, const std::vector<FVec>& rows,
                                    const std::vector<std::size_t>& cols);

/// Rank of the rows restricted to `cols`.
std::size_t restricted_rank(const FiniteField& field, const std::vector<FVec>& rows,
                            const std::vector<std::size_t>& cols);

/// sum_i c_i rows_i.
FVec combine(const FiniteField& field, const std::vector<FVec>& rows, const FVec& coeffs);

}  // namespace uag
