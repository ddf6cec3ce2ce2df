#include "uag/linalg.hpp"

#include <stdexcept>

namespace uag {

namespace {

/// a -= c * b over the field, for the first `len` entries.
void axpy_sub(const FiniteField& f, FVec& a, std::uint8_t c, const FVec& b) {
  if (c == 0) return;
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (b[i]) a[i] = static_cast<std::uint8_t>(f.sub(a[i], f.mul(c, b[i])));
  }
}

void scale(const FiniteField& f, FVec& a, std::uint8_t c) {
  for (auto& x : a) x = static_cast<std::uint8_t>(f.mul(c, x));
}

}  // namespace

Span::Span(FieldPtr field, std::size_t length) : field_(std::move(field)), length_(length) {}

FVec Span::reduce(FVec& v) const {
  FVec combo(raw_.size() + 1, 0);
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const std::uint8_t c = v[pivots_[j]];
    if (c == 0) continue;
    axpy_sub(*field_, v, c, rows_[j]);
    // combo += c * row_combo_[j]
    for (std::size_t i = 0; i < row_combo_[j].size(); ++i) {
      if (row_combo_[j][i]) combo[i] = static_cast<std::uint8_t>(field_->add(combo[i], field_->mul(c, row_combo_[j][i])));
    }
  }
  return combo;
}

bool Span::add(const FVec& v) {
  if (v.size() != length_) throw std::invalid_argument("vector length mismatch");
  FVec r = v;
  FVec combo = reduce(r);
  std::size_t pivot = length_;
  for (std::size_t i = 0; i < length_; ++i) {
    if (r[i]) {
      pivot = i;
      break;
    }
  }
  if (pivot == length_) return false;
  const std::size_t id = raw_.size();
  raw_.push_back(v);
  // r = v - sum combo_i raw_i  =>  r expressed as raw_id - combo.
  FVec rc(id + 1, 0);
  for (std::size_t i = 0; i < id; ++i) rc[i] = static_cast<std::uint8_t>(field_->neg(combo[i]));
  rc[id] = 1;
  const std::uint8_t inv = static_cast<std::uint8_t>(field_->inv(r[pivot]));
  scale(*field_, r, inv);
  scale(*field_, rc, inv);
  for (auto& c : row_combo_) c.resize(id + 1, 0);
  rows_.push_back(std::move(r));
  row_combo_.push_back(std::move(rc));
  pivots_.push_back(pivot);
  return true;
}

bool Span::contains(const FVec& v) const {
  FVec r = v;
  reduce(r);
  for (auto x : r) {
    if (x) return false;
  }
  return true;
}

FVec Span::coordinates(const FVec& v) const {
  FVec r = v;
  FVec combo = reduce(r);
  for (auto x : r) {
    if (x) throw std::invalid_argument("vector not in span");
  }
  combo.resize(raw_.size());
  return combo;
}

std::vector<FVec> restricted_kernel(const FiniteField& field, const std::vector<FVec>& rows,
                                    const std::vector<std::size_t>& cols) {
  const std::size_t r = rows.size();
  std::vector<FVec> m(r), track(r);
  for (std::size_t i = 0; i < r; ++i) {
    m[i].resize(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = rows[i][cols[j]];
    track[i].assign(r, 0);
    track[i][i] = 1;
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols.size() && lead < r; ++col) {
    std::size_t piv = lead;
    while (piv < r && m[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(m[piv], m[lead]);
    std::swap(track[piv], track[lead]);
    const std::uint8_t inv = static_cast<std::uint8_t>(field.inv(m[lead][col]));
    scale(field, m[lead], inv);
    scale(field, track[lead], inv);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == lead || m[i][col] == 0) continue;
      const std::uint8_t c = m[i][col];
      axpy_sub(field, m[i], c, m[lead]);
      axpy_sub(field, track[i], c, track[lead]);
    }
    ++lead;
  }
  std::vector<FVec> kernel;
  for (std::size_t i = lead; i < r; ++i) kernel.push_back(std::move(track[i]));
  return kernel;
}

std::size_t restricted_rank(const FiniteField& field, const std::vector<FVec>& rows,
                            const std::vector<std::size_t>& cols) {
  return rows.size() - restricted_kernel(field, rows, cols).size();
}

FVec combine(const FiniteField& field, const std::vector<FVec>& rows, const FVec& coeffs) {
  FVec out(rows.empty() ? 0 : rows[0].size(), 0);
  for (std::size_t i = 0; i < rows.size() && i < coeffs.size(); ++i) {
    const std::uint8_t c = coeffs[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (rows[i][j]) out[j] = static_cast<std::uint8_t>(field.add(out[j], field.mul(c, rows[i][j])));
    }
  }
  return out;
}

}  // namespace uag
