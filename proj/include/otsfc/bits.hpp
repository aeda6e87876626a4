#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "otsfc/bytes.hpp"
#include "otsfc/errors.hpp"

namespace otsfc {

/// A single binary symbol. Stored unpacked (one byte per bit): clarity over
/// density at the scales this library targets.
using Bit = std::uint8_t;

/// Ordered sequence of k bits.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length) : bits_(length, 0) {}
  explicit BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {}

  std::size_t size() const { return bits_.size(); }
  Bit at(std::size_t i) const {
    if (i >= bits_.size()) throw IndexError("BitString index out of range");
    return bits_[i];
  }
  void set(std::size_t i, Bit b) {
    if (i >= bits_.size()) throw IndexError("BitString index out of range");
    bits_[i] = b & 1u;
  }
  std::span<const Bit> bits() const { return bits_; }

  BitString operator^(const BitString& other) const {
    if (other.size() != size())
      throw DimensionError("BitString XOR requires equal lengths");
    BitString out(size());
    for (std::size_t i = 0; i < size(); ++i)
      out.bits_[i] = (bits_[i] ^ other.bits_[i]) & 1u;
    return out;
  }

  bool operator==(const BitString&) const = default;

  std::vector<std::uint8_t> serialize() const {
    std::vector<std::uint8_t> out;
    append_u32(out, static_cast<std::uint32_t>(size()));
    append_bits(out, bits_);
    return out;
  }

 private:
  std::vector<Bit> bits_;
};

/// k x m binary matrix, row-major, unpacked entries.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (cols == 0) throw DimensionError("BitMatrix requires cols >= 1");
  }

  static BitMatrix from_columns(const std::vector<BitString>& columns) {
    if (columns.empty()) throw DimensionError("need at least one column");
    const std::size_t k = columns.front().size();
    for (const auto& c : columns)
      if (c.size() != k) throw DimensionError("columns must share one length");
    BitMatrix m(k, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (std::size_t i = 0; i < k; ++i) m.set(i + 1, j + 1, columns[j].at(i));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Row/column indices are 1-based on the public surface.
  Bit at(std::size_t row, std::size_t col) const {
    check(row, col);
    return data_[(row - 1) * cols_ + (col - 1)];
  }
  void set(std::size_t row, std::size_t col, Bit b) {
    check(row, col);
    data_[(row - 1) * cols_ + (col - 1)] = b & 1u;
  }

  bool operator==(const BitMatrix&) const = default;

  std::vector<std::uint8_t> serialize() const {
    std::vector<std::uint8_t> out;
    append_u32(out, static_cast<std::uint32_t>(rows_));
    append_u32(out, static_cast<std::uint32_t>(cols_));
    append_bits(out, data_);
    return out;
  }

 private:
  void check(std::size_t row, std::size_t col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
      throw IndexError("BitMatrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 1;
  std::vector<Bit> data_;
};

/// Element-wise XOR of two equal-shape matrices.
BitMatrix xor_matrices(const BitMatrix& a, const BitMatrix& b);

/// Column j (1-based) as a k-bit string.
BitString column(const BitMatrix& matrix, std::size_t j);

}  // namespace otsfc
