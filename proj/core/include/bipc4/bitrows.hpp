#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace bipc4::detail {

inline constexpr int kWordBits = 64;

constexpr int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Fixed-width bit rows, one row per vertex. Backs the adjacency planes of
/// the graph types; row intersections drive the cycle finders.
class BitRows {
 public:
  BitRows() = default;
  BitRows(int rows, int bits)
      : bits_(bits),
        words_(words_for(bits)),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(words_), 0) {}

  void set(int row, int bit) { data_[word_index(row, bit)] |= bit_mask(bit); }
  void reset(int row, int bit) { data_[word_index(row, bit)] &= ~bit_mask(bit); }
  bool test(int row, int bit) const { return (data_[word_index(row, bit)] & bit_mask(bit)) != 0; }

  std::span<const std::uint64_t> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(words_),
            static_cast<std::size_t>(words_)};
  }

  int bits() const { return bits_; }
  int words() const { return words_; }

  int popcount_row(int r) const {
    int total = 0;
    for (std::uint64_t w : row(r)) total += std::popcount(w);
    return total;
  }

  friend bool operator==(const BitRows&, const BitRows&) = default;

 private:
  std::size_t word_index(int row, int bit) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(words_) +
           static_cast<std::size_t>(bit / kWordBits);
  }
  static std::uint64_t bit_mask(int bit) { return std::uint64_t{1} << (bit % kWordBits); }

  int bits_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> data_;
};

inline bool rows_intersect(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] & y[i]) return true;
  return false;
}

/// Lowest index set in x & y, or -1 when the intersection is empty.
inline int first_common_bit(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::uint64_t w = x[i] & y[i]; w != 0)
      return static_cast<int>(i) * kWordBits + std::countr_zero(w);
  }
  return -1;
}

/// Calls f(bit) for every set bit of the row, in ascending order.
template <class F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    std::uint64_t w = row[i];
    while (w != 0) {
      f(static_cast<int>(i) * kWordBits + std::countr_zero(w));
      w &= w - 1;
    }
  }
}

}  // namespace bipc4::detail
