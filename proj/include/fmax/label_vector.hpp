#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fmx {

/// Fixed-length binary label vector. The textual form is a string of
/// '0'/'1' characters with label 1 leftmost, e.g. "1000" has only the
/// first of four labels set.
class LabelVector {
 public:
  LabelVector() = default;
  explicit LabelVector(std::size_t m) : m_(m), words_((m + 63) / 64, 0) {}

  static LabelVector from_string(std::string_view s);

  // Decodes an integer whose most significant of m bits is label 1, so
  // numeric order on codes equals bitstring order. Requires m <= 64.
  static LabelVector from_index(std::uint64_t code, std::size_t m);

  std::size_t size() const { return m_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  int ones_count() const;
  std::uint64_t to_index() const;  // inverse of from_index, m <= 64
  std::string to_string() const;

  friend bool operator==(const LabelVector& a, const LabelVector& b) {
    return a.m_ == b.m_ && a.words_ == b.words_;
  }
  friend bool operator!=(const LabelVector& a, const LabelVector& b) {
    return !(a == b);
  }

  // Bitstring order: the vector with 0 at the first differing label is
  // smaller. Used as the deterministic tie rule throughout.
  bool operator<(const LabelVector& other) const;

  static int intersection_count(const LabelVector& a, const LabelVector& b);
  static int hamming_distance(const LabelVector& a, const LabelVector& b);

 private:
  std::size_t m_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace fmx
