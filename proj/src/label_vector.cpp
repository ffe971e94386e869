#include "fmax/label_vector.hpp"

#include <bit>
#include <stdexcept>

namespace fmx {

LabelVector LabelVector::from_string(std::string_view s) {
  LabelVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i, true);
    else if (s[i] != '0')
      throw std::invalid_argument("label vector string must contain only '0'/'1'");
  }
  return v;
}

LabelVector LabelVector::from_index(std::uint64_t code, std::size_t m) {
  if (m > 64) throw std::invalid_argument("integer encoding requires m <= 64");
  LabelVector v(m);
  for (std::size_t i = 0; i < m; ++i)
    if ((code >> (m - 1 - i)) & 1u) v.set(i, true);
  return v;
}

int LabelVector::ones_count() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::uint64_t LabelVector::to_index() const {
  if (m_ > 64) throw std::invalid_argument("integer encoding requires m <= 64");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < m_; ++i)
    if (get(i)) code |= std::uint64_t{1} << (m_ - 1 - i);
  return code;
}

std::string LabelVector::to_string() const {
  std::string s(m_, '0');
  for (std::size_t i = 0; i < m_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool LabelVector::operator<(const LabelVector& other) const {
  if (m_ != other.m_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t x = words_[w] ^ other.words_[w];
    if (x) {
      // first differing label is the lowest set bit of the xor
      return !((words_[w] >> std::countr_zero(x)) & 1u);
    }
  }
  return false;
}

int LabelVector::intersection_count(const LabelVector& a, const LabelVector& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("dimension mismatch");
  int n = 0;
  for (std::size_t w = 0; w < a.words_.size(); ++w)
    n += std::popcount(a.words_[w] & b.words_[w]);
  return n;
}

int LabelVector::hamming_distance(const LabelVector& a, const LabelVector& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("dimension mismatch");
  int n = 0;
  for (std::size_t w = 0; w < a.words_.size(); ++w)
    n += std::popcount(a.words_[w] ^ b.words_[w]);
  return n;
}

}  // namespace fmx
