#include "xyzcyclic/bitvec.h"

#include <stdexcept>

namespace xyz {

BitVec BitVec::from_string(const std::string& bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVec::from_string: expected only '0' and '1'");
    }
  }
  return v;
}

BitVec BitVec::ones(std::size_t n) {
  BitVec v(n);
  for (auto& w : v.words_) w = ~Word{0};
  if (n % kWordBits != 0 && !v.words_.empty()) {
    v.words_.back() &= (Word{1} << (n % kWordBits)) - 1;
  }
  return v;
}

static void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("BitVec: length mismatch");
}

BitVec& BitVec::operator^=(const BitVec& o) {
  check_same_size(size_, o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
  check_same_size(size_, o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
  check_same_size(size_, o.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

bool BitVec::dot(const BitVec& o) const {
  check_same_size(size_, o.size_);
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

BitVec BitVec::rotated(std::size_t k) const {
  BitVec r(size_);
  if (size_ == 0) return r;
  k %= size_;
  for (std::size_t i = find_next(0); i < size_; i = find_next(i + 1)) {
    std::size_t j = i + k;
    if (j >= size_) j -= size_;
    r.set(j, true);
  }
  return r;
}

BitVec BitVec::concat(const BitVec& o) const {
  BitVec r(size_ + o.size_);
  for (std::size_t i = find_next(0); i < size_; i = find_next(i + 1)) r.set(i, true);
  for (std::size_t i = o.find_next(0); i < o.size_; i = o.find_next(i + 1)) r.set(size_ + i, true);
  return r;
}

BitVec BitVec::slice(std::size_t begin, std::size_t len) const {
  if (begin + len > size_) throw std::out_of_range("BitVec::slice out of range");
  BitVec r(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (get(begin + i)) r.set(i, true);
  }
  return r;
}

std::size_t BitVec::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w) {
      const std::size_t idx = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      return idx < size_ ? idx : size_;
    }
    if (++wi >= words_.size()) return size_;
    w = words_[wi];
  }
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

}  // namespace xyz
