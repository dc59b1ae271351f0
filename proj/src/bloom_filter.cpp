#include "lir/bloom_filter.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace lir {

BloomFilter::BloomFilter(std::size_t bits, unsigned hashes, std::uint64_t seed)
    : bits_(bits), hashes_(hashes), seed_(seed), words_((bits + 63) / 64, 0) {
  if (bits == 0) throw std::invalid_argument("BloomFilter: M must be >= 1");
  if (hashes == 0) throw std::invalid_argument("BloomFilter: K must be >= 1");
}

std::size_t BloomFilter::position(LinkId id, unsigned probe) const {
  std::uint64_t h = mix64(seed_ ^ mix64(0x51ed270b27a3f1c5ULL + probe));
  h = mix64(h ^ id.value);
  return static_cast<std::size_t>(h % bits_);
}

void BloomFilter::set_bit(std::size_t pos) { words_[pos / 64] |= (1ULL << (pos % 64)); }

bool BloomFilter::test_bit(std::size_t pos) const {
  return (words_[pos / 64] >> (pos % 64)) & 1ULL;
}

void BloomFilter::insert(LinkId id) {
  for (unsigned i = 0; i < hashes_; ++i) set_bit(position(id, i));
}

bool BloomFilter::query(LinkId id) const {
  if (bits_ == 0) return false;
  for (unsigned i = 0; i < hashes_; ++i) {
    if (!test_bit(position(id, i))) return false;
  }
  return true;
}

void BloomFilter::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t BloomFilter::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> BloomFilter::positions(LinkId id) const {
  std::vector<std::size_t> out;
  out.reserve(hashes_);
  for (unsigned i = 0; i < hashes_; ++i) out.push_back(position(id, i));
  return out;
}

std::string BloomFilter::to_string() const {
  std::string s(bits_, '0');
  for (std::size_t i = 0; i < bits_; ++i) {
    if (test_bit(i)) s[i] = '1';
  }
  return s;
}

void BloomFilter::append_bits(std::vector<bool>& out) const {
  for (std::size_t i = 0; i < bits_; ++i) out.push_back(test_bit(i));
}

BloomFilter insert(BloomFilter bf, LinkId id) {
  bf.insert(id);
  return bf;
}

bool query(const BloomFilter& bf, LinkId id) { return bf.query(id); }

BloomFilter clear(BloomFilter bf) {
  bf.clear();
  return bf;
}

double fpr(std::size_t m, std::size_t n, unsigned k) {
  if (m == 0) throw std::domain_error("fpr: m must be >= 1");
  if (k == 0) throw std::domain_error("fpr: k must be >= 1");
  const double miss = std::pow(1.0 - 1.0 / static_cast<double>(m),
                               static_cast<double>(k) * static_cast<double>(n));
  return std::pow(1.0 - miss, static_cast<double>(k));
}

}  // namespace lir
