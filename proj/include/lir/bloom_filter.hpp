#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lir {

/// Identifier of one unidirectional inter-satellite link.
struct LinkId {
  std::uint32_t value = 0;

  constexpr LinkId() = default;
  constexpr explicit LinkId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(const LinkId&, const LinkId&) = default;
};

/// splitmix64 finalizer; the keyed hash behind every probe position.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// M-bit Bloom filter with K keyed hash probes over LinkIds.
///
/// Probe i of element e lands on mix64(seed, i, e) mod M. Filters built with
/// the same (M, K, seed) and the same insert sequence are bit-identical.
class BloomFilter {
 public:
  BloomFilter() = default;
  /// Throws std::invalid_argument when bits == 0 or hashes == 0.
  BloomFilter(std::size_t bits, unsigned hashes, std::uint64_t seed = 0);

  std::size_t bits() const { return bits_; }
  unsigned hashes() const { return hashes_; }
  std::uint64_t seed() const { return seed_; }

  void insert(LinkId id);
  bool query(LinkId id) const;
  void clear();

  std::size_t popcount() const;
  bool test_bit(std::size_t pos) const;

  /// Probe positions of `id` (may repeat when two probes collide).
  std::vector<std::size_t> positions(LinkId id) const;

  /// Bit vector as '0'/'1' characters, position 0 first.
  std::string to_string() const;

  /// Appends the M bits to `out`, position 0 first (MSB-first on the wire).
  void append_bits(std::vector<bool>& out) const;

  friend bool operator==(const BloomFilter&, const BloomFilter&) = default;

 private:
  std::size_t position(LinkId id, unsigned probe) const;
  void set_bit(std::size_t pos);

  std::size_t bits_ = 0;
  unsigned hashes_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Functional forms of the filter operations.
BloomFilter insert(BloomFilter bf, LinkId id);
bool query(const BloomFilter& bf, LinkId id);
BloomFilter clear(BloomFilter bf);

/// Classic false-positive estimate [1 - (1 - 1/m)^(k n)]^k.
/// Throws std::domain_error for m == 0 or k == 0.
double fpr(std::size_t m, std::size_t n, unsigned k);

}  // namespace lir

template <>
struct std::hash<lir::LinkId> {
  std::size_t operator()(const lir::LinkId& id) const noexcept { return id.value; }
};
