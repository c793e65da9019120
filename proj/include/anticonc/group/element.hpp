#pragma once

// Concrete group elements: square matrices over a prime field, permutations,
// and indices into an explicit multiplication table.
//
// Every element is stored as a fixed-length run of 32-bit "words"
// (matrix: row-major residues, permutation: image list, table: one index).
// The canonical byte encoding is the big-endian concatenation of the words,
// so byte-lexicographic order agrees with word-lexicographic order.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace anticonc::group {

using Word = std::uint32_t;

enum class ElementKind : std::uint8_t { matrix_mod_p, permutation, table };

/// Multiplication table of an abstract finite group given by its Cayley table.
struct CayleyTable {
  std::uint32_t size = 0;
  std::vector<Word> products;  // products[i * size + j] = i * j
  Word identity = 0;
  std::vector<Word> inverses;
};

/// Describes the ambient group an element belongs to and implements the
/// word-level group law. Two elements can only be multiplied when their
/// ambients compare equal.
class Ambient {
 public:
  static Ambient matrix_mod_p(std::uint32_t prime, std::uint32_t size);
  static Ambient permutation(std::uint32_t degree);
  /// Validates that every row and column is a permutation and that an
  /// identity exists; associativity is the caller's responsibility.
  static Ambient table(std::uint32_t size, std::vector<Word> products);

  ElementKind kind() const noexcept { return kind_; }
  std::uint32_t prime() const noexcept { return prime_; }
  std::uint32_t matrix_size() const noexcept { return size_; }
  std::uint32_t degree() const noexcept { return size_; }
  std::uint32_t table_size() const noexcept { return size_; }
  const CayleyTable* cayley() const noexcept { return table_.get(); }

  std::size_t word_count() const noexcept;

  void multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const;
  void identity(std::span<Word> out) const;
  void inverse(std::span<const Word> a, std::span<Word> out) const;
  bool is_identity(std::span<const Word> a) const;

  bool operator==(const Ambient& other) const noexcept;

 private:
  ElementKind kind_ = ElementKind::permutation;
  std::uint32_t prime_ = 0;
  std::uint32_t size_ = 0;
  std::shared_ptr<const CayleyTable> table_;
};

class GroupElement {
 public:
  GroupElement(Ambient ambient, std::vector<Word> words);

  /// Entries are reduced into [0, p); throws if the determinant vanishes mod p.
  static GroupElement matrix(std::uint32_t prime, const std::vector<std::vector<std::int64_t>>& rows);
  /// images[i] is the image of point i; throws unless it is a bijection.
  static GroupElement permutation(std::vector<Word> images);
  static GroupElement table_element(const Ambient& ambient, Word index);
  static GroupElement identity(const Ambient& ambient);

  const Ambient& ambient() const noexcept { return ambient_; }
  std::span<const Word> words() const noexcept { return words_; }

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;
  bool is_identity() const;

  std::vector<std::uint8_t> encode() const;
  static GroupElement decode(const Ambient& ambient, std::span<const std::uint8_t> bytes);

  bool operator==(const GroupElement& other) const;
  std::strong_ordering operator<=>(const GroupElement& other) const;

 private:
  Ambient ambient_;
  std::vector<Word> words_;
};

/// Smallest k >= 1 with g^k = 1, computed by repeated multiplication.
/// Throws CapExceeded when k would exceed `cap`.
std::uint64_t raw_order(const GroupElement& g, std::uint64_t cap = 100'000'000);

std::uint64_t matrix_determinant_mod_p(std::span<const Word> entries, std::uint32_t size, std::uint32_t prime);

}  // namespace anticonc::group
