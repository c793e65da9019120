#include "anticonc/group/element.hpp"

#include <algorithm>
#include <string>

#include "anticonc/util/error.hpp"
#include "anticonc/util/modular.hpp"

namespace anticonc::group {

namespace {

std::uint64_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint64_t det_by_elimination(std::vector<std::uint64_t> a, std::uint32_t n, std::uint32_t p) {
  std::uint64_t det = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::uint32_t k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[col * n + k]);
      det = (p - det) % p;
    }
    const std::uint64_t pv = a[col * n + col];
    det = modular::mul_mod(det, pv, p);
    const std::uint64_t inv = modular::inv_mod(pv, p);
    for (std::uint32_t r = col + 1; r < n; ++r) {
      const std::uint64_t f = modular::mul_mod(a[r * n + col], inv, p);
      if (f == 0) continue;
      for (std::uint32_t k = col; k < n; ++k) {
        a[r * n + k] = (a[r * n + k] + p - modular::mul_mod(f, a[col * n + k], p)) % p;
      }
    }
  }
  return det;
}

void matrix_inverse(std::span<const Word> a, std::uint32_t n, std::uint32_t p, std::span<Word> out) {
  if (n == 1) {
    out[0] = static_cast<Word>(modular::inv_mod(a[0], p));
    return;
  }
  if (n == 2) {
    const std::uint64_t det =
        (modular::mul_mod(a[0], a[3], p) + p - modular::mul_mod(a[1], a[2], p)) % p;
    const std::uint64_t inv = modular::inv_mod(det, p);
    out[0] = static_cast<Word>(modular::mul_mod(a[3], inv, p));
    out[1] = static_cast<Word>(modular::mul_mod((p - a[1]) % p, inv, p));
    out[2] = static_cast<Word>(modular::mul_mod((p - a[2]) % p, inv, p));
    out[3] = static_cast<Word>(modular::mul_mod(a[0], inv, p));
    return;
  }
  if (n <= 4) {
    // adjugate: inverse[j][i] = (-1)^(i+j) det(minor(i, j)) / det
    const std::vector<std::uint64_t> full(a.begin(), a.end());
    const std::uint64_t det = det_by_elimination(full, n, p);
    const std::uint64_t inv = modular::inv_mod(det, p);
    std::vector<std::uint64_t> minor((n - 1) * (n - 1));
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        std::size_t idx = 0;
        for (std::uint32_t r = 0; r < n; ++r) {
          if (r == i) continue;
          for (std::uint32_t c = 0; c < n; ++c) {
            if (c == j) continue;
            minor[idx++] = a[r * n + c];
          }
        }
        std::uint64_t cof = det_by_elimination(minor, n - 1, p);
        if ((i + j) % 2 == 1) cof = (p - cof) % p;
        out[j * n + i] = static_cast<Word>(modular::mul_mod(cof, inv, p));
      }
    }
    return;
  }
  // Gauss-Jordan on [A | I]
  const std::uint32_t w = 2 * n;
  std::vector<std::uint64_t> aug(static_cast<std::size_t>(n) * w, 0);
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t c = 0; c < n; ++c) aug[r * w + c] = a[r * n + c];
    aug[r * w + n + r] = 1;
  }
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && aug[pivot * w + col] == 0) ++pivot;
    if (pivot == n) throw Error(Errc::not_invertible, "singular matrix mod p");
    if (pivot != col) {
      for (std::uint32_t k = 0; k < w; ++k) std::swap(aug[pivot * w + k], aug[col * w + k]);
    }
    const std::uint64_t inv = modular::inv_mod(aug[col * w + col], p);
    for (std::uint32_t k = 0; k < w; ++k) aug[col * w + k] = modular::mul_mod(aug[col * w + k], inv, p);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || aug[r * w + col] == 0) continue;
      const std::uint64_t f = aug[r * w + col];
      for (std::uint32_t k = 0; k < w; ++k) {
        aug[r * w + k] = (aug[r * w + k] + p - modular::mul_mod(f, aug[col * w + k], p)) % p;
      }
    }
  }
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t c = 0; c < n; ++c) out[r * n + c] = static_cast<Word>(aug[r * w + n + c]);
  }
}

}  // namespace

std::uint64_t matrix_determinant_mod_p(std::span<const Word> entries, std::uint32_t size, std::uint32_t prime) {
  return det_by_elimination(std::vector<std::uint64_t>(entries.begin(), entries.end()), size, prime);
}

Ambient Ambient::matrix_mod_p(std::uint32_t prime, std::uint32_t size) {
  if (!modular::is_prime(prime)) throw Error(Errc::invalid_input, "modulus " + std::to_string(prime) + " is not prime");
  if (size == 0) throw Error(Errc::invalid_input, "matrix size must be positive");
  if (prime >= (1U << 31)) throw Error(Errc::invalid_input, "prime must be below 2^31");
  Ambient a;
  a.kind_ = ElementKind::matrix_mod_p;
  a.prime_ = prime;
  a.size_ = size;
  return a;
}

Ambient Ambient::permutation(std::uint32_t degree) {
  if (degree == 0) throw Error(Errc::invalid_input, "permutation degree must be positive");
  Ambient a;
  a.kind_ = ElementKind::permutation;
  a.size_ = degree;
  return a;
}

Ambient Ambient::table(std::uint32_t size, std::vector<Word> products) {
  if (size == 0 || products.size() != static_cast<std::size_t>(size) * size) {
    throw Error(Errc::invalid_input, "multiplication table must be size x size");
  }
  for (Word v : products) {
    if (v >= size) throw Error(Errc::invalid_input, "multiplication table entry out of range");
  }
  auto t = std::make_shared<CayleyTable>();
  t->size = size;
  t->products = std::move(products);
  std::vector<char> seen(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t j = 0; j < size; ++j) {
      if (seen[t->products[i * size + j]]++) throw Error(Errc::invalid_input, "table row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t j = 0; j < size; ++j) {
      if (seen[t->products[j * size + i]]++) throw Error(Errc::invalid_input, "table column is not a permutation");
    }
  }
  bool found = false;
  for (std::uint32_t e = 0; e < size && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < size && ok; ++x) {
      ok = t->products[e * size + x] == x && t->products[x * size + e] == x;
    }
    if (ok) {
      t->identity = e;
      found = true;
    }
  }
  if (!found) throw Error(Errc::invalid_input, "table has no identity element");
  t->inverses.assign(size, 0);
  for (std::uint32_t i = 0; i < size; ++i) {
    for (std::uint32_t j = 0; j < size; ++j) {
      if (t->products[i * size + j] == t->identity) {
        t->inverses[i] = j;
        break;
      }
    }
  }
  Ambient a;
  a.kind_ = ElementKind::table;
  a.size_ = size;
  a.table_ = std::move(t);
  return a;
}

std::size_t Ambient::word_count() const noexcept {
  switch (kind_) {
    case ElementKind::matrix_mod_p: return static_cast<std::size_t>(size_) * size_;
    case ElementKind::permutation: return size_;
    case ElementKind::table: return 1;
  }
  return 0;
}

void Ambient::multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const {
  switch (kind_) {
    case ElementKind::matrix_mod_p: {
      const std::uint32_t n = size_;
      const std::uint64_t p = prime_;
      if (n == 2) {
        // residues < 2^31, so each pair sum fits in 64 bits
        out[0] = static_cast<Word>((std::uint64_t{a[0]} * b[0] + std::uint64_t{a[1]} * b[2]) % p);
        out[1] = static_cast<Word>((std::uint64_t{a[0]} * b[1] + std::uint64_t{a[1]} * b[3]) % p);
        out[2] = static_cast<Word>((std::uint64_t{a[2]} * b[0] + std::uint64_t{a[3]} * b[2]) % p);
        out[3] = static_cast<Word>((std::uint64_t{a[2]} * b[1] + std::uint64_t{a[3]} * b[3]) % p);
        return;
      }
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
          std::uint64_t acc = 0;
          for (std::uint32_t k = 0; k < n; ++k) {
            acc += std::uint64_t{a[i * n + k]} * b[k * n + j];
            if ((k & 1U) == 1U) acc %= p;
          }
          out[i * n + j] = static_cast<Word>(acc % p);
        }
      }
      return;
    }
    case ElementKind::permutation:
      // (a*b)(x) = b(a(x)): apply a first, matching left-to-right products
      for (std::uint32_t x = 0; x < size_; ++x) out[x] = b[a[x]];
      return;
    case ElementKind::table:
      out[0] = table_->products[a[0] * size_ + b[0]];
      return;
  }
}

void Ambient::identity(std::span<Word> out) const {
  switch (kind_) {
    case ElementKind::matrix_mod_p:
      std::fill(out.begin(), out.end(), 0);
      for (std::uint32_t i = 0; i < size_; ++i) out[i * size_ + i] = 1;
      return;
    case ElementKind::permutation:
      for (std::uint32_t x = 0; x < size_; ++x) out[x] = x;
      return;
    case ElementKind::table:
      out[0] = table_->identity;
      return;
  }
}

void Ambient::inverse(std::span<const Word> a, std::span<Word> out) const {
  switch (kind_) {
    case ElementKind::matrix_mod_p:
      matrix_inverse(a, size_, prime_, out);
      return;
    case ElementKind::permutation:
      for (std::uint32_t x = 0; x < size_; ++x) out[a[x]] = x;
      return;
    case ElementKind::table:
      out[0] = table_->inverses[a[0]];
      return;
  }
}

bool Ambient::is_identity(std::span<const Word> a) const {
  switch (kind_) {
    case ElementKind::matrix_mod_p:
      for (std::uint32_t i = 0; i < size_; ++i) {
        for (std::uint32_t j = 0; j < size_; ++j) {
          if (a[i * size_ + j] != (i == j ? 1U : 0U)) return false;
        }
      }
      return true;
    case ElementKind::permutation:
      for (std::uint32_t x = 0; x < size_; ++x) {
        if (a[x] != x) return false;
      }
      return true;
    case ElementKind::table:
      return a[0] == table_->identity;
  }
  return false;
}

bool Ambient::operator==(const Ambient& other) const noexcept {
  if (kind_ != other.kind_ || prime_ != other.prime_ || size_ != other.size_) return false;
  if (kind_ != ElementKind::table) return true;
  return table_ == other.table_ || table_->products == other.table_->products;
}

GroupElement::GroupElement(Ambient ambient, std::vector<Word> words)
    : ambient_(std::move(ambient)), words_(std::move(words)) {
  if (words_.size() != ambient_.word_count()) {
    throw Error(Errc::invalid_input, "element has the wrong number of words for its ambient group");
  }
}

GroupElement GroupElement::matrix(std::uint32_t prime, const std::vector<std::vector<std::int64_t>>& rows) {
  const auto m = static_cast<std::uint32_t>(rows.size());
  Ambient amb = Ambient::matrix_mod_p(prime, m);
  std::vector<Word> words;
  words.reserve(static_cast<std::size_t>(m) * m);
  for (const auto& row : rows) {
    if (row.size() != m) throw Error(Errc::invalid_input, "matrix must be square");
    for (std::int64_t v : row) words.push_back(static_cast<Word>(reduce(v, prime)));
  }
  if (matrix_determinant_mod_p(words, m, prime) == 0) {
    throw Error(Errc::not_invertible, "matrix is singular mod " + std::to_string(prime));
  }
  return GroupElement(std::move(amb), std::move(words));
}

GroupElement GroupElement::permutation(std::vector<Word> images) {
  const auto n = static_cast<std::uint32_t>(images.size());
  std::vector<char> seen(n, 0);
  for (Word v : images) {
    if (v >= n || seen[v]) throw Error(Errc::invalid_input, "permutation image list is not a bijection");
    seen[v] = 1;
  }
  return GroupElement(Ambient::permutation(n), std::move(images));
}

GroupElement GroupElement::table_element(const Ambient& ambient, Word index) {
  if (ambient.kind() != ElementKind::table || index >= ambient.table_size()) {
    throw Error(Errc::invalid_input, "table index out of range");
  }
  return GroupElement(ambient, {index});
}

GroupElement GroupElement::identity(const Ambient& ambient) {
  std::vector<Word> w(ambient.word_count());
  ambient.identity(w);
  return GroupElement(ambient, std::move(w));
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (!(ambient_ == rhs.ambient_)) throw Error(Errc::mixed_variants, "elements live in different ambient groups");
  std::vector<Word> out(words_.size());
  ambient_.multiply(words_, rhs.words_, out);
  return GroupElement(ambient_, std::move(out));
}

GroupElement GroupElement::inverse() const {
  std::vector<Word> out(words_.size());
  ambient_.inverse(words_, out);
  return GroupElement(ambient_, std::move(out));
}

bool GroupElement::is_identity() const { return ambient_.is_identity(words_); }

std::vector<std::uint8_t> GroupElement::encode() const {
  std::vector<std::uint8_t> out;
  out.reserve(words_.size() * 4);
  for (Word w : words_) {
    out.push_back(static_cast<std::uint8_t>(w >> 24U));
    out.push_back(static_cast<std::uint8_t>(w >> 16U));
    out.push_back(static_cast<std::uint8_t>(w >> 8U));
    out.push_back(static_cast<std::uint8_t>(w));
  }
  return out;
}

GroupElement GroupElement::decode(const Ambient& ambient, std::span<const std::uint8_t> bytes) {
  if (bytes.size() != ambient.word_count() * 4) throw Error(Errc::invalid_input, "encoding has the wrong length");
  std::vector<Word> words(ambient.word_count());
  for (std::size_t i = 0; i < words.size(); ++i) {
    words[i] = (Word{bytes[4 * i]} << 24U) | (Word{bytes[4 * i + 1]} << 16U) | (Word{bytes[4 * i + 2]} << 8U) |
               Word{bytes[4 * i + 3]};
  }
  switch (ambient.kind()) {
    case ElementKind::matrix_mod_p:
      for (Word w : words) {
        if (w >= ambient.prime()) throw Error(Errc::invalid_input, "matrix entry not reduced");
      }
      if (matrix_determinant_mod_p(words, ambient.matrix_size(), ambient.prime()) == 0) {
        throw Error(Errc::not_invertible, "decoded matrix is singular");
      }
      break;
    case ElementKind::permutation: {
      std::vector<char> seen(words.size(), 0);
      for (Word w : words) {
        if (w >= words.size() || seen[w]) throw Error(Errc::invalid_input, "decoded permutation is not a bijection");
        seen[w] = 1;
      }
      break;
    }
    case ElementKind::table:
      if (words[0] >= ambient.table_size()) throw Error(Errc::invalid_input, "table index out of range");
      break;
  }
  return GroupElement(ambient, std::move(words));
}

bool GroupElement::operator==(const GroupElement& other) const {
  return ambient_ == other.ambient_ && words_ == other.words_;
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& other) const {
  return std::lexicographical_compare_three_way(words_.begin(), words_.end(), other.words_.begin(),
                                                other.words_.end());
}

std::uint64_t raw_order(const GroupElement& g, std::uint64_t cap) {
  const Ambient& amb = g.ambient();
  std::vector<Word> x(g.words().begin(), g.words().end());
  std::vector<Word> tmp(x.size());
  std::uint64_t k = 1;
  while (!amb.is_identity(x)) {
    if (++k > cap) throw Error(Errc::cap_exceeded, "element order exceeds cap");
    amb.multiply(x, g.words(), tmp);
    x.swap(tmp);
  }
  return k;
}

}  // namespace anticonc::group
