#include "cgt/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cgt {

namespace {
constexpr std::uint64_t kBase = 1ULL << 32;
}

BigUint::BigUint(std::uint64_t v) {
  if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint does not fit in 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
  int c = compare(*this, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  limbs_.resize(std::max(limbs_.size(), rhs.limbs_.size()), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i] + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (compare(*this, rhs) < 0) throw std::underflow_error("BigUint subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow -
                        (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    borrow = diff < 0;
    if (diff < 0) diff += static_cast<std::int64_t>(kBase);
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  trim();
  return *this;
}

BigUint& BigUint::operator*=(std::uint64_t rhs) {
  *this = *this * BigUint(rhs);
  return *this;
}

BigUint BigUint::operator*(const BigUint& rhs) const {
  if (is_zero() || rhs.is_zero()) return BigUint();
  BigUint out;
  out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] +
                          out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.trim();
  return out;
}

BigUint BigUint::operator+(const BigUint& rhs) const {
  BigUint out = *this;
  out += rhs;
  return out;
}

BigUint BigUint::operator-(const BigUint& rhs) const {
  BigUint out = *this;
  out -= rhs;
  return out;
}

void BigUint::divmod(const BigUint& num, const BigUint& den, BigUint& quot, BigUint& rem) {
  if (den.is_zero()) throw std::domain_error("BigUint division by zero");
  if (compare(num, den) < 0) {
    quot = BigUint();
    rem = num;
    return;
  }
  // Bitwise long division; operands in this library stay a few hundred bits.
  std::size_t bits = num.limbs_.size() * 32;
  BigUint q, r;
  q.limbs_.assign(num.limbs_.size(), 0);
  for (std::size_t i = bits; i-- > 0;) {
    // r = (r << 1) | bit i of num
    std::uint32_t carry = (num.limbs_[i / 32] >> (i % 32)) & 1u;
    for (std::size_t j = 0; j < r.limbs_.size(); ++j) {
      std::uint32_t next = r.limbs_[j] >> 31;
      r.limbs_[j] = (r.limbs_[j] << 1) | carry;
      carry = next;
    }
    if (carry) r.limbs_.push_back(carry);
    if (compare(r, den) >= 0) {
      r -= den;
      q.limbs_[i / 32] |= 1u << (i % 32);
    }
  }
  q.trim();
  r.trim();
  quot = std::move(q);
  rem = std::move(r);
}

BigUint BigUint::operator/(const BigUint& rhs) const {
  BigUint q, r;
  divmod(*this, rhs, q, r);
  return q;
}

BigUint BigUint::operator%(const BigUint& rhs) const {
  BigUint q, r;
  divmod(*this, rhs, q, r);
  return r;
}

std::uint32_t BigUint::divmod_small(std::uint32_t den) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / den);
    rem = cur % den;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    std::uint32_t chunk = tmp.divmod_small(1000000000u);
    std::string part = std::to_string(chunk);
    if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
    out.insert(0, part);
  }
  return out;
}

BigUint BigUint::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  BigUint out;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
    out *= 10;
    out += BigUint(static_cast<std::uint64_t>(c - '0'));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigUint& v) { return os << v.to_string(); }

}  // namespace cgt
