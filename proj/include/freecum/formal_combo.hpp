#pragma once

#include <map>
#include <string>

#include "freecum/rational.hpp"

namespace freecum {

/// Exact-rational linear combination of indeterminates. Zero coefficients
/// are never stored, so equality is coefficient-wise equality.
template <class Key>
class FormalCombo {
 public:
  using Terms = std::map<Key, Rational>;

  FormalCombo() = default;
  static FormalCombo symbol(const Key& key) {
    FormalCombo c;
    c.add(key, Rational(1));
    return c;
  }

  void add(const Key& key, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  FormalCombo& operator+=(const FormalCombo& other) {
    for (const auto& [k, v] : other.terms_) add(k, v);
    return *this;
  }
  FormalCombo& operator-=(const FormalCombo& other) {
    for (const auto& [k, v] : other.terms_) add(k, Rational(-v));
    return *this;
  }
  FormalCombo& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend FormalCombo operator+(FormalCombo a, const FormalCombo& b) { return a += b; }
  friend FormalCombo operator-(FormalCombo a, const FormalCombo& b) { return a -= b; }
  friend FormalCombo operator*(FormalCombo a, const Rational& c) { return a *= c; }
  friend FormalCombo operator*(const Rational& c, FormalCombo a) { return a *= c; }

  friend bool operator==(const FormalCombo&, const FormalCombo&) = default;

 private:
  Terms terms_;
};

}  // namespace freecum
