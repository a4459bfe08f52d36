#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mgk/order.hpp"

namespace mgk {

/// Dense permutation of [0, n) as an image array. Composition convention is
/// function composition: (a * b)(x) = a(b(x)), i.e. b acts first. All
/// permutation backends and representations in the toolkit share this
/// convention; the wreath delta-shift test pins the semantics end to end.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t n) : img_(n) {
    for (std::size_t i = 0; i < n; ++i) img_[i] = static_cast<int32_t>(i);
  }
  explicit Perm(std::vector<std::int32_t> images) : img_(std::move(images)) {}

  std::size_t degree() const { return img_.size(); }
  std::int32_t operator[](std::size_t i) const { return img_[i]; }
  std::int32_t& at(std::size_t i) { return img_[i]; }
  const std::vector<std::int32_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<std::int32_t>(i)) return false;
    return true;
  }

  // first point moved, or -1 for the identity
  std::int64_t first_moved() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<std::int32_t>(i)) return static_cast<std::int64_t>(i);
    return -1;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    r.img_.resize(a.img_.size());
    for (std::size_t i = 0; i < a.img_.size(); ++i)
      r.img_[i] = a.img_[b.img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      r.img_[img_[i]] = static_cast<std::int32_t>(i);
    return r;
  }

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.img_ == b.img_;
  }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.img_ < b.img_;
  }

  int sign() const;                      // +1 or -1
  BigInt order() const;                  // lcm of cycle lengths
  Perm power(const BigInt& e) const;     // exact power via cycle decomposition
  std::vector<std::vector<std::int32_t>> cycles() const;  // nontrivial cycles
  std::vector<std::int32_t> cycle_type() const;           // sorted lengths >= 2
  std::string cycle_string() const;

 private:
  std::vector<std::int32_t> img_;
};

bool is_valid_permutation(std::span<const std::int32_t> images);

}  // namespace mgk
