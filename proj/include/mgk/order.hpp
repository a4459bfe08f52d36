#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace mgk {

using BigInt = boost::multiprecision::cpp_int;

/// Order of a group or group element. Group orders in this toolkit routinely
/// exceed machine words (|Alt(12)|^223 * 223 and the like), so finite values
/// are arbitrary precision. Infinite and not-computed orders share one flag.
class BigOrder {
 public:
  BigOrder() : value_(std::nullopt) {}
  explicit BigOrder(BigInt v) : value_(std::move(v)) {}
  explicit BigOrder(long v) : value_(BigInt(v)) {}

  static BigOrder infinite() { return BigOrder(); }

  bool is_finite() const { return value_.has_value(); }
  const BigInt& value() const { return *value_; }

  std::string str() const {
    return value_ ? value_->str() : std::string("infinite/unknown");
  }

  friend bool operator==(const BigOrder& a, const BigOrder& b) {
    return a.value_ == b.value_;
  }

 private:
  std::optional<BigInt> value_;
};

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

}  // namespace mgk
