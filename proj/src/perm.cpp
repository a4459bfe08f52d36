#include "mgk/perm.hpp"

#include <algorithm>
#include <sstream>

namespace mgk {

int Perm::sign() const {
  std::vector<bool> seen(img_.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(img_[j]);
      ++len;
    }
    parity ^= static_cast<int>((len - 1) & 1u);
  }
  return parity ? -1 : 1;
}

BigInt Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  BigInt ord = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(img_[j]);
      ++len;
    }
    ord = lcm_big(ord, BigInt(static_cast<unsigned long>(len)));
  }
  return ord;
}

Perm Perm::power(const BigInt& e) const {
  Perm r(img_.size());
  std::vector<bool> seen(img_.size(), false);
  std::vector<std::int32_t> cyc;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    cyc.clear();
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<std::int32_t>(j));
      j = static_cast<std::size_t>(img_[j]);
    }
    const std::size_t len = cyc.size();
    BigInt shift_big = e % BigInt(static_cast<unsigned long>(len));
    if (shift_big < 0) shift_big += static_cast<unsigned long>(len);
    const std::size_t shift = shift_big.convert_to<std::size_t>();
    for (std::size_t t = 0; t < len; ++t)
      r.at(static_cast<std::size_t>(cyc[t])) = cyc[(t + shift) % len];
  }
  return r;
}

std::vector<std::vector<std::int32_t>> Perm::cycles() const {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::int32_t> cyc;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<std::int32_t>(j));
      j = static_cast<std::size_t>(img_[j]);
    }
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::int32_t> Perm::cycle_type() const {
  std::vector<std::int32_t> lens;
  for (const auto& c : cycles()) lens.push_back(static_cast<std::int32_t>(c.size()));
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

bool is_valid_permutation(std::span<const std::int32_t> images) {
  std::vector<bool> hit(images.size(), false);
  for (std::int32_t x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size()) return false;
    if (hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

}  // namespace mgk
