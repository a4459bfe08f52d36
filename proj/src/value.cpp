#include "mgk/value.hpp"

#include <sstream>

namespace mgk {

namespace {
inline std::size_t mix(std::size_t h, std::size_t x) {
  // splitmix64-style combiner
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  x ^= x >> 31;
  return h * 0x100000001b3ull ^ x;
}
}  // namespace

std::size_t Value::hash() const {
  switch (v_.index()) {
    case 0:
      return mix(0xcbf29ce484222325ull,
                 static_cast<std::size_t>(std::get<0>(v_)) ^ 0x1ull);
    case 1: {
      std::size_t h = 0xcbf29ce484222325ull ^ 0x2ull;
      for (std::int32_t x : std::get<1>(v_))
        h = mix(h, static_cast<std::size_t>(static_cast<std::uint32_t>(x)));
      return h;
    }
    default: {
      std::size_t h = 0xcbf29ce484222325ull ^ 0x3ull;
      for (const Value& x : as_list()) h = mix(h, x.hash());
      return h;
    }
  }
}

std::string Value::repr() const {
  std::ostringstream os;
  switch (v_.index()) {
    case 0:
      os << std::get<0>(v_);
      break;
    case 1: {
      os << '[';
      const auto& v = std::get<1>(v_);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
      }
      os << ']';
      break;
    }
    default: {
      os << '(';
      const List& xs = as_list();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ' ';
        os << xs[i].repr();
      }
      os << ')';
      break;
    }
  }
  return os.str();
}

}  // namespace mgk
