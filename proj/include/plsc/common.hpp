#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace plsc {

// Coordinate subset as a bitmask; bit (v-1) holds value v (values are 1-based).
using Mask = std::uint64_t;

// Masks cap the supported board order.
inline constexpr int kMaxOrder = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit_of(int v) { return Mask{1} << (v - 1); }

inline bool has_bit(Mask m, int v) { return (m >> (v - 1)) & Mask{1}; }

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Iterates the 1-based values of a mask in increasing order.
class Bits {
 public:
  explicit Bits(Mask m) : m_(m) {}
  class iterator {
   public:
    explicit iterator(Mask m) : m_(m) {}
    int operator*() const { return std::countr_zero(m_) + 1; }
    iterator& operator++() {
      m_ &= m_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return m_ != o.m_; }

   private:
    Mask m_;
  };
  iterator begin() const { return iterator(m_); }
  iterator end() const { return iterator(0); }

 private:
  Mask m_;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad grid, attacking rooks, bad flags).
struct ParseError : Error {
  using Error::Error;
};

// An exhaustive scan was requested above the configured order bound.
struct BoundError : Error {
  using Error::Error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }
[[noreturn]] inline void fail_parse(const std::string& msg) {
  throw ParseError(msg);
}
[[noreturn]] inline void fail_bound(const std::string& msg) {
  throw BoundError(msg);
}

}  // namespace plsc
