#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conreal {

// A bounded least-number search ran past its cap without finding a witness.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

// quotient_lift found no digit block matching the target node number.
class NoLiftFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// path extraction could not pick a child node; only reachable when the
// input real is not actually in the unit interval.
class NoCandidateChildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, digit strings, bar files, code specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Default cap for all unbounded least-number searches (tree nodes or steps).
inline constexpr std::uint64_t kDefaultCap = 1u << 16;

}  // namespace conreal
