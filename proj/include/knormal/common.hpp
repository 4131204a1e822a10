/*
   Copyright 2026 The knormal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KNORMAL_COMMON_HPP
#define KNORMAL_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace knormal {

using BigInt = boost::multiprecision::cpp_int;

/// Seed used whenever the caller does not supply one. Field moduli, splitting
/// fields and random searches all derive from it, so default runs reproduce.
inline constexpr std::uint64_t kDefaultSeed = 0x6b2d6e6f726d616cULL;

/// Largest q^n for which exhaustive (per-element) operations are allowed.
inline constexpr std::uint64_t kDefaultMaxCard = std::uint64_t{1} << 22;

/// Largest bit length of an integer handed to the factoring routines.
inline constexpr unsigned kDefaultFactorBits = 96;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input exceeds a configured size budget. `budget()` names it.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string budget, const std::string& what)
      : std::runtime_error(what), budget_(std::move(budget)) {}
  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string budget_;
};

/// Raised when an internal consistency check fails (a verified result did not verify).
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Returns v as uint64, throwing BudgetExceeded if it does not fit.
inline std::uint64_t to_u64(const BigInt& v, const char* what = "value") {
  if (v < 0 || v > BigInt(UINT64_MAX)) {
    throw BudgetExceeded("u64", std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

inline BigInt ipow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

}  // namespace knormal

#endif  // KNORMAL_COMMON_HPP
