/*
   Copyright 2026 The fourcirc Authors

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

#ifndef FOURCIRC_ERRORS_HPP
#define FOURCIRC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fourcirc {

/// Bad user input: non-prime characteristic, reducible modulus, malformed
/// polynomial, violated gcd(n, q) = 1, and so on.
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive sweep would exceed the configured workload cap.
class WorkloadError : public std::runtime_error {
   public:
    WorkloadError(const std::string& what, std::uint64_t required, std::uint64_t cap)
        : std::runtime_error(what + " (requires " + std::to_string(required) + ", cap " + std::to_string(cap) + ")"),
          required_(required),
          cap_(cap) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t cap() const noexcept { return cap_; }

   private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

/// Default number of codeword / generator-pair evaluations a sweep may perform.
inline constexpr std::uint64_t kDefaultWorkloadCap = std::uint64_t{1} << 26;

}  // namespace fourcirc

#endif
