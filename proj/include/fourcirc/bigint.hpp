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

#ifndef FOURCIRC_BIGINT_HPP
#define FOURCIRC_BIGINT_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fourcirc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp)); }

/// Natural log of a positive integer of any size.
inline double big_log(const BigInt& v) {
    if (v <= 0) return -INFINITY;
    const std::size_t bits = boost::multiprecision::msb(v);
    const std::size_t shift = bits > 60 ? bits - 60 : 0;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace fourcirc

#endif
