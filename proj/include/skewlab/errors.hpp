/**************************************************************************
 * Copyright 2026 The skewlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewlab {

/// A precondition of a library operation was violated (mismatched fields or
/// contexts, a zero divisor, a malformed literal, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed its configured candidate budget.
/// Searches never truncate silently; they throw this instead.
class GuardExceeded : public std::runtime_error {
public:
    GuardExceeded(std::string what, std::uint64_t required, std::uint64_t limit)
        : std::runtime_error(what + ": search space " + std::to_string(required) +
                             " exceeds limit " + std::to_string(limit)),
          required_(required), limit_(limit) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

inline constexpr std::uint64_t kDefaultSearchLimit = 1'000'000;

namespace detail {

/// Saturating integer power, used for guard arithmetic.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base)
            return UINT64_MAX;
        result *= base;
    }
    return result;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

inline void check_guard(const std::string& what, std::uint64_t required,
                        std::uint64_t limit) {
    if (required > limit)
        throw GuardExceeded(what, required, limit);
}

} // namespace detail

} // namespace skewlab
