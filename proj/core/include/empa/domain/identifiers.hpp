#pragma once

#include "empa/domain/types.hpp"

#include <string>
#include <string_view>

namespace empa {

/// Syntactic address check: one '@', non-empty local part, a dotted domain
/// whose labels are all non-empty, and no whitespace or control characters.
[[nodiscard]] bool validate_email(std::string_view candidate) noexcept;

/// 128 random bits from the OS entropy source as 32 lowercase hex digits.
/// Throws Error(internal) if the entropy source is unavailable.
[[nodiscard]] std::string new_random_id();

[[nodiscard]] inline UserId new_user_id() { return UserId{new_random_id()}; }
[[nodiscard]] inline MessageId new_message_id() { return MessageId{new_random_id()}; }

} // namespace empa
