#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>

namespace empa {

/// UTC instant with millisecond resolution, the precision used on the wire.
using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

/// Source of "now"; injectable so stores can be driven by a fake clock.
using Clock = std::function<Timestamp()>;

[[nodiscard]] Timestamp now_utc();
[[nodiscard]] Clock system_clock();

/// "2026-10-16T08:30:00.125Z"
[[nodiscard]] std::string format_timestamp(Timestamp ts);

/// Inverse of format_timestamp. Throws Error(malformed) on anything else.
[[nodiscard]] Timestamp parse_timestamp(std::string_view text);

} // namespace empa
