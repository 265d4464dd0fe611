#include "empa/domain/time.hpp"

#include "empa/domain/error.hpp"

#include <charconv>
#include <cstdio>

namespace empa {

Timestamp now_utc()
{
    return std::chrono::time_point_cast<std::chrono::milliseconds>(
        std::chrono::system_clock::now());
}

Clock system_clock()
{
    return [] { return now_utc(); };
}

std::string format_timestamp(Timestamp ts)
{
    using namespace std::chrono;
    auto const day = floor<days>(ts);
    year_month_day const ymd{day};
    hh_mm_ss const tod{ts - day};

    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ",
                  static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()),
                  static_cast<int>(tod.hours().count()),
                  static_cast<int>(tod.minutes().count()),
                  static_cast<int>(tod.seconds().count()),
                  static_cast<int>(tod.subseconds().count()));
    return buf;
}

namespace {

int read_digits(std::string_view text, std::size_t pos, std::size_t width)
{
    int value = 0;
    auto const* first = text.data() + pos;
    auto const* last = first + width;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw Error(ErrorKind::malformed, "bad_timestamp",
                    "malformed timestamp: " + std::string(text));
    }
    return value;
}

} // namespace

Timestamp parse_timestamp(std::string_view text)
{
    using namespace std::chrono;
    // YYYY-MM-DDTHH:MM:SS.mmmZ
    constexpr std::size_t expected_size = 24;
    auto const bad = [&] {
        return Error(ErrorKind::malformed, "bad_timestamp",
                     "malformed timestamp: " + std::string(text));
    };
    if (text.size() != expected_size || text[4] != '-' || text[7] != '-' ||
        text[10] != 'T' || text[13] != ':' || text[16] != ':' || text[19] != '.' ||
        text[23] != 'Z') {
        throw bad();
    }
    year_month_day const ymd{year{read_digits(text, 0, 4)},
                             month{static_cast<unsigned>(read_digits(text, 5, 2))},
                             day{static_cast<unsigned>(read_digits(text, 8, 2))}};
    if (!ymd.ok()) {
        throw bad();
    }
    int const h = read_digits(text, 11, 2);
    int const m = read_digits(text, 14, 2);
    int const s = read_digits(text, 17, 2);
    int const ms = read_digits(text, 20, 3);
    if (h > 23 || m > 59 || s > 59) {
        throw bad();
    }
    return sys_days{ymd} + hours{h} + minutes{m} + seconds{s} + milliseconds{ms};
}

} // namespace empa
