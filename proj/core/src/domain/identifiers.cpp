#include "empa/domain/identifiers.hpp"

#include "empa/domain/error.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace empa {

namespace {

bool is_space_or_control(char c) noexcept
{
    auto const u = static_cast<unsigned char>(c);
    return u <= 0x20 || u == 0x7f;
}

} // namespace

bool validate_email(std::string_view candidate) noexcept
{
    for (char c : candidate) {
        if (is_space_or_control(c)) {
            return false;
        }
    }
    auto const at = candidate.find('@');
    if (at == std::string_view::npos || at == 0 ||
        candidate.find('@', at + 1) != std::string_view::npos) {
        return false;
    }
    auto const domain = candidate.substr(at + 1);
    if (domain.find('.') == std::string_view::npos) {
        return false;
    }
    std::size_t start = 0;
    while (true) {
        auto const dot = domain.find('.', start);
        auto const label = domain.substr(start, dot == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : dot - start);
        if (label.empty()) {
            return false;
        }
        if (dot == std::string_view::npos) {
            return true;
        }
        start = dot + 1;
    }
}

std::string new_random_id()
{
    static constexpr char hex[] = "0123456789abcdef";
    std::array<std::uint32_t, 4> words{};
    try {
        thread_local std::random_device device;
        for (auto& word : words) {
            word = device();
        }
    } catch (std::exception const& e) {
        throw Error(ErrorKind::internal, "entropy_unavailable",
                    std::string("entropy source unavailable: ") + e.what());
    }
    std::string out;
    out.reserve(32);
    for (auto word : words) {
        for (int shift = 28; shift >= 0; shift -= 4) {
            out.push_back(hex[(word >> shift) & 0xF]);
        }
    }
    return out;
}

} // namespace empa
