#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace empa::llm {

inline constexpr std::size_t default_feedback_words = 80;

/// Upper bound on the length of a mentor reply, in words.
class FeedbackWindow
{
public:
    /// Throws a configuration Error when max_words is zero.
    explicit FeedbackWindow(std::size_t max_words = default_feedback_words);

    [[nodiscard]] std::size_t max_words() const noexcept { return max_words_; }

private:
    std::size_t max_words_;
};

/// Number of maximal runs of non-whitespace characters. Whitespace is the
/// ASCII set " \t\n\v\f\r"; hyphenated compounds count as one word.
[[nodiscard]] std::size_t count_words(std::string_view text) noexcept;

/// Returns raw unchanged when it fits the window. Otherwise cuts after the
/// last word ending in '.', '!' or '?' among the first max_words words, or,
/// failing that, after word max_words with a '.' appended.
[[nodiscard]] std::string enforce_window(std::string_view raw, FeedbackWindow window);

} // namespace empa::llm
