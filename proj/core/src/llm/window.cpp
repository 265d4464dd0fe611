#include "empa/llm/window.hpp"

#include "empa/domain/error.hpp"

namespace empa::llm {

namespace {

constexpr bool is_space(char c) noexcept
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' || c == '\r';
}

constexpr bool ends_sentence(char c) noexcept
{
    return c == '.' || c == '!' || c == '?';
}

} // namespace

FeedbackWindow::FeedbackWindow(std::size_t max_words)
: max_words_(max_words)
{
    if (max_words_ == 0) {
        throw configuration_error("feedback window must allow at least one word");
    }
}

std::size_t count_words(std::string_view text) noexcept
{
    std::size_t words = 0;
    bool in_word = false;
    for (char c : text) {
        if (is_space(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++words;
        }
    }
    return words;
}

std::string enforce_window(std::string_view raw, FeedbackWindow window)
{
    if (count_words(raw) <= window.max_words()) {
        return std::string(raw);
    }

    std::size_t words = 0;
    std::size_t sentence_end = std::string_view::npos;  // one past the boundary word
    std::size_t word_end = 0;
    std::size_t i = 0;
    while (i < raw.size() && words < window.max_words()) {
        while (i < raw.size() && is_space(raw[i])) {
            ++i;
        }
        while (i < raw.size() && !is_space(raw[i])) {
            ++i;
        }
        ++words;
        word_end = i;
        if (ends_sentence(raw[word_end - 1])) {
            sentence_end = word_end;
        }
    }

    if (sentence_end != std::string_view::npos) {
        return std::string(raw.substr(0, sentence_end));
    }
    std::string out(raw.substr(0, word_end));
    out.push_back('.');
    return out;
}

} // namespace empa::llm
