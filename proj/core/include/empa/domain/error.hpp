#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace empa {

/// Failure categories. Each maps to exactly one HTTP status at the API edge.
enum class ErrorKind {
    malformed,      // request body is not parsable
    validation,     // parsable but violates a field rule
    not_found,
    conflict,
    forbidden,
    storage,
    upstream,       // text-generation provider failed
    configuration,
    internal,
};

[[nodiscard]] char const* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, std::string code, std::string const& message,
          std::optional<std::string> field = std::nullopt);

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

    /// Machine-readable code, e.g. "invalid_email".
    [[nodiscard]] std::string const& code() const noexcept { return code_; }

    /// Offending request field, when the error is tied to one.
    [[nodiscard]] std::optional<std::string> const& field() const noexcept { return field_; }

private:
    ErrorKind kind_;
    std::string code_;
    std::optional<std::string> field_;
};

[[nodiscard]] Error validation_error(std::string code, std::string const& message,
                                     std::optional<std::string> field = std::nullopt);
[[nodiscard]] Error not_found_error(std::string code, std::string const& message);
[[nodiscard]] Error storage_error(std::string const& message);
[[nodiscard]] Error upstream_error(std::string const& message);
[[nodiscard]] Error configuration_error(std::string const& message);

} // namespace empa
