#include "empa/domain/error.hpp"

#include <utility>

namespace empa {

char const* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::malformed: return "malformed";
    case ErrorKind::validation: return "validation";
    case ErrorKind::not_found: return "not_found";
    case ErrorKind::conflict: return "conflict";
    case ErrorKind::forbidden: return "forbidden";
    case ErrorKind::storage: return "storage";
    case ErrorKind::upstream: return "upstream";
    case ErrorKind::configuration: return "configuration";
    case ErrorKind::internal: return "internal";
    }
    return "internal";
}

Error::Error(ErrorKind kind, std::string code, std::string const& message,
             std::optional<std::string> field)
: std::runtime_error(message)
, kind_(kind)
, code_(std::move(code))
, field_(std::move(field))
{ }

Error validation_error(std::string code, std::string const& message,
                       std::optional<std::string> field)
{
    return Error(ErrorKind::validation, std::move(code), message, std::move(field));
}

Error not_found_error(std::string code, std::string const& message)
{
    return Error(ErrorKind::not_found, std::move(code), message);
}

Error storage_error(std::string const& message)
{
    return Error(ErrorKind::storage, "storage_failure", message);
}

Error upstream_error(std::string const& message)
{
    return Error(ErrorKind::upstream, "upstream_failure", message);
}

Error configuration_error(std::string const& message)
{
    return Error(ErrorKind::configuration, "configuration", message);
}

} // namespace empa
