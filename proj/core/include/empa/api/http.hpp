#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

namespace empa::api {

struct CaseInsensitiveLess
{
    bool operator()(std::string const& a, std::string const& b) const noexcept
    {
        return std::lexicographical_compare(
            a.begin(), a.end(), b.begin(), b.end(), [](unsigned char x, unsigned char y) {
                return std::tolower(x) < std::tolower(y);
            });
    }
};

using Headers = std::map<std::string, std::string, CaseInsensitiveLess>;

/// Transport-neutral request; the HTTP server and in-process tests both
/// drive Service through these.
struct HttpRequest
{
    std::string method;
    std::string path;  // without query string
    Headers headers;
    std::string body;
};

struct HttpResponse
{
    int status{200};
    Headers headers;
    std::string body;
};

} // namespace empa::api
