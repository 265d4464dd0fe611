#include "empa/storage/open_store.hpp"

#include "empa/domain/error.hpp"
#include "empa/storage/memory_store.hpp"
#include "empa/storage/sqlite_store.hpp"

namespace empa::storage {

std::unique_ptr<Store> open_store(std::string_view url, StoreOptions options)
{
    if (url == "memory:" || url == "memory://") {
        return std::make_unique<MemoryStore>(std::move(options));
    }
    for (std::string_view prefix : {"sqlite://", "sqlite:"}) {
        if (url.starts_with(prefix)) {
            auto const path = url.substr(prefix.size());
            if (path.empty()) {
                throw configuration_error("DATABASE_URL has an empty sqlite path");
            }
            return std::make_unique<SqliteStore>(std::string(path), std::move(options));
        }
    }
    throw configuration_error("unsupported DATABASE_URL scheme: " + std::string(url));
}

} // namespace empa::storage
