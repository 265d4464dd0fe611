#pragma once

#include "empa/storage/store.hpp"

#include <memory>
#include <string_view>

namespace empa::storage {

/// Opens the store named by a DATABASE_URL value:
///   "memory:"                      process-local MemoryStore
///   "sqlite:PATH" / "sqlite://PATH" SqliteStore on PATH
/// Anything else is a configuration error.
[[nodiscard]] std::unique_ptr<Store> open_store(std::string_view url, StoreOptions options = {});

} // namespace empa::storage
