#include "empa/domain/error.hpp"
#include "empa/llm/provider.hpp"
#include "empa/llm/window.hpp"

namespace empa::llm {

ProviderResponse generate(ConversationContext const& context, Provider& provider)
{
    if (auto violation = context_violation(context); !violation.empty()) {
        throw Error(ErrorKind::internal, "invalid_context", violation);
    }

    auto const start = std::chrono::steady_clock::now();
    std::string content;
    try {
        content = provider.complete(context);
    } catch (Error const& e) {
        if (e.kind() == ErrorKind::upstream) {
            throw;
        }
        throw upstream_error(e.what());
    } catch (std::exception const& e) {
        throw upstream_error(e.what());
    }
    auto const latency = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);

    if (count_words(content) == 0) {
        throw upstream_error("provider returned an empty reply");
    }
    return ProviderResponse{std::move(content), latency};
}

} // namespace empa::llm
