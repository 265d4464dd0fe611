#include "empa/api/server.hpp"
#include "empa/llm/mock_provider.hpp"
#include "empa/storage/memory_store.hpp"

#include "service_harness.hpp"

#include <httplib.h>

#include <gtest/gtest.h>

#include <thread>

namespace empa::api {
namespace {

using nlohmann::json;

class HttpServerTest : public ::testing::Test
{
protected:
    HttpServerTest()
    : server_(harness_.service())
    {
        port_ = server_.bind("127.0.0.1", 0);
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~HttpServerTest() override
    {
        server_.stop();
        thread_.join();
    }

    httplib::Client client() const
    {
        httplib::Client c("127.0.0.1", port_);
        c.set_read_timeout(std::chrono::seconds{5});
        return c;
    }

    storage::MemoryStore store_;
    llm::MockProvider echo_ = llm::MockProvider::echo();
    testing::ServiceHarness harness_{store_, echo_};
    HttpServer server_;
    int port_ = -1;
    std::thread thread_;
};

TEST_F(HttpServerTest, RegisterChatAndReadHistoryOverSocket)
{
    ASSERT_GT(port_, 0);
    auto c = client();
    auto submitted = c.Post("/api/submit", testing::ServiceHarness::registration("Ada").dump(),
                            "application/json");
    ASSERT_TRUE(submitted);
    ASSERT_EQ(submitted->status, 200) << submitted->body;
    EXPECT_EQ(submitted->get_header_value("Content-Type"), "application/json");
    auto const user_id = json::parse(submitted->body)["user_id"].get<std::string>();

    auto chatted = c.Post("/api/chatbot", json{{"user_id", user_id}, {"message", "hi"}}.dump(),
                          "application/json");
    ASSERT_TRUE(chatted);
    EXPECT_EQ(chatted->status, 200);

    auto history = c.Get("/api/chat-history/" + user_id);
    ASSERT_TRUE(history);
    EXPECT_EQ(json::parse(history->body)["messages"].size(), 3U);
}

TEST_F(HttpServerTest, ErrorsKeepJsonShape)
{
    auto c = client();
    auto missing = c.Get("/api/chat-history/nobody");
    ASSERT_TRUE(missing);
    EXPECT_EQ(missing->status, 404);
    EXPECT_EQ(json::parse(missing->body)["http_status"], 404);

    auto malformed = c.Post("/api/chatbot", "{", "application/json");
    ASSERT_TRUE(malformed);
    EXPECT_EQ(malformed->status, 400);

    auto big = c.Post("/api/submit", std::string(64 * 1024, 'x'), "application/json");
    ASSERT_TRUE(big);
    EXPECT_EQ(big->status, 400);
    EXPECT_EQ(json::parse(big->body)["code"], "body_too_large");

    auto wrong_method = c.Put("/api/submit", "{}", "application/json");
    ASSERT_TRUE(wrong_method);
    EXPECT_EQ(wrong_method->status, 404);
}

TEST_F(HttpServerTest, PreflightCarriesCorsHeaders)
{
    auto c = client();
    httplib::Headers headers{{"Origin", testing::test_origin},
                             {"Access-Control-Request-Method", "POST"}};
    auto preflight = c.Options("/api/chatbot", headers);
    ASSERT_TRUE(preflight);
    EXPECT_EQ(preflight->status, 204);
    EXPECT_EQ(preflight->get_header_value("Access-Control-Allow-Origin"), testing::test_origin);

    auto denied = c.Get("/api/curriculum", httplib::Headers{{"Origin", "https://other.example"}});
    ASSERT_TRUE(denied);
    EXPECT_EQ(denied->status, 200);
    EXPECT_FALSE(denied->has_header("Access-Control-Allow-Origin"));
}

} // namespace
} // namespace empa::api
