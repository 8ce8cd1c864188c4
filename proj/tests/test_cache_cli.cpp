#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "aperylab/cache.hpp"
#include "aperylab/errors.hpp"

using namespace aperylab;

namespace {
std::filesystem::path temp_dir(const char* tag) {
    auto p = std::filesystem::temp_directory_path() /
             (std::string("aperylab_test_") + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(p);
    return p;
}
} // namespace

TEST_CASE("fnv1a64") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") != fnv1a64("b"));
}

TEST_CASE("cache store/load round trip") {
    Cache cache(temp_dir("roundtrip"));
    CacheKey key{"seqpair", "V12", 40};
    CHECK(!cache.load(key).has_value());

    nlohmann::json payload{{"a", {"1", "5", "73"}}, {"b", {"0", "1", "117/8"}}};
    cache.store(key, payload);
    auto back = cache.load(key);
    REQUIRE(back.has_value());
    CHECK(*back == payload);
    CHECK(back->dump() == payload.dump());  // byte-identical

    // no temporary files left behind
    long leftovers = 0;
    for (const auto& entry : std::filesystem::directory_iterator(cache.dir()))
        if (entry.path().string().find(".tmp") != std::string::npos) ++leftovers;
    CHECK(leftovers == 0);
    std::filesystem::remove_all(cache.dir());
}

TEST_CASE("cache rejects corrupt entries") {
    Cache cache(temp_dir("corrupt"));
    CacheKey key{"seqpair", "V18", 10};
    cache.store(key, nlohmann::json{{"a", {"1", "3"}}});
    auto file = cache.dir() / key.filename();

    // flip a payload byte; the checksum must catch it
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("\"3\"");
    REQUIRE(pos != std::string::npos);
    text[pos + 1] = '4';
    std::ofstream(file) << text;
    CHECK(!cache.load(key).has_value());

    // truncated garbage is ignored too
    std::ofstream(file) << "{not json";
    CHECK(!cache.load(key).has_value());
    std::filesystem::remove_all(cache.dir());
}

TEST_CASE("distinct keys map to distinct files") {
    CacheKey a{"seqpair", "V12", 40}, b{"seqpair", "V12", 80}, c{"seqpair", "G(2,5)", 40};
    CHECK(a.filename() != b.filename());
    CHECK(a.filename() != c.filename());
    CHECK(c.filename().find('(') == std::string::npos);  // shell-safe names
}
