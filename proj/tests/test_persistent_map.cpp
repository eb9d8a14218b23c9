#include "support.hpp"
#include "triepal/persistent_map.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

using namespace triepal;
using namespace triepal::testing;

using Map = PersistentMap<Label, std::uint32_t>;

TEST_SUITE("persistent_map") {

TEST_CASE("empty version") {
    Map m;
    CHECK(m.size() == 0);
    CHECK_FALSE(m.get(L('a')).has_value());
}

TEST_CASE("old versions are untouched") {
    Map empty;
    Map one = empty.with_set(L('a'), 7);
    CHECK_FALSE(empty.get(L('a')).has_value());
    CHECK(one.get(L('a')) == 7u);
    Map two = one.with_set(L('a'), 9);
    CHECK(one.get(L('a')) == 7u);
    CHECK(two.get(L('a')) == 9u);
    CHECK(two.size() == 1);
}

TEST_CASE("derived versions stay independently readable") {
    Map base;
    std::vector<Map> versions;
    for (std::uint32_t i = 0; i < 100; ++i) versions.push_back(base.with_set(Label{U'a' + i}, i));
    for (std::uint32_t i = 0; i < 100; ++i) {
        CHECK(versions[i].size() == 1);
        CHECK(versions[i].get(Label{U'a' + i}) == i);
        CHECK_FALSE(versions[i].get(Label{U'a' + (i + 1) % 100}).has_value());
    }
}

TEST_CASE("random versions match a snapshot log") {
    std::mt19937 rng(9);
    std::vector<Map> versions{Map{}};
    std::vector<std::map<Label, std::uint32_t>> snaps{{}};
    for (int i = 0; i < 1000; ++i) {
        const std::size_t from = rng() % versions.size();
        const Label k{static_cast<char32_t>('a' + rng() % 40)};
        const std::uint32_t v = rng() % 1000;
        versions.push_back(versions[from].with_set(k, v));
        auto snap = snaps[from];
        snap[k] = v;
        snaps.push_back(snap);
    }
    for (std::size_t i = 0; i < versions.size(); ++i) {
        CHECK(versions[i].size() == snaps[i].size());
        std::map<Label, std::uint32_t> content;
        versions[i].for_each([&](const Label& k, const std::uint32_t& v) { content[k] = v; });
        CHECK(content == snaps[i]);
        for (char32_t c = 'a'; c < 'a' + 40; ++c) {
            auto it = snaps[i].find(Label{c});
            auto got = versions[i].get(Label{c});
            CHECK(got.has_value() == (it != snaps[i].end()));
            if (got && it != snaps[i].end()) CHECK(*got == it->second);
        }
    }
}

TEST_CASE("structural sharing") {
    Map m;
    for (std::uint32_t i = 0; i < 1024; ++i) m = m.with_set(Label{U'a' + i}, i);
    CHECK(m.height() <= 1.45 * std::log2(1024.0) + 2);
    std::set<const void*> old_nodes;
    m.visit_nodes([&](const void* p) { old_nodes.insert(p); });
    Map n = m.with_set(Label{U'a' + 5000}, 1);
    std::size_t fresh = 0;
    n.visit_nodes([&](const void* p) { fresh += old_nodes.contains(p) ? 0 : 1; });
    CHECK(fresh <= 2 * (std::log2(1024.0) + 1));
    CHECK(m.size() == 1024);
    CHECK(n.size() == 1025);
}

} // TEST_SUITE
