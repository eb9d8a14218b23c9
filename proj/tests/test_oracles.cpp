#include "support.hpp"
#include "triepal/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace triepal;
using namespace triepal::testing;

namespace {

// Expands around each center directly.
std::vector<std::uint32_t> expand(std::u32string_view s) {
    std::vector<std::uint32_t> out;
    if (s.empty()) return out;
    const auto n = static_cast<std::int64_t>(s.size());
    for (std::int64_t c = 0; c < 2 * n - 1; ++c) {
        std::int64_t l = c / 2, r = (c + 1) / 2;
        while (l >= 0 && r < n && s[l] == s[r]) --l, ++r;
        out.push_back(static_cast<std::uint32_t>(r - l - 1));
    }
    return out;
}

} // namespace

TEST_SUITE("oracles") {

TEST_CASE("manacher small vectors") {
    using V = std::vector<std::uint32_t>;
    CHECK(oracle::manacher(U"aba") == V{1, 0, 3, 0, 1});
    CHECK(oracle::manacher(U"").empty());
    CHECK(oracle::manacher(U"aaaa") == V{1, 2, 3, 4, 3, 2, 1});
    CHECK(oracle::manacher(U"ab") == V{1, 0, 1});
}

TEST_CASE("manacher matches direct expansion") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 500; ++rep) {
        std::u32string s;
        const std::size_t n = rng() % 40;
        const int sigma = 1 + rep % 3;
        for (std::size_t i = 0; i < n; ++i) s.push_back(U'a' + rng() % sigma);
        CHECK(oracle::manacher(s) == expand(s));
    }
}

TEST_CASE("palindromic suffixes") {
    using V = std::vector<std::uint32_t>;
    CHECK(oracle::palindromic_suffixes(U"abaaba") == V{1, 3, 6});
    CHECK(oracle::palindromic_suffixes(U"aaa") == V{1, 2, 3});
    CHECK(oracle::palindromic_suffixes(U"").empty());
}

TEST_CASE("maximal and distinct on a small trie") {
    Trie t;
    NodeId ab = add_path(t, t.root(), U"ab");
    NodeId aba = t.insert_leaf(ab, L('a'));
    NodeId abb = t.insert_leaf(ab, L('b'));
    // Count identity 2N - L.
    CHECK(oracle::maximal_bruteforce(t).size() == 2 * 4 - 2);
    CHECK(oracle::distinct_bruteforce(t) == std::set<std::u32string>{U"a", U"b", U"aba", U"bb"});
    CHECK(oracle::backward_string(t, abb) == std::u32string(U"bba") + char32_t{0});
    (void)aba;
}

TEST_CASE("naive nca walks parents") {
    oracle::NaiveNca n(L('a'));
    auto x = n.insert_leaf(0, L('b'));
    auto y = n.insert_leaf(x, L('a'));
    CHECK(n.nca(y, L('b')) == x);
    CHECK(n.nca(y, L('a')) == 0u);
    CHECK_FALSE(n.nca(0, L('a')).has_value());
}

} // TEST_SUITE
