#include "support.hpp"
#include "triepal/error.hpp"
#include "triepal/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace triepal;
using namespace triepal::testing;

namespace {

PalGroup G(std::uint32_t s, std::uint32_t d, std::uint32_t t, char32_t b, char32_t c) {
    return PalGroup{s, d, t, t >= 2 ? std::optional<Label>(Label{b}) : std::nullopt, Label{c}};
}

std::vector<PalGroup> sample_groups() {
    return {G(1, 1, 3, 'a', 'b'), G(7, 4, 4, 'b', 'c'), G(39, 20, 2, 'c', 'c')};
}

Label no_lookup(std::uint32_t) {
    FAIL("cache miss");
    return Label{};
}

std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> tuples(const std::vector<PalGroup>& gs) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> out;
    for (const auto& g : gs) out.emplace_back(g.s, g.d, g.t);
    return out;
}

using T3 = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

} // namespace

TEST_SUITE("palgroups") {

TEST_CASE("three-group state extended by a") {
    auto groups = sample_groups();
    Extension ext = extend_groups(groups, L('a'), true, no_lookup);
    REQUIRE(ext.cases.size() == 3);
    CHECK(ext.cases[0] == ExtensionCase::AllButLongest);
    CHECK(ext.cases[1] == ExtensionCase::None);
    CHECK(ext.cases[2] == ExtensionCase::None);
    REQUIRE(ext.transformed.size() == 1);
    CHECK(tuples(ext.transformed) == std::vector<T3>{{3, 1, 2}});
    // The parent keeps the former longest member 3 of the first group.
    CHECK(tuples(ext.retained) == std::vector<T3>{{3, 0, 1}, {7, 4, 4}, {39, 20, 2}});
    CHECK(tuples(ext.leaf) == std::vector<T3>{{1, 1, 4}});
}

TEST_CASE("three-group state extended by c") {
    auto groups = sample_groups();
    Extension ext = extend_groups(groups, L('c'), false, no_lookup);
    CHECK(ext.cases == std::vector<ExtensionCase>{ExtensionCase::None, ExtensionCase::LongestOnly, ExtensionCase::WholeGroup});
    CHECK(tuples(ext.transformed) == std::vector<T3>{{21, 20, 1}, {41, 20, 2}});
    CHECK(tuples(ext.leaf) == std::vector<T3>{{1, 0, 1}, {21, 20, 3}});
    CHECK(tuples(ext.retained) == std::vector<T3>{{1, 1, 3}, {7, 4, 3}});
    // Moved members as stored at the parent, for undo.
    GroupList moved{ext.extracted, false};
    CHECK(moved.expanded() == std::vector<std::uint32_t>{19, 39, 59});
    CHECK(merge_groups(ext.retained, ext.extracted) == sample_groups());
}

TEST_CASE("three-group state extended by b") {
    auto groups = sample_groups();
    Extension ext = extend_groups(groups, L('b'), false, no_lookup);
    CHECK(ext.cases == std::vector<ExtensionCase>{ExtensionCase::LongestOnly, ExtensionCase::AllButLongest, ExtensionCase::None});
    CHECK(tuples(ext.leaf) == std::vector<T3>{{1, 0, 1}, {5, 4, 4}});
}

TEST_CASE("canonicalize splits and merges runs") {
    std::vector<PalGroup> pieces{G(1, 0, 1, 0, 'x'), G(2, 0, 1, 0, 'x'), G(3, 0, 1, 0, 'x'), G(5, 2, 3, 'y', 'z')};
    CHECK(tuples(canonicalize(pieces)) == std::vector<T3>{{1, 1, 3}, {5, 2, 3}});
    std::vector<PalGroup> odd{G(1, 0, 1, 0, 'x'), G(4, 3, 2, 'y', 'z')};
    CHECK(tuples(canonicalize(odd)) == std::vector<T3>{{1, 0, 1}, {4, 3, 2}});
    std::vector<PalGroup> split{G(2, 3, 3, 'y', 'z')};
    CHECK(tuples(canonicalize(split)) == std::vector<T3>{{2, 0, 1}, {5, 3, 2}});
    std::vector<PalGroup> bad{G(3, 0, 1, 0, 'x'), G(2, 0, 1, 0, 'x')};
    CHECK_THROWS_AS(canonicalize(bad), Error);
}

TEST_CASE("merge interleaves members") {
    auto a = std::vector<PalGroup>{G(1, 1, 2, 'a', 'a'), G(7, 4, 1, 0, 'c')};
    auto b = std::vector<PalGroup>{G(3, 4, 1, 0, 'a')};
    CHECK(tuples(merge_groups(a, b)) == std::vector<T3>{{1, 1, 3}, {7, 4, 1}});
    auto c = std::vector<PalGroup>{G(1, 2, 3, 'a', 'b')};
    auto d = std::vector<PalGroup>{G(2, 2, 2, 'c', 'd')};
    CHECK(tuples(merge_groups(c, d)) == std::vector<T3>{{1, 1, 5}});
}

TEST_CASE("first insertion") {
    GroupHarness h;
    NodeId v = h.insert(0u, 'a');
    CHECK(tuples(h.groups.groups(v).groups) == std::vector<T3>{{1, 0, 1}});
    CHECK(h.groups.longest_pal_suffix(v) == 1);
    CHECK(h.groups.count_maximal() == 1);
    CHECK(h.groups.groups(h.trie.root()).groups.empty());
}

TEST_CASE("count on empty trie") {
    GroupHarness h;
    try {
        h.groups.count_maximal();
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptyTrie);
    }
}

TEST_CASE("path aba") {
    GroupHarness h;
    NodeId v = h.path(h.trie.root(), U"aba");
    CHECK(h.groups.longest_pal_suffix(v) == 3);
    CHECK(h.groups.count_maximal() == 5);
    auto got = h.groups.enumerate_maximal();
    std::vector<std::pair<NodeId, std::uint32_t>> pairs;
    for (const auto& m : got) pairs.emplace_back(m.end, m.length);
    std::sort(pairs.begin(), pairs.end());
    CHECK(pairs == oracle::maximal_bruteforce(h.trie));
    CHECK(pairs == std::vector<std::pair<NodeId, std::uint32_t>>{
                       {node_id(1), 0}, {node_id(1), 1}, {node_id(2), 0}, {node_id(3), 1}, {node_id(3), 3}});
}

TEST_CASE("path ab") {
    GroupHarness h;
    NodeId v = h.path(h.trie.root(), U"ab");
    CHECK(h.groups.longest_pal_suffix(v) == 1);
}

TEST_CASE("star count") {
    GroupHarness h;
    for (char32_t c : std::u32string(U"pqrs")) h.insert(0u, c);
    CHECK(h.groups.count_maximal() == 4);
}

TEST_CASE("leaf members equal palindromic suffixes on random paths") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        GroupHarness h;
        NodeId v = h.trie.root();
        std::u32string s;
        const int sigma = 1 + rep % 3;
        for (int i = 0; i < 120; ++i) {
            char32_t c = U'a' + static_cast<char32_t>(rng() % sigma);
            v = h.insert(v, Label{c});
            s.push_back(c);
            CHECK(h.groups.groups(v).expanded() == oracle::palindromic_suffixes(s));
            CHECK(h.groups.longest_pal_suffix(v) == oracle::palindromic_suffixes(s).back());
        }
    }
}

TEST_CASE("insert then delete restores the parent") {
    GroupHarness h;
    NodeId u = h.path(h.trie.root(), U"abaab");
    const GroupList before = h.groups.groups(u);
    NodeId v = h.insert(u, L('a'));
    CHECK_FALSE(h.groups.groups(u) == before);
    h.remove(v);
    CHECK(h.groups.groups(u) == before);
    CHECK(h.groups.count_maximal() == 2 * 5 - 1);
}

TEST_CASE("delete with a foreign undo record") {
    GroupHarness h;
    NodeId a = h.insert(0u, 'a');
    NodeId b = h.insert(0u, 'b');
    try {
        h.groups.on_delete(b, h.undo[to_index(a)]);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UndoMismatch);
    }
}

TEST_CASE("out of order insertion") {
    GroupHarness h;
    NodeId a = h.insert(0u, 'a');
    NodeId b = h.trie.insert_leaf(a, L('b'));
    h.groups.on_insert(a, b, L('b'));
    try {
        h.groups.on_insert(a, b, L('b'));
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::StaleParentState);
    }
}

TEST_CASE("random scripts keep lists consistent") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        ScriptSpec spec;
        spec.seed = seed;
        spec.ops = 120;
        spec.sigma = 1 + seed % 3;
        spec.shape = static_cast<Shape>(seed % 4);
        GroupHarness h;
        for (const Op& op : generate_script(spec)) {
            h.apply(op);
            const auto st = h.trie.stats();
            if (st.edges > 0) CHECK(h.groups.count_maximal() == 2 * st.edges - st.leaves);
            CHECK(h.groups.stored_groups() <= 2 * st.edges);
            for (NodeId v : h.trie.live_nodes()) {
                const auto msg = check_group_structure(h.trie, v, h.groups.groups(v), true);
                CHECK_MESSAGE(msg.empty(), msg);
            }
        }
        std::vector<std::pair<NodeId, std::uint32_t>> pairs;
        for (const auto& m : h.groups.enumerate_maximal()) pairs.emplace_back(m.end, m.length);
        std::sort(pairs.begin(), pairs.end());
        CHECK(pairs == oracle::maximal_bruteforce(h.trie));
    }
}

TEST_CASE("unary trie") {
    GroupHarness h;
    NodeId v = h.path(h.trie.root(), std::u32string(40, U'a'));
    CHECK(tuples(h.groups.groups(v).groups) == std::vector<T3>{{1, 1, 40}});
    // Internal nodes keep only the palindrome spanning their whole path.
    for (NodeId w : h.trie.live_nodes()) {
        if (w == h.trie.root() || w == v) continue;
        const auto k = static_cast<std::uint32_t>(h.trie.depth(w));
        CHECK(tuples(h.groups.groups(w).groups) == std::vector<T3>{{k, 0, 1}});
        CHECK(h.groups.groups(w).eps_consumed);
    }
    CHECK(h.groups.count_maximal() == 2 * 40 - 1);
}

} // TEST_SUITE
