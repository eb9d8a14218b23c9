#include "support.hpp"
#include "triepal/error.hpp"

#include <doctest.h>

#include <random>

using namespace triepal;
using namespace triepal::testing;

TEST_SUITE("trie_core") {

TEST_CASE("fresh trie has only the root") {
    Trie t;
    CHECK(t.stats() == Trie::Stats{0, 0, 0});
    CHECK(t.path_string(t.root()).empty());
    CHECK(t.is_leaf(t.root()));
    Trie other;
    other.insert_leaf(other.root(), L('a'));
    CHECK(t.stats().edges == 0);
}

TEST_CASE("insert_leaf sets depth and rejects duplicates") {
    Trie t;
    NodeId a = t.insert_leaf(t.root(), L('a'));
    CHECK(t.depth(a) == 1);
    CHECK(t.parent(a) == t.root());
    CHECK_THROWS_AS(t.insert_leaf(t.root(), L('a')), Error);
    try {
        t.insert_leaf(t.root(), L('a'));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DuplicateEdgeLabel);
    }
    try {
        t.insert_leaf(t.root(), Label::sentinel());
        FAIL("sentinel accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ReservedLabel);
    }
    try {
        t.insert_leaf(node_id(42), L('x'));
        FAIL("unknown parent accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownNode);
    }
}

TEST_CASE("path aba") {
    Trie t;
    NodeId v = add_path(t, t.root(), U"aba");
    CHECK(t.path_string(v) == U"aba");
    CHECK(t.stats() == Trie::Stats{3, 1, 3});
    CHECK(t.char_before_suffix(v, 1) == L('b'));
    CHECK_FALSE(t.char_before_suffix(v, 3).has_value());
    CHECK(t.pre_char(v, 3) == Label::sentinel());
}

TEST_CASE("char_before_suffix on abacaba") {
    Trie t;
    NodeId v = add_path(t, t.root(), U"abacaba");
    CHECK(t.char_before_suffix(v, 3) == L('c'));
    CHECK_THROWS_AS(t.char_before_suffix(v, 8), Error);
}

TEST_CASE("ancestor_at") {
    Trie t;
    std::u32string s(20, U'a');
    NodeId leaf = add_path(t, t.root(), s);
    CHECK(t.ancestor_at(leaf, 0) == leaf);
    CHECK(t.ancestor_at(leaf, 20) == t.root());
    CHECK(t.depth(t.ancestor_at(leaf, 13)) == 7);
    try {
        t.ancestor_at(leaf, 21);
        FAIL("distance accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DistanceOutOfRange);
    }
}

TEST_CASE("ancestor_at matches walking up on a random trie") {
    std::mt19937 rng(5);
    Trie t;
    std::vector<NodeId> nodes{t.root()};
    for (int i = 0; i < 400; ++i) {
        NodeId p = nodes[rng() % nodes.size()];
        Label a{static_cast<char32_t>('a' + rng() % 26)};
        if (t.child(p, a)) continue;
        nodes.push_back(t.insert_leaf(p, a));
    }
    for (NodeId v : nodes) {
        NodeId w = v;
        for (std::size_t k = 0; k <= t.depth(v); ++k) {
            CHECK(t.ancestor_at(v, k) == w);
            if (w != t.root()) w = t.parent(w);
        }
    }
}

TEST_CASE("star counts") {
    Trie t;
    for (char32_t c : std::u32string(U"xyz")) t.insert_leaf(t.root(), Label{c});
    CHECK(t.stats() == Trie::Stats{3, 3, 1});
}

TEST_CASE("delete_leaf") {
    Trie t;
    NodeId a = t.insert_leaf(t.root(), L('a'));
    const auto before = t.stats();
    NodeId b = t.insert_leaf(a, L('b'));
    try {
        t.delete_leaf(a);
        FAIL("internal node deleted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotALeaf);
    }
    try {
        t.delete_leaf(t.root());
        FAIL("root deleted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IsRoot);
    }
    t.delete_leaf(b);
    CHECK(t.stats() == before);
    CHECK_FALSE(t.is_live(b));
    CHECK(t.live_count() == 2);
}

TEST_CASE("random scripts leave the same trie as replaying survivors") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        ScriptSpec spec;
        spec.seed = seed;
        spec.ops = 150;
        spec.sigma = 3;
        spec.delete_rate = 0.3;
        const auto ops = generate_script(spec);
        Trie t;
        for (const Op& op : ops) {
            if (op.kind == 'I')
                t.insert_leaf(node_id(op.node), op.label);
            else
                t.delete_leaf(node_id(op.node));
        }
        std::set<std::u32string> paths;
        std::size_t child_total = 0;
        std::size_t leaves = 0;
        std::size_t height = 0;
        for (NodeId v : t.live_nodes()) {
            paths.insert(t.path_string(v));
            child_total += t.children(v).size();
            if (v != t.root() && t.is_leaf(v)) ++leaves;
            height = std::max(height, t.depth(v));
            std::u32string back = t.path_string(v);
            std::reverse(back.begin(), back.end());
            std::u32string up;
            for (NodeId w = v; w != t.root(); w = t.parent(w)) up.push_back(t.label(w).code);
            CHECK(up == back);
        }
        Trie fresh;
        std::map<std::u32string, NodeId> at{{U"", fresh.root()}};
        for (const auto& p : paths) {
            if (p.empty()) continue;
            at[p] = fresh.insert_leaf(at.at(p.substr(0, p.size() - 1)), Label{p.back()});
        }
        CHECK(fresh.stats() == t.stats());
        CHECK(child_total == t.stats().edges);
        CHECK(leaves == t.stats().leaves);
        CHECK(height == t.stats().height);
    }
}

} // TEST_SUITE
