#pragma once

#include "triepal/label.hpp"
#include "triepal/order_list.hpp"
#include "triepal/trie.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace triepal {

using StId = std::uint32_t;

/// Online suffix tree of the backward trie: the compacted trie of the
/// strings str(v)$, one per live trie node, where str(v) is the path label
/// read from v up to the root. Nodes marked by c point to the node spelling
/// c followed by their own string; a colored Euler tour of the tree locates
/// insertion points.
class SuffixTree {
public:
    explicit SuffixTree(const Trie& trie);

    /// Call right after trie.insert_leaf(u, c) returned v.
    void on_insert(NodeId u, NodeId v, Label c);
    /// Call right before trie.delete_leaf(v). Throws NotALeaf.
    void on_delete(NodeId v);

    StId root() const { return 0; }
    StId leaf(NodeId v) const;
    StId lca(StId a, StId b) const;

    /// Length of the longest suffix of str(root, v) occurring elsewhere.
    std::size_t longest_repeating_suffix_len(NodeId v) const;
    bool is_unique(NodeId v, std::size_t p_len) const;

    bool is_live(StId w) const { return w < nodes_.size() && nodes_[w].live; }
    std::size_t sdepth(StId w) const { return at(w).sdepth; }
    std::optional<StId> parent(StId w) const;
    const std::map<Label, StId>& children(StId w) const { return at(w).children; }
    const std::map<Label, StId>& marks(StId w) const { return at(w).marks; }
    std::optional<NodeId> leaf_of(StId w) const { return at(w).leaf_of; }
    /// i-th character of str(w); the sentinel stands for the terminator.
    Label char_at(StId w, std::size_t i) const;
    std::u32string str(StId w) const;

    std::vector<StId> live_nodes() const;
    std::size_t node_count() const { return live_; }
    std::size_t mark_count() const { return mark_count_; }
    std::vector<StId> euler_tour() const;
    const OrderList& list() const { return list_; }

    /// Cross-check every insertion point against a naive descent from the
    /// root; mismatches raise InconsistentState.
    void set_verify(bool on) { verify_ = on; }

private:
    struct Node {
        std::size_t sdepth = 0;
        StId parent = 0;
        std::map<Label, StId> children;
        std::map<Label, StId> marks;
        std::optional<std::pair<StId, Label>> mark_source;
        ElemId first = kFront;
        ElemId last = kFront;
        NodeId ref = kNoNode;
        std::optional<NodeId> leaf_of;
        bool live = true;
    };

    const Node& at(StId w) const;
    StId new_node(Node n);
    void place(StId w, ElemId first, ElemId last);
    void add_mark(StId from, Label c, StId to);
    void drop_mark(StId from, Label c);
    void unplace(StId w);
    std::size_t naive_match(NodeId u, Label c) const;

    const Trie& trie_;
    std::vector<Node> nodes_;
    std::vector<StId> leaf_;   // trie node -> leaf
    std::vector<StId> owner_;  // ElemId -> node
    OrderList list_;
    std::size_t live_ = 0;
    std::size_t mark_count_ = 0;
    bool verify_ = false;
};

} // namespace triepal
