#pragma once

#include "triepal/label.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace triepal {

/// Dynamic rooted trie in forward orientation. Supports leaf insertion and
/// deletion and O(log h) ancestor-at-distance queries via per-node binary
/// lifting tables.
class Trie {
public:
    struct Stats {
        std::size_t edges = 0;   // N
        std::size_t leaves = 0;  // L (root excluded; 0 for a root-only trie)
        std::size_t height = 0;  // h

        friend bool operator==(const Stats&, const Stats&) = default;
    };

    Trie();

    NodeId root() const { return node_id(0); }

    /// Throws DuplicateEdgeLabel, UnknownNode or ReservedLabel.
    NodeId insert_leaf(NodeId parent, Label a);

    /// Throws NotALeaf, IsRoot or UnknownNode.
    void delete_leaf(NodeId v);

    /// Ancestor exactly `k` edges above `v`. Throws DistanceOutOfRange.
    NodeId ancestor_at(NodeId v, std::size_t k) const;

    /// Character immediately preceding the length-`len` suffix of
    /// str(root, v); nullopt when the suffix spans the whole path.
    std::optional<Label> char_before_suffix(NodeId v, std::size_t len) const;

    /// Same as char_before_suffix but maps "no character" to the sentinel.
    Label pre_char(NodeId v, std::size_t len) const {
        return char_before_suffix(v, len).value_or(Label::sentinel());
    }

    std::u32string path_string(NodeId v) const;
    Stats stats() const { return stats_; }

    bool is_live(NodeId v) const;
    bool is_leaf(NodeId v) const;
    NodeId parent(NodeId v) const;
    Label label(NodeId v) const;
    std::size_t depth(NodeId v) const;
    const std::map<Label, NodeId>& children(NodeId v) const;
    std::optional<NodeId> child(NodeId v, Label a) const;

    /// Number of handles issued so far (live or deleted).
    std::size_t capacity() const { return nodes_.size(); }
    std::size_t live_count() const { return stats_.edges + 1; }
    std::vector<NodeId> live_nodes() const;

private:
    struct Node {
        NodeId parent = kNoNode;
        Label label;
        std::size_t depth = 0;
        bool live = true;
        std::map<Label, NodeId> children;
        std::vector<NodeId> jump;  // jump[k] = ancestor at distance 2^k
    };

    const Node& checked(NodeId v) const;

    std::vector<Node> nodes_;
    std::vector<std::size_t> depth_count_;
    Stats stats_;
};

} // namespace triepal
