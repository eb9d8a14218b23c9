#pragma once

#include "triepal/label.hpp"
#include "triepal/palgroups.hpp"
#include "triepal/oracles.hpp"
#include "triepal/script.hpp"
#include "triepal/suffix_tree.hpp"
#include "triepal/trie.hpp"

#include <string_view>
#include <vector>

namespace triepal::testing {

inline Label L(char32_t c) { return Label{c}; }

/// Appends the characters of `s` as a downward path starting below `from`;
/// returns the last node.
inline NodeId add_path(Trie& t, NodeId from, std::u32string_view s) {
    for (char32_t c : s) from = t.insert_leaf(from, Label{c});
    return from;
}

/// Trie plus palgroups kept in lockstep, with undo records per leaf.
struct GroupHarness {
    Trie trie;
    PalGroups groups{trie};
    std::vector<UndoRecord> undo;

    NodeId insert(NodeId parent, Label a) {
        NodeId v = trie.insert_leaf(parent, a);
        auto r = groups.on_insert(parent, v, a);
        if (undo.size() <= to_index(v)) undo.resize(to_index(v) + 1);
        undo[to_index(v)] = r.undo;
        return v;
    }
    NodeId insert(std::uint32_t parent, char32_t a) { return insert(node_id(parent), Label{a}); }
    NodeId path(NodeId from, std::u32string_view s) {
        for (char32_t c : s) from = insert(from, Label{c});
        return from;
    }
    void remove(NodeId v) {
        groups.on_delete(v, undo[to_index(v)]);
        trie.delete_leaf(v);
    }
    void apply(const Op& op) {
        if (op.kind == 'I')
            insert(node_id(op.node), op.label);
        else
            remove(node_id(op.node));
    }
};

/// Structural checks on one node's list: strictly increasing members,
/// non-decreasing differences, the gap-growth rule, and (when `trie` given)
/// period d of every member of a group with t >= 2. Returns an empty string
/// on success, else a description.
std::string check_group_structure(const Trie& trie, NodeId v, const GroupList& list, bool check_periods);

/// Suffix tree as a string -> parent-string map, comparable with naive_st.
oracle::NaiveSt st_as_map(const SuffixTree& st);

/// Marks are exactly {(w, c) : c.str(w) spells a node, c a real label}.
/// Empty on success.
std::string check_marks(const SuffixTree& st);

/// For a mark u -> v by c: the subtree of v is isomorphic to u's subtree
/// with every node not marked by c contracted. Empty on success.
std::string check_contraction(const SuffixTree& st, StId u, Label c);

} // namespace triepal::testing
