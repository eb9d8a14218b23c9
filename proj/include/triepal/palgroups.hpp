#pragma once

#include "triepal/label.hpp"
#include "triepal/trie.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace triepal {

/// Arithmetic progression <s, d, t> of palindrome lengths ending at one node.
///
/// For t >= 2, `d` is the common difference (and a period of every member).
/// For t == 1, `d` is the gap to the longest member of the previous group,
/// or 0 when the group is the first one of its list.
///
/// `pre_inner` caches the character preceding every non-longest member and
/// `pre_longest` the character preceding the longest member. nullopt means
/// "not resolved yet"; the sentinel label means "preceded by the root".
/// Caches are derived data and are ignored by operator==.
struct PalGroup {
    std::uint32_t s = 0;
    std::uint32_t d = 0;
    std::uint32_t t = 0;
    std::optional<Label> pre_inner;
    std::optional<Label> pre_longest;

    std::uint32_t longest() const { return s + (t - 1) * d; }

    friend bool operator==(const PalGroup& x, const PalGroup& y) {
        return x.s == y.s && x.d == y.d && x.t == y.t;
    }
};

/// Maximal palindromes ending at one trie node, excluding the virtual empty
/// palindrome, which is tracked by `eps_consumed`.
struct GroupList {
    std::vector<PalGroup> groups;
    bool eps_consumed = false;

    std::size_t member_count() const;
    std::vector<std::uint32_t> expanded() const;

    friend bool operator==(const GroupList&, const GroupList&) = default;
};

enum class ExtensionCase : int {
    WholeGroup = 1,     // a = b = c
    AllButLongest = 2,  // a = b != c
    LongestOnly = 3,    // a != b, a = c
    None = 4,           // a != b, a != c
};

/// Result of extending one node's groups by a new child label.
struct Extension {
    std::vector<ExtensionCase> cases;      // one per input group
    std::vector<PalGroup> transformed;     // per-group moved progression (lengths +2), before merging
    std::vector<std::size_t> transformed_from;
    std::vector<PalGroup> extracted;       // moved members as they were stored at the parent
    std::vector<PalGroup> retained;        // canonical complement left at the parent
    std::vector<PalGroup> leaf;            // canonical groups of the new leaf
};

/// Character preceding the palindromic suffix of the given length at the
/// parent node (sentinel when the suffix is the whole path).
using PreCharLookup = std::function<Label(std::uint32_t len)>;

/// The four-case extension step. `groups` may have unresolved caches; they
/// are resolved through `lookup` and written back. `eps_extends` is true when
/// the parent's incoming label equals `a` and its empty palindrome has not
/// been consumed yet.
Extension extend_groups(std::span<PalGroup> groups, Label a, bool eps_extends, const PreCharLookup& lookup);

/// Rewrites a sorted, non-overlapping sequence of progressions into maximal
/// runs of equal consecutive difference (first difference measured from 0).
std::vector<PalGroup> canonicalize(std::span<const PalGroup> pieces);

/// Member-wise union of two sorted, disjoint progression sequences,
/// returned in canonical form.
std::vector<PalGroup> merge_groups(std::span<const PalGroup> a, std::span<const PalGroup> b);

struct UndoRecord {
    NodeId leaf = kNoNode;
    NodeId parent = kNoNode;
    std::vector<PalGroup> extracted;
    bool eps_extended = false;
};

struct MaximalPal {
    std::uint32_t length = 0;
    NodeId end = kNoNode;

    friend auto operator<=>(const MaximalPal&, const MaximalPal&) = default;
};

/// Online maintenance of all maximal palindromes of a trie, stored per node
/// as lists of arithmetic-progression groups.
class PalGroups {
public:
    explicit PalGroups(const Trie& trie);

    struct InsertResult {
        std::uint32_t lps_len = 0;
        UndoRecord undo;
    };

    /// Call right after trie.insert_leaf(parent, a) returned `leaf`.
    InsertResult on_insert(NodeId parent, NodeId leaf, Label a);

    /// Call right before trie.delete_leaf(leaf).
    void on_delete(NodeId leaf, const UndoRecord& undo);

    std::uint32_t longest_pal_suffix(NodeId leaf) const;
    std::vector<MaximalPal> enumerate_maximal() const;

    /// Throws EmptyTrie when the trie has no edges.
    std::size_t count_maximal() const;

    const GroupList& groups(NodeId v) const;
    std::size_t stored_groups() const { return stored_groups_; }

    /// Replaces a node's list wholesale (test fixtures only).
    void inject(NodeId v, GroupList list);

private:
    struct Slot {
        bool ready = false;
        std::uint32_t lps_len = 0;
        GroupList list;
    };

    Slot& slot(NodeId v);
    const Slot& slot(NodeId v) const;
    bool eps_open(NodeId v) const;

    const Trie& trie_;
    std::vector<Slot> slots_;
    std::size_t members_ = 0;
    std::size_t open_eps_ = 0;
    std::size_t stored_groups_ = 0;
};

} // namespace triepal
