#pragma once

#include "triepal/colored_ancestor.hpp"
#include "triepal/label.hpp"
#include "triepal/persistent_map.hpp"
#include "triepal/trie.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace triepal {

using PalId = std::uint32_t;
inline constexpr PalId kBottom = 0;  // imaginary palindrome of length -1
inline constexpr PalId kEmpty = 1;

enum class LpsStrategy { Basic, Quick, Direct };
enum class DlinkBackend { Persistent, ColoredAncestor };

struct EertreeConfig {
    LpsStrategy strategy = LpsStrategy::Quick;
    DlinkBackend backend = DlinkBackend::Persistent;
};

/// Palindromic tree of a dynamic trie: one node per distinct palindrome
/// occurring as a path substring, maintained under leaf insertion and
/// deletion.
class Eertree {
public:
    using DlinkMap = PersistentMap<Label, PalId>;

    Eertree(const Trie& trie, EertreeConfig config);

    struct InsertOutcome {
        PalId node = kBottom;
        bool created = false;
        std::uint64_t steps = 0;  // chain hops spent on this insertion
    };
    struct DeleteOutcome {
        PalId node = kBottom;
        bool removed = false;
        std::int64_t len = 0;
    };

    /// Call right after trie.insert_leaf(u, a) returned v.
    InsertOutcome on_insert(NodeId u, NodeId v, Label a);
    /// Call right before trie.delete_leaf(v). Throws NotALeaf.
    DeleteOutcome on_delete(NodeId v);

    /// Node X such that a·X·a is the longest palindromic suffix of
    /// str(root, u)·a (X = bottom for the single character).
    PalId find_lps(NodeId u, Label a, LpsStrategy strategy, std::uint64_t* steps = nullptr) const;

    /// Nearest node y on the suffix-link chain starting at x (inclusive)
    /// with pre_s(y) == c, through the configured backend.
    std::optional<PalId> dlink(PalId x, Label c) const;
    std::optional<PalId> dlink_scan(PalId x, Label c) const;

    EertreeConfig config() const { return config_; }
    std::size_t distinct_count() const { return live_ - 2; }
    std::size_t node_count() const { return live_; }
    std::vector<PalId> live_nodes() const;
    bool is_live(PalId x) const { return x < nodes_.size() && nodes_[x].live; }

    std::int64_t len(PalId x) const { return at(x).len; }
    PalId slink(PalId x) const { return at(x).slink; }
    PalId qlink(PalId x) const { return at(x).qlink; }
    std::optional<Label> pre_s(PalId x) const { return at(x).pre_s; }
    std::optional<Label> pre_q(PalId x) const { return at(x).pre_q; }
    const std::map<Label, PalId>& ext(PalId x) const { return at(x).ext; }
    std::optional<PalId> parent(PalId x) const;
    std::size_t incoming(PalId x) const { return at(x).holders.size(); }
    /// Smallest trie node whose longest palindromic suffix is x.
    std::optional<NodeId> witness(PalId x) const;
    std::u32string str(PalId x) const;

    PalId lps(NodeId v) const;
    Label pre_lps(NodeId v) const;

    std::uint64_t total_steps() const { return total_steps_; }
    const DlinkMap& dlink_version(PalId x) const { return at(x).version; }
    const ColoredAncestor* nca_tree() const { return nca_ ? &*nca_ : nullptr; }
    std::optional<NcaId> nca_handle(PalId x) const;

private:
    struct Node {
        std::int64_t len = 0;
        std::map<Label, PalId> ext;
        PalId parent = kBottom;
        Label center;  // label of the ext edge from parent
        PalId slink = kBottom;
        std::optional<Label> pre_s;
        PalId qlink = kBottom;
        std::optional<Label> pre_q;
        std::set<NodeId> holders;
        std::uint32_t slink_children = 0;
        DlinkMap version;
        NcaId nca = 0;
        bool live = true;
    };
    struct Attach {
        PalId lps = kEmpty;
        Label pre;
    };

    const Node& at(PalId x) const;
    PalId walk(PalId cur, std::optional<Label> ch, Label a, LpsStrategy strategy, std::uint64_t* steps) const;

    const Trie& trie_;
    EertreeConfig config_;
    std::vector<Node> nodes_;
    std::vector<Attach> attach_;
    std::vector<PalId> nca_owner_;
    std::optional<ColoredAncestor> nca_;
    std::size_t live_ = 2;
    std::uint64_t total_steps_ = 0;
};

} // namespace triepal
