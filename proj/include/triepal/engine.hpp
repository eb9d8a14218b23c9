#pragma once

#include "triepal/eertree.hpp"
#include "triepal/label.hpp"
#include "triepal/palgroups.hpp"
#include "triepal/suffix_tree.hpp"
#include "triepal/trie.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triepal {

enum class EngineKind {
    EertreeBasic,
    EertreeQuick,
    EertreeDirectPersistent,
    EertreeDirectNca,
    SuffixTree,
    Oracle,
};

std::string_view engine_name(EngineKind kind);
/// Throws UnknownEngine.
EngineKind parse_engine(std::string_view name);
std::span<const EngineKind> all_engines();

struct NewPalindrome {
    std::uint32_t len = 0;
    std::uint32_t end = 0;
    friend bool operator==(const NewPalindrome&, const NewPalindrome&) = default;
};

struct Event {
    std::uint64_t seq = 0;
    char op = 'I';
    std::uint32_t id = 0;
    std::uint32_t parent = 0;
    Label label;
    std::optional<NewPalindrome> new_palindrome;
    std::optional<std::uint32_t> removed_palindrome;
    std::size_t n = 0;
    std::size_t l = 0;
    std::size_t h = 0;
    std::size_t d = 0;
    std::size_t maxpal = 0;

    friend bool operator==(const Event&, const Event&) = default;
};

struct SessionOptions {
    /// Cross-check suffix-tree insertion points against naive descent.
    bool verify = false;
    /// Test hook: suppress every reported new palindrome of length >= 3.
    bool fault = false;
};

/// One trie plus the maximal-palindrome groups and one distinct-palindrome
/// engine, updated together.
class Session {
public:
    static std::unique_ptr<Session> open(EngineKind kind, SessionOptions options = {});
    static std::unique_ptr<Session> open(std::string_view name, SessionOptions options = {});

    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;
    ~Session();

    /// Throws the trie's errors (UnknownNode, DuplicateEdgeLabel, ReservedLabel).
    Event insert(std::uint32_t parent, Label a);
    /// Throws UnknownNode, IsRoot, NotALeaf.
    Event remove(std::uint32_t id);

    EngineKind kind() const { return kind_; }
    const Trie& trie() const { return trie_; }
    const PalGroups& groups() const { return groups_; }
    const Eertree* eertree() const { return eertree_.get(); }
    const SuffixTree* suffix_tree() const { return st_.get(); }

    std::size_t distinct_count() const;
    /// Sorted distinct non-empty palindromes as tracked by the engine.
    std::vector<std::u32string> distinct_palindromes() const;
    std::uint64_t chain_steps() const { return eertree_ ? eertree_->total_steps() : 0; }
    std::uint64_t last_steps() const { return last_steps_; }

    /// Deterministic text describing every structure, keyed by path strings
    /// so that sessions built through different histories compare equal.
    std::string canonical_dump() const;

private:
    Session(EngineKind kind, SessionOptions options);
    Event snapshot(Event e);

    EngineKind kind_;
    SessionOptions options_;
    Trie trie_;
    PalGroups groups_;
    std::vector<UndoRecord> undo_;
    std::unique_ptr<Eertree> eertree_;
    std::unique_ptr<SuffixTree> st_;
    std::map<std::u32string, std::size_t> oracle_counts_;
    std::size_t st_distinct_ = 0;
    std::uint64_t seq_ = 0;
    std::uint64_t last_steps_ = 0;
};

} // namespace triepal
