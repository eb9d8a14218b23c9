#pragma once

#include "triepal/label.hpp"
#include "triepal/trie.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

/// Brute-force references written against definitions only. They depend on
/// the trie and nothing else.
namespace triepal::oracle {

/// Maximal palindrome length for each of the 2n-1 centers (even index =
/// character, odd index = gap).
std::vector<std::uint32_t> manacher(std::u32string_view s);

/// Lengths of all non-empty palindromic suffixes of s, ascending.
std::vector<std::uint32_t> palindromic_suffixes(std::u32string_view s);

/// (end node, length) for every maximal palindrome of the trie, sorted.
/// Length-0 entries are reported at internal non-root nodes v without a
/// child labeled by v's own incoming label.
std::vector<std::pair<NodeId, std::uint32_t>> maximal_bruteforce(const Trie& trie);

/// All distinct non-empty palindromic path substrings.
std::set<std::u32string> distinct_bruteforce(const Trie& trie);

/// Compacted trie of { str(v)$ : v live }, where str(v) reads v's path
/// upward. Keys are node strings (terminator encoded as code 0); values are
/// the parent's string (the root maps to itself).
using NaiveSt = std::map<std::u32string, std::u32string>;
NaiveSt naive_st(const Trie& trie);

/// Backward string of v with the terminator appended.
std::u32string backward_string(const Trie& trie, NodeId v);

/// Doubly linked list with colored elements; every query is a linear scan.
class NaiveOrderList {
public:
    using Id = std::uint32_t;
    static constexpr Id kFront = 0;

    Id insert_after(Id e);
    Id insert_before(Id e);
    void remove(Id e);
    void color(Id e, Label c);
    void uncolor(Id e, Label c);
    std::optional<Id> pred(Id e, Label c) const;
    std::optional<Id> succ(Id e, Label c) const;
    bool less(Id a, Id b) const;
    const std::vector<Id>& order() const { return order_; }
    const std::set<Label>& colors(Id e) const { return colors_.at(e); }

private:
    std::size_t pos(Id e) const;

    std::vector<Id> order_;
    std::map<Id, std::set<Label>> colors_;
    Id next_ = 1;
};

/// Rooted tree with one color per node; nca walks parent pointers.
class NaiveNca {
public:
    explicit NaiveNca(Label root_color) : parent_{0}, color_{root_color}, live_{true} {}
    std::uint32_t insert_leaf(std::uint32_t parent, Label c);
    void delete_leaf(std::uint32_t v);
    std::optional<std::uint32_t> nca(std::uint32_t v, Label c) const;
    bool is_live(std::uint32_t v) const { return v < live_.size() && live_[v]; }
    std::size_t capacity() const { return live_.size(); }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<Label> color_;
    std::vector<bool> live_;
};

} // namespace triepal::oracle
