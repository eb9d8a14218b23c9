#include "triepal/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace triepal::oracle {

std::vector<std::uint32_t> manacher(std::u32string_view s) {
    const auto n = static_cast<long>(s.size());
    if (n == 0) return {};
    std::vector<long> odd(n), even(n);
    for (long i = 0, l = 0, r = -1; i < n; ++i) {
        long k = (i > r) ? 1 : std::min(odd[l + r - i], r - i + 1);
        while (i - k >= 0 && i + k < n && s[i - k] == s[i + k]) ++k;
        odd[i] = k;
        if (i + k - 1 > r) {
            l = i - k + 1;
            r = i + k - 1;
        }
    }
    // even[i]: half-length of the even palindrome centered between i-1 and i.
    for (long i = 0, l = 0, r = -1; i < n; ++i) {
        long k = (i > r) ? 0 : std::min(even[l + r - i + 1], r - i + 1);
        while (i - k - 1 >= 0 && i + k < n && s[i - k - 1] == s[i + k]) ++k;
        even[i] = k;
        if (i + k - 1 > r) {
            l = i - k;
            r = i + k - 1;
        }
    }
    std::vector<std::uint32_t> out(2 * s.size() - 1);
    for (long i = 0; i < n; ++i) {
        out[2 * i] = static_cast<std::uint32_t>(2 * odd[i] - 1);
        if (i > 0) out[2 * i - 1] = static_cast<std::uint32_t>(2 * even[i]);
    }
    return out;
}

std::vector<std::uint32_t> palindromic_suffixes(std::u32string_view s) {
    std::vector<std::uint32_t> out;
    if (s.empty()) return out;
    const auto pal = manacher(s);
    const std::size_t d = s.size();
    for (std::size_t i = d; i-- > 0;) {
        const std::size_t len = d - i;
        if (pal[i + d - 1] >= len) out.push_back(static_cast<std::uint32_t>(len));
    }
    return out;
}

std::vector<std::pair<NodeId, std::uint32_t>> maximal_bruteforce(const Trie& trie) {
    std::vector<std::pair<NodeId, std::uint32_t>> out;
    for (NodeId v : trie.live_nodes()) {
        if (v == trie.root()) continue;
        const std::u32string s = trie.path_string(v);
        const bool leaf = trie.is_leaf(v);
        const std::size_t d = s.size();
        for (std::uint32_t len : palindromic_suffixes(s)) {
            const std::size_t i = d - len;
            if (i == 0 || leaf || !trie.child(v, Label{s[i - 1]})) out.emplace_back(v, len);
        }
        if (!leaf && !trie.child(v, Label{s[d - 1]})) out.emplace_back(v, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::u32string> distinct_bruteforce(const Trie& trie) {
    std::set<std::u32string> out;
    for (NodeId v : trie.live_nodes()) {
        const std::u32string s = trie.path_string(v);
        for (std::uint32_t len : palindromic_suffixes(s)) out.insert(s.substr(s.size() - len));
    }
    return out;
}

std::u32string backward_string(const Trie& trie, NodeId v) {
    std::u32string s = trie.path_string(v);
    std::reverse(s.begin(), s.end());
    s.push_back(U'\0');
    return s;
}

NaiveSt naive_st(const Trie& trie) {
    std::vector<std::u32string> all;
    for (NodeId v : trie.live_nodes()) all.push_back(backward_string(trie, v));
    std::sort(all.begin(), all.end());
    std::set<std::u32string> nodes(all.begin(), all.end());
    nodes.insert(std::u32string{});
    for (std::size_t i = 1; i < all.size(); ++i) {
        const auto& a = all[i - 1];
        const auto& b = all[i];
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        nodes.insert(a.substr(0, k));
    }
    NaiveSt out;
    for (const auto& s : nodes) {
        if (s.empty()) {
            out[s] = s;
            continue;
        }
        for (std::size_t k = s.size(); k-- > 0;) {
            std::u32string p = s.substr(0, k);
            if (nodes.contains(p)) {
                out[s] = p;
                break;
            }
        }
    }
    return out;
}

std::size_t NaiveOrderList::pos(Id e) const {
    auto it = std::find(order_.begin(), order_.end(), e);
    if (it == order_.end()) throw std::out_of_range("unknown element");
    return static_cast<std::size_t>(it - order_.begin());
}

NaiveOrderList::Id NaiveOrderList::insert_after(Id e) {
    const std::size_t at = (e == kFront) ? 0 : pos(e) + 1;
    const Id id = next_++;
    order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(at), id);
    colors_[id];
    return id;
}

NaiveOrderList::Id NaiveOrderList::insert_before(Id e) {
    const std::size_t at = pos(e);
    const Id id = next_++;
    order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(at), id);
    colors_[id];
    return id;
}

void NaiveOrderList::remove(Id e) {
    order_.erase(order_.begin() + static_cast<std::ptrdiff_t>(pos(e)));
    colors_.erase(e);
}

void NaiveOrderList::color(Id e, Label c) { colors_.at(e).insert(c); }
void NaiveOrderList::uncolor(Id e, Label c) { colors_.at(e).erase(c); }

std::optional<NaiveOrderList::Id> NaiveOrderList::pred(Id e, Label c) const {
    for (std::size_t i = pos(e); i-- > 0;)
        if (colors_.at(order_[i]).contains(c)) return order_[i];
    return std::nullopt;
}

std::optional<NaiveOrderList::Id> NaiveOrderList::succ(Id e, Label c) const {
    for (std::size_t i = pos(e) + 1; i < order_.size(); ++i)
        if (colors_.at(order_[i]).contains(c)) return order_[i];
    return std::nullopt;
}

bool NaiveOrderList::less(Id a, Id b) const { return pos(a) < pos(b); }

std::uint32_t NaiveNca::insert_leaf(std::uint32_t parent, Label c) {
    if (!is_live(parent)) throw std::out_of_range("unknown node");
    parent_.push_back(parent);
    color_.push_back(c);
    live_.push_back(true);
    return static_cast<std::uint32_t>(live_.size() - 1);
}

void NaiveNca::delete_leaf(std::uint32_t v) {
    for (std::uint32_t w = 0; w < live_.size(); ++w)
        if (live_[w] && w != 0 && parent_[w] == v) throw std::logic_error("not a leaf");
    live_[v] = false;
}

std::optional<std::uint32_t> NaiveNca::nca(std::uint32_t v, Label c) const {
    while (v != 0) {
        v = parent_[v];
        if (color_[v] == c) return v;
    }
    return std::nullopt;
}

} // namespace triepal::oracle
