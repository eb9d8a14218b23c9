#include "support.hpp"

#include <functional>
#include <map>
#include <string>

namespace triepal::testing {

std::string check_group_structure(const Trie& trie, NodeId v, const GroupList& list, bool check_periods) {
    const auto members = list.expanded();
    std::vector<std::uint32_t> diff;
    std::uint32_t prev = 0;
    for (std::uint32_t m : members) {
        if (m <= prev) return "members not strictly increasing";
        diff.push_back(m - prev);
        prev = m;
    }
    for (std::size_t j = 1; j < diff.size(); ++j)
        if (diff[j] < diff[j - 1]) return "differences decrease";
    for (std::size_t j = 1; j + 1 < diff.size(); ++j)
        if (diff[j + 1] != diff[j] && diff[j + 1] < diff[j] + diff[j - 1]) return "gap growth rule violated";
    if (check_periods) {
        const std::u32string s = trie.path_string(v);
        for (const auto& g : list.groups) {
            if (g.t < 2) continue;
            for (std::uint32_t k = 0; k < g.t; ++k) {
                const std::uint32_t len = g.s + k * g.d;
                const std::size_t from = s.size() - len;
                for (std::size_t i = from; i + g.d < s.size(); ++i)
                    if (s[i] != s[i + g.d]) return "difference is not a period";
            }
        }
    }
    return {};
}

oracle::NaiveSt st_as_map(const SuffixTree& st) {
    oracle::NaiveSt out;
    for (StId w : st.live_nodes()) out[st.str(w)] = st.parent(w) ? st.str(*st.parent(w)) : st.str(w);
    return out;
}

std::string check_marks(const SuffixTree& st) {
    std::map<std::u32string, StId> by_str;
    for (StId w : st.live_nodes()) by_str[st.str(w)] = w;
    std::size_t expected = 0;
    for (const auto& [s, w] : by_str) {
        for (const auto& [t, y] : by_str) {
            if (t.size() != s.size() + 1 || t[0] == 0 || t.compare(1, s.size(), s) != 0) continue;
            ++expected;
            auto it = st.marks(w).find(Label{t[0]});
            if (it == st.marks(w).end() || it->second != y)
                return "missing mark " + to_utf8(Label{t[0]}) + " on '" + to_utf8(s) + "'";
        }
    }
    if (expected != st.mark_count()) return "spurious marks";
    return {};
}

std::string check_contraction(const SuffixTree& st, StId u, Label c) {
    auto target = st.marks(u).find(c);
    if (target == st.marks(u).end()) return "u is not marked by c";
    // Image of the contracted subtree: marked node -> its nearest marked
    // ancestor within u's subtree.
    std::map<StId, StId> image_parent;
    std::function<void(StId, StId)> walk = [&](StId w, StId top) {
        StId next_top = top;
        auto m = st.marks(w).find(c);
        if (m != st.marks(w).end()) {
            image_parent[m->second] = w == u ? m->second : st.marks(top).at(c);
            next_top = w;
        }
        for (const auto& [a, child] : st.children(w)) walk(child, next_top);
    };
    walk(u, u);
    std::map<StId, StId> real_parent;
    std::function<void(StId)> collect = [&](StId w) {
        real_parent[w] = w == target->second ? w : *st.parent(w);
        for (const auto& [a, child] : st.children(w)) collect(child);
    };
    collect(target->second);
    if (image_parent != real_parent) return "contracted subtree differs";
    return {};
}

} // namespace triepal::testing
