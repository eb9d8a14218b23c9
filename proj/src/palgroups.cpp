#include "triepal/palgroups.hpp"
#include "triepal/error.hpp"

#include <deque>

namespace triepal {

std::size_t GroupList::member_count() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.t;
    return n;
}

std::vector<std::uint32_t> GroupList::expanded() const {
    std::vector<std::uint32_t> out;
    for (const auto& g : groups)
        for (std::uint32_t k = 0; k < g.t; ++k) out.push_back(g.s + k * g.d);
    return out;
}

namespace {

// Pre-character of the first member of a progression.
std::optional<Label> first_pre(const PalGroup& g) { return g.t >= 2 ? g.pre_inner : g.pre_longest; }

PalGroup singleton(std::uint32_t len, std::optional<Label> pre) {
    PalGroup g;
    g.s = len;
    g.t = 1;
    g.pre_longest = pre;
    return g;
}

// Drops the first member of a progression with t >= 2.
PalGroup tail(const PalGroup& g) {
    PalGroup r = g;
    r.s += g.d;
    r.t -= 1;
    if (r.t == 1) r.pre_inner.reset();
    return r;
}

} // namespace

std::vector<PalGroup> canonicalize(std::span<const PalGroup> pieces) {
    std::vector<PalGroup> out;
    std::uint32_t prev_longest = 0;
    std::uint32_t back_gap = 0;  // gap in front of out.back()'s first member

    auto push = [&](PalGroup p) {
        const std::uint32_t gap = p.s - prev_longest;
        if (!out.empty()) {
            PalGroup& last = out.back();
            const std::uint32_t run = last.t >= 2 ? last.d : back_gap;
            if (gap == run && (p.t == 1 || p.d == gap)) {
                last.pre_inner = first_pre(last);
                last.pre_longest = p.pre_longest;
                last.t += p.t;
                last.d = gap;
                prev_longest = last.longest();
                return;
            }
        }
        if (p.t == 1) {
            p.d = out.empty() ? 0 : gap;
            p.pre_inner.reset();
        }
        back_gap = gap;
        out.push_back(p);
        prev_longest = out.back().longest();
    };

    for (const PalGroup& piece : pieces) {
        if (piece.t == 0) continue;
        if (piece.s <= prev_longest)
            fail(Errc::InconsistentState, "progressions overlap or are unsorted");
        const std::uint32_t gap = piece.s - prev_longest;
        if (piece.t >= 2 && gap != piece.d) {
            push(singleton(piece.s, piece.pre_inner));
            push(tail(piece));
        } else {
            push(piece);
        }
    }
    return out;
}

std::vector<PalGroup> merge_groups(std::span<const PalGroup> a, std::span<const PalGroup> b) {
    std::deque<PalGroup> qa(a.begin(), a.end());
    std::deque<PalGroup> qb(b.begin(), b.end());
    std::vector<PalGroup> pieces;
    while (!qa.empty() || !qb.empty()) {
        std::deque<PalGroup>* take = nullptr;
        std::deque<PalGroup>* other = nullptr;
        if (qb.empty() || (!qa.empty() && qa.front().s < qb.front().s)) {
            take = &qa;
            other = &qb;
        } else {
            take = &qb;
            other = &qa;
        }
        PalGroup& head = take->front();
        if (!other->empty() && head.s == other->front().s)
            fail(Errc::InconsistentState, "duplicate palindrome length while merging groups");
        if (other->empty() || head.longest() < other->front().s || head.t == 1) {
            pieces.push_back(head);
            take->pop_front();
        } else {
            pieces.push_back(singleton(head.s, head.pre_inner));
            head = tail(head);
        }
    }
    return canonicalize(pieces);
}

Extension extend_groups(std::span<PalGroup> groups, Label a, bool eps_extends, const PreCharLookup& lookup) {
    Extension ext;
    std::vector<PalGroup> leaf_pieces;
    std::vector<PalGroup> retained_pieces;

    leaf_pieces.push_back(singleton(1, std::nullopt));
    if (eps_extends) leaf_pieces.push_back(singleton(2, std::nullopt));
    std::uint32_t leaf_longest = leaf_pieces.back().s;

    for (std::size_t i = 0; i < groups.size(); ++i) {
        PalGroup& g = groups[i];
        if (!g.pre_longest) g.pre_longest = lookup(g.longest());
        if (g.t >= 2 && !g.pre_inner) g.pre_inner = lookup(g.s);
        const Label c = *g.pre_longest;

        ExtensionCase kase;
        if (g.t == 1) {
            kase = (c == a) ? ExtensionCase::WholeGroup : ExtensionCase::None;
        } else {
            const Label b = *g.pre_inner;
            if (a == b)
                kase = (a == c) ? ExtensionCase::WholeGroup : ExtensionCase::AllButLongest;
            else
                kase = (a == c) ? ExtensionCase::LongestOnly : ExtensionCase::None;
        }
        ext.cases.push_back(kase);

        PalGroup moved;
        switch (kase) {
        case ExtensionCase::WholeGroup:
            ext.extracted.push_back(g);
            moved = PalGroup{g.s + 2, g.t >= 2 ? g.d : g.s + 2 - leaf_longest, g.t, {}, {}};
            break;
        case ExtensionCase::AllButLongest: {
            PalGroup inner{g.s, g.d, g.t - 1, g.pre_inner, g.pre_inner};
            if (inner.t == 1) inner.pre_inner.reset();
            ext.extracted.push_back(inner);
            retained_pieces.push_back(singleton(g.longest(), g.pre_longest));
            moved = PalGroup{g.s + 2, g.d, g.t - 1, {}, {}};
            if (moved.t == 1) moved.d = moved.s - leaf_longest;
            break;
        }
        case ExtensionCase::LongestOnly: {
            ext.extracted.push_back(singleton(g.longest(), g.pre_longest));
            PalGroup rest{g.s, g.d, g.t - 1, g.pre_inner, g.pre_inner};
            if (rest.t == 1) rest.pre_inner.reset();
            retained_pieces.push_back(rest);
            moved = singleton(g.longest() + 2, std::nullopt);
            moved.d = moved.s - leaf_longest;
            break;
        }
        case ExtensionCase::None:
            retained_pieces.push_back(g);
            continue;
        }
        ext.transformed.push_back(moved);
        ext.transformed_from.push_back(i);
        leaf_pieces.push_back(moved);
        leaf_longest = moved.longest();
    }

    ext.leaf = canonicalize(leaf_pieces);
    ext.retained = canonicalize(retained_pieces);
    return ext;
}

PalGroups::PalGroups(const Trie& trie) : trie_(trie) {
    slots_.resize(trie.capacity());
    slots_[to_index(trie.root())].ready = true;
}

PalGroups::Slot& PalGroups::slot(NodeId v) {
    if (slots_.size() < trie_.capacity()) slots_.resize(trie_.capacity());
    if (to_index(v) >= slots_.size()) fail(Errc::UnknownNode, "node " + std::to_string(to_index(v)));
    return slots_[to_index(v)];
}

const PalGroups::Slot& PalGroups::slot(NodeId v) const {
    if (to_index(v) >= slots_.size() || !slots_[to_index(v)].ready)
        fail(Errc::UnknownNode, "no group list for node " + std::to_string(to_index(v)));
    return slots_[to_index(v)];
}

bool PalGroups::eps_open(NodeId v) const {
    return v != trie_.root() && !trie_.is_leaf(v) && !slot(v).list.eps_consumed;
}

PalGroups::InsertResult PalGroups::on_insert(NodeId parent, NodeId leaf, Label a) {
    if (!trie_.is_live(leaf) || !trie_.is_live(parent) || trie_.parent(leaf) != parent || trie_.label(leaf) != a)
        fail(Errc::StaleParentState, "leaf does not match the trie");
    Slot& ps = slot(parent);
    if (!ps.ready) fail(Errc::StaleParentState, "parent has no group list");
    if (slot(leaf).ready) fail(Errc::StaleParentState, "leaf already processed");

    const bool is_root = parent == trie_.root();
    const bool had_children = trie_.children(parent).size() > 1;
    const bool open_before = !is_root && had_children && !ps.list.eps_consumed;
    const bool eps_extends = !is_root && !ps.list.eps_consumed && trie_.label(parent) == a;

    auto lookup = [this, parent](std::uint32_t len) { return trie_.pre_char(parent, len); };
    Extension ext = extend_groups(ps.list.groups, a, eps_extends, lookup);

    std::size_t moved = 0;
    for (const auto& g : ext.extracted) moved += g.t;
    members_ -= moved;
    stored_groups_ -= ps.list.groups.size();
    ps.list.groups = std::move(ext.retained);
    stored_groups_ += ps.list.groups.size();
    if (eps_extends) ps.list.eps_consumed = true;
    const bool open_after = !is_root && !ps.list.eps_consumed;
    open_eps_ = open_eps_ + (open_after ? 1 : 0) - (open_before ? 1 : 0);

    Slot& ls = slot(leaf);
    ls.ready = true;
    ls.list.groups = std::move(ext.leaf);
    ls.list.eps_consumed = false;
    ls.lps_len = ls.list.groups.back().longest();
    members_ += ls.list.member_count();
    stored_groups_ += ls.list.groups.size();

    InsertResult result;
    result.lps_len = ls.lps_len;
    result.undo.leaf = leaf;
    result.undo.parent = parent;
    result.undo.extracted = std::move(ext.extracted);
    result.undo.eps_extended = eps_extends;
    return result;
}

void PalGroups::on_delete(NodeId leaf, const UndoRecord& undo) {
    if (!trie_.is_live(leaf)) fail(Errc::UnknownNode, "node " + std::to_string(to_index(leaf)));
    if (!trie_.is_leaf(leaf)) fail(Errc::NotALeaf, "node " + std::to_string(to_index(leaf)));
    Slot& ls = slot(leaf);
    if (!ls.ready) fail(Errc::StaleParentState, "leaf has no group list");
    const NodeId parent = trie_.parent(leaf);
    if (undo.leaf != leaf || undo.parent != parent) fail(Errc::UndoMismatch, "record issued for another leaf");
    std::size_t extracted = 0;
    for (const auto& g : undo.extracted) extracted += g.t;
    if (extracted + 1 + (undo.eps_extended ? 1 : 0) != ls.list.member_count())
        fail(Errc::UndoMismatch, "record does not match the leaf's palindromic suffixes");

    Slot& ps = slot(parent);
    const bool is_root = parent == trie_.root();
    const bool open_before = !is_root && !ps.list.eps_consumed;

    stored_groups_ -= ps.list.groups.size();
    ps.list.groups = merge_groups(ps.list.groups, undo.extracted);
    stored_groups_ += ps.list.groups.size();
    members_ += extracted;
    if (undo.eps_extended) ps.list.eps_consumed = false;
    const bool open_after = !is_root && trie_.children(parent).size() > 1 && !ps.list.eps_consumed;
    open_eps_ = open_eps_ + (open_after ? 1 : 0) - (open_before ? 1 : 0);

    members_ -= ls.list.member_count();
    stored_groups_ -= ls.list.groups.size();
    ls = Slot{};
}

std::uint32_t PalGroups::longest_pal_suffix(NodeId leaf) const { return slot(leaf).lps_len; }

const GroupList& PalGroups::groups(NodeId v) const { return slot(v).list; }

void PalGroups::inject(NodeId v, GroupList list) {
    Slot& s = slot(v);
    if (s.ready) {
        members_ -= s.list.member_count();
        stored_groups_ -= s.list.groups.size();
    }
    s.ready = true;
    s.list = std::move(list);
    members_ += s.list.member_count();
    stored_groups_ += s.list.groups.size();
}

std::size_t PalGroups::count_maximal() const {
    if (trie_.stats().edges == 0) fail(Errc::EmptyTrie);
    return members_ + open_eps_;
}

std::vector<MaximalPal> PalGroups::enumerate_maximal() const {
    std::vector<MaximalPal> out;
    for (NodeId v : trie_.live_nodes()) {
        if (v == trie_.root()) continue;
        const GroupList& list = slot(v).list;
        if (eps_open(v)) out.push_back({0, v});
        for (std::uint32_t len : list.expanded()) out.push_back({len, v});
    }
    return out;
}

} // namespace triepal
