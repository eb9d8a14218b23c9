#include "triepal/suffix_tree.hpp"
#include "triepal/error.hpp"

namespace triepal {

SuffixTree::SuffixTree(const Trie& trie) : trie_(trie) {
    Node r;
    r.ref = trie.root();
    const StId root_id = new_node(r);
    ElemId f = list_.insert_after(kFront);
    place(root_id, f, list_.insert_after(f));

    Node l;
    l.sdepth = 1;
    l.parent = root_id;
    l.ref = trie.root();
    l.leaf_of = trie.root();
    const StId leaf_id = new_node(l);
    ElemId lf = list_.insert_before(nodes_[root_id].last);
    place(leaf_id, lf, list_.insert_before(nodes_[root_id].last));
    nodes_[root_id].children.emplace(Label::sentinel(), leaf_id);
    leaf_.assign(trie.capacity(), 0);
    leaf_[to_index(trie.root())] = leaf_id;
}

const SuffixTree::Node& SuffixTree::at(StId w) const {
    if (!is_live(w)) fail(Errc::UnknownNode, "suffix tree node " + std::to_string(w));
    return nodes_[w];
}

StId SuffixTree::new_node(Node n) {
    nodes_.push_back(std::move(n));
    ++live_;
    return static_cast<StId>(nodes_.size() - 1);
}

void SuffixTree::place(StId w, ElemId first, ElemId last) {
    nodes_[w].first = first;
    nodes_[w].last = last;
    const ElemId hi = std::max(first, last);
    if (owner_.size() <= hi) owner_.resize(hi + 1, 0);
    owner_[first] = owner_[last] = w;
}

void SuffixTree::unplace(StId w) {
    list_.remove(nodes_[w].first);
    list_.remove(nodes_[w].last);
}

void SuffixTree::add_mark(StId from, Label c, StId to) {
    Node& f = nodes_[from];
    f.marks.emplace(c, to);
    nodes_[to].mark_source = std::make_pair(from, c);
    list_.color(f.first, c);
    list_.color(f.last, c);
    ++mark_count_;
}

void SuffixTree::drop_mark(StId from, Label c) {
    Node& f = nodes_[from];
    auto it = f.marks.find(c);
    if (it == f.marks.end()) fail(Errc::InconsistentState, "missing mark");
    nodes_[it->second].mark_source.reset();
    f.marks.erase(it);
    list_.uncolor(f.first, c);
    list_.uncolor(f.last, c);
    --mark_count_;
}

StId SuffixTree::leaf(NodeId v) const {
    if (!trie_.is_live(v) || to_index(v) >= leaf_.size()) fail(Errc::UnknownNode, "node " + std::to_string(to_index(v)));
    return leaf_[to_index(v)];
}

std::optional<StId> SuffixTree::parent(StId w) const {
    if (at(w).live && w == root()) return std::nullopt;
    return nodes_[w].parent;
}

Label SuffixTree::char_at(StId w, std::size_t i) const {
    const NodeId r = at(w).ref;
    if (i >= nodes_[w].sdepth) fail(Errc::DistanceOutOfRange, "past end of node string");
    if (i == trie_.depth(r)) return Label::sentinel();
    return trie_.label(trie_.ancestor_at(r, i));
}

std::u32string SuffixTree::str(StId w) const {
    std::u32string out;
    for (std::size_t i = 0; i < sdepth(w); ++i) out.push_back(char_at(w, i).code);
    return out;
}

StId SuffixTree::lca(StId a, StId b) const {
    at(a);
    at(b);
    while (a != b) {
        if (nodes_[a].sdepth >= nodes_[b].sdepth)
            a = nodes_[a].parent;
        else
            b = nodes_[b].parent;
    }
    return a;
}

std::size_t SuffixTree::longest_repeating_suffix_len(NodeId v) const {
    return nodes_[nodes_[leaf(v)].parent].sdepth;
}

bool SuffixTree::is_unique(NodeId v, std::size_t p_len) const { return longest_repeating_suffix_len(v) < p_len; }

std::size_t SuffixTree::naive_match(NodeId u, Label c) const {
    const std::size_t total = trie_.depth(u) + 2;
    auto ych = [&](std::size_t j) {
        if (j == 0) return c;
        if (j - 1 == trie_.depth(u)) return Label::sentinel();
        return trie_.label(trie_.ancestor_at(u, j - 1));
    };
    StId w = root();
    std::size_t j = 0;
    while (j < total) {
        auto it = nodes_[w].children.find(ych(j));
        if (it == nodes_[w].children.end()) return j;
        const StId ch = it->second;
        while (j < nodes_[ch].sdepth && j < total) {
            if (char_at(ch, j) != ych(j)) return j;
            ++j;
        }
        w = ch;
    }
    return j;
}

void SuffixTree::on_insert(NodeId u, NodeId v, Label c) {
    if (!trie_.is_live(v) || trie_.parent(v) != u || trie_.label(v) != c)
        fail(Errc::StaleParentState, "leaf does not match the trie");
    const StId x = leaf(u);
    const auto z1 = list_.pred(nodes_[x].first, c);
    const auto z2 = list_.succ(nodes_[x].last, c);

    StId attach_to = root();
    std::size_t ell = 0;
    std::optional<StId> split_from;  // x' when a node for c·str(x') must exist
    StId g = root();
    if (z1 || z2) {
        StId xp = root();
        StId z = root();
        bool have = false;
        for (const auto& e : {z1, z2}) {
            if (!e) continue;
            const StId zi = owner_[*e];
            const StId l = lca(x, zi);
            if (!have || nodes_[l].sdepth > nodes_[xp].sdepth) {
                xp = l;
                z = zi;
                have = true;
            }
        }
        ell = nodes_[xp].sdepth + 1;
        g = nodes_[z].marks.at(c);
        while (nodes_[nodes_[g].parent].sdepth >= ell) g = nodes_[g].parent;
        split_from = xp;
    }
    if (verify_) {
        const std::size_t m = naive_match(u, c);
        if (m != ell) fail(Errc::InconsistentState, "insertion point disagrees with naive descent");
    }

    if (split_from) {
        if (nodes_[g].sdepth == ell) {
            attach_to = g;
        } else {
            const StId gp = nodes_[g].parent;
            Node y2;
            y2.sdepth = ell;
            y2.parent = gp;
            y2.ref = nodes_[g].ref;
            const Label into_g = char_at(g, nodes_[gp].sdepth);
            const Label below = char_at(g, ell);
            const StId yp = new_node(y2);
            nodes_[gp].children[into_g] = yp;
            nodes_[yp].children.emplace(below, g);
            nodes_[g].parent = yp;
            const ElemId f = list_.insert_before(nodes_[g].first);
            place(yp, f, list_.insert_after(nodes_[g].last));
            add_mark(*split_from, c, yp);
            attach_to = yp;
        }
    }

    Node y;
    y.sdepth = trie_.depth(v) + 1;
    y.parent = attach_to;
    y.ref = v;
    y.leaf_of = v;
    const StId yid = new_node(y);
    nodes_[attach_to].children.emplace(char_at(yid, nodes_[attach_to].sdepth), yid);
    const ElemId f = list_.insert_before(nodes_[attach_to].last);
    place(yid, f, list_.insert_before(nodes_[attach_to].last));
    if (leaf_.size() < trie_.capacity()) leaf_.resize(trie_.capacity(), 0);
    leaf_[to_index(v)] = yid;
    add_mark(x, c, yid);
}

void SuffixTree::on_delete(NodeId v) {
    if (!trie_.is_live(v)) fail(Errc::UnknownNode, "node " + std::to_string(to_index(v)));
    if (v == trie_.root()) fail(Errc::IsRoot);
    if (!trie_.is_leaf(v)) fail(Errc::NotALeaf, "node " + std::to_string(to_index(v)));
    const StId y = leaf(v);
    const StId x = leaf(trie_.parent(v));
    if (!nodes_[y].marks.empty()) fail(Errc::InconsistentState, "leaf of a trie leaf carries marks");
    drop_mark(x, trie_.label(v));

    StId p = nodes_[y].parent;
    nodes_[p].children.erase(char_at(y, nodes_[p].sdepth));
    unplace(y);
    nodes_[y].live = false;
    --live_;

    if (p != root() && nodes_[p].children.size() == 1) {
        if (!nodes_[p].marks.empty()) fail(Errc::InconsistentState, "unary node carries marks");
        if (auto src = nodes_[p].mark_source) drop_mark(src->first, src->second);
        const StId k = nodes_[p].children.begin()->second;
        const StId gp = nodes_[p].parent;
        nodes_[gp].children[char_at(p, nodes_[gp].sdepth)] = k;
        nodes_[k].parent = gp;
        unplace(p);
        nodes_[p].live = false;
        --live_;
        p = gp;
    }
    for (StId w = p;; w = nodes_[w].parent) {
        if (nodes_[w].ref != v) break;
        nodes_[w].ref = nodes_[nodes_[w].children.begin()->second].ref;
        if (w == root()) break;
    }
}

std::vector<StId> SuffixTree::live_nodes() const {
    std::vector<StId> out;
    for (StId w = 0; w < nodes_.size(); ++w)
        if (nodes_[w].live) out.push_back(w);
    return out;
}

std::vector<StId> SuffixTree::euler_tour() const {
    std::vector<StId> out;
    for (ElemId e : list_.to_vector()) out.push_back(owner_[e]);
    return out;
}

} // namespace triepal
