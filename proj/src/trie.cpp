#include "triepal/trie.hpp"
#include "triepal/error.hpp"

#include <algorithm>
#include <bit>

namespace triepal {

Trie::Trie() {
    nodes_.emplace_back();
    depth_count_.push_back(1);
}

const Trie::Node& Trie::checked(NodeId v) const {
    auto i = to_index(v);
    if (i >= nodes_.size() || !nodes_[i].live) fail(Errc::UnknownNode, "node " + std::to_string(i));
    return nodes_[i];
}

bool Trie::is_live(NodeId v) const {
    auto i = to_index(v);
    return i < nodes_.size() && nodes_[i].live;
}

bool Trie::is_leaf(NodeId v) const { return checked(v).children.empty(); }
NodeId Trie::parent(NodeId v) const { return checked(v).parent; }
Label Trie::label(NodeId v) const { return checked(v).label; }
std::size_t Trie::depth(NodeId v) const { return checked(v).depth; }
const std::map<Label, NodeId>& Trie::children(NodeId v) const { return checked(v).children; }

std::optional<NodeId> Trie::child(NodeId v, Label a) const {
    const auto& kids = checked(v).children;
    auto it = kids.find(a);
    if (it == kids.end()) return std::nullopt;
    return it->second;
}

NodeId Trie::insert_leaf(NodeId parent, Label a) {
    const Node& p = checked(parent);
    if (a.is_sentinel()) fail(Errc::ReservedLabel, "code point 0 is reserved");
    if (p.children.contains(a)) fail(Errc::DuplicateEdgeLabel, "label already used at node " + std::to_string(to_index(parent)));

    const bool parent_was_leaf = p.children.empty();
    const bool parent_is_root = parent == root();

    Node leaf;
    leaf.parent = parent;
    leaf.label = a;
    leaf.depth = p.depth + 1;
    leaf.jump.push_back(parent);
    for (std::size_t k = 0;; ++k) {
        NodeId mid = leaf.jump[k];
        const Node& m = nodes_[to_index(mid)];
        if (k >= m.jump.size()) break;
        leaf.jump.push_back(m.jump[k]);
    }

    auto id = node_id(static_cast<std::uint32_t>(nodes_.size()));
    nodes_.push_back(std::move(leaf));
    nodes_[to_index(parent)].children.emplace(a, id);

    const std::size_t d = nodes_.back().depth;
    if (depth_count_.size() <= d) depth_count_.resize(d + 1, 0);
    ++depth_count_[d];
    ++stats_.edges;
    stats_.height = std::max(stats_.height, d);
    if (parent_is_root || !parent_was_leaf) ++stats_.leaves;
    return id;
}

void Trie::delete_leaf(NodeId v) {
    const Node& n = checked(v);
    if (v == root()) fail(Errc::IsRoot);
    if (!n.children.empty()) fail(Errc::NotALeaf, "node " + std::to_string(to_index(v)));

    Node& p = nodes_[to_index(n.parent)];
    p.children.erase(n.label);
    const bool parent_now_leaf = p.children.empty();
    if (n.parent == root() || !parent_now_leaf) --stats_.leaves;

    --depth_count_[n.depth];
    while (stats_.height > 0 && depth_count_[stats_.height] == 0) --stats_.height;
    --stats_.edges;

    Node& dead = nodes_[to_index(v)];
    dead.live = false;
    dead.jump.clear();
    dead.jump.shrink_to_fit();
}

NodeId Trie::ancestor_at(NodeId v, std::size_t k) const {
    const Node* n = &checked(v);
    if (k > n->depth) fail(Errc::DistanceOutOfRange, std::to_string(k) + " > depth " + std::to_string(n->depth));
    while (k > 0) {
        auto bit = static_cast<std::size_t>(std::countr_zero(k));
        v = n->jump[bit];
        n = &nodes_[to_index(v)];
        k &= k - 1;
    }
    return v;
}

std::optional<Label> Trie::char_before_suffix(NodeId v, std::size_t len) const {
    std::size_t d = checked(v).depth;
    if (len > d) fail(Errc::DistanceOutOfRange, std::to_string(len) + " > depth " + std::to_string(d));
    if (len == d) return std::nullopt;
    return nodes_[to_index(ancestor_at(v, len))].label;
}

std::u32string Trie::path_string(NodeId v) const {
    const Node* n = &checked(v);
    std::u32string s(n->depth, U'\0');
    for (std::size_t i = n->depth; i > 0; --i) {
        s[i - 1] = n->label.code;
        n = &nodes_[to_index(n->parent)];
    }
    return s;
}

std::vector<NodeId> Trie::live_nodes() const {
    std::vector<NodeId> out;
    out.reserve(live_count());
    for (std::uint32_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].live) out.push_back(node_id(i));
    return out;
}

} // namespace triepal
