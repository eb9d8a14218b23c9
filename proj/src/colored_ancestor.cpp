#include "triepal/colored_ancestor.hpp"
#include "triepal/error.hpp"

#include <string>

namespace triepal {

ColoredAncestor::ColoredAncestor(Label root_color) {
    Node r;
    r.color = root_color;
    r.first = list_.insert_after(kFront);
    r.last = list_.insert_after(r.first);
    owner_.resize(r.last + 1, 0);
    is_first_.resize(r.last + 1, false);
    is_first_[r.first] = true;
    list_.color(r.first, root_color);
    list_.color(r.last, root_color);
    nodes_.push_back(r);
    live_ = 1;
}

const ColoredAncestor::Node& ColoredAncestor::at(NcaId v) const {
    if (v >= nodes_.size() || !nodes_[v].live) fail(Errc::UnknownNode, "tree node " + std::to_string(v));
    return nodes_[v];
}

NcaId ColoredAncestor::insert_leaf(NcaId parent, Label c) {
    const Node& p = at(parent);
    Node n;
    n.parent = parent;
    n.color = c;
    n.own_nca = nca(parent, c);
    if (p.color == c) n.own_nca = parent;
    n.first = list_.insert_before(p.last);
    n.last = list_.insert_before(p.last);
    const auto id = static_cast<NcaId>(nodes_.size());
    if (owner_.size() <= n.last) {
        owner_.resize(n.last + 1, 0);
        is_first_.resize(n.last + 1, false);
    }
    owner_[n.first] = owner_[n.last] = id;
    is_first_[n.first] = true;
    list_.color(n.first, c);
    list_.color(n.last, c);
    ++nodes_[parent].children;
    nodes_.push_back(n);
    ++live_;
    return id;
}

void ColoredAncestor::delete_leaf(NcaId v) {
    const Node& n = at(v);
    if (v == root()) fail(Errc::IsRoot);
    if (n.children != 0) fail(Errc::NotALeaf, "tree node " + std::to_string(v));
    list_.uncolor(n.first, n.color);
    list_.uncolor(n.last, n.color);
    list_.remove(n.first);
    list_.remove(n.last);
    --nodes_[n.parent].children;
    nodes_[v].live = false;
    --live_;
}

std::optional<NcaId> ColoredAncestor::nca(NcaId v, Label c) const {
    const Node& n = at(v);
    auto hit = list_.pred(n.first, c);
    if (!hit) return std::nullopt;
    const NcaId y = owner_[*hit];
    if (is_first_[*hit]) return y;
    return nodes_[y].own_nca;
}

Label ColoredAncestor::color(NcaId v) const { return at(v).color; }

std::optional<NcaId> ColoredAncestor::parent(NcaId v) const {
    if (at(v).live && v == root()) return std::nullopt;
    return nodes_[v].parent;
}

bool ColoredAncestor::is_live(NcaId v) const { return v < nodes_.size() && nodes_[v].live; }

std::vector<NcaId> ColoredAncestor::euler_tour() const {
    std::vector<NcaId> out;
    for (ElemId e : list_.to_vector()) out.push_back(owner_[e]);
    return out;
}

} // namespace triepal
