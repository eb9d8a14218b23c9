#include "triepal/eertree.hpp"
#include "triepal/error.hpp"

#include <algorithm>

namespace triepal {

Eertree::Eertree(const Trie& trie, EertreeConfig config) : trie_(trie), config_(config) {
    Node bottom;
    bottom.len = -1;
    Node empty;
    empty.len = 0;
    nodes_.push_back(bottom);
    nodes_.push_back(empty);
    attach_.resize(trie.capacity());
    attach_[to_index(trie.root())] = Attach{kEmpty, Label::sentinel()};
    if (config_.backend == DlinkBackend::ColoredAncestor) {
        nca_.emplace(Label::sentinel());
        nodes_[kBottom].nca = nca_->root();
        nodes_[kEmpty].nca = nca_->insert_leaf(nca_->root(), Label::sentinel());
        nca_owner_ = {kBottom, kEmpty};
    }
}

const Eertree::Node& Eertree::at(PalId x) const {
    if (!is_live(x)) fail(Errc::UnknownNode, "palindrome node " + std::to_string(x));
    return nodes_[x];
}

std::optional<PalId> Eertree::parent(PalId x) const {
    if (x == kBottom || x == kEmpty) {
        at(x);
        return std::nullopt;
    }
    return at(x).parent;
}

std::optional<NodeId> Eertree::witness(PalId x) const {
    const auto& h = at(x).holders;
    if (h.empty()) return std::nullopt;
    return *h.begin();
}

std::optional<NcaId> Eertree::nca_handle(PalId x) const {
    if (!nca_) return std::nullopt;
    return at(x).nca;
}

std::u32string Eertree::str(PalId x) const {
    std::u32string half;
    bool odd = false;
    for (PalId y = x; y != kBottom && y != kEmpty; y = at(y).parent) {
        half.push_back(nodes_[y].center.code);
        if (nodes_[y].parent == kBottom) odd = true;
    }
    std::u32string out = half;
    for (std::size_t i = half.size() - (odd ? 1 : 0); i-- > 0;) out.push_back(half[i]);
    return out;
}

PalId Eertree::lps(NodeId v) const {
    if (!trie_.is_live(v) || to_index(v) >= attach_.size()) fail(Errc::UnknownNode, "node " + std::to_string(to_index(v)));
    return attach_[to_index(v)].lps;
}

Label Eertree::pre_lps(NodeId v) const {
    lps(v);
    return attach_[to_index(v)].pre;
}

std::vector<PalId> Eertree::live_nodes() const {
    std::vector<PalId> out;
    for (PalId x = 0; x < nodes_.size(); ++x)
        if (nodes_[x].live) out.push_back(x);
    return out;
}

std::optional<PalId> Eertree::dlink_scan(PalId x, Label c) const {
    for (PalId y = x; y != kBottom; y = at(y).slink)
        if (nodes_[y].pre_s == c) return y;
    return std::nullopt;
}

std::optional<PalId> Eertree::dlink(PalId x, Label c) const {
    const Node& n = at(x);
    if (x == kBottom) return std::nullopt;
    if (config_.backend == DlinkBackend::Persistent) return n.version.get(c);
    if (n.pre_s == c) return x;
    auto hit = nca_->nca(n.nca, c);
    if (!hit) return std::nullopt;
    return nca_owner_[*hit];
}

PalId Eertree::walk(PalId cur, std::optional<Label> ch, Label a, LpsStrategy strategy, std::uint64_t* steps) const {
    std::uint64_t k = 0;
    switch (strategy) {
    case LpsStrategy::Basic:
        while (cur != kBottom && ch != a) {
            ch = nodes_[cur].pre_s;
            cur = nodes_[cur].slink;
            ++k;
        }
        break;
    case LpsStrategy::Quick:
        while (cur != kBottom && ch != a) {
            const Node& n = nodes_[cur];
            ++k;
            if (n.pre_s == a) {
                cur = n.slink;
                break;
            }
            ch = n.pre_q;
            cur = n.qlink;
        }
        break;
    case LpsStrategy::Direct:
        if (cur != kBottom && ch != a) {
            ++k;
            auto d = dlink(cur, a);
            cur = d ? nodes_[*d].slink : kBottom;
        }
        break;
    }
    if (steps) *steps += k;
    return cur;
}

PalId Eertree::find_lps(NodeId u, Label a, LpsStrategy strategy, std::uint64_t* steps) const {
    const Attach& at_u = attach_[to_index(u)];
    lps(u);
    return walk(at_u.lps, at_u.pre, a, strategy, steps);
}

Eertree::InsertOutcome Eertree::on_insert(NodeId u, NodeId v, Label a) {
    if (!trie_.is_live(v) || trie_.parent(v) != u || trie_.label(v) != a)
        fail(Errc::StaleParentState, "leaf does not match the trie");
    if (attach_.size() < trie_.capacity()) attach_.resize(trie_.capacity());

    InsertOutcome out;
    const PalId x = find_lps(u, a, config_.strategy, &out.steps);
    auto hit = nodes_[x].ext.find(a);
    PalId p;
    if (hit != nodes_[x].ext.end()) {
        p = hit->second;
    } else {
        PalId s = kEmpty;
        if (x != kBottom) {
            const PalId y = walk(nodes_[x].slink, nodes_[x].pre_s, a, config_.strategy, &out.steps);
            auto e = nodes_[y].ext.find(a);
            if (e == nodes_[y].ext.end()) fail(Errc::InconsistentState, "suffix link target missing");
            s = e->second;
        }
        Node n;
        n.len = nodes_[x].len + 2;
        n.parent = x;
        n.center = a;
        n.slink = s;
        n.pre_s = trie_.pre_char(v, static_cast<std::size_t>(nodes_[s].len));
        const Node& sn = nodes_[s];
        if (s == kBottom || s == kEmpty) {
            n.qlink = kBottom;
        } else if (sn.pre_s != n.pre_s) {
            n.qlink = sn.slink;
            n.pre_q = sn.pre_s;
        } else {
            n.qlink = sn.qlink;
            n.pre_q = sn.pre_q;
        }
        p = static_cast<PalId>(nodes_.size());
        if (config_.backend == DlinkBackend::Persistent) {
            n.version = sn.version.with_set(*n.pre_s, p);
        } else {
            n.nca = nca_->insert_leaf(sn.nca, *n.pre_s);
            if (nca_owner_.size() <= n.nca) nca_owner_.resize(n.nca + 1, kBottom);
            nca_owner_[n.nca] = p;
        }
        ++nodes_[s].slink_children;
        nodes_.push_back(std::move(n));
        nodes_[x].ext.emplace(a, p);
        ++live_;
        out.created = true;
    }
    nodes_[p].holders.insert(v);
    attach_[to_index(v)] = Attach{p, trie_.pre_char(v, static_cast<std::size_t>(nodes_[p].len))};
    out.node = p;
    total_steps_ += out.steps;
    return out;
}

Eertree::DeleteOutcome Eertree::on_delete(NodeId v) {
    if (!trie_.is_live(v)) fail(Errc::UnknownNode, "node " + std::to_string(to_index(v)));
    if (v == trie_.root()) fail(Errc::IsRoot);
    if (!trie_.is_leaf(v)) fail(Errc::NotALeaf, "node " + std::to_string(to_index(v)));
    const PalId p = attach_[to_index(v)].lps;
    Node& n = nodes_[p];
    if (n.holders.erase(v) != 1) fail(Errc::InconsistentState, "leaf not registered at its palindrome");
    attach_[to_index(v)] = Attach{};
    DeleteOutcome out;
    out.node = p;
    out.len = n.len;
    if (!n.holders.empty()) return out;
    if (!n.ext.empty() || n.slink_children != 0)
        fail(Errc::InconsistentState, "palindrome without occurrences still referenced");
    nodes_[n.parent].ext.erase(n.center);
    --nodes_[n.slink].slink_children;
    if (nca_) nca_->delete_leaf(n.nca);
    n.version = DlinkMap{};
    n.live = false;
    --live_;
    out.removed = true;
    return out;
}

} // namespace triepal
