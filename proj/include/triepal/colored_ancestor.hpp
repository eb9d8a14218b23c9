#pragma once

#include "triepal/label.hpp"
#include "triepal/order_list.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace triepal {

using NcaId = std::uint32_t;

/// Semi-dynamic nearest-colored-ancestor structure: a rooted tree that grows
/// and shrinks at the leaves, with one immutable color per node. Queries take
/// O(log m) via a colored Euler tour.
class ColoredAncestor {
public:
    explicit ColoredAncestor(Label root_color);

    NcaId root() const { return 0; }

    /// Throws UnknownNode.
    NcaId insert_leaf(NcaId parent, Label c);
    /// Throws UnknownNode, NotALeaf, IsRoot.
    void delete_leaf(NcaId v);

    /// Nearest proper ancestor of v colored c. Throws UnknownNode.
    std::optional<NcaId> nca(NcaId v, Label c) const;

    Label color(NcaId v) const;
    std::optional<NcaId> parent(NcaId v) const;
    bool is_live(NcaId v) const;
    std::size_t size() const { return live_; }

    /// Nodes in Euler-tour order, each appearing twice.
    std::vector<NcaId> euler_tour() const;
    const OrderList& list() const { return list_; }

private:
    struct Node {
        NcaId parent = 0;
        Label color;
        ElemId first = kFront;
        ElemId last = kFront;
        std::optional<NcaId> own_nca;
        std::uint32_t children = 0;
        bool live = true;
    };

    const Node& at(NcaId v) const;

    OrderList list_;
    std::vector<Node> nodes_;
    std::vector<NcaId> owner_;  // ElemId -> node
    std::vector<bool> is_first_;
    std::size_t live_ = 0;
};

} // namespace triepal
