#pragma once

#include "triepal/label.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace triepal {

using ElemId = std::uint32_t;

/// Pseudo-handle for "before the first element"; valid only as the anchor of
/// insert_after.
inline constexpr ElemId kFront = 0;

/// Order-maintenance list whose elements carry sets of colors, answering
/// nearest same-colored predecessor/successor queries in O(log m).
///
/// Order keys are 64-bit gap labels; dense neighbourhoods are respread
/// locally and the whole list is rebuilt if the key space runs out. Per-color
/// indexes compare by current keys, so respreading needs no index updates.
class OrderList {
public:
    OrderList();
    ~OrderList();
    OrderList(OrderList&&) noexcept;
    OrderList& operator=(OrderList&&) noexcept;
    OrderList(const OrderList&) = delete;
    OrderList& operator=(const OrderList&) = delete;

    /// Throws UnknownElement.
    ElemId insert_after(ElemId e);
    ElemId insert_before(ElemId e);

    /// Throws UnknownElement, ElementStillColored.
    void remove(ElemId e);

    /// Idempotent. Throws UnknownElement.
    void color(ElemId e, Label c);
    /// Throws UnknownElement, ColorAbsent.
    void uncolor(ElemId e, Label c);
    bool has_color(ElemId e, Label c) const;

    /// Nearest strictly earlier / later element carrying color c.
    std::optional<ElemId> pred(ElemId e, Label c) const;
    std::optional<ElemId> succ(ElemId e, Label c) const;

    bool less(ElemId a, ElemId b) const;
    std::optional<ElemId> prev(ElemId e) const;
    std::optional<ElemId> next(ElemId e) const;
    bool is_live(ElemId e) const;

    std::size_t size() const;
    std::size_t color_count() const;
    std::size_t relabel_count() const;

    /// Elements in list order.
    std::vector<ElemId> to_vector() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace triepal
