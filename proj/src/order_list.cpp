#include "triepal/order_list.hpp"
#include "triepal/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace triepal {

namespace {

constexpr int kUniverseBits = 62;
constexpr std::uint64_t kUniverse = std::uint64_t{1} << kUniverseBits;
constexpr double kDensity = 1.4;
constexpr ElemId kNil = static_cast<ElemId>(-1);

} // namespace

struct OrderList::Impl {
    struct Elem {
        std::uint64_t key = 0;
        ElemId prev = kNil;
        ElemId next = kNil;
        bool live = true;
        std::vector<Label> colors;
    };

    struct ByKey {
        const Impl* self;
        bool operator()(ElemId a, ElemId b) const { return self->elems[a].key < self->elems[b].key; }
    };

    std::vector<Elem> elems;
    std::map<Label, std::set<ElemId, ByKey>> index;
    std::size_t live = 0;
    std::size_t colors = 0;
    std::size_t relabels = 0;

    Impl() { elems.emplace_back(); }

    const Elem& at(ElemId e) const {
        if (e == kFront || e >= elems.size() || !elems[e].live)
            fail(Errc::UnknownElement, "element " + std::to_string(e));
        return elems[e];
    }

    std::uint64_t key_after(ElemId e) const {
        ElemId n = elems[e].next;
        return n == kNil ? kUniverse : elems[n].key;
    }

    // Spreads the keys around `e` so that the gap after it is at least 2.
    void respread(ElemId e) {
        ++relabels;
        ElemId left = e;
        ElemId right = e;
        std::size_t count = 1;
        const std::uint64_t k = elems[e].key;
        for (int i = 1; i <= kUniverseBits; ++i) {
            const std::uint64_t size = std::uint64_t{1} << i;
            const std::uint64_t lo = k & ~(size - 1);
            const std::uint64_t hi = lo + size;
            while (elems[left].prev != kNil && elems[elems[left].prev].key >= lo) {
                left = elems[left].prev;
                ++count;
            }
            while (elems[right].next != kNil && elems[elems[right].next].key < hi) {
                right = elems[right].next;
                ++count;
            }
            const double cap = static_cast<double>(size) / std::max(2.0, std::pow(kDensity, i));
            if (static_cast<double>(count + 1) <= cap) {
                const std::uint64_t step = size / (count + 1);
                std::uint64_t key = lo;
                for (ElemId x = left;; x = elems[x].next) {
                    elems[x].key = key;
                    key += step;
                    if (x == right) break;
                }
                return;
            }
        }
        rebuild();
    }

    void rebuild() {
        const std::uint64_t step = kUniverse / (live + 2);
        std::uint64_t key = 0;
        for (ElemId x = 0; x != kNil; x = elems[x].next) {
            elems[x].key = key;
            key += step;
        }
    }

    ElemId link_after(ElemId e) {
        if (key_after(e) - elems[e].key < 2) respread(e);
        const std::uint64_t lo = elems[e].key;
        const std::uint64_t hi = key_after(e);
        Elem n;
        n.key = lo + (hi - lo) / 2;
        n.prev = e;
        n.next = elems[e].next;
        const auto id = static_cast<ElemId>(elems.size());
        if (n.next != kNil) elems[n.next].prev = id;
        elems[e].next = id;
        elems.push_back(std::move(n));
        ++live;
        return id;
    }
};

OrderList::OrderList() : impl_(std::make_unique<Impl>()) {}
OrderList::~OrderList() = default;
OrderList::OrderList(OrderList&&) noexcept = default;
OrderList& OrderList::operator=(OrderList&&) noexcept = default;

ElemId OrderList::insert_after(ElemId e) {
    if (e != kFront) impl_->at(e);
    return impl_->link_after(e);
}

ElemId OrderList::insert_before(ElemId e) {
    impl_->at(e);
    return impl_->link_after(impl_->elems[e].prev);
}

void OrderList::remove(ElemId e) {
    impl_->at(e);
    auto& x = impl_->elems[e];
    if (!x.colors.empty()) fail(Errc::ElementStillColored, "element " + std::to_string(e));
    impl_->elems[x.prev].next = x.next;
    if (x.next != kNil) impl_->elems[x.next].prev = x.prev;
    x.live = false;
    --impl_->live;
}

void OrderList::color(ElemId e, Label c) {
    impl_->at(e);
    auto& cs = impl_->elems[e].colors;
    for (Label x : cs)
        if (x == c) return;
    cs.push_back(c);
    auto it = impl_->index.try_emplace(c, Impl::ByKey{impl_.get()}).first;
    it->second.insert(e);
    ++impl_->colors;
}

void OrderList::uncolor(ElemId e, Label c) {
    impl_->at(e);
    auto& cs = impl_->elems[e].colors;
    auto pos = std::find(cs.begin(), cs.end(), c);
    if (pos == cs.end()) fail(Errc::ColorAbsent, "element " + std::to_string(e));
    cs.erase(pos);
    auto it = impl_->index.find(c);
    it->second.erase(e);
    if (it->second.empty()) impl_->index.erase(it);
    --impl_->colors;
}

bool OrderList::has_color(ElemId e, Label c) const {
    const auto& cs = impl_->at(e).colors;
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

std::optional<ElemId> OrderList::pred(ElemId e, Label c) const {
    impl_->at(e);
    auto it = impl_->index.find(c);
    if (it == impl_->index.end()) return std::nullopt;
    auto pos = it->second.lower_bound(e);
    if (pos == it->second.begin()) return std::nullopt;
    return *std::prev(pos);
}

std::optional<ElemId> OrderList::succ(ElemId e, Label c) const {
    impl_->at(e);
    auto it = impl_->index.find(c);
    if (it == impl_->index.end()) return std::nullopt;
    auto pos = it->second.upper_bound(e);
    if (pos == it->second.end()) return std::nullopt;
    return *pos;
}

bool OrderList::less(ElemId a, ElemId b) const { return impl_->at(a).key < impl_->at(b).key; }

std::optional<ElemId> OrderList::prev(ElemId e) const {
    ElemId p = impl_->at(e).prev;
    if (p == kFront) return std::nullopt;
    return p;
}

std::optional<ElemId> OrderList::next(ElemId e) const {
    ElemId n = impl_->at(e).next;
    if (n == kNil) return std::nullopt;
    return n;
}

bool OrderList::is_live(ElemId e) const {
    return e != kFront && e < impl_->elems.size() && impl_->elems[e].live;
}

std::size_t OrderList::size() const { return impl_->live; }
std::size_t OrderList::color_count() const { return impl_->colors; }
std::size_t OrderList::relabel_count() const { return impl_->relabels; }

std::vector<ElemId> OrderList::to_vector() const {
    std::vector<ElemId> out;
    out.reserve(impl_->live);
    for (ElemId x = impl_->elems[kFront].next; x != kNil; x = impl_->elems[x].next) out.push_back(x);
    return out;
}

} // namespace triepal
