#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

namespace triepal {

/// Fully persistent ordered map built from path-copied AVL trees. Every
/// version is immutable; with_set allocates O(log k) new nodes and shares
/// the rest with its source.
template <class K, class V, class Less = std::less<K>>
class PersistentMap {
    struct Node {
        K key;
        V value;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        int height = 1;
        std::size_t size = 1;
    };
    using Ptr = std::shared_ptr<const Node>;

public:
    PersistentMap() = default;

    std::size_t size() const { return root_ ? root_->size : 0; }
    bool empty() const { return !root_; }

    std::optional<V> get(const K& key) const {
        const Node* n = root_.get();
        while (n) {
            if (Less{}(key, n->key))
                n = n->left.get();
            else if (Less{}(n->key, key))
                n = n->right.get();
            else
                return n->value;
        }
        return std::nullopt;
    }

    [[nodiscard]] PersistentMap with_set(const K& key, const V& value) const {
        PersistentMap out;
        out.root_ = set(root_, key, value);
        return out;
    }

    /// In-order traversal.
    template <class F>
    void for_each(F&& f) const { walk(root_.get(), f); }

    /// Calls f(const void*) for every tree node; used to measure sharing.
    template <class F>
    void visit_nodes(F&& f) const { visit(root_.get(), f); }

    int height() const { return h(root_); }

private:
    static int h(const Ptr& p) { return p ? p->height : 0; }
    static std::size_t sz(const Ptr& p) { return p ? p->size : 0; }

    static Ptr make(const K& k, const V& v, Ptr l, Ptr r) {
        auto n = std::make_shared<Node>();
        n->key = k;
        n->value = v;
        n->height = 1 + std::max(h(l), h(r));
        n->size = 1 + sz(l) + sz(r);
        n->left = std::move(l);
        n->right = std::move(r);
        return n;
    }

    static Ptr rotate_right(const Ptr& n, const Ptr& l, const Ptr& r) {
        // n's children replaced by (l, r); l is the heavy side.
        return make(l->key, l->value, l->left, make(n->key, n->value, l->right, r));
    }
    static Ptr rotate_left(const Ptr& n, const Ptr& l, const Ptr& r) {
        return make(r->key, r->value, make(n->key, n->value, l, r->left), r->right);
    }

    static Ptr balance(const Ptr& n, Ptr l, Ptr r) {
        const int bf = h(l) - h(r);
        if (bf > 1) {
            if (h(l->left) < h(l->right)) l = rotate_left(l, l->left, l->right);
            return rotate_right(n, l, r);
        }
        if (bf < -1) {
            if (h(r->right) < h(r->left)) r = rotate_right(r, r->left, r->right);
            return rotate_left(n, l, r);
        }
        return make(n->key, n->value, std::move(l), std::move(r));
    }

    static Ptr set(const Ptr& n, const K& key, const V& value) {
        if (!n) return make(key, value, nullptr, nullptr);
        if (Less{}(key, n->key)) return balance(n, set(n->left, key, value), n->right);
        if (Less{}(n->key, key)) return balance(n, n->left, set(n->right, key, value));
        return make(key, value, n->left, n->right);
    }

    template <class F>
    static void walk(const Node* n, F& f) {
        if (!n) return;
        walk(n->left.get(), f);
        f(n->key, n->value);
        walk(n->right.get(), f);
    }

    template <class F>
    static void visit(const Node* n, F& f) {
        if (!n) return;
        f(static_cast<const void*>(n));
        visit(n->left.get(), f);
        visit(n->right.get(), f);
    }

    Ptr root_;
};

} // namespace triepal
