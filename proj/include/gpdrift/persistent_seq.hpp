#pragma once

#include <cassert>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace gpdrift {

/// Immutable sequence that grows and shrinks at the back. Versions share
/// every common prefix node, so keeping many snapshots of a string that is
/// edited at its end costs O(1) memory per edit.
///
/// Each node carries a skew-binary jump pointer (Myers' applicative
/// random-access stack), giving O(log n) access to any prefix. Prefix tests
/// between two versions descend to the common depth and then compare nodes,
/// stopping early as soon as the two versions share a node.
template <typename T>
class PersistentSeq {
    struct Node {
        T value;
        std::size_t depth;
        std::shared_ptr<const Node> parent;
        const Node* jump;

        Node(T v, std::shared_ptr<const Node> p)
            : value(std::move(v)), depth(p ? p->depth + 1 : 1), parent(std::move(p)), jump(nullptr) {
            const Node* up = parent.get();
            if (up && up->jump && up->jump->jump &&
                up->depth - up->jump->depth == up->jump->depth - up->jump->jump->depth)
                jump = up->jump->jump;
            else
                jump = up;
        }

        // Unlinks uniquely-owned ancestors iteratively; long chains would
        // otherwise recurse once per node.
        ~Node() {
            auto next = std::move(parent);
            while (next && next.use_count() == 1) {
                auto& mutable_next = const_cast<Node&>(*next);
                next = std::move(mutable_next.parent);
            }
        }
    };

    using NodePtr = std::shared_ptr<const Node>;

public:
    PersistentSeq() = default;

    std::size_t size() const noexcept { return head_ ? head_->depth : 0; }
    bool empty() const noexcept { return !head_; }

    const T& back() const {
        assert(head_);
        return head_->value;
    }
    const T& front() const { return at(0); }

    /// O(log n).
    const T& at(std::size_t index) const {
        assert(index < size());
        return ancestor(head_.get(), index + 1)->value;
    }

    [[nodiscard]] PersistentSeq push_back(T value) const {
        return PersistentSeq(std::make_shared<const Node>(std::move(value), head_));
    }

    [[nodiscard]] PersistentSeq pop_back() const {
        assert(head_);
        return PersistentSeq(head_->parent);
    }

    [[nodiscard]] PersistentSeq replace_back(T value) const { return pop_back().push_back(std::move(value)); }

    /// True iff this sequence is an element-wise prefix of `other`.
    bool is_prefix_of(const PersistentSeq& other) const {
        std::size_t n = size();
        if (n > other.size()) return false;
        const Node* mine = head_.get();
        const Node* theirs = ancestor(other.head_.get(), n);
        while (mine != theirs) {
            if (!(mine->value == theirs->value)) return false;
            mine = mine->parent.get();
            theirs = theirs->parent.get();
        }
        return true;
    }

    std::vector<T> to_vector() const {
        std::vector<T> out(size());
        std::size_t i = out.size();
        for (const Node* n = head_.get(); n; n = n->parent.get()) out[--i] = n->value;
        return out;
    }

    template <typename It>
    static PersistentSeq from_range(It first, It last) {
        PersistentSeq s;
        for (; first != last; ++first) s = s.push_back(*first);
        return s;
    }

    /// Node identity: true iff both versions are the same stored sequence.
    bool shares_storage_with(const PersistentSeq& other) const noexcept { return head_ == other.head_; }

    friend bool operator==(const PersistentSeq& a, const PersistentSeq& b) {
        return a.size() == b.size() && a.is_prefix_of(b);
    }

private:
    explicit PersistentSeq(NodePtr head) : head_(std::move(head)) {}

    static const Node* ancestor(const Node* node, std::size_t depth) {
        if (depth == 0) return nullptr;
        while (node->depth > depth) {
            if (node->jump && node->jump->depth >= depth)
                node = node->jump;
            else
                node = node->parent.get();
        }
        return node;
    }

    NodePtr head_;
};

}  // namespace gpdrift
