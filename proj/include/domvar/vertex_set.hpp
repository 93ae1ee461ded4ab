#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace domvar {

/// Set of vertex ids over a fixed id range [0, capacity). Iteration is ascending.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity) : bits_(static_cast<std::size_t>(capacity)) {}
    VertexSet(int capacity, std::initializer_list<int> members) : VertexSet(capacity) {
        for (int v : members) insert(v);
    }
    static VertexSet from(int capacity, const std::vector<int> &members) {
        VertexSet s(capacity);
        for (int v : members) s.insert(v);
        return s;
    }
    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        s.bits_.set();
        return s;
    }

    int capacity() const { return static_cast<int>(bits_.size()); }
    int size() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }
    bool contains(int v) const { return bits_.test(static_cast<std::size_t>(v)); }

    void insert(int v) { bits_.set(static_cast<std::size_t>(v)); }
    void erase(int v) { bits_.reset(static_cast<std::size_t>(v)); }

    VertexSet &operator|=(const VertexSet &o) { bits_ |= o.bits_; return *this; }
    VertexSet &operator&=(const VertexSet &o) { bits_ &= o.bits_; return *this; }
    VertexSet &operator-=(const VertexSet &o) { bits_ -= o.bits_; return *this; }
    friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }
    VertexSet complement() const {
        VertexSet s = *this;
        s.bits_.flip();
        return s;
    }

    bool intersects(const VertexSet &o) const { return bits_.intersects(o.bits_); }
    bool is_subset_of(const VertexSet &o) const { return bits_.is_subset_of(o.bits_); }
    friend bool operator==(const VertexSet &a, const VertexSet &b) { return a.bits_ == b.bits_; }

    /// Smallest member, or -1.
    int first() const {
        auto p = bits_.find_first();
        return p == boost::dynamic_bitset<>::npos ? -1 : static_cast<int>(p);
    }
    /// Smallest member greater than v, or -1.
    int next(int v) const {
        auto p = bits_.find_next(static_cast<std::size_t>(v));
        return p == boost::dynamic_bitset<>::npos ? -1 : static_cast<int>(p);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const VertexSet *s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator &operator++() { v_ = s_->next(v_); return *this; }
        iterator operator++(int) { auto t = *this; ++*this; return t; }
        bool operator==(const iterator &o) const { return v_ == o.v_; }
        bool operator!=(const iterator &o) const { return v_ != o.v_; }
    private:
        const VertexSet *s_ = nullptr;
        int v_ = -1;
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    boost::dynamic_bitset<> bits_;
};

} // namespace domvar
