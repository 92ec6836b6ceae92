#pragma once

#include "mbr/error.hpp"

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mbr {

/// van Emde Boas set over the keys 1..U.
///
/// Recursion stops at 64-bit bitmask leaves. The minimum of every inner node
/// lives outside its clusters, so inserting into an empty cluster is O(1) and
/// every operation recurses once per level. Clusters are allocated on first use.
class OrderedIndex {
public:
    explicit OrderedIndex(std::uint64_t universe) : universe_(universe) {
        if (universe == 0) throw Error(Errc::OutOfUniverse, "universe must be nonempty");
        int bits = 0;
        while ((std::uint64_t{1} << bits) < universe) ++bits;
        root_ = std::make_unique<Node>(bits);
    }

    std::uint64_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool contains(std::uint64_t k) const {
        check(k);
        return root_->contains(k - 1);
    }

    /// Returns false if k was already present.
    bool insert(std::uint64_t k) {
        check(k);
        if (root_->contains(k - 1)) return false;
        root_->insert(k - 1);
        ++size_;
        return true;
    }

    /// Returns false if k was absent.
    bool erase(std::uint64_t k) {
        check(k);
        if (!root_->contains(k - 1)) return false;
        root_->erase(k - 1);
        --size_;
        return true;
    }

    std::optional<std::uint64_t> successor(std::uint64_t k) const {
        check(k);
        return shift(root_->successor(k - 1));
    }
    std::optional<std::uint64_t> predecessor(std::uint64_t k) const {
        check(k);
        return shift(root_->predecessor(k - 1));
    }
    std::optional<std::uint64_t> min() const { return shift(root_->min); }
    std::optional<std::uint64_t> max() const { return shift(root_->max); }

    void clear() {
        root_ = std::make_unique<Node>(root_->bits);
        size_ = 0;
    }

private:
    static constexpr std::int64_t nil = -1;

    struct Node {
        int bits;
        int lo_bits = 0;
        std::int64_t min = nil;
        std::int64_t max = nil;
        std::uint64_t mask = 0;  // leaf payload
        std::unique_ptr<Node> summary;
        std::vector<std::unique_ptr<Node>> clusters;

        explicit Node(int b) : bits(b) {
            if (!leaf()) {
                lo_bits = (bits + 1) / 2;
                clusters.resize(std::size_t{1} << (bits - lo_bits));
            }
        }

        bool leaf() const noexcept { return bits <= 6; }
        std::int64_t high(std::int64_t x) const noexcept { return x >> lo_bits; }
        std::int64_t low(std::int64_t x) const noexcept { return x & ((std::int64_t{1} << lo_bits) - 1); }
        std::int64_t index(std::int64_t h, std::int64_t l) const noexcept { return (h << lo_bits) | l; }

        void refresh_leaf() noexcept {
            if (mask == 0) {
                min = max = nil;
            } else {
                min = std::countr_zero(mask);
                max = 63 - std::countl_zero(mask);
            }
        }

        bool contains(std::int64_t x) const {
            if (leaf()) return (mask >> x) & 1U;
            if (x == min || x == max) return true;
            if (min == nil) return false;
            const auto& c = clusters[high(x)];
            return c && c->contains(low(x));
        }

        void insert(std::int64_t x) {
            if (leaf()) {
                mask |= std::uint64_t{1} << x;
                refresh_leaf();
                return;
            }
            if (min == nil) {
                min = max = x;
                return;
            }
            if (x < min) std::swap(x, min);
            auto h = high(x);
            auto& c = clusters[h];
            if (!c) c = std::make_unique<Node>(lo_bits);
            if (c->min == nil) {
                if (!summary) summary = std::make_unique<Node>(bits - lo_bits);
                summary->insert(h);
                c->insert(low(x));  // O(1) into an empty node
            } else {
                c->insert(low(x));
            }
            if (x > max) max = x;
        }

        void erase(std::int64_t x) {
            if (leaf()) {
                mask &= ~(std::uint64_t{1} << x);
                refresh_leaf();
                return;
            }
            if (min == max) {
                min = max = nil;
                return;
            }
            if (x == min) {
                auto first = summary->min;
                x = index(first, clusters[first]->min);
                min = x;
            }
            auto h = high(x);
            auto& c = clusters[h];
            c->erase(low(x));
            if (c->min == nil) {
                summary->erase(h);
                if (x == max) {
                    auto top = summary->max;
                    max = top == nil ? min : index(top, clusters[top]->max);
                }
            } else if (x == max) {
                max = index(h, c->max);
            }
        }

        std::int64_t successor(std::int64_t x) const {
            if (leaf()) {
                if (x >= 63) return nil;
                auto m = mask & (~std::uint64_t{0} << (x + 1));
                return m ? std::countr_zero(m) : nil;
            }
            if (min != nil && x < min) return min;
            auto h = high(x);
            const auto& c = clusters[h];
            if (c && c->max != nil && low(x) < c->max) return index(h, c->successor(low(x)));
            if (!summary) return nil;
            auto next = summary->successor(h);
            return next == nil ? nil : index(next, clusters[next]->min);
        }

        std::int64_t predecessor(std::int64_t x) const {
            if (leaf()) {
                if (x <= 0) return nil;
                auto m = mask & (~std::uint64_t{0} >> (64 - x));
                return m ? 63 - std::countl_zero(m) : nil;
            }
            if (max != nil && x > max) return max;
            auto h = high(x);
            const auto& c = clusters[h];
            if (c && c->min != nil && low(x) > c->min) return index(h, c->predecessor(low(x)));
            auto prev = summary ? summary->predecessor(h) : nil;
            if (prev == nil) return (min != nil && x > min) ? min : nil;
            return index(prev, clusters[prev]->max);
        }
    };

    void check(std::uint64_t k) const {
        if (k == 0 || k > universe_) {
            throw Error(Errc::OutOfUniverse,
                        std::to_string(k) + " not in [1," + std::to_string(universe_) + "]");
        }
    }

    static std::optional<std::uint64_t> shift(std::int64_t x) {
        if (x == nil) return std::nullopt;
        return static_cast<std::uint64_t>(x) + 1;
    }

    std::uint64_t universe_;
    std::size_t size_ = 0;
    std::unique_ptr<Node> root_;
};

} // namespace mbr
