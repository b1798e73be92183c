// Fenwick (binary indexed) tree over integer weights, used by the event
// engine to sample a vertex proportionally to its susceptible-slot count.
#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace cplab {

class FenwickTree {
public:
    explicit FenwickTree(size_t n = 0) { reset(n); }

    void reset(size_t n) {
        n_ = n;
        highest_pow2_ = 1;
        while (highest_pow2_ * 2 <= n_) highest_pow2_ *= 2;
        tree_.assign(n + 1, 0);
        vals_.assign(n, 0);
        total_ = 0;
    }

    void add(size_t i, int64_t delta) {
        vals_[i] += delta;
        total_ += delta;
        for (size_t j = i + 1; j <= n_; j += j & (0 - j)) tree_[j] += delta;
    }

    void set(size_t i, int64_t value) {
        if (vals_[i] != value) add(i, value - vals_[i]);
    }

    int64_t value(size_t i) const { return vals_[i]; }
    int64_t total() const { return total_; }

    // Index i with prefix_sum(0..i-1) <= target < prefix_sum(0..i), for
    // 0 <= target < total().  prefix_before receives prefix_sum(0..i-1).
    size_t find(int64_t target, int64_t& prefix_before) const {
        assert(target >= 0 && target < total_);
        size_t pos = 0;
        int64_t acc = 0;
        for (size_t mask = highest_pow2_; mask > 0; mask >>= 1) {
            size_t next = pos + mask;
            if (next <= n_ && acc + tree_[next] <= target) {
                pos = next;
                acc += tree_[next];
            }
        }
        prefix_before = acc;
        return pos;
    }

private:
    size_t n_ = 0;
    size_t highest_pow2_ = 1;
    std::vector<int64_t> tree_;
    std::vector<int64_t> vals_;
    int64_t total_ = 0;
};

} // namespace cplab
