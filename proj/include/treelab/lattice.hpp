#pragma once

#include <iterator>
#include <utility>
#include <vector>

#include "treelab/exact.hpp"
#include "treelab/model.hpp"

namespace treelab {

// sigma <= pi in refinement order: every block of sigma is contained in a
// block of pi. Throws GroundSetMismatch when the ground sets differ.
bool refines(const SetPartition& sigma, const SetPartition& pi);

namespace detail {

// Restricted growth strings a over m items: a[0] = 0 and
// a[i] <= 1 + max(a[0..i-1]). Advances in lexicographic order.
struct RgsState {
    std::vector<int> digits;
    bool end = false;

    explicit RgsState(int m, bool at_end = false) : digits(m, 0), end(at_end) {}

    int block_count() const {
        int mx = -1;
        for (int d : digits) mx = std::max(mx, d);
        return mx + 1;
    }

    void advance() {
        const int m = static_cast<int>(digits.size());
        for (int i = m - 1; i >= 1; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, digits[j]);
            if (digits[i] <= prefix_max) {
                ++digits[i];
                std::fill(digits.begin() + i + 1, digits.end(), 0);
                return;
            }
        }
        end = true;
    }

    bool operator==(const RgsState& o) const {
        return end == o.end && (end || digits == o.digits);
    }
};

}  // namespace detail

// Lazily enumerates the partitions obtained by grouping `items` according to
// every restricted growth string, in lexicographic string order. With
// items = {2, ..., n} this is all of the partition lattice of [2, n]; with
// items = the blocks of sigma it is the interval above sigma.
class GroupedPartitionRange {
public:
    GroupedPartitionRange(int ground_n, std::vector<std::vector<int>> items)
        : ground_n_(ground_n), items_(std::move(items)) {}

    class iterator {
    public:
        using value_type = SetPartition;
        using reference = SetPartition;
        using pointer = void;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator(const GroupedPartitionRange* range, bool at_end)
            : range_(range),
              state_(static_cast<int>(range->items_.size()), at_end) {}

        SetPartition operator*() const {
            std::vector<std::vector<int>> blocks(state_.block_count());
            for (std::size_t i = 0; i < range_->items_.size(); ++i) {
                auto& block = blocks[state_.digits[i]];
                block.insert(block.end(), range_->items_[i].begin(), range_->items_[i].end());
            }
            return SetPartition(range_->ground_n_, std::move(blocks));
        }

        iterator& operator++() {
            state_.advance();
            return *this;
        }
        void operator++(int) { ++*this; }

        bool operator==(const iterator& o) const { return state_ == o.state_; }

    private:
        const GroupedPartitionRange* range_;
        detail::RgsState state_;
    };

    iterator begin() const { return iterator(this, false); }
    iterator end() const { return iterator(this, true); }

    std::vector<SetPartition> to_vector() const {
        std::vector<SetPartition> out;
        for (const SetPartition& pi : *this) out.push_back(pi);
        return out;
    }

private:
    int ground_n_;
    std::vector<std::vector<int>> items_;
};

// Every partition of [2, n], exactly once; Bell(n-1) of them.
GroupedPartitionRange all_partitions(int n);

// Every pi >= sigma, exactly once; Bell(|sigma|) of them.
GroupedPartitionRange coarsenings(const SetPartition& sigma);

// The partitions covering sigma: one per unordered pair of merged blocks.
std::vector<SetPartition> covers(const SetPartition& sigma);

// Mobius function of the interval [pi, sigma], computed by the defining
// recursion (mu(pi,pi) = 1, lower sums vanish) and cross-checked against the
// product of signed factorials over the blocks of sigma. Throws OrderError
// when pi does not refine sigma.
BigInt mobius(const SetPartition& pi, const SetPartition& sigma);

// Stirling numbers of the second kind.
BigInt stirling2(int k, int j);

// lhs = sum_j S(k,j) n(n-1)...(n-j+1), rhs = n^k; the two agree.
std::pair<BigInt, BigInt> stirling_identity_check(int k, int n);

}  // namespace treelab
