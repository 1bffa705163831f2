#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "shpf/rational.hpp"

namespace shpf {

// Integer partition in canonical form: weakly decreasing positive parts,
// zeros stripped on construction. The empty partition is the unique
// partition of 0.
//
// Partitions of equal size are ordered reverse-lexicographically, i.e.
// (n) first and (1^n) last. That order is used everywhere a partition
// order matters: map iteration, enumeration, linear-algebra pivoting.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::erase(parts_, 0);
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("Partition: negative part");
        if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
            throw std::invalid_argument("Partition: parts not weakly decreasing");
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    // Canonicalizes an arbitrary multiset of non-negative integers.
    static Partition from_multiset(std::vector<int> values) {
        std::sort(values.rbegin(), values.rend());
        return Partition(std::move(values));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    int multiplicity(int i) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
    }

    bool is_odd() const {
        return std::all_of(parts_.begin(), parts_.end(),
                           [](int p) { return p % 2 == 1; });
    }

    bool is_strict() const {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] >= parts_[i - 1]) return false;
        return true;
    }

    bool operator==(const Partition& o) const = default;

    // Reverse-lexicographic: lexicographically larger part sequences first.
    bool operator<(const Partition& o) const { return parts_ > o.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

enum class PartitionFilter { All, Odd, Strict };

// All partitions of n in reverse-lexicographic order, optionally
// restricted to all-odd-part or strictly decreasing partitions.
inline std::vector<Partition> partitions_of(int n,
                                            PartitionFilter filter = PartitionFilter::All) {
    if (n < 0) throw std::invalid_argument("partitions_of: n < 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            if (filter == PartitionFilter::Odd && k % 2 == 0) continue;
            acc.push_back(k);
            self(self, remaining - k,
                 filter == PartitionFilter::Strict ? k - 1 : k);
            acc.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

// z_lambda = prod_i i^{m_i} * m_i!, the centralizer order of a permutation
// of cycle type lambda.
inline Integer z_lambda(const Partition& lambda) {
    Integer z = 1;
    int prev = -1;
    int run = 0;
    auto flush = [&]() {
        if (run > 0) z *= pow_int(prev, run) * factorial(run);
    };
    for (int p : lambda.parts()) {
        if (p == prev) {
            ++run;
        } else {
            flush();
            prev = p;
            run = 1;
        }
    }
    flush();
    return z;
}

} // namespace shpf
