#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "shpf/partition.hpp"

namespace shpf {

// Permutation of [n] stored by images: w maps i to images[i-1] (1-based).
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw std::invalid_argument("Permutation: not a bijection of [n]");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    // Action on tuples: (w . a)_i = a_{w(i)}.
    template <typename T>
    std::vector<T> apply(const std::vector<T>& a) const {
        std::vector<T> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[images_[i] - 1];
        return out;
    }

    Partition cycle_type() const {
        std::vector<bool> seen(images_.size(), false);
        std::vector<int> lens;
        for (int i = 1; i <= n(); ++i) {
            if (seen[i - 1]) continue;
            int len = 0, j = i;
            while (!seen[j - 1]) {
                seen[j - 1] = true;
                j = images_[j - 1];
                ++len;
            }
            lens.push_back(len);
        }
        return Partition::from_multiset(std::move(lens));
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<bool> seen(images_.size(), false);
        std::vector<std::vector<int>> out;
        for (int i = 1; i <= n(); ++i) {
            if (seen[i - 1]) continue;
            std::vector<int> cyc;
            int j = i;
            while (!seen[j - 1]) {
                seen[j - 1] = true;
                cyc.push_back(j);
                j = images_[j - 1];
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Sign of w restricted to an invariant set I (indices with w(I) = I).
inline int restricted_sign(const Permutation& w, const std::vector<int>& index_set) {
    std::vector<bool> seen(index_set.size(), false);
    std::vector<int> pos_of(w.n() + 1, -1);
    for (std::size_t k = 0; k < index_set.size(); ++k) pos_of[index_set[k]] = static_cast<int>(k);
    int sign = 1;
    for (std::size_t k = 0; k < index_set.size(); ++k) {
        if (seen[k]) continue;
        int len = 0;
        std::size_t j = k;
        while (!seen[j]) {
            seen[j] = true;
            int img = w(index_set[j]);
            int pos = pos_of[img];
            if (pos < 0) throw std::invalid_argument("restricted_sign: set not invariant");
            j = static_cast<std::size_t>(pos);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Permutation with cycle type lambda built from consecutive blocks:
// a lambda_j-cycle on {r_j+1, ..., r_j+lambda_j} with r_j = lambda_1+...+lambda_{j-1}.
inline Permutation class_representative(const Partition& lambda) {
    std::vector<int> images(lambda.size());
    int r = 0;
    for (int part : lambda.parts()) {
        for (int i = 1; i <= part; ++i)
            images[r + i - 1] = r + (i % part) + 1;
        r += part;
    }
    return Permutation(std::move(images));
}

} // namespace shpf
