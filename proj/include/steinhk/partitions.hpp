#pragma once

// Integer partitions: generation, hooks, doubling, conjugation, cycle-type
// constants. Values are immutable after construction.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace steinhk {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    // 1-indexed part access; parts beyond the length read as 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    bool operator!=(const Partition& other) const { return parts_ != other.parts_; }

    // Orders partitions of equal weight by the canonical enumeration order
    // (reverse-lexicographic: (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)).
    // Across weights, lighter partitions come first.
    bool operator<(const Partition& other) const {
        int w = weight(), ow = other.weight();
        if (w != ow) return w < ow;
        return std::lexicographical_compare(other.parts_.begin(), other.parts_.end(),
                                            parts_.begin(), parts_.end());
    }

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

// All partitions of k in reverse-lexicographic order, e.g.
// gen_partitions(4) = (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
inline std::vector<Partition> gen_partitions(int k) {
    if (k < 0) throw std::invalid_argument("gen_partitions: k must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int first = std::min(remaining, max_part); first >= 1; --first) {
            cur.push_back(first);
            self(self, remaining - first, first);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> cols(lambda.parts()[0], 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

// Product of hook lengths over all cells of the diagram.  The hook of cell
// (i,j) is 1 + cells to its right + cells below it, i.e.
// lambda_i - j + lambda'_j - i + 1 in 1-based coordinates.
inline long long hook_product(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    long long prod = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            prod *= static_cast<long long>(lambda.part(i) - j + conj.part(j) - i + 1);
    return prod;
}

// Partition with every part doubled: rows of length twice the original.
inline Partition doubled(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    for (int& p : parts) p *= 2;
    return Partition(std::move(parts));
}

// z_rho = prod_j j^{m_j} m_j!, the centralizer size of cycle type rho.
inline long long cycle_constant(const Partition& rho) {
    long long z = 1;
    int run_value = -1, run_count = 0;
    auto flush = [&]() {
        for (int m = 1; m <= run_count; ++m)
            z *= static_cast<long long>(run_value) * m;
    };
    for (int p : rho.parts()) {
        if (p == run_value) {
            ++run_count;
        } else {
            flush();
            run_value = p;
            run_count = 1;
        }
    }
    flush();
    return z;
}

// Dominance partial order on partitions of equal weight: a >= b iff every
// prefix sum of a is >= the corresponding prefix sum of b.
inline bool dominates(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("dominates: partitions must have equal weight");
    long long sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

// Sign of the conjugacy class rho: (-1)^(|rho| - l(rho)).
inline int class_sign(const Partition& rho) {
    return ((rho.weight() - rho.length()) % 2 == 0) ? 1 : -1;
}

}  // namespace steinhk
