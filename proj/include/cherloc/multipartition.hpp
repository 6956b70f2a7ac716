#pragma once

/**
 * @file multipartition.hpp
 * @brief ell-multipartitions of n and their boxes.
 *
 * Coordinates are 1-based: a box (x, y, i) sits in row x, column y of the
 * Young diagram of component i, i.e. 1 <= y <= parts[i][x-1].
 */

#include <algorithm>
#include <compare>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cherloc {

using Partition = std::vector<int>;

struct Box {
    int x = 1;  // row
    int y = 1;  // column
    int i = 0;  // component

    friend auto operator<=>(const Box& a, const Box& b) {
        if (auto c = a.i <=> b.i; c != 0) return c;
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
    friend bool operator==(const Box&, const Box&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Box& b) {
        return os << "(" << b.x << "," << b.y << "," << b.i << ")";
    }
};

class Multipartition {
public:
    Multipartition() = default;

    explicit Multipartition(std::vector<Partition> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("multipartition needs at least one component");
        for (const auto& part : parts_) {
            for (std::size_t r = 0; r < part.size(); ++r) {
                if (part[r] <= 0) throw std::invalid_argument("partition entries must be positive");
                if (r > 0 && part[r] > part[r - 1])
                    throw std::invalid_argument("partition entries must be weakly decreasing");
                size_ += part[r];
            }
        }
    }

    int ell() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    const std::vector<Partition>& parts() const { return parts_; }
    const Partition& component(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    friend bool operator==(const Multipartition& a, const Multipartition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Multipartition& a, const Multipartition& b) { return a.parts_ <=> b.parts_; }

    friend std::ostream& operator<<(std::ostream& os, const Multipartition& m) {
        os << "(";
        for (std::size_t i = 0; i < m.parts_.size(); ++i) {
            if (i) os << "|";
            if (m.parts_[i].empty()) os << "-";
            for (std::size_t r = 0; r < m.parts_[i].size(); ++r) os << (r ? "," : "") << m.parts_[i][r];
        }
        return os << ")";
    }

private:
    std::vector<Partition> parts_;
    int size_ = 0;
};

/// Compact text form used for diagram labels, e.g. "(2,1|-|1)".
inline std::string to_label(const Multipartition& m) {
    std::string s = "(";
    for (int i = 0; i < m.ell(); ++i) {
        if (i) s += "|";
        const auto& part = m.component(i);
        if (part.empty()) s += "-";
        for (std::size_t r = 0; r < part.size(); ++r) s += (r ? "," : "") + std::to_string(part[r]);
    }
    return s + ")";
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_rec(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of n in descending lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("partition size must be nonnegative");
    std::vector<Partition> out;
    Partition prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

/**
 * All ell-multipartitions of n, each once, in the canonical label order:
 * descending lexicographic on the tuple of partitions (so ((n), -, ...)
 * comes first and (-, ..., (1^n)) last).
 */
inline std::vector<Multipartition> enumerate_multipartitions(int ell, int n) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");

    std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) by_size[static_cast<std::size_t>(k)] = enumerate_partitions(k);

    std::vector<Multipartition> out;
    std::vector<Partition> current(static_cast<std::size_t>(ell));
    std::function<void(int, int)> rec = [&](int component, int remaining) {
        if (component == ell - 1) {
            for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
                current.back() = p;
                out.emplace_back(current);
            }
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
                current[static_cast<std::size_t>(component)] = p;
                rec(component + 1, remaining - k);
            }
        }
    };
    rec(0, n);
    return out;
}

/// Boxes ordered by component, then row, then column.
inline std::vector<Box> boxes(const Multipartition& lambda) {
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 0; i < lambda.ell(); ++i) {
        const auto& part = lambda.component(i);
        for (std::size_t r = 0; r < part.size(); ++r)
            for (int y = 1; y <= part[r]; ++y) out.push_back(Box{static_cast<int>(r) + 1, y, i});
    }
    return out;
}

/// The n x n grid in each of the ell components; contains every box of every ell-multipartition of n.
inline std::vector<Box> relevant_boxes(int ell, int n) {
    if (ell < 1 || n < 1) throw std::invalid_argument("relevant_boxes needs ell >= 1 and n >= 1");
    std::vector<Box> out;
    out.reserve(static_cast<std::size_t>(ell) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < ell; ++i)
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) out.push_back(Box{x, y, i});
    return out;
}

/// Position of a box within relevant_boxes(ell, n).
inline std::size_t relevant_box_index(const Box& b, int n) {
    return (static_cast<std::size_t>(b.i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b.x - 1)) *
               static_cast<std::size_t>(n) +
           static_cast<std::size_t>(b.y - 1);
}

}  // namespace cherloc
