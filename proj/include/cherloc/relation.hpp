#pragma once

/**
 * @file relation.hpp
 * @brief Finite binary relations over a labelled set, with the poset
 *        operations used to compare orders on the same labels.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cherloc {

/// Dense square bit matrix, one row of 64-bit words per vertex.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }

    void set(std::size_t i, std::size_t j, bool v = true) {
        std::uint64_t mask = std::uint64_t{1} << (j % 64);
        auto& w = bits_[i * words_ + j / 64];
        w = v ? (w | mask) : (w & ~mask);
    }

    /// row(dst) |= row(src)
    void or_row(std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < words_; ++k) bits_[dst * words_ + k] |= bits_[src * words_ + k];
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : bits_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

template <class Label>
class Relation {
public:
    Relation() = default;

    explicit Relation(std::vector<Label> labels) : labels_(std::move(labels)), matrix_(labels_.size()) {
        for (std::size_t k = 0; k < labels_.size(); ++k)
            if (!index_.emplace(labels_[k], k).second) throw std::invalid_argument("Relation: duplicate label");
    }

    Relation(std::vector<Label> labels, BitMatrix matrix) : Relation(std::move(labels)) {
        if (matrix.size() != labels_.size()) throw std::invalid_argument("Relation: matrix size mismatch");
        matrix_ = std::move(matrix);
    }

    static Relation identity(std::vector<Label> labels) {
        Relation r(std::move(labels));
        for (std::size_t k = 0; k < r.size(); ++k) r.set(k, k);
        return r;
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(std::size_t k) const { return labels_.at(k); }
    const BitMatrix& matrix() const { return matrix_; }

    std::optional<std::size_t> index_of(const Label& l) const {
        auto it = index_.find(l);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool holds(std::size_t i, std::size_t j) const { return matrix_.get(i, j); }
    void set(std::size_t i, std::size_t j, bool v = true) { matrix_.set(i, j, v); }
    std::size_t edge_count() const { return matrix_.count(); }

    BitMatrix& mutable_matrix() { return matrix_; }

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.labels_ == b.labels_ && a.matrix_ == b.matrix_;
    }

private:
    std::vector<Label> labels_;
    std::map<Label, std::size_t> index_;
    BitMatrix matrix_;
};

/// Warshall closure on bit rows. The diagonal is not added.
template <class Label>
Relation<Label> transitive_closure(Relation<Label> r) {
    auto& m = r.mutable_matrix();
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (m.get(i, k)) m.or_row(i, k);
    return r;
}

template <class Label>
Relation<Label> reflexive_closure(Relation<Label> r) {
    for (std::size_t k = 0; k < r.size(); ++k) r.set(k, k);
    return r;
}

struct PosetViolation {
    enum class Kind { Reflexivity, Antisymmetry, Transitivity };
    Kind kind;
    std::vector<std::size_t> witness;  // (a), (a, b), or (a, b, c) with a<=b, b<=c, not a<=c
};

inline const char* to_string(PosetViolation::Kind k) {
    switch (k) {
        case PosetViolation::Kind::Reflexivity: return "reflexivity";
        case PosetViolation::Kind::Antisymmetry: return "antisymmetry";
        case PosetViolation::Kind::Transitivity: return "transitivity";
    }
    return "?";
}

/// First violated axiom, scanning in index order; nullopt for a partial order.
template <class Label>
std::optional<PosetViolation> check_partial_order(const Relation<Label>& r) {
    const std::size_t n = r.size();
    for (std::size_t a = 0; a < n; ++a)
        if (!r.holds(a, a)) return PosetViolation{PosetViolation::Kind::Reflexivity, {a}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (r.holds(a, b) && r.holds(b, a)) return PosetViolation{PosetViolation::Kind::Antisymmetry, {a, b}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!r.holds(a, b)) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (r.holds(b, c) && !r.holds(a, c))
                    return PosetViolation{PosetViolation::Kind::Transitivity, {a, b, c}};
        }
    return std::nullopt;
}

template <class Label>
bool is_partial_order(const Relation<Label>& r) {
    return !check_partial_order(r).has_value();
}

namespace detail {

template <class Label>
void require_same_labels(const Relation<Label>& a, const Relation<Label>& b) {
    if (a.labels() != b.labels()) throw std::invalid_argument("relations are over different label lists");
}

}  // namespace detail

/// fine ⊆ coarse as edge sets.
template <class Label>
bool refines(const Relation<Label>& fine, const Relation<Label>& coarse) {
    detail::require_same_labels(fine, coarse);
    for (std::size_t i = 0; i < fine.size(); ++i)
        for (std::size_t j = 0; j < fine.size(); ++j)
            if (fine.holds(i, j) && !coarse.holds(i, j)) return false;
    return true;
}

template <class Label>
Relation<Label> relation_union(const Relation<Label>& a, const Relation<Label>& b) {
    detail::require_same_labels(a, b);
    Relation<Label> u = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (b.holds(i, j)) u.set(i, j);
    return u;
}

/**
 * Shortest directed cycle among the off-diagonal edges, as a vertex
 * sequence v0 -> v1 -> ... -> v0. Ties go to the smallest start vertex.
 */
template <class Label>
std::optional<std::vector<std::size_t>> shortest_strict_cycle(const Relation<Label>& r) {
    const std::size_t n = r.size();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::optional<std::vector<std::size_t>> best;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> parent(n, none), dist(n, none);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        std::size_t closing = none;
        while (!q.empty() && closing == none) {
            std::size_t u = q.front();
            q.pop();
            if (best && dist[u] + 1 >= best->size()) break;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || !r.holds(u, v)) continue;
                if (v == s) {
                    closing = u;
                    break;
                }
                if (dist[v] == none) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                }
            }
        }
        if (closing == none) continue;
        std::vector<std::size_t> cycle;
        for (std::size_t v = closing; v != s; v = parent[v]) cycle.push_back(v);
        cycle.push_back(s);
        std::reverse(cycle.begin(), cycle.end());
        if (!best || cycle.size() < best->size()) best = std::move(cycle);
    }
    return best;
}

template <class Label>
struct CommonRefinement {
    std::optional<Relation<Label>> order;  // set on success
    std::vector<std::size_t> cycle;        // obstruction otherwise
};

/**
 * The smallest partial order containing both relations: the reflexive
 * transitive closure of their union, provided the union has no directed
 * cycle off the diagonal.
 */
template <class Label>
CommonRefinement<Label> common_refinement(const Relation<Label>& a, const Relation<Label>& b) {
    Relation<Label> u = relation_union(a, b);
    if (auto cycle = shortest_strict_cycle(u)) return {std::nullopt, std::move(*cycle)};
    return {reflexive_closure(transitive_closure(std::move(u))), {}};
}

/// Cover relation (transitive reduction without loops) of a partial order.
template <class Label>
Relation<Label> hasse(const Relation<Label>& r) {
    if (auto v = check_partial_order(r))
        throw std::invalid_argument(std::string("hasse: not a partial order (") + to_string(v->kind) + ")");
    const std::size_t n = r.size();
    Relation<Label> cover(r.labels());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !r.holds(a, b)) continue;
            bool covered = true;
            for (std::size_t c = 0; c < n && covered; ++c)
                if (c != a && c != b && r.holds(a, c) && r.holds(c, b)) covered = false;
            if (covered) cover.set(a, b);
        }
    return cover;
}

/// Hasse diagram in DOT; nodes in label order, edges from smaller to larger.
template <class Label, class Format>
std::string to_dot(const Relation<Label>& r, Format&& format, const std::string& graph_name = "order") {
    Relation<Label> cover = hasse(r);
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < r.size(); ++k) os << "  n" << k << " [label=\"" << format(r.label(k)) << "\"];\n";
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            if (cover.holds(a, b)) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace cherloc
