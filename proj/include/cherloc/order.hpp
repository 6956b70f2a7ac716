#pragma once

/**
 * @file order.hpp
 * @brief The order <=^p on ell-multipartitions of n.
 *
 * lambda <=^p mu iff the boxes of lambda can be matched bijectively with the
 * boxes of mu so that every box is <= its partner in the content order. This
 * is decided as a perfect-matching question with Hopcroft-Karp; a factorial
 * brute force over all bijections is kept as an independent check.
 */

#include "cherloc/box_order.hpp"
#include "cherloc/matching.hpp"
#include "cherloc/multipartition.hpp"
#include "cherloc/relation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cherloc {

using MultipartitionRelation = Relation<Multipartition>;

class OrderInstance {
public:
    OrderInstance(Params p, int n, BoxOrderMode mode = BoxOrderMode::Literal)
        : p_(std::move(p)), n_(n), mode_(mode), labels_(enumerate_multipartitions(p_.ell(), n)) {
        if (n_ < 1) return;
        // box_leq over all boxes that can occur; every pair query afterwards is a lookup
        auto all = relevant_boxes(p_.ell(), n_);
        table_ = BitMatrix(all.size());
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = 0; b < all.size(); ++b)
                if (box_leq(p_, all[a], all[b], mode_)) table_.set(a, b);
    }

    const Params& params() const { return p_; }
    int ell() const { return p_.ell(); }
    int n() const { return n_; }
    BoxOrderMode mode() const { return mode_; }
    const std::vector<Multipartition>& labels() const { return labels_; }

    bool box_leq_lookup(const Box& b, const Box& b2) const {
        return table_.get(relevant_box_index(b, n_), relevant_box_index(b2, n_));
    }

private:
    Params p_;
    int n_;
    BoxOrderMode mode_;
    std::vector<Multipartition> labels_;
    BitMatrix table_;
};

namespace detail {

inline void check_pair(const OrderInstance& inst, const Multipartition& lambda, const Multipartition& mu) {
    if (lambda.size() != inst.n() || mu.size() != inst.n())
        throw std::invalid_argument("leq_p: multipartition size differs from n");
    if (lambda.ell() != inst.ell() || mu.ell() != inst.ell())
        throw std::invalid_argument("leq_p: multipartition has the wrong number of components");
}

}  // namespace detail

inline bool leq_p(const OrderInstance& inst, const Multipartition& lambda, const Multipartition& mu) {
    detail::check_pair(inst, lambda, mu);
    if (lambda == mu) return true;
    auto left = boxes(lambda);
    auto right = boxes(mu);
    std::vector<std::vector<std::size_t>> adj(left.size());
    for (std::size_t u = 0; u < left.size(); ++u) {
        for (std::size_t v = 0; v < right.size(); ++v)
            if (inst.box_leq_lookup(left[u], right[v])) adj[u].push_back(v);
        if (adj[u].empty()) return false;
    }
    return maximum_matching_size(right.size(), std::move(adj)) == left.size();
}

/// Exhaustive search over all n! bijections, evaluating box_leq from scratch.
inline bool leq_p_oracle(const OrderInstance& inst, const Multipartition& lambda, const Multipartition& mu,
                         int bound = 6) {
    detail::check_pair(inst, lambda, mu);
    if (inst.n() > bound)
        throw std::invalid_argument("leq_p_oracle: n = " + std::to_string(inst.n()) + " exceeds bound " +
                                    std::to_string(bound));
    auto left = boxes(lambda);
    auto right = boxes(mu);
    std::vector<std::size_t> perm(right.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        bool ok = true;
        for (std::size_t k = 0; k < left.size() && ok; ++k)
            ok = box_leq(inst.params(), left[k], right[perm[k]], inst.mode());
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Full relation over the canonical labels. Rows are split across `workers` threads.
inline MultipartitionRelation relation_p(const OrderInstance& inst, unsigned workers = 1) {
    MultipartitionRelation r(inst.labels());
    const std::size_t m = inst.labels().size();
    std::vector<std::vector<char>> rows(m, std::vector<char>(m, 0));
    auto fill = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < m; i += step)
            for (std::size_t j = 0; j < m; ++j) rows[i][j] = leq_p(inst, inst.labels()[i], inst.labels()[j]) ? 1 : 0;
    };
    workers = std::max(1u, workers);
    if (workers == 1) {
        fill(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fill, w, workers);
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (rows[i][j]) r.set(i, j);
    return r;
}

inline std::string order_to_dot(const MultipartitionRelation& r) {
    return to_dot(r, [](const Multipartition& m) { return to_label(m); });
}

}  // namespace cherloc
