#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"
#include "sgb.hpp"

namespace siggb {

namespace detail {

/// Normal selection strategy key: ascending lcm degree, then lcm under the
/// ring ordering, then (i, j) lexicographic.
struct PairKey {
    std::uint64_t deg;
    Monomial lcm;
    std::size_t i, j;
};

struct PairKeyLess {
    const Ring* ring;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (int c = ring->order.compare(a.lcm, b.lcm); c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace detail

struct GbResult {
    std::vector<Polynomial> basis;
    RunStats stats;
};

/// Classical Buchberger algorithm with the normal selection strategy.
/// With use_criteria the coprimality (product) and chain criteria prune
/// pairs before reduction.
inline GbResult buchberger(const std::vector<Polynomial>& F, const Ring& ring,
                           bool use_criteria = true) {
    GbResult result;
    for (const auto& f : F)
        if (f.is_zero())
            throw std::invalid_argument("buchberger: zero polynomial among the generators");

    std::vector<Polynomial>& G = result.basis;
    for (const auto& f : F) G.push_back(poly_monic(f, ring));

    std::set<detail::PairKey, detail::PairKeyLess> queue{detail::PairKeyLess{&ring}};
    // treated(i,j): pair already processed or pruned; input to the chain criterion
    std::vector<std::vector<bool>> treated(G.size(), std::vector<bool>(G.size(), false));

    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial lcm = mon_lcm(G[i].leading_monomial(), G[j].leading_monomial());
        queue.insert({lcm.degree(), std::move(lcm), i, j});
    };
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) push_pair(i, j);

    auto is_treated = [&](std::size_t a, std::size_t b) {
        return treated[std::min(a, b)][std::max(a, b)];
    };

    while (!queue.empty()) {
        auto key = *queue.begin();
        queue.erase(queue.begin());
        std::size_t i = key.i, j = key.j;
        treated[i][j] = true;

        if (use_criteria) {
            if (mon_coprime(G[i].leading_monomial(), G[j].leading_monomial()))
                continue;
            bool chained = false;
            for (std::size_t k = 0; k < G.size() && !chained; ++k) {
                if (k == i || k == j) continue;
                if (mon_divides(G[k].leading_monomial(), key.lcm) && is_treated(i, k) &&
                    is_treated(k, j))
                    chained = true;
            }
            if (chained) continue;
        }

        SPolyParts sp = spol(G[i], G[j], ring);
        result.stats.pairs_generated++;
        Polynomial h = normal_form(sp.h, G, ring);
        if (h.is_zero()) {
            result.stats.zero_reductions++;
            continue;
        }
        G.push_back(poly_monic(h, ring));
        for (auto& row : treated) row.push_back(false);
        treated.emplace_back(G.size(), false);
        for (std::size_t l = 0; l + 1 < G.size(); ++l) push_pair(l, G.size() - 1);
    }

    result.stats.basis_size = G.size();
    return result;
}

/// True iff every pairwise S-polynomial reduces to zero modulo G
/// (Buchberger's criterion).
inline bool verify_gb(const std::vector<Polynomial>& G, const Ring& ring) {
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].is_zero() || G[j].is_zero()) continue;
            if (mon_coprime(G[i].leading_monomial(), G[j].leading_monomial()))
                continue; // reduces to zero by the product criterion
            if (!normal_form(spol(G[i], G[j], ring).h, G, ring).is_zero()) return false;
        }
    }
    return true;
}

/// The unique reduced Groebner basis: monic, auto-reduced, sorted by
/// ascending leading term. With verify_input the GB precondition is
/// checked first.
inline std::vector<Polynomial> reduced_gb(const std::vector<Polynomial>& G, const Ring& ring,
                                          bool verify_input = false) {
    if (verify_input && !verify_gb(G, ring))
        throw std::invalid_argument("reduced_gb: input is not a Groebner basis");

    std::vector<Polynomial> work;
    for (const auto& g : G)
        if (!g.is_zero()) work.push_back(poly_monic(g, ring));
    std::sort(work.begin(), work.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring.order.less(a.leading_monomial(), b.leading_monomial());
    });

    // minimal basis: ascending leading terms, so dividers come first
    std::vector<Polynomial> minimal;
    for (auto& g : work) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (mon_divides(kept.leading_monomial(), g.leading_monomial())) redundant = true;
        if (!redundant) minimal.push_back(std::move(g));
    }

    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(poly_monic(normal_form(minimal[i], others, ring), ring));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring.order.less(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

} // namespace siggb
