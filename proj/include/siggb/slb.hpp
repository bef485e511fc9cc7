#pragma once

#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

#include "buchberger.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace siggb {

/// Which cofactor the rejection test consults against which Z ideal for a
/// pair (i, j), i < j, with cofactors c_j = t_ij/t_j and c_i = t_ij/t_i.
enum class SlbRejectTest { zi, zj, either, ci_zi, ci_zj };

enum class SlbPairOrder { normal, creation };

/// How Z_k for a freshly added element is formed: the quotient formula on
/// the pre-expansion Z_j, the same formula on the post-expansion Z_j (which
/// always contains the cofactor, so the quotient collapses to everything),
/// or just the staircase of earlier leading terms.
enum class SlbZkMode { quotient, post_quotient, staircase };

struct SlbOptions {
    SlbRejectTest reject_test = SlbRejectTest::zi;
    SlbPairOrder pair_order = SlbPairOrder::normal;
    SlbZkMode zk_mode = SlbZkMode::quotient;
    bool expand_on_reject = false;
};

/// Staggered Linear Basis algorithm. Each basis element f_k carries a
/// monomial ideal Z_k; the pair (f_i, f_j), i < j, is rejected when the
/// cofactor t_ij/t_j of f_j lies in the tested Z, otherwise the
/// S-polynomial is reduced fully. A nonzero result f_k joins the basis with
///   Z_k = (Z_j + (t_i)) : (t_ij/t_j) + (t_1, ..., t_{k-1})
/// evaluated before Z_j is expanded by t_ij/t_j.
inline GbResult slb(const std::vector<Polynomial>& F, const Ring& ring,
                    const SlbOptions& opts = {}) {
    GbResult result;
    for (const auto& f : F)
        if (f.is_zero())
            throw std::invalid_argument("slb: zero polynomial among the generators");

    std::vector<Polynomial>& basis = result.basis;
    std::vector<Monomial> lt;
    std::vector<MonomialIdeal> Z;
    for (const auto& f : F) {
        basis.push_back(poly_monic(f, ring));
        lt.push_back(f.leading_monomial());
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        MonomialIdeal zi(ring.nvars());
        for (std::size_t l = 0; l < i; ++l) zi.add(lt[l]);
        Z.push_back(std::move(zi));
    }

    std::set<detail::PairKey, detail::PairKeyLess> normal_queue{detail::PairKeyLess{&ring}};
    std::deque<std::pair<std::size_t, std::size_t>> fifo_queue;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        if (opts.pair_order == SlbPairOrder::normal) {
            Monomial l = mon_lcm(lt[i], lt[j]);
            normal_queue.insert({l.degree(), std::move(l), i, j});
        } else {
            fifo_queue.emplace_back(i, j);
        }
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    auto queue_empty = [&] { return normal_queue.empty() && fifo_queue.empty(); };
    auto pop_pair = [&]() -> std::pair<std::size_t, std::size_t> {
        if (opts.pair_order == SlbPairOrder::normal) {
            auto key = *normal_queue.begin();
            normal_queue.erase(normal_queue.begin());
            return {key.i, key.j};
        }
        auto p = fifo_queue.front();
        fifo_queue.pop_front();
        return p;
    };

    // which side the tracked cofactor belongs to
    const bool track_i =
        opts.reject_test == SlbRejectTest::ci_zi || opts.reject_test == SlbRejectTest::ci_zj;

    while (!queue_empty()) {
        auto [i, j] = pop_pair();
        Monomial lcm = mon_lcm(lt[i], lt[j]);
        Monomial cj = mon_div(lcm, lt[j]); // t_ij / t_j
        Monomial ci = mon_div(lcm, lt[i]); // t_ij / t_i

        bool rejected;
        switch (opts.reject_test) {
        case SlbRejectTest::zi: rejected = Z[i].contains(cj); break;
        case SlbRejectTest::zj: rejected = Z[j].contains(cj); break;
        case SlbRejectTest::ci_zi: rejected = Z[i].contains(ci); break;
        case SlbRejectTest::ci_zj: rejected = Z[j].contains(ci); break;
        case SlbRejectTest::either:
        default:
            rejected = Z[i].contains(cj) || Z[j].contains(cj);
            break;
        }
        const Monomial& cofactor = track_i ? ci : cj;
        std::size_t expand_at = track_i ? i : j;
        if (rejected) {
            result.stats.pruned_by_L++;
            if (opts.expand_on_reject) Z[expand_at].add(cofactor);
            continue;
        }

        result.stats.pairs_generated++;
        Polynomial h = normal_form(spol(basis[i], basis[j], ring).h, basis, ring);
        MonomialIdeal z_before = Z[expand_at];
        Z[expand_at].add(cofactor);

        if (h.is_zero()) {
            result.stats.zero_reductions++;
            continue;
        }

        std::size_t k = basis.size();
        basis.push_back(poly_monic(h, ring));
        lt.push_back(basis.back().leading_monomial());
        MonomialIdeal zk(ring.nvars());
        if (opts.zk_mode != SlbZkMode::staircase) {
            zk = opts.zk_mode == SlbZkMode::quotient ? z_before : Z[expand_at];
            zk.add(track_i ? lt[j] : lt[i]);
            zk = zk.quotient(cofactor);
        }
        for (std::size_t l = 0; l < k; ++l) zk.add(lt[l]);
        Z.push_back(std::move(zk));
        for (std::size_t l = 0; l < k; ++l) push_pair(l, k);
    }

    result.stats.basis_size = basis.size();
    return result;
}

/// Staggered output property: distinct basis elements have distinct
/// leading terms.
inline bool slb_staggered_property(const std::vector<Polynomial>& basis, const Ring& ring) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i] == basis[j]) continue;
            if (ring.order.equal(basis[i].leading_monomial(), basis[j].leading_monomial()))
                return false;
        }
    return true;
}

} // namespace siggb
