#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "module_term.hpp"
#include "polynomial.hpp"
#include "syzygy_set.hpp"

namespace siggb {

/// Module representation certificate: one polynomial per generator slot.
/// For a labeled polynomial (f, sigma) the invariants are
///   sum_i cert[i] * F[i] == f   and   LT(cert) == sigma under mu'.
using ModuleElement = std::vector<Polynomial>;

struct LabeledPolynomial {
    Polynomial poly;
    ModuleTerm sig;
    std::optional<ModuleElement> cert;
    bool primitive = false;
};

struct RunStats {
    std::uint64_t zero_reductions = 0;
    std::uint64_t pairs_generated = 0;
    std::uint64_t pruned_by_L = 0;
    std::uint64_t pruned_rewritable = 0;
    std::uint64_t pruned_nonprimitive = 0;
    std::uint64_t reduction_steps = 0;
    std::uint64_t basis_size = 0;
};

struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void cert_scale(ModuleElement& c, std::uint32_t a, const Ring& ring) {
    for (auto& comp : c) comp = poly_scale(comp, a, ring);
}

/// c := c - a * t * g, componentwise.
inline void cert_axpy(ModuleElement& c, std::uint32_t a, const Monomial& t,
                      const ModuleElement& g, const Ring& ring) {
    assert(c.size() == g.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = poly_axpy(c[i], a, t, g[i], ring);
}

inline Polynomial cert_evaluate(const ModuleElement& c, const std::vector<Polynomial>& F,
                                const Ring& ring) {
    assert(c.size() == F.size());
    Polynomial acc;
    for (std::size_t i = 0; i < c.size(); ++i)
        acc = poly_add(acc, poly_mul(c[i], F[i], ring), ring);
    return acc;
}

/// Leading module term of a nonzero module element under mu'.
inline ModuleTerm cert_leading_term(const ModuleElement& c, const ModuleOrder& mord) {
    const Polynomial* nonzero = nullptr;
    ModuleTerm best;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (const auto& t : c[i].terms()) {
            ModuleTerm cand{t.mon, static_cast<std::uint32_t>(i + 1)};
            if (nonzero == nullptr || mord.less(best, cand)) best = cand;
            nonzero = &c[i];
        }
    }
    assert(nonzero != nullptr && "leading term of the zero module element");
    return best;
}

/// True iff the certificate of p evaluates to p.poly under F and its
/// leading module term equals p.sig. For zero reductions p.poly is the
/// zero polynomial and the same check certifies sigma in LT(syz F).
inline bool certify(const LabeledPolynomial& p, const std::vector<Polynomial>& F,
                    const Ring& ring, const ModuleOrder& mord) {
    if (!p.cert)
        throw std::logic_error("certify called without a certificate");
    if (cert_evaluate(*p.cert, F, ring) != p.poly) return false;
    bool all_zero = true;
    for (const auto& comp : *p.cert)
        if (!comp.is_zero()) all_zero = false;
    if (all_zero) return false;
    return cert_leading_term(*p.cert, mord) == p.sig;
}

struct SPolyParts {
    Polynomial h;
    Monomial u1, u2;
};

/// S-polynomial with monomial cofactors: h = u1*g1/LC(g1) - u2*g2/LC(g2),
/// u_i = lcm(LT(g1), LT(g2)) / LT(g_i). The leading terms cancel.
inline SPolyParts spol(const Polynomial& g1, const Polynomial& g2, const Ring& ring) {
    if (g1.is_zero() || g2.is_zero())
        throw std::invalid_argument("spol of a zero polynomial");
    Monomial lcm = mon_lcm(g1.leading_monomial(), g2.leading_monomial());
    Monomial u1 = mon_div(lcm, g1.leading_monomial());
    Monomial u2 = mon_div(lcm, g2.leading_monomial());
    Polynomial lhs = poly_mul_term(g1, ring.field.inv(g1.leading_coeff()), u1, ring);
    Polynomial h = poly_axpy(lhs, ring.field.inv(g2.leading_coeff()), u2, g2, ring);
    return {std::move(h), std::move(u1), std::move(u2)};
}

/// G-restricted primitivity test: f is non-primitive when some g in G and
/// t != 1 satisfy t*LT(g) = LT(f), t*S(g) = S(f) and t*S(g) not in <L>.
inline bool is_primitive(const LabeledPolynomial& f, const std::vector<LabeledPolynomial>& G,
                         const SyzygyLeadSet& L) {
    for (const auto& g : G) {
        if (!mon_divides(g.poly.leading_monomial(), f.poly.leading_monomial())) continue;
        Monomial t = mon_div(f.poly.leading_monomial(), g.poly.leading_monomial());
        if (t.is_one()) continue;
        ModuleTerm ts = sig_mul(t, g.sig);
        if (ts == f.sig && !L.contains(ts)) return false;
    }
    return true;
}

/// Normal pair test with the weakened condition 2: both elements primitive,
/// both signature products outside <L>, products distinct.
inline bool is_normal_pair(const LabeledPolynomial& g1, const LabeledPolynomial& g2,
                           const SyzygyLeadSet& L, const ModuleOrder& mord,
                           const Ring& ring) {
    (void)mord;
    if (!g1.primitive || !g2.primitive) return false;
    Monomial lcm = mon_lcm(g1.poly.leading_monomial(), g2.poly.leading_monomial());
    ModuleTerm s1 = sig_mul(mon_div(lcm, g1.poly.leading_monomial()), g1.sig);
    ModuleTerm s2 = sig_mul(mon_div(lcm, g2.poly.leading_monomial()), g2.sig);
    if (s1 == s2) return false;
    if (L.contains(s1) || L.contains(s2)) return false;
    return true;
}

/// Pending S-polynomials keyed by signature. At most one entry per sigma
/// (Remark 6); collisions keep the smaller leading term, a zero polynomial
/// beats everything, ties keep the incumbent.
class PairQueue {
public:
    struct Entry {
        Polynomial poly;
        std::optional<ModuleElement> cert;
    };

    explicit PairQueue(const ModuleOrder& mord) : entries_(SigLess{mord}) {}

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    void insert(const ModuleTerm& sig, Entry entry, const Ring& ring, RunStats& stats) {
        auto it = entries_.find(sig);
        if (it == entries_.end()) {
            entries_.emplace(sig, std::move(entry));
            return;
        }
        stats.pruned_rewritable++;
        bool replace;
        if (entry.poly.is_zero())
            replace = !it->second.poly.is_zero();
        else if (it->second.poly.is_zero())
            replace = false;
        else
            replace = ring.order.less(entry.poly.leading_monomial(),
                                      it->second.poly.leading_monomial());
        if (replace) it->second = std::move(entry);
    }

    /// Remove and return the entry with minimal sigma.
    std::pair<ModuleTerm, Entry> pop_min() {
        assert(!entries_.empty());
        auto it = entries_.begin();
        std::pair<ModuleTerm, Entry> r{it->first, std::move(it->second)};
        entries_.erase(it);
        return r;
    }

    void erase(const ModuleTerm& sig) { entries_.erase(sig); }

    template <typename Pred>
    std::uint64_t erase_if(Pred pred) {
        std::uint64_t n = 0;
        for (auto it = entries_.begin(); it != entries_.end();) {
            if (pred(it->first, it->second)) {
                it = entries_.erase(it);
                ++n;
            } else {
                ++it;
            }
        }
        return n;
    }

    template <typename Fn>
    void for_each(Fn fn) const {
        for (const auto& [sig, entry] : entries_) fn(sig, entry);
    }

private:
    struct SigLess {
        ModuleOrder mord;
        bool operator()(const ModuleTerm& a, const ModuleTerm& b) const {
            return mord.less(a, b);
        }
    };

    std::map<ModuleTerm, Entry, SigLess> entries_;
};

/// Algorithm 1 steps 4a-4b: drop queue entries whose sigma fell into <L>,
/// then apply the rewritable criterion against G and the rest of the queue.
/// A queue entry (f, sigma) is rewritten by (f', sigma') when t*sigma' =
/// sigma and t*LT(f') <= LT(f); the tie case keeps the earlier-known
/// polynomial, matching the per-signature dedup of Remark 6. Zero entries
/// are exempt in both directions (LT(0) is undefined; a zero entry already
/// is the best representative of its sigma).
inline void prune_queue(PairQueue& B, const SyzygyLeadSet& L,
                        const std::vector<LabeledPolynomial>& G, const ModuleOrder& mord,
                        const Ring& ring, RunStats& stats, bool rewritable = true,
                        bool rewrite_ties = true) {
    (void)mord;
    stats.pruned_by_L += B.erase_if(
        [&](const ModuleTerm& sig, const PairQueue::Entry&) { return L.contains(sig); });
    if (!rewritable) return;

    auto rewrites = [&](const Polynomial& fp, const ModuleTerm& sp, const Polynomial& cand,
                        const ModuleTerm& cand_sig, bool allow_tie) {
        // does (f', sigma') rewrite candidate (cand, cand_sig)?
        if (fp.is_zero()) return false;
        if (sp.index != cand_sig.index || !mon_divides(sp.mon, cand_sig.mon)) return false;
        Monomial t = mon_div(cand_sig.mon, sp.mon);
        int c = ring.order.compare(mon_mul(t, fp.leading_monomial()), cand.leading_monomial());
        return c < 0 || (allow_tie && c == 0);
    };

    std::vector<ModuleTerm> marked;
    B.for_each([&](const ModuleTerm& sig, const PairQueue::Entry& entry) {
        if (entry.poly.is_zero()) return;
        for (const auto& g : G) {
            if (rewrites(g.poly, g.sig, entry.poly, sig, rewrite_ties)) {
                marked.push_back(sig);
                return;
            }
        }
        bool hit = false;
        B.for_each([&](const ModuleTerm& osig, const PairQueue::Entry& other) {
            if (hit || osig == sig) return;
            if (rewrites(other.poly, osig, entry.poly, sig, rewrite_ties)) hit = true;
        });
        if (hit) marked.push_back(sig);
    });
    for (const auto& sig : marked) B.erase(sig);
    stats.pruned_rewritable += marked.size();
}

/// Algorithm 2. Top-reduces f with respect to sigma using reductors from G
/// whose shifted signature stays below sigma; the result is zero or monic
/// and S-irreducible with respect to sigma. Reductor choice: minimal
/// shifted signature, then smaller reductor leading term, then first found.
inline Polynomial s_reduce(Polynomial f, const ModuleTerm& sigma,
                           const std::vector<LabeledPolynomial>& G, const ModuleOrder& mord,
                           const Ring& ring, RunStats& stats,
                           ModuleElement* cert = nullptr) {
#ifndef NDEBUG
    for (const auto& g : G)
        assert(mord.less(g.sig, sigma) && "s_reduce input contract: S(g) < sigma");
#endif
    if (f.is_zero()) return f;
    if (f.leading_coeff() != 1) {
        std::uint32_t s = ring.field.inv(f.leading_coeff());
        f = poly_scale(f, s, ring);
        if (cert) cert_scale(*cert, s, ring);
    }
    for (;;) {
        const LabeledPolynomial* best = nullptr;
        Monomial best_t;
        ModuleTerm best_sig;
        for (const auto& g : G) {
            if (!mon_divides(g.poly.leading_monomial(), f.leading_monomial())) continue;
            Monomial t = mon_div(f.leading_monomial(), g.poly.leading_monomial());
            ModuleTerm ts = sig_mul(t, g.sig);
            if (!mord.less(ts, sigma)) continue;
            if (best == nullptr || mord.less(ts, best_sig) ||
                (ts == best_sig && ring.order.less(g.poly.leading_monomial(),
                                                   best->poly.leading_monomial()))) {
                best = &g;
                best_t = std::move(t);
                best_sig = std::move(ts);
            }
        }
        if (best == nullptr) return f;
        f = poly_axpy(f, 1, best_t, best->poly, ring);
        if (cert) {
            assert(best->cert && "certified reduction against an uncertified basis element");
            cert_axpy(*cert, 1, best_t, *best->cert, ring);
        }
        stats.reduction_steps++;
        if (f.is_zero()) return f;
        if (f.leading_coeff() != 1) {
            std::uint32_t s = ring.field.inv(f.leading_coeff());
            f = poly_scale(f, s, ring);
            if (cert) cert_scale(*cert, s, ring);
        }
    }
}

/// Algorithm 3. For each g in G forming a normal pair with the new element,
/// queue (Spol, max of the two signature products). A non-primitive new
/// element generates nothing.
inline void update_pairs(PairQueue& B, const SyzygyLeadSet& L,
                         const std::vector<LabeledPolynomial>& G,
                         const LabeledPolynomial& fresh, const ModuleOrder& mord,
                         const Ring& ring, RunStats& stats) {
    if (!fresh.primitive) {
        stats.pruned_nonprimitive++;
        return;
    }
    for (const auto& g : G) {
        if (!is_normal_pair(fresh, g, L, mord, ring)) continue;
        SPolyParts sp = spol(fresh.poly, g.poly, ring);
        ModuleTerm s1 = sig_mul(sp.u1, fresh.sig);
        ModuleTerm s2 = sig_mul(sp.u2, g.sig);
        ModuleTerm sigma = mord.max(s1, s2);
        PairQueue::Entry entry{std::move(sp.h), std::nullopt};
        if (fresh.cert && g.cert) {
            ModuleElement cert = *fresh.cert;
            cert_scale(cert, ring.field.inv(fresh.poly.leading_coeff()), ring);
            for (auto& comp : cert) {
                Polynomial shifted = poly_mul_term(comp, 1, sp.u1, ring);
                comp = std::move(shifted);
            }
            cert_axpy(cert, ring.field.inv(g.poly.leading_coeff()), sp.u2, *g.cert, ring);
            entry.cert = std::move(cert);
        }
        stats.pairs_generated++;
        B.insert(sigma, std::move(entry), ring, stats);
    }
}

/// POT optimization: every principal syzygy f*e_j - f_j*e_(index) with
/// j > index has leading term LT(f)*e_j, so record them all in L.
inline void pot_augment(SyzygyLeadSet& L, const LabeledPolynomial& f, std::size_t m,
                        const ModuleOrder& mord) {
    assert(mord.kind() == ModuleOrderKind::pot && "augmentation is valid only under POT");
    (void)mord;
    for (std::uint32_t j = f.sig.index + 1; j <= m; ++j)
        L.insert({f.poly.leading_monomial(), j});
}

struct SgbOptions {
    bool pot_augmentation = true;
    bool rewritable = true;   // step 4b; the algorithm is correct without it
    bool rewrite_ties = true; // drop a pending pair whose rewriter ties its LT
    bool certified = false;
    std::optional<std::uint64_t> iteration_cap;
};

struct SgbResult {
    std::vector<LabeledPolynomial> basis;
    SyzygyLeadSet lead_syzygies;
    RunStats stats;
    bool capped = false;
    std::vector<ModuleTerm> sigma_trace; // selected sigmas in processing order
};

/// Algorithm 1: compute an S-Groebner basis of <F> by processing pending
/// S-polynomials in ascending signature order, pruning by <L> and the
/// rewritable criterion, and recording every reduction to zero in L.
inline SgbResult sgb(const std::vector<Polynomial>& F, const Ring& ring,
                     const ModuleOrder& mord, const SgbOptions& opts = {}) {
    if (F.empty())
        throw std::invalid_argument("sgb: empty generator list");
    for (const auto& f : F)
        if (f.is_zero())
            throw std::invalid_argument("sgb: zero polynomial among the generators");
    if (!mord.compatible() && !opts.iteration_cap)
        throw std::invalid_argument(
            "sgb: the selected module ordering is not compatible with the term "
            "ordering, so termination is not guaranteed; an iteration cap is required");

    const std::size_t m = F.size();
    SgbResult result;
    result.lead_syzygies = SyzygyLeadSet(m, ring.nvars());
    PairQueue B(mord);

    for (std::size_t i = 0; i < m; ++i) {
        PairQueue::Entry entry{F[i], std::nullopt};
        if (opts.certified) {
            ModuleElement cert(m);
            cert[i] = Polynomial::from_terms({{Monomial(ring.nvars()), 1}}, ring);
            entry.cert = std::move(cert);
        }
        B.insert({Monomial(ring.nvars()), static_cast<std::uint32_t>(i + 1)},
                 std::move(entry), ring, result.stats);
    }

    bool first = true;
    ModuleTerm last_sigma;
    std::uint64_t iterations = 0;
    while (!B.empty()) {
        if (opts.iteration_cap && iterations >= *opts.iteration_cap) {
            result.capped = true;
            break;
        }
        ++iterations;

        prune_queue(B, result.lead_syzygies, result.basis, mord, ring, result.stats,
                    opts.rewritable, opts.rewrite_ties);
        if (B.empty()) break;

        auto [sigma, entry] = B.pop_min();
        assert((first || mord.less(last_sigma, sigma)) &&
               "selected signatures must be strictly increasing");
        first = false;
        last_sigma = sigma;
        result.sigma_trace.push_back(sigma);

        ModuleElement* cert_ptr = entry.cert ? &*entry.cert : nullptr;
        Polynomial f = s_reduce(std::move(entry.poly), sigma, result.basis, mord, ring,
                                result.stats, cert_ptr);

        if (!f.is_zero()) {
            LabeledPolynomial lp{std::move(f), sigma, std::move(entry.cert), false};
            if (opts.certified && !certify(lp, F, ring, mord))
                throw CertificationError("certificate invalid for a basis element");
            lp.primitive = is_primitive(lp, result.basis, result.lead_syzygies);
            update_pairs(B, result.lead_syzygies, result.basis, lp, mord, ring,
                         result.stats);
            result.basis.push_back(std::move(lp));
            if (mord.kind() == ModuleOrderKind::pot && opts.pot_augmentation)
                pot_augment(result.lead_syzygies, result.basis.back(), m, mord);
        } else {
            if (opts.certified) {
                LabeledPolynomial zero{Polynomial(), sigma, std::move(entry.cert), false};
                if (!certify(zero, F, ring, mord))
                    throw CertificationError("certificate invalid for a zero reduction");
            }
            result.lead_syzygies.insert(sigma);
            result.stats.zero_reductions++;
        }
    }

    result.stats.basis_size = result.basis.size();
    return result;
}

/// Post-hoc F5-criterion conformance check over a finished run: every
/// component index is covered by a basis signature or by L, and the
/// signature of every normal pair of output elements is reachable as a
/// shifted basis signature outside <L>.
inline bool check_f5_criterion(const SgbResult& r, const Ring& ring,
                               const ModuleOrder& mord) {
    const std::size_t m = r.lead_syzygies.components();
    for (std::uint32_t i = 1; i <= m; ++i) {
        ModuleTerm ei{Monomial(ring.nvars()), i};
        if (r.lead_syzygies.contains(ei)) continue;
        bool found = false;
        for (const auto& g : r.basis)
            if (g.sig == ei) found = true;
        if (!found) return false;
    }
    for (std::size_t a = 0; a < r.basis.size(); ++a) {
        for (std::size_t b = a + 1; b < r.basis.size(); ++b) {
            const auto& g1 = r.basis[a];
            const auto& g2 = r.basis[b];
            if (!is_normal_pair(g1, g2, r.lead_syzygies, mord, ring)) continue;
            Monomial lcm = mon_lcm(g1.poly.leading_monomial(), g2.poly.leading_monomial());
            ModuleTerm s1 = sig_mul(mon_div(lcm, g1.poly.leading_monomial()), g1.sig);
            ModuleTerm s2 = sig_mul(mon_div(lcm, g2.poly.leading_monomial()), g2.sig);
            ModuleTerm sigma = mord.max(s1, s2);
            bool found = false;
            for (const auto& g : r.basis) {
                if (g.sig.index != sigma.index) continue;
                if (!mon_divides(g.sig.mon, sigma.mon)) continue;
                if (!r.lead_syzygies.contains(sigma)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

} // namespace siggb
