#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "prime_field.hpp"
#include "term_order.hpp"

namespace siggb {

/// Computation context: coefficient field, term ordering, variable names.
struct Ring {
    PrimeField field;
    TermOrder order;
    std::vector<std::string> vars;

    Ring(std::uint32_t p, TermOrderKind kind, std::vector<std::string> names)
        : field(p), order(kind, names.size()), vars(std::move(names)) {}

    Ring(PrimeField f, TermOrder ord, std::vector<std::string> names)
        : field(f), order(std::move(ord)), vars(std::move(names)) {}

    std::size_t nvars() const { return vars.size(); }
};

struct Term {
    Monomial mon;
    std::uint32_t coeff;
};

/// Sparse polynomial: term list kept strictly descending under the active
/// term ordering, no zero coefficients. The zero polynomial is the empty list.
class Polynomial {
public:
    Polynomial() = default;

    /// Build canonical form from an arbitrary term list: sort, merge equal
    /// monomials, drop zeros.
    static Polynomial from_terms(std::vector<Term> terms, const Ring& ring) {
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return ring.order.greater(a.mon, b.mon);
        });
        Polynomial f;
        for (auto& t : terms) {
            std::uint32_t c = t.coeff % ring.field.p();
            if (!f.terms_.empty() && f.terms_.back().mon == t.mon) {
                f.terms_.back().coeff = ring.field.add(f.terms_.back().coeff, c);
                if (f.terms_.back().coeff == 0) f.terms_.pop_back();
            } else if (c != 0) {
                f.terms_.push_back({t.mon, c});
            }
        }
        assert(f.canonical(ring));
        return f;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading() const {
        assert(!terms_.empty());
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading().mon; }
    std::uint32_t leading_coeff() const { return leading().coeff; }

    /// f minus its leading term.
    Polynomial tail() const {
        Polynomial r;
        if (terms_.size() > 1)
            r.terms_.assign(terms_.begin() + 1, terms_.end());
        return r;
    }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_)
            if (t.mon.degree() > d) d = t.mon.degree();
        return d;
    }

    bool operator==(const Polynomial& other) const {
        if (terms_.size() != other.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coeff != other.terms_[i].coeff || terms_[i].mon != other.terms_[i].mon)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Canonical-form invariant: strictly descending monomials, no zeros.
    bool canonical(const Ring& ring) const {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].coeff == 0 || terms_[i].coeff >= ring.field.p()) return false;
            if (i > 0 && !ring.order.greater(terms_[i - 1].mon, terms_[i].mon)) return false;
        }
        return true;
    }

private:
    std::vector<Term> terms_;

    friend Polynomial poly_axpy(const Polynomial&, std::uint32_t, const Monomial&,
                                const Polynomial&, const Ring&);
    friend Polynomial poly_mul_term(const Polynomial&, std::uint32_t, const Monomial&,
                                    const Ring&);
};

/// f - c * t * g, merged in one pass. Monomial multiplication by a fixed t
/// preserves the term ordering, so both inputs stream in sorted order.
inline Polynomial poly_axpy(const Polynomial& f, std::uint32_t c, const Monomial& t,
                            const Polynomial& g, const Ring& ring) {
    Polynomial r;
    r.terms_.reserve(f.term_count() + g.term_count());
    std::size_t i = 0, j = 0;
    const auto& ft = f.terms();
    const auto& gt = g.terms();
    while (i < ft.size() || j < gt.size()) {
        if (j == gt.size()) {
            r.terms_.push_back(ft[i++]);
            continue;
        }
        Monomial gm = mon_mul(t, gt[j].mon);
        std::uint32_t gc = ring.field.neg(ring.field.mul(c, gt[j].coeff));
        if (i == ft.size()) {
            if (gc != 0) r.terms_.push_back({std::move(gm), gc});
            ++j;
            continue;
        }
        int cmp = ring.order.compare(ft[i].mon, gm);
        if (cmp > 0) {
            r.terms_.push_back(ft[i++]);
        } else if (cmp < 0) {
            if (gc != 0) r.terms_.push_back({std::move(gm), gc});
            ++j;
        } else {
            std::uint32_t s = ring.field.add(ft[i].coeff, gc);
            if (s != 0) r.terms_.push_back({ft[i].mon, s});
            ++i;
            ++j;
        }
    }
    assert(r.canonical(ring));
    return r;
}

inline Polynomial poly_mul_term(const Polynomial& f, std::uint32_t c, const Monomial& t,
                                const Ring& ring) {
    Polynomial r;
    c %= ring.field.p();
    if (c == 0) return r;
    r.terms_.reserve(f.term_count());
    for (const auto& term : f.terms())
        r.terms_.push_back({mon_mul(t, term.mon), ring.field.mul(c, term.coeff)});
    assert(r.canonical(ring));
    return r;
}

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    return poly_axpy(f, ring.field.p() - 1, Monomial(ring.nvars()), g, ring);
}

inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    return poly_axpy(f, 1, Monomial(ring.nvars()), g, ring);
}

inline Polynomial poly_neg(const Polynomial& f, const Ring& ring) {
    return poly_mul_term(f, ring.field.p() - 1, Monomial(ring.nvars()), ring);
}

inline Polynomial poly_scale(const Polynomial& f, std::uint32_t c, const Ring& ring) {
    return poly_mul_term(f, c, Monomial(ring.nvars()), ring);
}

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    Polynomial acc;
    for (const auto& t : f.terms())
        acc = poly_axpy(acc, ring.field.neg(t.coeff), t.mon, g, ring);
    return acc;
}

inline Polynomial poly_monic(const Polynomial& f, const Ring& ring) {
    if (f.is_zero() || f.leading_coeff() == 1) return f;
    return poly_scale(f, ring.field.inv(f.leading_coeff()), ring);
}

/// Classical full reduction of f modulo G. The result has no term divisible
/// by any LT(g); among applicable reductors the one with the smallest
/// leading term wins, ties by earliest index (deterministic remainders).
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                              const Ring& ring) {
    std::vector<Term> remainder;
    Polynomial h = f;
    while (!h.is_zero()) {
        const Term& lead = h.leading();
        const Polynomial* best = nullptr;
        for (const auto& g : G) {
            if (g.is_zero() || !mon_divides(g.leading_monomial(), lead.mon)) continue;
            if (best == nullptr || ring.order.less(g.leading_monomial(), best->leading_monomial()))
                best = &g;
        }
        if (best == nullptr) {
            remainder.push_back(lead);
            h = h.tail();
        } else {
            Monomial t = mon_div(lead.mon, best->leading_monomial());
            std::uint32_t c = ring.field.div(lead.coeff, best->leading_coeff());
            h = poly_axpy(h, c, t, *best, ring);
        }
    }
    return Polynomial::from_terms(std::move(remainder), ring);
}

inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const Ring& ring) {
    return normal_form(f, std::span<const Polynomial>(G), ring);
}

/// Extend a ring by the homogenization variable, appended last (least
/// significant under degrevlex).
inline Ring homogenized_ring(const Ring& ring, const std::string& hname = "h") {
    std::vector<std::string> names = ring.vars;
    names.push_back(hname);
    return Ring(ring.field.p(), ring.order.kind(), std::move(names));
}

/// Homogenize f into hring (one more variable than f's ring): each term is
/// padded with h^(d - deg) where d is the total degree of f.
inline Polynomial homogenize(const Polynomial& f, const Ring& hring) {
    std::uint64_t d = f.degree();
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> exps = t.mon.exponents();
        exps.push_back(static_cast<std::uint32_t>(d - t.mon.degree()));
        terms.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(std::move(terms), hring);
}

/// Substitute 1 for the last variable; recovers f from homogenize(f).
inline Polynomial dehomogenize(const Polynomial& f, const Ring& ring) {
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> exps = t.mon.exponents();
        exps.pop_back();
        terms.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(std::move(terms), ring);
}

} // namespace siggb
