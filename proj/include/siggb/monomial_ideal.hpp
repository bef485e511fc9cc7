#pragma once

#include <cassert>
#include <vector>

#include "monomial.hpp"

namespace siggb {

/// Monomial ideal kept as a divisibility-minimal generator set.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

    MonomialIdeal(std::size_t nvars, const std::vector<Monomial>& gens) : nvars_(nvars) {
        for (const auto& g : gens) add(g);
    }

    std::size_t nvars() const { return nvars_; }
    bool empty() const { return gens_.empty(); }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (mon_divides(g, m)) return true;
        return false;
    }

    /// Insert m and re-minimalize: no-op if already contained, otherwise
    /// drop every generator m divides.
    void add(const Monomial& m) {
        assert(m.nvars() == nvars_);
        if (contains(m)) return;
        std::erase_if(gens_, [&](const Monomial& g) { return mon_divides(m, g); });
        gens_.push_back(m);
    }

    /// Ideal quotient by a monomial: (M : m) has generators u / gcd(u, m).
    /// Membership law: w in (M : m) iff w*m in M.
    MonomialIdeal quotient(const Monomial& m) const {
        assert(m.nvars() == nvars_);
        MonomialIdeal q(nvars_);
        for (const auto& g : gens_)
            q.add(mon_div(g, mon_gcd(g, m)));
        return q;
    }

    MonomialIdeal sum(const MonomialIdeal& other) const {
        assert(nvars_ == other.nvars_);
        MonomialIdeal s = *this;
        for (const auto& g : other.gens_) s.add(g);
        return s;
    }

private:
    std::size_t nvars_ = 0;
    std::vector<Monomial> gens_;
};

} // namespace siggb
