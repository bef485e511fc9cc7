#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "monomial.hpp"
#include "term_order.hpp"

namespace siggb {

/// Module term t*e_i of the free module P^m; index is 1-based in [1, m].
struct ModuleTerm {
    Monomial mon;
    std::uint32_t index = 1;

    bool operator==(const ModuleTerm& other) const {
        return index == other.index && mon == other.mon;
    }
    bool operator!=(const ModuleTerm& other) const { return !(*this == other); }
};

inline ModuleTerm sig_mul(const Monomial& t, const ModuleTerm& s) {
    return {mon_mul(t, s.mon), s.index};
}

enum class ModuleOrderKind { pot, top, appendix };

/// Ordering on module terms.
///
/// pot and top extend the ring ordering componentwise (compatible with mu);
/// appendix is the hard-wired non-compatible module ordering from the
/// infinite-basis example: it needs exactly 3 variables x > y > z and two
/// module components, and compares by total degree, then deg_z, then
/// component (e1 side smaller), then deg_y, then deg_x.
class ModuleOrder {
public:
    ModuleOrder(ModuleOrderKind kind, TermOrder term_order)
        : kind_(kind), term_order_(std::move(term_order)) {
        if (kind_ == ModuleOrderKind::appendix)
            assert(term_order_.nvars() == 3 && "appendix ordering is fixed to 3 variables");
    }

    ModuleOrderKind kind() const { return kind_; }
    const TermOrder& term_order() const { return term_order_; }

    /// Whether the ordering extends mu componentwise (t < u implies
    /// t*e_i < u*e_i); the appendix ordering does not, which is what makes
    /// its S-Groebner bases potentially infinite.
    bool compatible() const { return kind_ != ModuleOrderKind::appendix; }

    int compare(const ModuleTerm& a, const ModuleTerm& b) const {
        switch (kind_) {
        case ModuleOrderKind::pot:
            if (a.index != b.index) return a.index < b.index ? -1 : 1;
            return term_order_.compare(a.mon, b.mon);
        case ModuleOrderKind::top:
            if (int c = term_order_.compare(a.mon, b.mon); c != 0) return c;
            if (a.index != b.index) return a.index < b.index ? -1 : 1;
            return 0;
        case ModuleOrderKind::appendix:
        default:
            return compare_appendix(a, b);
        }
    }

    bool less(const ModuleTerm& a, const ModuleTerm& b) const { return compare(a, b) < 0; }
    bool greater(const ModuleTerm& a, const ModuleTerm& b) const { return compare(a, b) > 0; }

    const ModuleTerm& max(const ModuleTerm& a, const ModuleTerm& b) const {
        return less(a, b) ? b : a;
    }

    std::string name() const {
        switch (kind_) {
        case ModuleOrderKind::pot: return "pot";
        case ModuleOrderKind::top: return "top";
        default: return "appendix";
        }
    }

private:
    int compare_appendix(const ModuleTerm& a, const ModuleTerm& b) const {
        assert(a.mon.nvars() == 3 && b.mon.nvars() == 3);
        assert(a.index <= 2 && b.index <= 2);
        if (a.mon.degree() != b.mon.degree())
            return a.mon.degree() < b.mon.degree() ? -1 : 1;
        if (a.mon.exponent(2) != b.mon.exponent(2))
            return a.mon.exponent(2) < b.mon.exponent(2) ? -1 : 1;
        if (a.index != b.index) return a.index < b.index ? -1 : 1;
        if (a.mon.exponent(1) != b.mon.exponent(1))
            return a.mon.exponent(1) < b.mon.exponent(1) ? -1 : 1;
        if (a.mon.exponent(0) != b.mon.exponent(0))
            return a.mon.exponent(0) < b.mon.exponent(0) ? -1 : 1;
        return 0;
    }

    ModuleOrderKind kind_;
    TermOrder term_order_;
};

} // namespace siggb
