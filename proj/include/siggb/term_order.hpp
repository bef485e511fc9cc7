#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace siggb {

enum class TermOrderKind { lex, degrevlex };

/// Admissible term ordering on monomials: lex or degrevlex, with an
/// explicit variable precedence (most significant variable first).
class TermOrder {
public:
    TermOrder() : TermOrder(TermOrderKind::degrevlex, 0) {}

    TermOrder(TermOrderKind kind, std::size_t nvars) : kind_(kind), prec_(nvars) {
        std::iota(prec_.begin(), prec_.end(), 0u);
    }

    TermOrder(TermOrderKind kind, std::vector<std::uint32_t> precedence)
        : kind_(kind), prec_(std::move(precedence)) {}

    TermOrderKind kind() const { return kind_; }
    std::size_t nvars() const { return prec_.size(); }
    const std::vector<std::uint32_t>& precedence() const { return prec_; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        assert(a.nvars() == b.nvars() && a.nvars() == prec_.size());
        switch (kind_) {
        case TermOrderKind::lex:
            for (std::uint32_t v : prec_) {
                if (a.exponent(v) != b.exponent(v))
                    return a.exponent(v) > b.exponent(v) ? 1 : -1;
            }
            return 0;
        case TermOrderKind::degrevlex:
        default:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            // revlex tie-break: scan from the least significant variable;
            // the smaller exponent at the first difference wins.
            for (std::size_t k = prec_.size(); k-- > 0;) {
                std::uint32_t v = prec_[k];
                if (a.exponent(v) != b.exponent(v))
                    return a.exponent(v) < b.exponent(v) ? 1 : -1;
            }
            return 0;
        }
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool equal(const Monomial& a, const Monomial& b) const { return compare(a, b) == 0; }

    bool operator==(const TermOrder& other) const {
        return kind_ == other.kind_ && prec_ == other.prec_;
    }

    std::string name() const {
        return kind_ == TermOrderKind::lex ? "lex" : "degrevlex";
    }

private:
    TermOrderKind kind_;
    std::vector<std::uint32_t> prec_;
};

} // namespace siggb
