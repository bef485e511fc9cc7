#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "module_term.hpp"
#include "monomial_ideal.hpp"

namespace siggb {

/// L: a divisibility-minimal set of module terms known to lie in
/// LT(syz F). Membership in the generated submodule <L> decomposes by
/// component, so each index keeps its own monomial-ideal slice.
class SyzygyLeadSet {
public:
    SyzygyLeadSet() = default;

    SyzygyLeadSet(std::size_t m, std::size_t nvars)
        : slices_(m, MonomialIdeal(nvars)) {}

    std::size_t components() const { return slices_.size(); }

    bool contains(const ModuleTerm& s) const {
        assert(s.index >= 1 && s.index <= slices_.size());
        return slices_[s.index - 1].contains(s.mon);
    }

    void insert(const ModuleTerm& s) {
        assert(s.index >= 1 && s.index <= slices_.size());
        slices_[s.index - 1].add(s.mon);
    }

    const MonomialIdeal& slice(std::uint32_t index) const {
        assert(index >= 1 && index <= slices_.size());
        return slices_[index - 1];
    }

    std::size_t generator_count() const {
        std::size_t n = 0;
        for (const auto& s : slices_) n += s.generators().size();
        return n;
    }

    bool empty() const { return generator_count() == 0; }

private:
    std::vector<MonomialIdeal> slices_;
};

} // namespace siggb
