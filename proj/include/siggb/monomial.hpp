#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace siggb {

/// Power product over a fixed set of n variables, stored as a dense
/// exponent vector with a cached total degree. Exponent arithmetic that
/// would overflow the 32-bit storage is a hard error.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        for (std::uint32_t e : exps_) deg_ += e;
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    std::uint64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    friend Monomial mon_mul(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            std::uint64_t s = std::uint64_t(a.exps_[i]) + b.exps_[i];
            if (s > std::numeric_limits<std::uint32_t>::max())
                throw std::overflow_error("monomial exponent overflow");
            r.exps_[i] = static_cast<std::uint32_t>(s);
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    /// Does a divide b?
    friend bool mon_divides(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        if (a.deg_ > b.deg_) return false;
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a.exps_[i] > b.exps_[i]) return false;
        return true;
    }

    /// b / a; defined only when a | b.
    friend Monomial mon_div(const Monomial& b, const Monomial& a) {
        assert(mon_divides(a, b) && "mon_div on non-divisible pair");
        Monomial r(b.nvars());
        for (std::size_t i = 0; i < b.nvars(); ++i)
            r.exps_[i] = b.exps_[i] - a.exps_[i];
        r.deg_ = b.deg_ - a.deg_;
        return r;
    }

    friend Monomial mon_lcm(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
            r.deg_ += r.exps_[i];
        }
        return r;
    }

    friend Monomial mon_gcd(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            r.exps_[i] = a.exps_[i] < b.exps_[i] ? a.exps_[i] : b.exps_[i];
            r.deg_ += r.exps_[i];
        }
        return r;
    }

    friend bool mon_coprime(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
        return true;
    }

private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t deg_ = 0;
};

} // namespace siggb
