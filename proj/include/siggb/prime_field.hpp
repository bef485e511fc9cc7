#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace siggb {

/// Arithmetic in GF(p) for a word-sized prime p. Elements are plain
/// uint32_t residues in [0, p); the field object carries the modulus.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("field characteristic must be a prime");
    }

    std::uint32_t p() const { return p_; }

    /// Least non-negative residue of a (possibly negative) integer.
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<std::uint32_t>(s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : static_cast<std::uint32_t>(a + std::uint64_t(p_) - b);
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p_;
        std::uint32_t base = a % p_;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse; a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const {
        assert(a % p_ != 0 && "inverse of zero");
        return pow(a, p_ - 2);
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint32_t d = 3; std::uint64_t(d) * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint32_t p_;
};

} // namespace siggb
