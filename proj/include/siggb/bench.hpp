#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"

namespace siggb {

struct BenchmarkSystem {
    std::string name;
    Ring ring;
    std::vector<Polynomial> polys;
};

namespace detail {

inline Polynomial make_poly(const Ring& ring,
                            std::vector<std::pair<std::int64_t, std::vector<std::uint32_t>>> spec) {
    std::vector<Term> terms;
    for (auto& [c, exps] : spec)
        terms.push_back({Monomial(std::move(exps)), ring.field.reduce(c)});
    return Polynomial::from_terms(std::move(terms), ring);
}

} // namespace detail

/// F = {yz^3 - x^2t^2, xz^2 - y^2t, x^2y - z^2t} over x, y, z, t.
inline BenchmarkSystem gen_mmt92(std::uint32_t p = 32003) {
    Ring ring(p, TermOrderKind::degrevlex, {"x", "y", "z", "t"});
    std::vector<Polynomial> polys{
        detail::make_poly(ring, {{1, {0, 1, 3, 0}}, {-1, {2, 0, 0, 2}}}),
        detail::make_poly(ring, {{1, {1, 0, 2, 0}}, {-1, {0, 2, 0, 1}}}),
        detail::make_poly(ring, {{1, {2, 1, 0, 0}}, {-1, {0, 0, 2, 1}}}),
    };
    return {"mmt92", std::move(ring), std::move(polys)};
}

/// Cyclic-n: for d = 1..n-1 the sum of the n cyclic products of d
/// consecutive variables, plus x_1*...*x_n - 1.
inline BenchmarkSystem gen_cyclic(unsigned n, std::uint32_t p = 32003) {
    if (n < 2) throw std::invalid_argument("cyclic-n needs n >= 2");
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    Ring ring(p, TermOrderKind::degrevlex, std::move(names));

    std::vector<Polynomial> polys;
    for (unsigned d = 1; d < n; ++d) {
        std::vector<Term> terms;
        for (unsigned s = 0; s < n; ++s) {
            std::vector<std::uint32_t> exps(n, 0);
            for (unsigned k = 0; k < d; ++k) exps[(s + k) % n] += 1;
            terms.push_back({Monomial(std::move(exps)), 1});
        }
        polys.push_back(Polynomial::from_terms(std::move(terms), ring));
    }
    std::vector<Term> last{{Monomial(std::vector<std::uint32_t>(n, 1)), 1},
                           {Monomial(n), ring.field.reduce(-1)}};
    polys.push_back(Polynomial::from_terms(std::move(last), ring));
    return {"cyclic-" + std::to_string(n), std::move(ring), std::move(polys)};
}

/// Katsura-n over u_0..u_n: the linear relation u_0 + 2*sum u_i - 1 and,
/// for k = 0..n-1, sum_{i=-n..n} u_|i| * u_|k-i| - u_k with out-of-range
/// indices dropped.
inline BenchmarkSystem gen_katsura(unsigned n, std::uint32_t p = 32003) {
    if (n < 2) throw std::invalid_argument("katsura-n needs n >= 2");
    std::vector<std::string> names;
    for (unsigned i = 0; i <= n; ++i) names.push_back("u" + std::to_string(i));
    Ring ring(p, TermOrderKind::degrevlex, std::move(names));
    const std::size_t nv = n + 1;

    std::vector<Polynomial> polys;
    {
        std::vector<Term> terms;
        for (unsigned i = 0; i <= n; ++i) {
            std::vector<std::uint32_t> exps(nv, 0);
            exps[i] = 1;
            terms.push_back({Monomial(std::move(exps)), i == 0 ? 1u : 2u});
        }
        terms.push_back({Monomial(nv), ring.field.reduce(-1)});
        polys.push_back(Polynomial::from_terms(std::move(terms), ring));
    }
    for (unsigned k = 0; k < n; ++k) {
        std::vector<Term> terms;
        for (int i = -int(n); i <= int(n); ++i) {
            int a = i < 0 ? -i : i;
            int b = int(k) - i;
            if (b < 0) b = -b;
            if (b > int(n)) continue;
            std::vector<std::uint32_t> exps(nv, 0);
            exps[a] += 1;
            exps[b] += 1;
            terms.push_back({Monomial(std::move(exps)), 1});
        }
        std::vector<std::uint32_t> exps(nv, 0);
        exps[k] = 1;
        terms.push_back({Monomial(std::move(exps)), ring.field.reduce(-1)});
        polys.push_back(Polynomial::from_terms(std::move(terms), ring));
    }
    return {"katsura-" + std::to_string(n), std::move(ring), std::move(polys)};
}

/// Homogenize every generator with a shared variable h appended last.
inline BenchmarkSystem homogenize_system(const BenchmarkSystem& S) {
    Ring hring = homogenized_ring(S.ring);
    std::vector<Polynomial> polys;
    for (const auto& f : S.polys) polys.push_back(homogenize(f, hring));
    return {S.name + "-h", std::move(hring), std::move(polys)};
}

/// Resolve "mmt92", "cyclic-N", "katsura-N".
inline std::optional<BenchmarkSystem> builtin_system(std::string_view name,
                                                     std::uint32_t p = 32003) {
    auto parse_n = [](std::string_view s) -> std::optional<unsigned> {
        if (s.empty()) return std::nullopt;
        unsigned v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + unsigned(c - '0');
            if (v > 64) return std::nullopt;
        }
        return v;
    };
    if (name == "mmt92") return gen_mmt92(p);
    if (name.starts_with("cyclic-")) {
        if (auto n = parse_n(name.substr(7)); n && *n >= 2) return gen_cyclic(*n, p);
        return std::nullopt;
    }
    if (name.starts_with("katsura-")) {
        if (auto n = parse_n(name.substr(8)); n && *n >= 2) return gen_katsura(*n, p);
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace siggb
