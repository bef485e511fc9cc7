#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bench.hpp"
#include "polynomial.hpp"

namespace siggb {

inline std::string mon_to_string(const Monomial& m, const Ring& ring) {
    if (m.is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (!s.empty()) s += '*';
        s += ring.vars[i];
        if (m.exponent(i) > 1) s += '^' + std::to_string(m.exponent(i));
    }
    return s;
}

/// Canonical text form: terms in descending order, coefficients as least
/// non-negative residues. Doubles as the hash preimage.
inline std::string poly_to_string(const Polynomial& f, const Ring& ring) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& t : f.terms()) {
        if (!s.empty()) s += " + ";
        if (t.mon.is_one()) {
            s += std::to_string(t.coeff);
        } else {
            if (t.coeff != 1) s += std::to_string(t.coeff) + "*";
            s += mon_to_string(t.mon, ring);
        }
    }
    return s;
}

/// FNV-1a over the canonical text of a (reduced) basis; hex string.
inline std::string gb_hash(const std::vector<Polynomial>& basis, const Ring& ring) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    };
    for (const auto& f : basis) feed(poly_to_string(f, ring));
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

/// System file text: header (vars/char/order) plus one polynomial per line;
/// re-parses to the same system.
inline std::string system_to_string(const BenchmarkSystem& S) {
    std::string s = "vars: ";
    for (std::size_t i = 0; i < S.ring.vars.size(); ++i) {
        if (i > 0) s += ",";
        s += S.ring.vars[i];
    }
    s += "\nchar: " + std::to_string(S.ring.field.p());
    s += "\norder: " + S.ring.order.name() + "\n";
    for (const auto& f : S.polys) s += poly_to_string(f, S.ring) + "\n";
    return s;
}

struct ParseError : std::runtime_error {
    std::size_t line, col;
    ParseError(const std::string& msg, std::size_t line_, std::size_t col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

namespace detail {

struct PolyParser {
    const std::string& text;
    std::size_t line;
    const Ring& ring;
    const std::unordered_map<std::string, std::size_t>& var_index;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    std::size_t col() { return pos + 1; }

    std::uint64_t parse_int() {
        skip_ws();
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + std::uint64_t(text[pos] - '0');
            if (v > 1000000000000ull)
                throw ParseError("integer literal too large", line, start + 1);
            ++pos;
        }
        if (pos == start) throw ParseError("expected an integer", line, start + 1);
        return v;
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
        auto body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
        if (pos >= text.size() || !head(text[pos]))
            throw ParseError("expected a variable name", line, start + 1);
        while (pos < text.size() && body(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }

    /// factor := IDENT ('^' INT)?; accumulates into exps.
    void parse_factor(std::vector<std::uint32_t>& exps) {
        std::size_t c = col();
        std::string name = parse_ident();
        auto it = var_index.find(name);
        if (it == var_index.end())
            throw ParseError("undeclared variable '" + name + "'", line, c);
        std::uint64_t e = 1;
        if (peek() == '^') {
            ++pos;
            e = parse_int();
            if (e > 100000) throw ParseError("exponent too large", line, c);
        }
        exps[it->second] = static_cast<std::uint32_t>(exps[it->second] + e);
    }

    /// term := INT ('*' factor)* | factor ('*' factor)*
    Term parse_term(bool negative) {
        std::vector<std::uint32_t> exps(ring.nvars(), 0);
        std::uint32_t coeff = 1;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = ring.field.reduce(static_cast<std::int64_t>(parse_int() %
                                                                ring.field.p()));
        } else {
            parse_factor(exps);
        }
        while (peek() == '*') {
            ++pos;
            parse_factor(exps);
        }
        if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')
            throw ParseError("missing '*' between factors", line, col());
        if (negative) coeff = ring.field.neg(coeff);
        return {Monomial(std::move(exps)), coeff};
    }

    Polynomial parse_poly() {
        std::vector<Term> terms;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = text[pos] == '-';
            ++pos;
        }
        terms.push_back(parse_term(negative));
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-')
                throw ParseError(std::string("unexpected character '") + c + "'", line, col());
            ++pos;
            terms.push_back(parse_term(c == '-'));
        }
        return Polynomial::from_terms(std::move(terms), ring);
    }
};

inline std::string strip_comment(const std::string& s) {
    auto hash = s.find('#');
    return hash == std::string::npos ? s : s.substr(0, hash);
}

inline bool blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

} // namespace detail

/// Parse a polynomial-system file: `vars:`, `char:`, `order:` header lines
/// followed by one polynomial per line. `#` starts a comment; whitespace is
/// insignificant. Errors carry line/column positions.
inline BenchmarkSystem parse_system_file(const std::string& text,
                                         const std::string& name = "system") {
    std::vector<std::string> vars;
    std::uint32_t characteristic = 0;
    TermOrderKind kind = TermOrderKind::degrevlex;
    bool have_vars = false, have_char = false;

    std::vector<std::pair<std::size_t, std::string>> poly_lines;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = detail::strip_comment(raw);
        if (detail::blank(s)) continue;
        auto colon = s.find(':');
        std::string key = colon == std::string::npos ? "" : s.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        if (key == "vars" || key == "char" || key == "order") {
            std::string value = s.substr(colon + 1);
            if (key == "vars") {
                std::istringstream vs(value);
                std::string v;
                while (std::getline(vs, v, ',')) {
                    v.erase(0, v.find_first_not_of(" \t"));
                    v.erase(v.find_last_not_of(" \t\r") + 1);
                    if (v.empty())
                        throw ParseError("empty variable name", lineno, colon + 2);
                    vars.push_back(v);
                }
                have_vars = true;
            } else if (key == "char") {
                try {
                    unsigned long p = std::stoul(value);
                    if (p < 2 || p > 2147483647ul || !PrimeField::is_prime(std::uint32_t(p)))
                        throw std::invalid_argument("not prime");
                    characteristic = static_cast<std::uint32_t>(p);
                } catch (const std::exception&) {
                    throw ParseError("characteristic must be a prime", lineno, colon + 2);
                }
                have_char = true;
            } else {
                std::string v = value;
                v.erase(0, v.find_first_not_of(" \t"));
                v.erase(v.find_last_not_of(" \t\r") + 1);
                if (v == "lex") kind = TermOrderKind::lex;
                else if (v == "degrevlex") kind = TermOrderKind::degrevlex;
                else throw ParseError("unknown term order '" + v + "'", lineno, colon + 2);
            }
        } else {
            poly_lines.emplace_back(lineno, s);
        }
    }

    if (!have_vars) throw ParseError("missing 'vars:' header", 1, 1);
    if (!have_char) throw ParseError("missing 'char:' header", 1, 1);

    Ring ring(characteristic, kind, vars);
    std::unordered_map<std::string, std::size_t> var_index;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!var_index.emplace(vars[i], i).second)
            throw ParseError("duplicate variable '" + vars[i] + "'", 1, 1);
    }

    std::vector<Polynomial> polys;
    for (auto& [ln, body] : poly_lines) {
        detail::PolyParser parser{body, ln, ring, var_index};
        Polynomial f = parser.parse_poly();
        if (f.is_zero())
            throw ParseError("polynomial is zero modulo the characteristic", ln, 1);
        polys.push_back(std::move(f));
    }
    if (polys.empty()) throw ParseError("no polynomials in system", lineno ? lineno : 1, 1);

    return {name, std::move(ring), std::move(polys)};
}

} // namespace siggb
