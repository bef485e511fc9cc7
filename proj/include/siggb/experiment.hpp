#pragma once

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "buchberger.hpp"
#include "io.hpp"
#include "sgb.hpp"
#include "slb.hpp"

namespace siggb {

enum class Algorithm { sgb, buchberger, slb };

inline std::string algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::sgb: return "sgb";
    case Algorithm::buchberger: return "buchberger";
    default: return "slb";
    }
}

struct ExperimentOptions {
    ModuleOrderKind module_order = ModuleOrderKind::pot;
    bool pot_augmentation = true;
    bool rewritable = true;
    bool certified = false;
    std::optional<std::uint64_t> cap;
    bool buchberger_criteria = true;
    SlbOptions slb;
    bool verify = true;
};

struct ExperimentResult {
    std::string system;
    std::string algorithm;
    std::uint32_t field_char = 0;
    std::string term_order;
    std::string module_order; // "-" for the classical algorithms
    std::string options;
    RunStats stats;
    std::size_t reduced_size = 0;
    double wall_ms = 0.0;
    std::string gb_hash;
    bool verified = false;
    bool capped = false;
};

/// Run one algorithm on one system; verify the output, reduce it and hash
/// the canonical form. A capped run is flagged and skips verification.
inline ExperimentResult run_experiment(const BenchmarkSystem& S, Algorithm alg,
                                       const ExperimentOptions& opts = {}) {
    ExperimentResult r;
    r.system = S.name;
    r.algorithm = algorithm_name(alg);
    r.field_char = S.ring.field.p();
    r.term_order = S.ring.order.name();

    std::vector<Polynomial> basis;
    auto t0 = std::chrono::steady_clock::now();
    switch (alg) {
    case Algorithm::sgb: {
        ModuleOrder mord(opts.module_order, S.ring.order);
        r.module_order = mord.name();
        SgbOptions so;
        so.pot_augmentation = opts.pot_augmentation;
        so.rewritable = opts.rewritable;
        so.certified = opts.certified;
        so.iteration_cap = opts.cap;
        SgbResult sr = sgb(S.polys, S.ring, mord, so);
        r.stats = sr.stats;
        r.capped = sr.capped;
        for (auto& lp : sr.basis) basis.push_back(std::move(lp.poly));
        std::ostringstream os;
        os << "augment=" << (opts.pot_augmentation ? "on" : "off")
           << ",rewritable=" << (opts.rewritable ? "on" : "off")
           << ",certified=" << (opts.certified ? "on" : "off");
        if (opts.cap) os << ",cap=" << *opts.cap;
        r.options = os.str();
        break;
    }
    case Algorithm::buchberger: {
        GbResult gr = buchberger(S.polys, S.ring, opts.buchberger_criteria);
        r.stats = gr.stats;
        r.module_order = "-";
        r.options = std::string("criteria=") + (opts.buchberger_criteria ? "on" : "off");
        basis = std::move(gr.basis);
        break;
    }
    case Algorithm::slb: {
        GbResult gr = slb(S.polys, S.ring, opts.slb);
        r.stats = gr.stats;
        r.module_order = "-";
        r.options = "";
        basis = std::move(gr.basis);
        break;
    }
    }
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (!r.capped) {
        if (opts.verify) r.verified = verify_gb(basis, S.ring);
        std::vector<Polynomial> red = reduced_gb(basis, S.ring);
        r.reduced_size = red.size();
        r.gb_hash = gb_hash(red, S.ring);
    } else {
        r.gb_hash = "-";
    }
    return r;
}

enum class TableMetric { zero_reductions, basis_size };
enum class TableFormat { text, csv, json };

inline std::uint64_t table_cell(const ExperimentResult& r, TableMetric metric) {
    return metric == TableMetric::zero_reductions ? r.stats.zero_reductions
                                                  : r.stats.basis_size;
}

/// Algorithm x system grid in the layout of the zero-reduction and
/// basis-size tables.
inline std::string emit_table(const std::vector<ExperimentResult>& results,
                              TableMetric metric, TableFormat format) {
    std::vector<std::string> systems, algorithms;
    for (const auto& r : results) {
        if (std::find(systems.begin(), systems.end(), r.system) == systems.end())
            systems.push_back(r.system);
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
            algorithms.push_back(r.algorithm);
    }
    auto lookup = [&](const std::string& alg, const std::string& sys) -> std::string {
        for (const auto& r : results)
            if (r.algorithm == alg && r.system == sys)
                return std::to_string(table_cell(r, metric));
        return "-";
    };
    const std::string title =
        metric == TableMetric::zero_reductions ? "zero_reductions" : "basis_size";

    std::ostringstream os;
    switch (format) {
    case TableFormat::csv: {
        os << "algorithm";
        for (const auto& s : systems) os << "," << s;
        os << "\n";
        for (const auto& a : algorithms) {
            os << a;
            for (const auto& s : systems) os << "," << lookup(a, s);
            os << "\n";
        }
        break;
    }
    case TableFormat::json: {
        os << "[";
        for (std::size_t i = 0; i < algorithms.size(); ++i) {
            if (i > 0) os << ",";
            os << "{\"algorithm\":\"" << algorithms[i] << "\"";
            for (const auto& s : systems)
                os << ",\"" << s << "\":" << lookup(algorithms[i], s);
            os << "}";
        }
        os << "]";
        break;
    }
    case TableFormat::text:
    default: {
        std::size_t w = 12;
        for (const auto& s : systems) w = std::max(w, s.size() + 2);
        os << std::left << std::setw(22) << title;
        for (const auto& s : systems) os << std::setw(static_cast<int>(w)) << s;
        os << "\n";
        for (const auto& a : algorithms) {
            os << std::left << std::setw(22) << a;
            for (const auto& s : systems) os << std::setw(static_cast<int>(w)) << lookup(a, s);
            os << "\n";
        }
        break;
    }
    }
    return os.str();
}

} // namespace siggb
