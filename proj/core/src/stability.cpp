#include "polymat/stability.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "polymat/structure.hpp"

namespace polymat {

namespace {

// Above this generator count the honest linear-quotients scan gives way to
// the neighbor-lookup q; for certified polymatroidal powers linearity is
// already guaranteed.
constexpr std::size_t kHonestQLimit = 600;

int q_of_power(const MonomialIdeal& ideal) {
    if (ideal.size() <= kHonestQLimit) {
        LinearQuotientsReport report = linear_quotients_q(ideal);
        if (!report.linear)
            throw std::logic_error("power of a polymatroidal ideal lost linear quotients");
        return report.q;
    }
    return q_value_assuming_linear(ideal);
}

struct PolymatroidalScan {
    std::map<std::uint64_t, int> onset;  // prime mask -> first power with depth 0 locally
    std::vector<int> depths;             // depth R/I^t, index t-1
};

PolymatroidalScan scan_polymatroidal(const MonomialIdeal& ideal,
                                     const std::vector<MonomialIdeal>& powers) {
    const int T = static_cast<int>(powers.size());
    PolymatroidalScan scan;

    // q of each full power, shared by the depth trace and the full-support
    // prime test.
    std::vector<int> q_main(static_cast<std::size_t>(T));
    for (int t = 1; t <= T; ++t)
        q_main[static_cast<std::size_t>(t - 1)] = q_of_power(powers[static_cast<std::size_t>(t - 1)]);
    scan.depths.reserve(static_cast<std::size_t>(T));
    for (int t = 1; t <= T; ++t)
        scan.depths.push_back(ideal.dim() - q_main[static_cast<std::size_t>(t - 1)] - 1);

    // Localization commutes with powers, so each candidate prime is tested
    // on powers of the (much smaller) localized ideal.
    const std::uint64_t supp = ideal.support();
    for (std::uint64_t mask = supp;; mask = (mask - 1) & supp) {
        if (mask == 0) break;
        const int want = std::popcount(mask) - 1;
        if (mask == supp) {
            for (int t = 1; t <= T; ++t) {
                if (q_main[static_cast<std::size_t>(t - 1)] == want) {
                    scan.onset[mask] = t;
                    break;
                }
            }
        } else {
            Localization loc = try_localize(ideal, mask);
            if (loc.unit) continue;
            MonomialIdeal current = loc.ideal;
            for (int t = 1; t <= T; ++t) {
                if (q_of_power(current) == want) {
                    scan.onset[mask] = t;
                    break;
                }
                if (t < T) current = multiply(current, loc.ideal);
            }
        }
    }
    return scan;
}

AssociatedPrimes primes_at(const PolymatroidalScan& scan, int n, int t) {
    AssociatedPrimes ass;
    ass.n = n;
    for (const auto& [mask, first] : scan.onset)
        if (first <= t) ass.primes.push_back(mask);
    std::sort(ass.primes.begin(), ass.primes.end());
    ass.contains_maximal = ass.contains(full_mask(n));
    return ass;
}

}  // namespace

StabilityReport stability_report(const MonomialIdeal& ideal, const StabilityOptions& options) {
    if (ideal.is_zero()) throw std::invalid_argument("stability trace is undefined for the zero ideal");
    if (options.max_power < 1) throw std::invalid_argument("max_power must be at least 1");

    StabilityReport report;
    PowerTrace& trace = report.trace;
    trace.polymatroidal = is_polymatroidal(ideal).ok;

    int T = options.max_power;
    if (trace.polymatroidal) {
        trace.ell = analytic_spread_unchecked(ideal);
        // Powers of a principal ideal are principal: constant Ass and depth.
        const int bound = ideal.is_principal() ? 1 : *trace.ell - 1;
        T = std::min(options.max_power, bound);
        trace.certified = T == bound;
    }
    trace.horizon = T;
    report.certified = trace.certified;
    report.ell = trace.ell;

    std::vector<MonomialIdeal> powers;
    powers.reserve(static_cast<std::size_t>(T));
    powers.push_back(ideal);
    for (int t = 2; t <= T; ++t) powers.push_back(multiply(powers.back(), ideal));

    trace.entries.resize(static_cast<std::size_t>(T));
    for (int t = 1; t <= T; ++t) {
        trace.entries[static_cast<std::size_t>(t - 1)].t = t;
        trace.entries[static_cast<std::size_t>(t - 1)].generators = powers[static_cast<std::size_t>(t - 1)].size();
    }

    if (trace.polymatroidal) {
        PolymatroidalScan scan = scan_polymatroidal(ideal, powers);
        for (int t = 1; t <= T; ++t) {
            auto& entry = trace.entries[static_cast<std::size_t>(t - 1)];
            entry.depth = scan.depths[static_cast<std::size_t>(t - 1)];
            if (options.full_trace || t == T) entry.ass = primes_at(scan, ideal.dim(), t);
        }
        int astab_value = 1;
        for (const auto& [mask, first] : scan.onset) astab_value = std::max(astab_value, first);
        int dstab_value = T;
        for (int t = 1; t <= T; ++t) {
            if (scan.depths[static_cast<std::size_t>(t - 1)] == scan.depths[static_cast<std::size_t>(T - 1)]) {
                dstab_value = t;
                break;
            }
        }
        report.astab = astab_value;
        report.dstab = dstab_value;
        report.stable_ass = primes_at(scan, ideal.dim(), T);
        return report;
    }

    // General path: budgeted decomposition and homology per power.
    std::vector<std::optional<AssociatedPrimes>> ass_by_power(static_cast<std::size_t>(T));
    std::vector<std::optional<int>> depth_by_power(static_cast<std::size_t>(T));
    for (int t = 1; t <= T; ++t) {
        const MonomialIdeal& pw = powers[static_cast<std::size_t>(t - 1)];
        try {
            ass_by_power[static_cast<std::size_t>(t - 1)] = associated_primes(pw, options.decomposition);
        } catch (const BudgetExceeded&) {
            trace.budget_exhausted = true;
        }
        try {
            LinearQuotientsReport lq = linear_quotients_q(pw);
            if (lq.linear) {
                depth_by_power[static_cast<std::size_t>(t - 1)] = pw.dim() - lq.q - 1;
            } else {
                depth_by_power[static_cast<std::size_t>(t - 1)] = depth_oracle(pw, options.homology);
            }
        } catch (const BudgetExceeded&) {
            trace.budget_exhausted = true;
        }
        auto& entry = trace.entries[static_cast<std::size_t>(t - 1)];
        entry.ass = ass_by_power[static_cast<std::size_t>(t - 1)];
        entry.depth = depth_by_power[static_cast<std::size_t>(t - 1)];
    }

    const auto& last_ass = ass_by_power[static_cast<std::size_t>(T - 1)];
    bool all_ass = std::all_of(ass_by_power.begin(), ass_by_power.end(),
                               [](const auto& a) { return a.has_value(); });
    if (all_ass) {
        int first_flat = T;
        for (int t = T; t >= 1; --t) {
            if (ass_by_power[static_cast<std::size_t>(t - 1)] == last_ass)
                first_flat = t;
            else
                break;
        }
        report.astab = first_flat;
        report.stable_ass = *last_ass;
    }
    const auto& last_depth = depth_by_power[static_cast<std::size_t>(T - 1)];
    bool all_depth = std::all_of(depth_by_power.begin(), depth_by_power.end(),
                                 [](const auto& d) { return d.has_value(); });
    if (all_depth) {
        int first_flat = T;
        for (int t = T; t >= 1; --t) {
            if (depth_by_power[static_cast<std::size_t>(t - 1)] == last_depth)
                first_flat = t;
            else
                break;
        }
        report.dstab = first_flat;
    }
    return report;
}

std::optional<int> astab(const MonomialIdeal& ideal, const StabilityOptions& options) {
    StabilityOptions lean = options;
    lean.full_trace = false;
    return stability_report(ideal, lean).astab;
}

std::optional<int> dstab(const MonomialIdeal& ideal, const StabilityOptions& options) {
    StabilityOptions lean = options;
    lean.full_trace = false;
    return stability_report(ideal, lean).dstab;
}

std::string report_json(const StabilityReport& report) {
    nlohmann::json j;
    j["astab"] = report.astab ? nlohmann::json(*report.astab) : nlohmann::json("unstabilized");
    j["dstab"] = report.dstab ? nlohmann::json(*report.dstab) : nlohmann::json("unstabilized");
    j["certified"] = report.certified;
    j["ell"] = report.ell ? nlohmann::json(*report.ell) : nlohmann::json(nullptr);
    j["trace"] = nlohmann::json::array();
    for (const auto& entry : report.trace.entries) {
        nlohmann::json e;
        e["t"] = entry.t;
        e["gens"] = entry.generators;
        if (entry.ass) {
            e["ass"] = nlohmann::json::array();
            for (auto mask : entry.ass->primes) e["ass"].push_back(mask_to_vars_one_based(mask));
        } else {
            e["ass"] = nullptr;
        }
        e["depth"] = entry.depth ? nlohmann::json(*entry.depth) : nlohmann::json(nullptr);
        j["trace"].push_back(std::move(e));
    }
    return j.dump();
}

}  // namespace polymat
