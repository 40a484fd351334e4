#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polymat/decomposition.hpp"
#include "polymat/homology.hpp"
#include "polymat/ideal.hpp"

namespace polymat {

struct StabilityOptions {
    int max_power = 10;
    bool full_trace = true;  // materialize Ass and depth at every power
    DecompositionBudget decomposition;  // general-path Ass budget
    HomologyBudget homology;            // general-path depth budget
};

struct PowerEntry {
    int t = 0;
    std::size_t generators = 0;
    std::optional<AssociatedPrimes> ass;
    std::optional<int> depth;
};

struct PowerTrace {
    bool polymatroidal = false;
    bool certified = false;       // horizon covers the proved stability bound
    std::optional<int> ell;       // analytic spread, polymatroidal inputs only
    int horizon = 0;              // highest power computed
    bool budget_exhausted = false;
    std::vector<PowerEntry> entries;
};

struct StabilityReport {
    std::optional<int> astab;  // empty = unstabilized within the horizon
    std::optional<int> dstab;
    bool certified = false;
    std::optional<int> ell;
    AssociatedPrimes stable_ass;  // Ass at the horizon when astab is known
    PowerTrace trace;
};

/// Trace Ass(I^t) and depth R/I^t for t = 1..T. For polymatroidal inputs T
/// is min(max_power, l(I)-1) (or 1 for principal ideals) and the results are
/// certified by the stability bound astab, dstab < l(I); powers stay
/// polymatroidal, so associated primes come from per-subset localization
/// depth-zero onsets and depths from the linear-quotients formula. Other
/// inputs run to max_power with budgeted decomposition/homology and are
/// tagged budget-limited.
StabilityReport stability_report(const MonomialIdeal& ideal, const StabilityOptions& options = {});

std::optional<int> astab(const MonomialIdeal& ideal, const StabilityOptions& options = {});
std::optional<int> dstab(const MonomialIdeal& ideal, const StabilityOptions& options = {});

/// {"astab": int|"unstabilized", "dstab": ..., "certified": bool,
///  "ell": int|null, "trace":[{"t":1,"ass":[[...]],"depth":int,"gens":int},...]}
std::string report_json(const StabilityReport& report);

}  // namespace polymat
