#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polymat/ideal.hpp"

namespace polymat {

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus status);

struct TheoremCheckResult {
    std::string id;
    std::string corpus;
    int instances = 0;  // assertions actually evaluated
    int skipped = 0;    // instances skipped for horizon/budget reasons
    CheckStatus status = CheckStatus::Inconclusive;
    std::vector<std::string> witnesses;  // re-runnable ideal text for each failure
    std::string note;
    double seconds = 0.0;
};

struct VerifyConfig {
    int max_power = 10;
    std::vector<std::string> only;  // run these ids only; empty = all
    int threads = 0;                // 0 = POLYMAT_THREADS env or hardware
};

/// The registered check ids, in report order.
const std::vector<std::string>& check_ids();

TheoremCheckResult run_check(const std::string& id, const VerifyConfig& config = {});

/// Run all (or the configured subset of) checks, in parallel, merged in
/// registry order.
std::vector<TheoremCheckResult> run_suite(const VerifyConfig& config = {});

/// {"checks":[{"id":...,"status":"PASS","instances":k,"witnesses":[...]},...]}
std::string suite_json(const std::vector<TheoremCheckResult>& results);

/// Fixed-width human-readable table.
std::string suite_table(const std::vector<TheoremCheckResult>& results);

bool suite_failed(const std::vector<TheoremCheckResult>& results);

/// Evaluate a predicate over a corpus, recording a re-runnable witness for
/// every failing ideal. Building block for the named checks; exposed so the
/// witness format itself can be tested.
TheoremCheckResult run_predicate_check(
    const std::string& id, const std::string& corpus_desc,
    const std::vector<MonomialIdeal>& corpus,
    const std::function<bool(const MonomialIdeal&, std::string& detail)>& predicate);

/// The 12-generator degree-2 matroidal regression ideal on six variables
/// (generators are the edges of the octahedron graph).
MonomialIdeal regression_matroidal_octahedron();

/// The 10-generator degree-3 polymatroidal regression ideal on four
/// variables whose maximal ideal is associated already at the first power.
MonomialIdeal regression_polymatroidal_cubic();

}  // namespace polymat
