#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qci/homology.hpp"
#include "qci/variety.hpp"

namespace qci {

/// Caveat attached to every report that contains scanned varieties.
extern const char* kRationalScanNote;

struct CounterexampleParams {
    uint32_t c = 2;
    uint32_t a = 3;
    uint32_t p = 7;
    std::vector<uint32_t> lambda = {1, 1};
    std::vector<uint32_t> mu = {1, 3};
    std::optional<uint32_t> q_override;
};

/// Outcome of one counterexample run: M = A u_lambda, B the twisted
/// bimodule of mu. Scanned varieties sit next to the closed-form lines;
/// pass means the scans match the lines, the explicit isomorphism checks
/// out, and the tensor variety escapes the module variety.
struct CounterexampleReport {
    AlgebraSpec spec;
    std::vector<uint32_t> lambda;
    std::vector<uint32_t> mu;
    VarietySet v_m;
    VarietySet v_bm;
    VarietySet predicted_v_m;
    VarietySet predicted_v_bm;
    bool scans_match_predictions = false;
    bool containment_holds = true;
    bool iso_verified = false;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Preconditions: lambda nonzero, every mu_i nonzero, and the mu_i^a not
/// all equal on the support of lambda (otherwise the two lines coincide
/// and no counterexample can come out). Violations throw
/// PreconditionError; an unusable (p, a) throws FieldUnsuitableError.
CounterexampleReport run_counterexample(const CounterexampleParams& params);

/// Compares V(B (x) M) with V(B (x) k) intersected with V(M); pass means
/// the two differ, so this candidate bimodule variety fails the tensor
/// product formula as well.
struct CorollaryReport {
    AlgebraSpec spec;
    std::vector<uint32_t> lambda;
    std::vector<uint32_t> mu;
    VarietySet vb_b;
    VarietySet v_m;
    VarietySet intersection;
    VarietySet v_bm;
    bool equality_holds = true;
    bool pass = false;

    nlohmann::json to_json() const;
};

CorollaryReport run_corollary_demo(const CounterexampleParams& params);

/// Exhaustive scan over all lambda in P^{c-1}(F_p) and all mu in
/// (F_p^*)^c: non-containment of V(B (x) M) in V(M) must hold exactly
/// when the mu_i^a are not all equal over the support of lambda.
struct SharpnessReport {
    uint32_t c = 0, a = 0, p = 0;
    std::size_t cases = 0;
    std::size_t noncontainment_cases = 0;
    std::size_t mismatches = 0;
    bool pass = false;

    nlohmann::json to_json() const;
};

SharpnessReport run_sharpness_scan(uint32_t c, uint32_t a, uint32_t p);

/// Deliberate mutations for testing that the suite actually detects
/// broken invariants.
enum class Fault {
    none,
    rank_criterion_off_by_one,
};

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    bool passed = false;
    std::string detail; // first failure, empty when passed
};

struct SuiteReport {
    uint64_t seed = 0;
    std::size_t cases_scale = 0;
    Fault fault = Fault::none;
    std::vector<PropertyResult> properties;
    bool all_passed = false;

    nlohmann::json to_json() const;
};

/// Runs every structural property of the field, algebra, module, homology
/// and variety layers with deterministic seeding. cases_scale = 0 keeps
/// each property's default case count; a positive value raises randomized
/// properties to at least that many cases.
SuiteReport run_property_suite(uint64_t seed, std::size_t cases_scale = 0,
                               Fault fault = Fault::none);

} // namespace qci
