#pragma once

#include "json.hpp"
#include "qci/module.hpp"

namespace qci {

/// A line through the origin, stored as its normalized direction: the
/// first nonzero coordinate is scaled to 1.
struct ProjPoint {
    std::vector<uint32_t> coords;

    bool operator==(const ProjPoint& other) const = default;
    bool operator<(const ProjPoint& other) const {
        return coords < other.coords;
    }
};

/// Scales so the first nonzero coordinate becomes 1; throws
/// ZeroLambdaError on the zero vector.
ProjPoint normalize_point(const Fp& F, std::vector<uint32_t> coords);

/// All points of projective (c-1)-space over F_p, in lexicographic order
/// of their normalized coordinates.
std::vector<ProjPoint> enumerate_proj_points(const Fp& F, uint32_t c);

/// Componentwise a-th power, renormalized. This is the coordinate change
/// the cyclic-module line formula is stated in.
ProjPoint power_map(const Fp& F, const ProjPoint& pt, uint32_t a);

/// Finite point set standing in for a support variety. An empty point set
/// with contains_origin means the trivial variety of a nonzero projective
/// module; the zero module has contains_origin = false.
struct VarietySet {
    uint32_t c = 0;
    uint32_t p = 0;
    std::vector<ProjPoint> points; // sorted, deduplicated
    bool contains_origin = false;

    bool trivial() const { return points.empty(); }
    nlohmann::json to_json() const;
    bool operator==(const VarietySet& other) const = default;
};

VarietySet line_of(const Fp& F, const ProjPoint& pt);

/// Rank test along the direction pt: with U = sum_i pt_i X_i (nilpotent of
/// exponent a), the restriction is free iff a * rank(U^{a-1}) = dim.
/// Returns true when the restriction is NOT free.
bool point_in_rank_variety(const ModuleRep& m, const ProjPoint& pt);

/// { power_map(lambda) : restriction along lambda not free }, from a full
/// scan of the rational projective points.
VarietySet support_variety(const ModuleRep& m);

bool is_subset(const VarietySet& v, const VarietySet& w);
VarietySet intersect(const VarietySet& v, const VarietySet& w);
VarietySet set_union(const VarietySet& v, const VarietySet& w);

} // namespace qci
