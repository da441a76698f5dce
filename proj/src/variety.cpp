#include "qci/variety.hpp"

#include <algorithm>

namespace qci {

namespace {

void check_same_ambient(const VarietySet& v, const VarietySet& w) {
    if (v.c != w.c || v.p != w.p)
        throw AmbientMismatchError("variety sets live in different ambients");
}

} // namespace

ProjPoint normalize_point(const Fp& F, std::vector<uint32_t> coords) {
    std::size_t first = 0;
    for (uint32_t& x : coords) x %= F.p();
    while (first < coords.size() && coords[first] == 0) ++first;
    if (first == coords.size())
        throw ZeroLambdaError("projective point needs a nonzero coordinate");
    uint32_t scaler = F.inv(coords[first]);
    for (uint32_t& x : coords) x = F.mul(scaler, x);
    return ProjPoint{std::move(coords)};
}

std::vector<ProjPoint> enumerate_proj_points(const Fp& F, uint32_t c) {
    // Normalized coordinate tuples are exactly the tuples whose first
    // nonzero entry is 1; walking all tuples lexicographically and keeping
    // those yields the points already in lexicographic order.
    std::vector<ProjPoint> out;
    std::vector<uint32_t> t(c, 0);
    while (true) {
        std::size_t first = 0;
        while (first < c && t[first] == 0) ++first;
        if (first < c && t[first] == 1) out.push_back(ProjPoint{t});
        std::size_t j = c;
        while (j > 0 && t[j - 1] == F.p() - 1) t[--j] = 0;
        if (j == 0) break;
        ++t[j - 1];
    }
    return out;
}

ProjPoint power_map(const Fp& F, const ProjPoint& pt, uint32_t a) {
    std::vector<uint32_t> coords(pt.coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = F.pow(pt.coords[i], a);
    return normalize_point(F, std::move(coords));
}

nlohmann::json VarietySet::to_json() const {
    nlohmann::json pts = nlohmann::json::array();
    for (const ProjPoint& pt : points) pts.push_back(pt.coords);
    return nlohmann::json{{"ambient", {{"c", c}, {"p", p}}},
                          {"points", pts},
                          {"trivial", trivial()}};
}

VarietySet line_of(const Fp& F, const ProjPoint& pt) {
    ProjPoint norm = normalize_point(F, pt.coords);
    return VarietySet{uint32_t(norm.coords.size()), F.p(), {norm}, true};
}

bool point_in_rank_variety(const ModuleRep& m, const ProjPoint& pt) {
    const Fp& F = m.spec.fp();
    if (pt.coords.size() != m.spec.c)
        throw AmbientMismatchError("point has wrong coordinate count");
    Mat u(m.dim, m.dim);
    for (uint32_t i = 0; i < m.spec.c; ++i)
        if (pt.coords[i] != 0)
            u = mat_add(F, u, mat_scale(F, pt.coords[i], m.actions[i]));
    std::size_t corner_rank = rank(F, mat_pow(F, u, m.spec.a - 1));
    bool free = std::size_t(m.spec.a) * corner_rank == m.dim;
    return !free;
}

VarietySet support_variety(const ModuleRep& m) {
    const Fp& F = m.spec.fp();
    std::vector<ProjPoint> hits;
    for (const ProjPoint& pt : enumerate_proj_points(F, m.spec.c))
        if (point_in_rank_variety(m, pt))
            hits.push_back(power_map(F, pt, m.spec.a));
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return VarietySet{m.spec.c, F.p(), std::move(hits), m.dim > 0};
}

bool is_subset(const VarietySet& v, const VarietySet& w) {
    check_same_ambient(v, w);
    if (v.contains_origin && !w.contains_origin) return false;
    return std::includes(w.points.begin(), w.points.end(), v.points.begin(),
                         v.points.end());
}

VarietySet intersect(const VarietySet& v, const VarietySet& w) {
    check_same_ambient(v, w);
    VarietySet out{v.c, v.p, {}, v.contains_origin && w.contains_origin};
    std::set_intersection(v.points.begin(), v.points.end(), w.points.begin(),
                          w.points.end(), std::back_inserter(out.points));
    return out;
}

VarietySet set_union(const VarietySet& v, const VarietySet& w) {
    check_same_ambient(v, w);
    VarietySet out{v.c, v.p, {}, v.contains_origin || w.contains_origin};
    std::set_union(v.points.begin(), v.points.end(), w.points.begin(),
                   w.points.end(), std::back_inserter(out.points));
    return out;
}

} // namespace qci
