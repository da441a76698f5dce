#pragma once

#include "json.hpp"
#include "qci/module.hpp"

namespace qci {

/// dim(M / rM), where rM is spanned by the images of all actions.
std::size_t top_dim(const ModuleRep& m);

/// Free cover of rank top_dim(m) together with the surjection onto m
/// (matrix is dim(m) x dim(cover)); column (j, e) is the monomial e acting
/// on the j-th lifted generator.
struct CoverMap {
    ModuleRep cover;
    Mat map;
};

CoverMap projective_cover_map(const ModuleRep& m);

struct SyzygyStep {
    ModuleRep module;    // the kernel with restricted actions
    Mat embedding_rows;  // its basis as rows in cover coordinates
    CoverMap cover;
};

SyzygyStep syzygy_step(const ModuleRep& m);
/// Kernel of the projective cover map.
ModuleRep syzygy(const ModuleRep& m);

/// Prefix of a minimal resolution: betti[i] = dim of the top of the i-th
/// syzygy; cover_maps[i] surjects the i-th free term onto the i-th syzygy
/// (the module itself for i = 0) and embeddings[i] places the (i+1)-st
/// syzygy inside that free term.
struct ResolutionPrefix {
    ModuleRep module;
    std::vector<std::size_t> betti;
    std::vector<ModuleRep> syzygies;
    std::vector<Mat> cover_maps;
    std::vector<Mat> embeddings;
};

ResolutionPrefix resolve(const ModuleRep& m, std::size_t depth);

/// Over this local selfinjective algebra: true iff the first syzygy is 0.
bool is_projective(const ModuleRep& m);

/// Polynomial growth estimate from the Betti window: degree 0 when the
/// sequence has died out, otherwise 1 + the log-log least squares slope
/// over degrees [window_lo, window_hi], rounded with threshold 0.6.
struct ComplexityFit {
    int complexity;
    std::size_t window_lo;
    std::size_t window_hi;
    double slope;
};

/// Needs at least 6 entries; throws InsufficientDataError otherwise.
ComplexityFit complexity_estimate(const std::vector<std::size_t>& betti);

/// {betti, complexity, module_digest, window}.
nlohmann::json resolution_report(const ResolutionPrefix& r);

} // namespace qci
