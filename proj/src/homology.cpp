#include "qci/homology.hpp"

#include <cmath>

#include "qci/util.hpp"

namespace qci {

std::size_t top_dim(const ModuleRep& m) {
    const Fp& F = m.spec.fp();
    Mat radical_rows(m.spec.c * m.dim, m.dim);
    for (uint32_t i = 0; i < m.spec.c; ++i)
        for (std::size_t s = 0; s < m.dim; ++s)
            radical_rows.set_row(i * m.dim + s, m.actions[i].col(s));
    return m.dim - rank(F, radical_rows);
}

CoverMap projective_cover_map(const ModuleRep& m) {
    const Fp& F = m.spec.fp();
    Mat radical_rows(m.spec.c * m.dim, m.dim);
    for (uint32_t i = 0; i < m.spec.c; ++i)
        for (std::size_t s = 0; s < m.dim; ++s)
            radical_rows.set_row(i * m.dim + s, m.actions[i].col(s));
    SubspaceBasis radical = row_space_basis(F, radical_rows);
    // Unit vectors at the non-pivot coordinates project to a basis of the
    // top, so they generate m.
    std::vector<bool> is_pivot(m.dim, false);
    for (std::size_t p : radical.coord_cols) is_pivot[p] = true;
    std::vector<std::size_t> generators;
    for (std::size_t j = 0; j < m.dim; ++j)
        if (!is_pivot[j]) generators.push_back(j);

    ModuleRep cover = free_module(m.spec, generators.size());
    Mat phi(m.dim, cover.dim);
    for (std::size_t j = 0; j < generators.size(); ++j) {
        std::vector<uint32_t> g(m.dim, 0);
        g[generators[j]] = 1;
        Mat orbit = monomial_orbit(m, g);
        for (uint32_t e = 0; e < m.spec.dim; ++e)
            for (std::size_t r = 0; r < m.dim; ++r)
                phi(r, j * m.spec.dim + e) = orbit(r, e);
    }
    if (rank(F, phi) != m.dim)
        throw ComputationError("projective cover failed to surject");
    return CoverMap{std::move(cover), std::move(phi)};
}

SyzygyStep syzygy_step(const ModuleRep& m) {
    const Fp& F = m.spec.fp();
    CoverMap cover = projective_cover_map(m);
    SubspaceBasis kernel = kernel_space_basis(F, cover.map);
    // Minimality: the kernel must sit inside the radical of the cover,
    // i.e. vanish at the identity-monomial coordinate of every copy.
    for (std::size_t s = 0; s < kernel.dim(); ++s)
        for (std::size_t copy = 0; copy * m.spec.dim < cover.cover.dim; ++copy)
            if (kernel.rows(s, copy * m.spec.dim) != 0)
                throw ComputationError("cover kernel has a unit entry");
    ModuleRep omega = submodule(cover.cover, kernel);
    return SyzygyStep{std::move(omega), std::move(kernel.rows),
                      std::move(cover)};
}

ModuleRep syzygy(const ModuleRep& m) { return syzygy_step(m).module; }

ResolutionPrefix resolve(const ModuleRep& m, std::size_t depth) {
    ResolutionPrefix r;
    r.module = m;
    r.betti.push_back(top_dim(m));
    ModuleRep current = m;
    for (std::size_t i = 0; i < depth; ++i) {
        SyzygyStep step = syzygy_step(current);
        r.cover_maps.push_back(std::move(step.cover.map));
        r.embeddings.push_back(std::move(step.embedding_rows));
        current = std::move(step.module);
        r.betti.push_back(top_dim(current));
        r.syzygies.push_back(current);
    }
    return r;
}

bool is_projective(const ModuleRep& m) { return syzygy(m).dim == 0; }

ComplexityFit complexity_estimate(const std::vector<std::size_t>& betti) {
    if (betti.size() < 6)
        throw InsufficientDataError(
            "complexity estimation needs at least 6 betti numbers, got " +
            std::to_string(betti.size()));
    std::size_t lo = 2, hi = betti.size() - 1;
    if (betti.back() == 0) return ComplexityFit{0, lo, hi, 0.0};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t k = lo; k <= hi; ++k) {
        if (betti[k] == 0) continue;
        double x = std::log(double(k)), y = std::log(double(betti[k]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    double denom = double(n) * sxx - sx * sx;
    double slope = denom == 0.0 ? 0.0 : (double(n) * sxy - sx * sy) / denom;
    int complexity = 1 + std::max(0, int(std::floor(slope + 0.6)));
    return ComplexityFit{complexity, lo, hi, slope};
}

nlohmann::json resolution_report(const ResolutionPrefix& r) {
    ComplexityFit fit = complexity_estimate(r.betti);
    return nlohmann::json{
        {"betti", r.betti},
        {"complexity", fit.complexity},
        {"module_digest", hex64(fnv1a64(r.module.to_json().dump()))},
        {"window", {fit.window_lo, fit.window_hi}}};
}

} // namespace qci
