#include "qci/module.hpp"

#include <random>
#include <string>

namespace qci {

namespace {

void check_same_spec(const AlgebraSpec& x, const AlgebraSpec& y) {
    if (!(x == y))
        throw SpecMismatchError("operands belong to different algebras");
}

void check_left_relations(const AlgebraSpec& spec, const std::vector<Mat>& X,
                          const char* what) {
    const Fp& F = spec.fp();
    if (X.size() != spec.c)
        throw PreconditionError(std::string(what) + ": expected c action matrices");
    for (const Mat& x : X)
        if (x.rows() != x.cols())
            throw PreconditionError(std::string(what) + ": actions must be square");
    for (uint32_t i = 0; i < spec.c; ++i)
        if (!mat_pow(F, X[i], spec.a).is_zero())
            throw PreconditionError(std::string(what) + ": X_" +
                                    std::to_string(i + 1) + "^a != 0");
    for (uint32_t i = 0; i < spec.c; ++i)
        for (uint32_t j = i + 1; j < spec.c; ++j)
            if (mat_mul(F, X[i], X[j]) !=
                mat_scale(F, spec.q(), mat_mul(F, X[j], X[i])))
                throw PreconditionError(std::string(what) +
                                        ": commutation relation fails for (" +
                                        std::to_string(i + 1) + ", " +
                                        std::to_string(j + 1) + ")");
}

/// Matrix of w -> x_i * w on the monomial basis of the algebra.
Mat left_mult_matrix(const AlgebraSpec& spec, uint32_t i) {
    Mat m(spec.dim, spec.dim);
    AlgebraElement xi = generator(spec, i);
    for (uint32_t col = 0; col < spec.dim; ++col) {
        AlgebraElement prod = multiply(xi, monomial_element(spec, col));
        for (auto [mono, cf] : prod.terms()) m(mono, col) = cf;
    }
    return m;
}

/// Matrix of w -> w * x_i on the monomial basis of the algebra.
Mat right_mult_matrix(const AlgebraSpec& spec, uint32_t i) {
    Mat m(spec.dim, spec.dim);
    AlgebraElement xi = generator(spec, i);
    for (uint32_t col = 0; col < spec.dim; ++col) {
        AlgebraElement prod = multiply(monomial_element(spec, col), xi);
        for (auto [mono, cf] : prod.terms()) m(mono, col) = cf;
    }
    return m;
}

std::vector<uint32_t> project_vector(const Fp& F, const SubspaceBasis& rel,
                                     const std::vector<std::size_t>& rep_cols,
                                     std::vector<uint32_t> v) {
    v = rel.reduce(F, std::move(v));
    std::vector<uint32_t> out(rep_cols.size());
    for (std::size_t k = 0; k < rep_cols.size(); ++k) out[k] = v[rep_cols[k]];
    return out;
}

std::vector<std::size_t> complement_columns(std::size_t n,
                                            const std::vector<std::size_t>& used) {
    std::vector<bool> mark(n, false);
    for (std::size_t u : used) mark[u] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n; ++j)
        if (!mark[j]) out.push_back(j);
    return out;
}

} // namespace

void ModuleRep::validate() const {
    check_left_relations(spec, actions, "module");
    for (const Mat& x : actions)
        if (x.rows() != dim)
            throw PreconditionError("module: action size does not match dim");
}

void BimoduleRep::validate() const {
    const Fp& F = spec.fp();
    check_left_relations(spec, left_actions, "bimodule left actions");
    if (right_actions.size() != spec.c)
        throw PreconditionError("bimodule: expected c right action matrices");
    for (const Mat& r : right_actions)
        if (r.rows() != dim || r.cols() != dim)
            throw PreconditionError("bimodule: right action size mismatch");
    for (const Mat& l : left_actions)
        if (l.rows() != dim)
            throw PreconditionError("bimodule: left action size mismatch");
    for (uint32_t i = 0; i < spec.c; ++i)
        if (!mat_pow(F, right_actions[i], spec.a).is_zero())
            throw PreconditionError("bimodule: R_" + std::to_string(i + 1) +
                                    "^a != 0");
    for (uint32_t i = 0; i < spec.c; ++i)
        for (uint32_t j = i + 1; j < spec.c; ++j)
            if (mat_mul(F, right_actions[j], right_actions[i]) !=
                mat_scale(F, spec.q(),
                          mat_mul(F, right_actions[i], right_actions[j])))
                throw PreconditionError(
                    "bimodule: right commutation relation fails for (" +
                    std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    for (uint32_t i = 0; i < spec.c; ++i)
        for (uint32_t j = 0; j < spec.c; ++j)
            if (mat_mul(F, left_actions[i], right_actions[j]) !=
                mat_mul(F, right_actions[j], left_actions[i]))
                throw PreconditionError(
                    "bimodule: left and right actions do not commute");
}

bool check_intertwines(const ModuleMap& f) {
    if (!(f.source.spec == f.target.spec)) return false;
    if (f.matrix.rows() != f.target.dim || f.matrix.cols() != f.source.dim)
        return false;
    const Fp& F = f.source.spec.fp();
    for (uint32_t i = 0; i < f.source.spec.c; ++i)
        if (mat_mul(F, f.matrix, f.source.actions[i]) !=
            mat_mul(F, f.target.actions[i], f.matrix))
            return false;
    return true;
}

bool check_isomorphism_via_map(const ModuleMap& f) {
    if (f.source.dim != f.target.dim) return false;
    if (!check_intertwines(f)) return false;
    return inverse(f.source.spec.fp(), f.matrix).has_value();
}

ModuleRep free_module(const AlgebraSpec& spec, std::size_t rank) {
    std::size_t n = rank * spec.dim;
    std::vector<Mat> actions;
    actions.reserve(spec.c);
    for (uint32_t i = 0; i < spec.c; ++i) {
        Mat block = left_mult_matrix(spec, i);
        Mat x(n, n);
        for (std::size_t b = 0; b < rank; ++b)
            for (uint32_t r = 0; r < spec.dim; ++r)
                for (uint32_t col = 0; col < spec.dim; ++col)
                    x(b * spec.dim + r, b * spec.dim + col) = block(r, col);
        actions.push_back(std::move(x));
    }
    ModuleRep m{spec, n, std::move(actions)};
    m.validate();
    return m;
}

ModuleRep simple_module(const AlgebraSpec& spec) {
    return ModuleRep{spec, 1, std::vector<Mat>(spec.c, Mat(1, 1))};
}

ModuleRep zero_module(const AlgebraSpec& spec) {
    return ModuleRep{spec, 0, std::vector<Mat>(spec.c, Mat(0, 0))};
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
    check_same_spec(m.spec, n.spec);
    std::size_t d = m.dim + n.dim;
    std::vector<Mat> actions;
    for (uint32_t i = 0; i < m.spec.c; ++i) {
        Mat x(d, d);
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) x(r, c) = m.actions[i](r, c);
        for (std::size_t r = 0; r < n.dim; ++r)
            for (std::size_t c = 0; c < n.dim; ++c)
                x(m.dim + r, m.dim + c) = n.actions[i](r, c);
        actions.push_back(std::move(x));
    }
    return ModuleRep{m.spec, d, std::move(actions)};
}

CyclicModule cyclic_u_module(const AlgebraSpec& spec,
                             const std::vector<uint32_t>& lambda) {
    AlgebraElement u = u_lambda(spec, lambda);
    if (u.is_zero())
        throw ZeroLambdaError("cyclic module needs a nonzero lambda");
    const Fp& F = spec.fp();
    Mat spanning(spec.dim, spec.dim);
    for (uint32_t m = 0; m < spec.dim; ++m)
        spanning.set_row(m, multiply(monomial_element(spec, m), u).dense());
    SubspaceBasis basis = row_space_basis(F, spanning);
    std::size_t d = basis.dim();
    std::vector<Mat> actions;
    for (uint32_t i = 0; i < spec.c; ++i) {
        Mat x(d, d);
        for (std::size_t s = 0; s < d; ++s) {
            AlgebraElement bs = AlgebraElement::from_dense(spec, basis.rows.row(s));
            std::vector<uint32_t> img = multiply(generator(spec, i), bs).dense();
            if (!basis.contains(F, img))
                throw ComputationError("cyclic span is not action stable");
            std::vector<uint32_t> coords = basis.coords_of(img);
            for (std::size_t t = 0; t < d; ++t) x(t, s) = coords[t];
        }
        actions.push_back(std::move(x));
    }
    ModuleRep mod{spec, d, std::move(actions)};
    mod.validate();
    return CyclicModule{std::move(mod), std::move(basis), std::move(u)};
}

ModuleRep twist(const DiagonalAutomorphism& psi, const ModuleRep& m) {
    if (psi.scalars.size() != m.spec.c)
        throw PreconditionError("automorphism scalar count does not match c");
    const Fp& F = m.spec.fp();
    ModuleRep r = m;
    for (uint32_t i = 0; i < m.spec.c; ++i)
        r.actions[i] = mat_scale(F, psi.scalars[i], m.actions[i]);
    return r;
}

BimoduleRep twisted_bimodule(const DiagonalAutomorphism& psi,
                             const AlgebraSpec& spec) {
    if (psi.scalars.size() != spec.c)
        throw PreconditionError("automorphism scalar count does not match c");
    const Fp& F = spec.fp();
    std::vector<Mat> left, right;
    for (uint32_t i = 0; i < spec.c; ++i) {
        left.push_back(mat_scale(F, psi.scalars[i], left_mult_matrix(spec, i)));
        right.push_back(right_mult_matrix(spec, i));
    }
    BimoduleRep b{spec, spec.dim, std::move(left), std::move(right)};
    b.validate();
    return b;
}

BimoduleRep regular_bimodule(const AlgebraSpec& spec) {
    return twisted_bimodule(identity_automorphism(spec), spec);
}

std::vector<uint32_t> TensorModule::project(const Fp& F,
                                            std::vector<uint32_t> v) const {
    return project_vector(F, relations, rep_cols, std::move(v));
}

namespace {

struct TensorCore {
    std::size_t dim;
    std::vector<std::size_t> rep_cols;
    SubspaceBasis relations;
};

/// Relation span of {b * x_i (x) m - b (x) x_i * m} inside the product
/// space, for right actions R on the first factor and left actions X on
/// the second.
TensorCore tensor_core(const AlgebraSpec& spec, std::size_t db,
                       const std::vector<Mat>& R, std::size_t dm,
                       const std::vector<Mat>& X) {
    const Fp& F = spec.fp();
    std::size_t n = db * dm;
    Mat rel(spec.c * db * dm, n);
    std::size_t row = 0;
    for (uint32_t i = 0; i < spec.c; ++i)
        for (std::size_t s = 0; s < db; ++s)
            for (std::size_t t = 0; t < dm; ++t) {
                for (std::size_t u = 0; u < db; ++u) {
                    uint32_t cf = R[i](u, s);
                    if (cf) rel(row, u * dm + t) = F.add(rel(row, u * dm + t), cf);
                }
                for (std::size_t v = 0; v < dm; ++v) {
                    uint32_t cf = X[i](v, t);
                    if (cf)
                        rel(row, s * dm + v) = F.sub(rel(row, s * dm + v), cf);
                }
                ++row;
            }
    SubspaceBasis relations = row_space_basis(F, rel);
    std::vector<std::size_t> rep_cols =
        complement_columns(n, relations.coord_cols);
    return TensorCore{rep_cols.size(), std::move(rep_cols), std::move(relations)};
}

/// Induced matrix of `action` (x) id or id (x) `action` on the quotient.
Mat induced_action(const Fp& F, const TensorCore& core, std::size_t db,
                   std::size_t dm, const Mat& action, bool on_first) {
    Mat x(core.dim, core.dim);
    std::size_t n = db * dm;
    for (std::size_t k = 0; k < core.dim; ++k) {
        std::size_t f = core.rep_cols[k];
        std::size_t s = f / dm, t = f % dm;
        std::vector<uint32_t> v(n, 0);
        if (on_first) {
            for (std::size_t u = 0; u < db; ++u) v[u * dm + t] = action(u, s);
        } else {
            for (std::size_t w = 0; w < dm; ++w) v[s * dm + w] = action(w, t);
        }
        std::vector<uint32_t> img =
            project_vector(F, core.relations, core.rep_cols, std::move(v));
        for (std::size_t r = 0; r < core.dim; ++r) x(r, k) = img[r];
    }
    return x;
}

} // namespace

TensorModule tensor_bimodule_module(const BimoduleRep& b, const ModuleRep& m) {
    check_same_spec(b.spec, m.spec);
    const Fp& F = b.spec.fp();
    TensorCore core =
        tensor_core(b.spec, b.dim, b.right_actions, m.dim, m.actions);
    std::vector<Mat> actions;
    for (uint32_t i = 0; i < b.spec.c; ++i)
        actions.push_back(
            induced_action(F, core, b.dim, m.dim, b.left_actions[i], true));
    ModuleRep mod{b.spec, core.dim, std::move(actions)};
    mod.validate();
    return TensorModule{std::move(mod), std::move(core.rep_cols),
                        std::move(core.relations)};
}

TensorBimodule tensor_bimodules(const BimoduleRep& b1, const BimoduleRep& b2) {
    check_same_spec(b1.spec, b2.spec);
    const Fp& F = b1.spec.fp();
    TensorCore core =
        tensor_core(b1.spec, b1.dim, b1.right_actions, b2.dim, b2.left_actions);
    std::vector<Mat> left, right;
    for (uint32_t i = 0; i < b1.spec.c; ++i) {
        left.push_back(
            induced_action(F, core, b1.dim, b2.dim, b1.left_actions[i], true));
        right.push_back(
            induced_action(F, core, b1.dim, b2.dim, b2.right_actions[i], false));
    }
    BimoduleRep bim{b1.spec, core.dim, std::move(left), std::move(right)};
    bim.validate();
    return TensorBimodule{std::move(bim), std::move(core.rep_cols),
                          std::move(core.relations)};
}

bool check_bimodule_isomorphism(const BimoduleRep& src, const BimoduleRep& tgt,
                                const Mat& f) {
    if (!(src.spec == tgt.spec) || src.dim != tgt.dim) return false;
    if (f.rows() != tgt.dim || f.cols() != src.dim) return false;
    const Fp& F = src.spec.fp();
    for (uint32_t i = 0; i < src.spec.c; ++i) {
        if (mat_mul(F, f, src.left_actions[i]) !=
            mat_mul(F, tgt.left_actions[i], f))
            return false;
        if (mat_mul(F, f, src.right_actions[i]) !=
            mat_mul(F, tgt.right_actions[i], f))
            return false;
    }
    return inverse(F, f).has_value();
}

std::vector<uint32_t> monomial_apply(const ModuleRep& m, uint32_t mono,
                                     const std::vector<uint32_t>& v) {
    Monomial exps = m.spec.monomial_exponents(mono);
    std::vector<uint32_t> out = v;
    const Fp& F = m.spec.fp();
    for (uint32_t i = m.spec.c; i-- > 0;)
        for (uint32_t e = 0; e < exps[i]; ++e)
            out = mat_apply(F, m.actions[i], out);
    return out;
}

Mat monomial_orbit(const ModuleRep& m, const std::vector<uint32_t>& v) {
    const AlgebraSpec& spec = m.spec;
    const Fp& F = spec.fp();
    Mat orbit(m.dim, spec.dim);
    std::vector<std::vector<uint32_t>> table(spec.dim);
    table[0] = v;
    for (uint32_t idx = 1; idx < spec.dim; ++idx) {
        Monomial exps = spec.monomial_exponents(idx);
        uint32_t first = 0;
        while (exps[first] == 0) ++first;
        // x^e = x_{first} * x^{e - delta_first} exactly: no q factor is
        // picked up because all earlier exponents vanish.
        exps[first] -= 1;
        uint32_t parent = spec.monomial_index(exps);
        table[idx] = mat_apply(F, m.actions[first], table[parent]);
    }
    for (uint32_t idx = 0; idx < spec.dim; ++idx)
        for (std::size_t r = 0; r < m.dim; ++r) orbit(r, idx) = table[idx][r];
    return orbit;
}

SubspaceBasis action_closure(const ModuleRep& m, const Mat& seed_rows) {
    const Fp& F = m.spec.fp();
    SubspaceBasis basis = row_space_basis(F, seed_rows);
    while (true) {
        Mat stacked(basis.dim() * (1 + m.spec.c), m.dim);
        for (std::size_t s = 0; s < basis.dim(); ++s) {
            stacked.set_row(s, basis.rows.row(s));
            for (uint32_t i = 0; i < m.spec.c; ++i)
                stacked.set_row(basis.dim() * (i + 1) + s,
                                mat_apply(F, m.actions[i], basis.rows.row(s)));
        }
        SubspaceBasis next = row_space_basis(F, stacked);
        if (next.dim() == basis.dim()) return basis;
        basis = std::move(next);
    }
}

ModuleRep submodule(const ModuleRep& m, const SubspaceBasis& basis) {
    const Fp& F = m.spec.fp();
    std::size_t d = basis.dim();
    std::vector<Mat> actions;
    for (uint32_t i = 0; i < m.spec.c; ++i) {
        Mat x(d, d);
        for (std::size_t s = 0; s < d; ++s) {
            std::vector<uint32_t> img =
                mat_apply(F, m.actions[i], basis.rows.row(s));
            if (!basis.contains(F, img))
                throw PreconditionError("subspace is not action stable");
            std::vector<uint32_t> coords = basis.coords_of(img);
            for (std::size_t t = 0; t < d; ++t) x(t, s) = coords[t];
        }
        actions.push_back(std::move(x));
    }
    ModuleRep r{m.spec, d, std::move(actions)};
    r.validate();
    return r;
}

ModuleRep quotient_module(const ModuleRep& m, const SubspaceBasis& sub) {
    const Fp& F = m.spec.fp();
    std::vector<std::size_t> rep_cols =
        complement_columns(m.dim, sub.coord_cols);
    for (std::size_t s = 0; s < sub.dim(); ++s)
        for (uint32_t i = 0; i < m.spec.c; ++i)
            if (!sub.contains(F, mat_apply(F, m.actions[i], sub.rows.row(s))))
                throw PreconditionError("subspace is not action stable");
    std::size_t d = rep_cols.size();
    std::vector<Mat> actions;
    for (uint32_t i = 0; i < m.spec.c; ++i) {
        Mat x(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            std::vector<uint32_t> v(m.dim, 0);
            v[rep_cols[k]] = 1;
            std::vector<uint32_t> img = project_vector(
                F, sub, rep_cols, mat_apply(F, m.actions[i], std::move(v)));
            for (std::size_t r = 0; r < d; ++r) x(r, k) = img[r];
        }
        actions.push_back(std::move(x));
    }
    ModuleRep r{m.spec, d, std::move(actions)};
    r.validate();
    return r;
}

ModuleMap twisted_tensor_iso(const TensorModule& t,
                             const DiagonalAutomorphism& psi,
                             const ModuleRep& m) {
    ModuleRep target = twist(psi, m);
    Mat f(m.dim, t.module.dim);
    for (std::size_t k = 0; k < t.module.dim; ++k) {
        std::size_t col = t.rep_cols[k];
        std::size_t s = col / m.dim, v = col % m.dim;
        std::vector<uint32_t> unit(m.dim, 0);
        unit[v] = 1;
        std::vector<uint32_t> img = monomial_apply(m, uint32_t(s), unit);
        for (std::size_t r = 0; r < m.dim; ++r) f(r, k) = img[r];
    }
    return ModuleMap{t.module, std::move(target), std::move(f)};
}

ModuleMap proof_twist_map(const AlgebraSpec& spec,
                          const std::vector<uint32_t>& lambda,
                          const std::vector<uint32_t>& mu) {
    const Fp& F = spec.fp();
    DiagonalAutomorphism psi = make_diagonal_automorphism(spec, mu);
    std::vector<uint32_t> mu_inv_lambda(spec.c);
    for (uint32_t i = 0; i < spec.c; ++i)
        mu_inv_lambda[i] = F.mul(F.inv(psi.scalars[i]), lambda[i] % F.p());
    CyclicModule source = cyclic_u_module(spec, mu_inv_lambda);
    CyclicModule target_plain = cyclic_u_module(spec, lambda);
    ModuleRep target = twist(psi, target_plain.module);
    Mat f(target.dim, source.module.dim);
    for (std::size_t s = 0; s < source.module.dim; ++s) {
        AlgebraElement w =
            AlgebraElement::from_dense(spec, source.basis.rows.row(s));
        std::vector<uint32_t> img = apply_automorphism(psi, w).dense();
        if (!target_plain.basis.contains(F, img))
            throw ComputationError(
                "twisted image left the target cyclic module");
        std::vector<uint32_t> coords = target_plain.basis.coords_of(img);
        for (std::size_t t = 0; t < target.dim; ++t) f(t, s) = coords[t];
    }
    return ModuleMap{std::move(source.module), std::move(target), std::move(f)};
}

ModuleRep random_module(const AlgebraSpec& spec, std::size_t max_dim,
                        uint64_t seed) {
    if (max_dim == 0)
        throw PreconditionError("random module needs max_dim >= 1");
    std::mt19937_64 rng(seed);
    const Fp& F = spec.fp();
    auto random_nonzero_vector = [&](std::size_t n) {
        std::vector<uint32_t> v(n, 0);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (rng() % 3 == 0) {
                v[j] = uint32_t(rng() % F.p());
                nonzero |= v[j] != 0;
            }
        }
        if (!nonzero) v[rng() % n] = 1 + uint32_t(rng() % (F.p() - 1));
        return v;
    };
    auto random_lambda = [&] {
        std::vector<uint32_t> l(spec.c, 0);
        while (u_lambda(spec, l).is_zero())
            for (uint32_t i = 0; i < spec.c; ++i) l[i] = uint32_t(rng() % F.p());
        return l;
    };
    for (int attempt = 0; attempt < 64; ++attempt) {
        uint64_t kind = rng() % 4;
        ModuleRep candidate = zero_module(spec);
        switch (kind) {
            case 0:
            case 1: {
                std::size_t rank = 1 + rng() % 2;
                ModuleRep freem = free_module(spec, rank);
                std::size_t nvec = 1 + rng() % 2;
                Mat seeds(nvec, freem.dim);
                for (std::size_t s = 0; s < nvec; ++s)
                    seeds.set_row(s, random_nonzero_vector(freem.dim));
                SubspaceBasis closed = action_closure(freem, seeds);
                candidate = kind == 0 ? submodule(freem, closed)
                                      : quotient_module(freem, closed);
                break;
            }
            case 2: {
                std::vector<uint32_t> scalars(spec.c);
                for (uint32_t i = 0; i < spec.c; ++i)
                    scalars[i] = 1 + uint32_t(rng() % (F.p() - 1));
                candidate =
                    twist(make_diagonal_automorphism(spec, scalars),
                          cyclic_u_module(spec, random_lambda()).module);
                break;
            }
            case 3: {
                candidate = simple_module(spec);
                if (rng() % 2)
                    candidate = direct_sum(candidate, simple_module(spec));
                else
                    candidate = direct_sum(
                        candidate, cyclic_u_module(spec, random_lambda()).module);
                break;
            }
        }
        if (candidate.dim > 0 && candidate.dim <= max_dim) {
            candidate.validate();
            return candidate;
        }
    }
    return simple_module(spec);
}

nlohmann::json spec_to_json(const AlgebraSpec& spec) {
    return nlohmann::json{{"a", spec.a},
                          {"a_bar", spec.field.a_bar},
                          {"c", spec.c},
                          {"p", spec.p()},
                          {"q", spec.q()}};
}

AlgebraSpec spec_from_json(const nlohmann::json& j) {
    AlgebraSpec spec = AlgebraSpec::create(j.at("c").get<uint32_t>(),
                                           j.at("a").get<uint32_t>(),
                                           j.at("p").get<uint32_t>(),
                                           j.at("q").get<uint32_t>());
    if (j.contains("a_bar") && j.at("a_bar").get<uint32_t>() != spec.field.a_bar)
        throw PreconditionError("serialized a_bar disagrees with a and p");
    return spec;
}

namespace {

nlohmann::json actions_to_json(const std::vector<Mat>& actions) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Mat& m : actions) arr.push_back(m.data());
    return arr;
}

std::vector<Mat> actions_from_json(const nlohmann::json& arr, std::size_t dim) {
    std::vector<Mat> actions;
    for (const auto& flat : arr) {
        std::vector<uint32_t> entries = flat.get<std::vector<uint32_t>>();
        if (entries.size() != dim * dim)
            throw PreconditionError("action matrix has wrong size");
        Mat m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = entries[i * dim + j];
        actions.push_back(std::move(m));
    }
    return actions;
}

} // namespace

nlohmann::json ModuleRep::to_json() const {
    return nlohmann::json{{"actions", actions_to_json(actions)},
                          {"dim", dim},
                          {"spec", spec_to_json(spec)}};
}

ModuleRep ModuleRep::from_json(const nlohmann::json& j) {
    AlgebraSpec spec = spec_from_json(j.at("spec"));
    std::size_t dim = j.at("dim").get<std::size_t>();
    ModuleRep m{spec, dim, actions_from_json(j.at("actions"), dim)};
    m.validate();
    return m;
}

nlohmann::json BimoduleRep::to_json() const {
    return nlohmann::json{{"dim", dim},
                          {"left_actions", actions_to_json(left_actions)},
                          {"right_actions", actions_to_json(right_actions)},
                          {"spec", spec_to_json(spec)}};
}

BimoduleRep BimoduleRep::from_json(const nlohmann::json& j) {
    AlgebraSpec spec = spec_from_json(j.at("spec"));
    std::size_t dim = j.at("dim").get<std::size_t>();
    BimoduleRep b{spec, dim, actions_from_json(j.at("left_actions"), dim),
                  actions_from_json(j.at("right_actions"), dim)};
    b.validate();
    return b;
}

} // namespace qci
