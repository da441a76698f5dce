#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "qci/algebra.hpp"
#include "qci/matrix.hpp"

namespace qci {

/// A finite dimensional left module: c action matrices X_1, ..., X_c on
/// F_p^dim satisfying X_i^a = 0 and X_i X_j = q X_j X_i for i < j.
/// Matrices act on column vectors from the left.
struct ModuleRep {
    AlgebraSpec spec;
    std::size_t dim = 0;
    std::vector<Mat> actions;

    /// Checks the defining relations; throws PreconditionError on failure.
    void validate() const;

    nlohmann::json to_json() const;
    static ModuleRep from_json(const nlohmann::json& j);

    bool operator==(const ModuleRep& other) const = default;
};

/// Left and right actions on the same space. Right actions are the
/// matrices of v -> v * x_i, so the right action of x_i x_j is R_j R_i;
/// the relations they satisfy are R_i^a = 0 and R_j R_i = q R_i R_j for
/// i < j, and every L_i commutes with every R_j. This fixes the one
/// order-sensitive convention of the whole build.
struct BimoduleRep {
    AlgebraSpec spec;
    std::size_t dim = 0;
    std::vector<Mat> left_actions;
    std::vector<Mat> right_actions;

    void validate() const;

    /// Forgets the right action.
    ModuleRep left_module() const { return ModuleRep{spec, dim, left_actions}; }

    nlohmann::json to_json() const;
    static BimoduleRep from_json(const nlohmann::json& j);

    bool operator==(const BimoduleRep& other) const = default;
};

/// A linear map carried together with its endpoints; matrix is
/// (target.dim x source.dim).
struct ModuleMap {
    ModuleRep source;
    ModuleRep target;
    Mat matrix;
};

bool check_intertwines(const ModuleMap& f);
/// True iff the matrix is invertible and intertwines all c actions.
bool check_isomorphism_via_map(const ModuleMap& f);

/// Left regular representation on the monomial basis, `rank` copies;
/// basis index = copy * a^c + monomial index.
ModuleRep free_module(const AlgebraSpec& spec, std::size_t rank);
/// The one dimensional module with all generators acting by zero.
ModuleRep simple_module(const AlgebraSpec& spec);
ModuleRep zero_module(const AlgebraSpec& spec);
ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);

/// A cyclic submodule of the regular module together with the echelon
/// basis it was cut out with (rows are elements of the algebra in
/// monomial coordinates).
struct CyclicModule {
    ModuleRep module;
    SubspaceBasis basis;
    AlgebraElement generator;
};

/// The submodule A * u_lambda of the regular module: row-reduced span of
/// {m * u_lambda : m monomial}, with the left action restricted to it.
/// Throws ZeroLambdaError when lambda vanishes.
CyclicModule cyclic_u_module(const AlgebraSpec& spec,
                             const std::vector<uint32_t>& lambda);

/// Same space, actions scaled: X_i -> scalars[i] * X_i.
ModuleRep twist(const DiagonalAutomorphism& psi, const ModuleRep& m);

/// Underlying space A; x_i acts on the left by multiplication with
/// scalars[i] * x_i and on the right by plain right multiplication.
BimoduleRep twisted_bimodule(const DiagonalAutomorphism& psi,
                             const AlgebraSpec& spec);
/// The twisted bimodule of the identity.
BimoduleRep regular_bimodule(const AlgebraSpec& spec);

/// B (x)_A M: the quotient of the product space by the span of
/// {b * x_i (x) m - b (x) x_i * m}, with the left action induced from B.
/// Product-space index = b_index * dim(M) + m_index; the quotient basis
/// consists of the classes of the unit vectors at `rep_cols` (the non-pivot
/// columns of the row-reduced relation span, ascending).
struct TensorModule {
    ModuleRep module;
    std::vector<std::size_t> rep_cols;
    SubspaceBasis relations;

    /// Image of a product-space vector in quotient coordinates.
    std::vector<uint32_t> project(const Fp& F, std::vector<uint32_t> v) const;
};

TensorModule tensor_bimodule_module(const BimoduleRep& b, const ModuleRep& m);

/// B1 (x)_A B2 with the left action from B1 and the right action from B2.
struct TensorBimodule {
    BimoduleRep bimodule;
    std::vector<std::size_t> rep_cols;
    SubspaceBasis relations;
};

TensorBimodule tensor_bimodules(const BimoduleRep& b1, const BimoduleRep& b2);

bool check_bimodule_isomorphism(const BimoduleRep& src, const BimoduleRep& tgt,
                                const Mat& f);

/// Applies the normal-form monomial of the given index to v through the
/// module's actions (x_c factors first).
std::vector<uint32_t> monomial_apply(const ModuleRep& m, uint32_t mono,
                                     const std::vector<uint32_t>& v);
/// Columns = monomial_apply(m, e, v) for every monomial index e.
Mat monomial_orbit(const ModuleRep& m, const std::vector<uint32_t>& v);

/// Smallest action-stable subspace containing the rows.
SubspaceBasis action_closure(const ModuleRep& m, const Mat& seed_rows);
/// Restriction of the actions to an action-stable subspace.
ModuleRep submodule(const ModuleRep& m, const SubspaceBasis& basis);
/// Induced actions on the complement coordinates of an action-stable
/// subspace in reduced echelon form.
ModuleRep quotient_module(const ModuleRep& m, const SubspaceBasis& sub);

/// The map t.module -> twist(psi, m) sending the class of b (x) v to b
/// acting on v through m; t must come from twisted_bimodule(psi) (x) m.
ModuleMap twisted_tensor_iso(const TensorModule& t,
                             const DiagonalAutomorphism& psi,
                             const ModuleRep& m);

/// The map A u_{mu^{-1} lambda} -> twist(psi_mu, A u_lambda) obtained by
/// applying psi_mu to the elements of the source.
ModuleMap proof_twist_map(const AlgebraSpec& spec,
                          const std::vector<uint32_t>& lambda,
                          const std::vector<uint32_t>& mu);

/// Seed-deterministic valid module of dimension in (0, max_dim], built
/// from submodules, quotients, twists of cyclic modules and direct sums.
ModuleRep random_module(const AlgebraSpec& spec, std::size_t max_dim,
                        uint64_t seed);

nlohmann::json spec_to_json(const AlgebraSpec& spec);
AlgebraSpec spec_from_json(const nlohmann::json& j);

} // namespace qci
