#pragma once

#include <map>
#include <string>
#include <vector>

#include "qci/field.hpp"
#include "qci/matrix.hpp"

namespace qci {

/// Exponent tuple (e_1, ..., e_c) with 0 <= e_i < a, standing for the
/// normal-form monomial x_1^{e_1} ... x_c^{e_c}.
using Monomial = std::vector<uint32_t>;

/// The algebra on generators x_1, ..., x_c with relations x_i^a = 0 and
/// x_i x_j = q x_j x_i for i < j. Its normal-form monomial basis has a^c
/// elements, indexed lexicographically with e_1 most significant.
struct AlgebraSpec {
    FieldSpec field;
    uint32_t c = 0;
    uint32_t a = 0;
    uint32_t dim = 0; // a^c

    /// Builds the field (deriving a_bar and q) and the spec. Throws
    /// FieldUnsuitableError when no usable q exists, in particular when
    /// a_bar = 1 would degenerate the commutation parameter.
    static AlgebraSpec create(uint32_t c, uint32_t a, uint32_t p,
                              std::optional<uint32_t> q_override = std::nullopt);

    const Fp& fp() const { return field.field; }
    uint32_t p() const { return field.p(); }
    uint32_t q() const { return field.q; }

    uint32_t monomial_index(const Monomial& exps) const;
    Monomial monomial_exponents(uint32_t index) const;

    bool operator==(const AlgebraSpec& other) const = default;
};

/// Element as a sparse map from monomial index to nonzero coefficient.
/// Zero coefficients are never stored, so equality is map equality.
class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraSpec spec) : spec_(std::move(spec)) {}

    const AlgebraSpec& spec() const { return spec_; }
    const std::map<uint32_t, uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void set_term(uint32_t mono, uint32_t coeff);
    void add_term(uint32_t mono, uint32_t coeff);
    uint32_t coeff(uint32_t mono) const;

    /// Coefficient vector over all a^c monomial indices.
    std::vector<uint32_t> dense() const;
    static AlgebraElement from_dense(const AlgebraSpec& spec,
                                     const std::vector<uint32_t>& coeffs);

    bool operator==(const AlgebraElement& other) const {
        return spec_ == other.spec_ && terms_ == other.terms_;
    }

private:
    AlgebraSpec spec_;
    std::map<uint32_t, uint32_t> terms_;
};

AlgebraElement zero_element(const AlgebraSpec& spec);
AlgebraElement one_element(const AlgebraSpec& spec);
AlgebraElement monomial_element(const AlgebraSpec& spec, uint32_t mono);
/// x_i for i in [0, c).
AlgebraElement generator(const AlgebraSpec& spec, uint32_t i);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(uint32_t s, const AlgebraElement& x);

/// Product in normal form: x^d * x^e = q^{-S} x^{d+e} with
/// S = sum_i e_i * sum_{j>i} d_j, and zero whenever some d_i + e_i >= a.
/// Throws SpecMismatchError on different specs.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement element_pow(const AlgebraElement& x, uint32_t e);

/// sum_i lambda_i x_i.
AlgebraElement u_lambda(const AlgebraSpec& spec,
                        const std::vector<uint32_t>& lambda);

/// All a^c - 1 monomials with some positive exponent, in index order.
std::vector<Monomial> radical_basis(const AlgebraSpec& spec);

/// Canonical text form: terms in ascending monomial order, each
/// "coeff*x1^e1*..." with zero exponents omitted and "^1" elided.
std::string to_string(const AlgebraElement& x);

/// x_i -> scalars[i] * x_i with every scalar nonzero.
struct DiagonalAutomorphism {
    std::vector<uint32_t> scalars;
};

DiagonalAutomorphism make_diagonal_automorphism(const AlgebraSpec& spec,
                                                std::vector<uint32_t> scalars);
DiagonalAutomorphism identity_automorphism(const AlgebraSpec& spec);
DiagonalAutomorphism compose(const Fp& F, const DiagonalAutomorphism& psi,
                             const DiagonalAutomorphism& phi);
DiagonalAutomorphism inverse_automorphism(const Fp& F,
                                          const DiagonalAutomorphism& psi);

/// On a monomial with exponents e the coefficient picks up
/// prod_i scalars[i]^{e_i}.
AlgebraElement apply_automorphism(const DiagonalAutomorphism& psi,
                                  const AlgebraElement& x);

/// Endomorphism given by arbitrary generator images; the factory checks
/// that the images satisfy the defining relations and that the induced
/// linear map on the algebra is invertible.
struct GeneralAutomorphism {
    std::vector<AlgebraElement> generator_images;
};

GeneralAutomorphism make_general_automorphism(
    const AlgebraSpec& spec, std::vector<AlgebraElement> images);
AlgebraElement apply_general(const GeneralAutomorphism& psi,
                             const AlgebraElement& x);

} // namespace qci
