#include "qci/algebra.hpp"

#include <algorithm>

namespace qci {

namespace {

constexpr uint64_t kDimensionCap = 1u << 20;

void check_same_spec(const AlgebraSpec& x, const AlgebraSpec& y) {
    if (!(x == y))
        throw SpecMismatchError("operands belong to different algebras");
}

} // namespace

AlgebraSpec AlgebraSpec::create(uint32_t c, uint32_t a, uint32_t p,
                                std::optional<uint32_t> q_override) {
    if (c < 2) throw PreconditionError("generator count c must be >= 2");
    FieldSpec field = [&] {
        try {
            return FieldSpec::create(p, a, q_override);
        } catch (const NoSuchRootError& e) {
            throw FieldUnsuitableError(e.what());
        }
    }();
    if (field.a_bar < 2)
        throw FieldUnsuitableError(
            "a_bar = 1 degenerates the commutation parameter q to 1; "
            "choose p with a / gcd(a, p) >= 2");
    uint64_t dim = 1;
    for (uint32_t i = 0; i < c; ++i) {
        dim *= a;
        if (dim > kDimensionCap)
            throw PreconditionError("algebra dimension a^c exceeds the cap");
    }
    return AlgebraSpec{field, c, a, uint32_t(dim)};
}

uint32_t AlgebraSpec::monomial_index(const Monomial& exps) const {
    uint32_t idx = 0;
    for (uint32_t i = 0; i < c; ++i) idx = idx * a + exps[i];
    return idx;
}

Monomial AlgebraSpec::monomial_exponents(uint32_t index) const {
    Monomial exps(c);
    for (uint32_t i = c; i-- > 0;) {
        exps[i] = index % a;
        index /= a;
    }
    return exps;
}

void AlgebraElement::set_term(uint32_t mono, uint32_t coeff) {
    if (coeff == 0)
        terms_.erase(mono);
    else
        terms_[mono] = coeff;
}

void AlgebraElement::add_term(uint32_t mono, uint32_t coeff) {
    set_term(mono, spec_.fp().add(this->coeff(mono), coeff % spec_.p()));
}

uint32_t AlgebraElement::coeff(uint32_t mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? 0 : it->second;
}

std::vector<uint32_t> AlgebraElement::dense() const {
    std::vector<uint32_t> v(spec_.dim, 0);
    for (auto [m, cf] : terms_) v[m] = cf;
    return v;
}

AlgebraElement AlgebraElement::from_dense(const AlgebraSpec& spec,
                                          const std::vector<uint32_t>& coeffs) {
    AlgebraElement x(spec);
    for (uint32_t m = 0; m < coeffs.size(); ++m)
        x.set_term(m, coeffs[m] % spec.p());
    return x;
}

AlgebraElement zero_element(const AlgebraSpec& spec) {
    return AlgebraElement(spec);
}

AlgebraElement one_element(const AlgebraSpec& spec) {
    AlgebraElement x(spec);
    x.set_term(0, 1);
    return x;
}

AlgebraElement monomial_element(const AlgebraSpec& spec, uint32_t mono) {
    AlgebraElement x(spec);
    x.set_term(mono, 1);
    return x;
}

AlgebraElement generator(const AlgebraSpec& spec, uint32_t i) {
    Monomial exps(spec.c, 0);
    exps[i] = 1;
    return monomial_element(spec, spec.monomial_index(exps));
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_spec(x.spec(), y.spec());
    AlgebraElement r = x;
    for (auto [m, cf] : y.terms()) r.add_term(m, cf);
    return r;
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_spec(x.spec(), y.spec());
    AlgebraElement r = x;
    const Fp& F = x.spec().fp();
    for (auto [m, cf] : y.terms()) r.add_term(m, F.neg(cf));
    return r;
}

AlgebraElement scale(uint32_t s, const AlgebraElement& x) {
    AlgebraElement r(x.spec());
    const Fp& F = x.spec().fp();
    for (auto [m, cf] : x.terms()) r.set_term(m, F.mul(s % F.p(), cf));
    return r;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_spec(x.spec(), y.spec());
    const AlgebraSpec& spec = x.spec();
    const Fp& F = spec.fp();
    const uint32_t q_inv = F.inv(spec.q());
    AlgebraElement r(spec);
    for (auto [mx, cx] : x.terms()) {
        Monomial d = spec.monomial_exponents(mx);
        // suffix_d[i] = d_{i+1} + ... + d_c, the count of left-factor
        // generators a right-factor x_i must pass when moved into place.
        std::vector<uint64_t> suffix_d(spec.c + 1, 0);
        for (uint32_t i = spec.c; i-- > 0;)
            suffix_d[i] = suffix_d[i + 1] + d[i];
        for (auto [my, cy] : y.terms()) {
            Monomial e = spec.monomial_exponents(my);
            Monomial sum(spec.c);
            bool truncated = false;
            uint64_t swaps = 0;
            for (uint32_t i = 0; i < spec.c; ++i) {
                sum[i] = d[i] + e[i];
                if (sum[i] >= spec.a) {
                    truncated = true;
                    break;
                }
                swaps += uint64_t(e[i]) * suffix_d[i + 1];
            }
            if (truncated) continue;
            uint32_t cf = F.mul(cx, cy);
            cf = F.mul(cf, F.pow(q_inv, swaps));
            r.add_term(spec.monomial_index(sum), cf);
        }
    }
    return r;
}

AlgebraElement element_pow(const AlgebraElement& x, uint32_t e) {
    AlgebraElement r = one_element(x.spec());
    for (uint32_t i = 0; i < e; ++i) r = multiply(r, x);
    return r;
}

AlgebraElement u_lambda(const AlgebraSpec& spec,
                        const std::vector<uint32_t>& lambda) {
    if (lambda.size() != spec.c)
        throw PreconditionError("lambda must have c components");
    AlgebraElement r(spec);
    for (uint32_t i = 0; i < spec.c; ++i) {
        Monomial exps(spec.c, 0);
        exps[i] = 1;
        r.add_term(spec.monomial_index(exps), lambda[i] % spec.p());
    }
    return r;
}

std::vector<Monomial> radical_basis(const AlgebraSpec& spec) {
    std::vector<Monomial> basis;
    basis.reserve(spec.dim - 1);
    for (uint32_t m = 1; m < spec.dim; ++m)
        basis.push_back(spec.monomial_exponents(m));
    return basis;
}

std::string to_string(const AlgebraElement& x) {
    if (x.is_zero()) return "0";
    const AlgebraSpec& spec = x.spec();
    std::string out;
    for (auto [m, cf] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += std::to_string(cf);
        Monomial exps = spec.monomial_exponents(m);
        for (uint32_t i = 0; i < spec.c; ++i) {
            if (exps[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
        }
    }
    return out;
}

DiagonalAutomorphism make_diagonal_automorphism(const AlgebraSpec& spec,
                                                std::vector<uint32_t> scalars) {
    if (scalars.size() != spec.c)
        throw PreconditionError("automorphism needs one scalar per generator");
    for (uint32_t& s : scalars) {
        s %= spec.p();
        if (s == 0)
            throw PreconditionError("diagonal automorphism scalars must be nonzero");
    }
    return DiagonalAutomorphism{std::move(scalars)};
}

DiagonalAutomorphism identity_automorphism(const AlgebraSpec& spec) {
    return DiagonalAutomorphism{std::vector<uint32_t>(spec.c, 1)};
}

DiagonalAutomorphism compose(const Fp& F, const DiagonalAutomorphism& psi,
                             const DiagonalAutomorphism& phi) {
    DiagonalAutomorphism r = psi;
    for (std::size_t i = 0; i < r.scalars.size(); ++i)
        r.scalars[i] = F.mul(psi.scalars[i], phi.scalars[i]);
    return r;
}

DiagonalAutomorphism inverse_automorphism(const Fp& F,
                                          const DiagonalAutomorphism& psi) {
    DiagonalAutomorphism r = psi;
    for (uint32_t& s : r.scalars) s = F.inv(s);
    return r;
}

AlgebraElement apply_automorphism(const DiagonalAutomorphism& psi,
                                  const AlgebraElement& x) {
    const AlgebraSpec& spec = x.spec();
    if (psi.scalars.size() != spec.c)
        throw PreconditionError("automorphism scalar count does not match c");
    const Fp& F = spec.fp();
    AlgebraElement r(spec);
    for (auto [m, cf] : x.terms()) {
        Monomial exps = spec.monomial_exponents(m);
        uint32_t factor = 1;
        for (uint32_t i = 0; i < spec.c; ++i)
            factor = F.mul(factor, F.pow(psi.scalars[i], exps[i]));
        r.set_term(m, F.mul(factor, cf));
    }
    return r;
}

AlgebraElement apply_general(const GeneralAutomorphism& psi,
                             const AlgebraElement& x) {
    const AlgebraSpec& spec = x.spec();
    AlgebraElement r(spec);
    for (auto [m, cf] : x.terms()) {
        Monomial exps = spec.monomial_exponents(m);
        AlgebraElement image = one_element(spec);
        for (uint32_t i = 0; i < spec.c; ++i)
            for (uint32_t e = 0; e < exps[i]; ++e)
                image = multiply(image, psi.generator_images[i]);
        r = add(r, scale(cf, image));
    }
    return r;
}

GeneralAutomorphism make_general_automorphism(
    const AlgebraSpec& spec, std::vector<AlgebraElement> images) {
    if (images.size() != spec.c)
        throw PreconditionError("automorphism needs one image per generator");
    for (const AlgebraElement& img : images) check_same_spec(spec, img.spec());
    const Fp& F = spec.fp();
    for (uint32_t i = 0; i < spec.c; ++i) {
        if (!element_pow(images[i], spec.a).is_zero())
            throw PreconditionError(
                "generator image " + std::to_string(i + 1) +
                " violates the truncation relation x_i^a = 0");
        for (uint32_t j = i + 1; j < spec.c; ++j) {
            AlgebraElement lhs = multiply(images[i], images[j]);
            AlgebraElement rhs = scale(spec.q(), multiply(images[j], images[i]));
            if (!(lhs == rhs))
                throw PreconditionError(
                    "generator images violate the commutation relation for (" +
                    std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
        }
    }
    GeneralAutomorphism psi{std::move(images)};
    Mat map(spec.dim, spec.dim);
    for (uint32_t m = 0; m < spec.dim; ++m) {
        std::vector<uint32_t> col =
            apply_general(psi, monomial_element(spec, m)).dense();
        for (uint32_t r = 0; r < spec.dim; ++r) map(r, m) = col[r];
    }
    if (!inverse(F, map))
        throw PreconditionError("generator images define a non-invertible map");
    return psi;
}

} // namespace qci
