#include "qci/matrix.hpp"

#include <algorithm>

namespace qci {

Mat mat_add(const Fp& F, const Mat& a, const Mat& b) {
    Mat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = F.add(a(i, j), b(i, j));
    return r;
}

Mat mat_sub(const Fp& F, const Mat& a, const Mat& b) {
    Mat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = F.sub(a(i, j), b(i, j));
    return r;
}

Mat mat_scale(const Fp& F, uint32_t s, const Mat& a) {
    Mat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = F.mul(s, a(i, j));
    return r;
}

Mat mat_mul(const Fp& F, const Mat& a, const Mat& b) {
    Mat r(a.rows(), b.cols());
    const uint64_t p = F.p();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            uint64_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                uint64_t acc = r(i, j) + (aik * b(k, j)) % p;
                r(i, j) = uint32_t(acc >= p ? acc - p : acc);
            }
        }
    }
    return r;
}

Mat mat_pow(const Fp& F, const Mat& a, uint32_t e) {
    Mat r = Mat::identity(a.rows());
    Mat base = a;
    while (e) {
        if (e & 1) r = mat_mul(F, r, base);
        base = mat_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

Mat transpose(const Mat& a) {
    Mat r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

std::vector<uint32_t> mat_apply(const Fp& F, const Mat& a,
                                const std::vector<uint32_t>& v) {
    std::vector<uint32_t> r(a.rows(), 0);
    const uint64_t p = F.p();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            acc += uint64_t(a(i, j)) * v[j] % p;
            if (acc >= p) acc -= p;
        }
        r[i] = uint32_t(acc);
    }
    return r;
}

Rref rref(const Fp& F, Mat m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t sel = r;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(r, j), m(sel, j));
        uint32_t piv_inv = F.inv(m(r, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m(r, j) = F.mul(piv_inv, m(r, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            uint32_t f = m(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        pivots.push_back(col);
        ++r;
    }
    Mat trimmed(r, m.cols());
    for (std::size_t i = 0; i < r; ++i) trimmed.set_row(i, m.row(i));
    return Rref{std::move(trimmed), std::move(pivots)};
}

std::size_t rank(const Fp& F, const Mat& m) { return rref(F, m).pivots.size(); }

std::optional<Mat> inverse(const Fp& F, const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Rref red = rref(F, aug);
    if (red.pivots.size() != n || red.pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.m(i, n + j);
    return inv;
}

std::vector<uint32_t> SubspaceBasis::coords_of(
    const std::vector<uint32_t>& v) const {
    std::vector<uint32_t> c(dim());
    for (std::size_t s = 0; s < dim(); ++s) c[s] = v[coord_cols[s]];
    return c;
}

std::vector<uint32_t> SubspaceBasis::reduce(const Fp& F,
                                            std::vector<uint32_t> v) const {
    for (std::size_t s = 0; s < dim(); ++s) {
        uint32_t c = v[coord_cols[s]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient(); ++j)
            v[j] = F.sub(v[j], F.mul(c, rows(s, j)));
    }
    return v;
}

bool SubspaceBasis::contains(const Fp& F,
                             const std::vector<uint32_t>& v) const {
    std::vector<uint32_t> rem = reduce(F, v);
    return std::all_of(rem.begin(), rem.end(), [](uint32_t x) { return x == 0; });
}

SubspaceBasis row_space_basis(const Fp& F, const Mat& spanning_rows) {
    Rref red = rref(F, spanning_rows);
    return SubspaceBasis{std::move(red.m), std::move(red.pivots)};
}

SubspaceBasis kernel_space_basis(const Fp& F, const Mat& a) {
    Rref red = rref(F, a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat rows(free_cols.size(), a.cols());
    for (std::size_t s = 0; s < free_cols.size(); ++s) {
        std::size_t f = free_cols[s];
        rows(s, f) = 1;
        for (std::size_t r = 0; r < red.pivots.size(); ++r)
            rows(s, red.pivots[r]) = F.neg(red.m(r, f));
    }
    return SubspaceBasis{std::move(rows), std::move(free_cols)};
}

} // namespace qci
