#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qci/field.hpp"

namespace qci {

/// Dense row-major matrix of F_p residues. The field is passed into each
/// operation; matrices carry only their entries.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    uint32_t operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }
    uint32_t& operator()(std::size_t i, std::size_t j) {
        return a_[i * cols_ + j];
    }

    bool is_zero() const {
        for (uint32_t v : a_)
            if (v != 0) return false;
        return true;
    }

    std::vector<uint32_t> row(std::size_t i) const {
        return {a_.begin() + long(i * cols_), a_.begin() + long((i + 1) * cols_)};
    }
    std::vector<uint32_t> col(std::size_t j) const {
        std::vector<uint32_t> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_row(std::size_t i, const std::vector<uint32_t>& r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    const std::vector<uint32_t>& data() const { return a_; }

    bool operator==(const Mat& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

Mat mat_add(const Fp& F, const Mat& a, const Mat& b);
Mat mat_sub(const Fp& F, const Mat& a, const Mat& b);
Mat mat_scale(const Fp& F, uint32_t s, const Mat& a);
Mat mat_mul(const Fp& F, const Mat& a, const Mat& b);
Mat mat_pow(const Fp& F, const Mat& a, uint32_t e);
Mat transpose(const Mat& a);
std::vector<uint32_t> mat_apply(const Fp& F, const Mat& a,
                                const std::vector<uint32_t>& v);

struct Rref {
    Mat m;                            // zero rows trimmed
    std::vector<std::size_t> pivots;  // pivot column per row, ascending
};

/// Reduced row echelon form with partial pivoting on position: for each
/// column left to right, the first row with a nonzero entry becomes the
/// pivot row. Deterministic for identical input.
Rref rref(const Fp& F, Mat m);

std::size_t rank(const Fp& F, const Mat& m);

std::optional<Mat> inverse(const Fp& F, const Mat& m);

/// A basis of a subspace of F_p^n whose rows satisfy
/// rows(r, coord_cols[s]) == (r == s ? 1 : 0); expressing a member of the
/// span in this basis is then a plain read-off at the coordinate columns.
struct SubspaceBasis {
    Mat rows;
    std::vector<std::size_t> coord_cols;

    std::size_t dim() const { return rows.rows(); }
    std::size_t ambient() const { return rows.cols(); }

    std::vector<uint32_t> coords_of(const std::vector<uint32_t>& v) const;
    /// v minus its projection onto the span; zero iff v lies in the span.
    std::vector<uint32_t> reduce(const Fp& F, std::vector<uint32_t> v) const;
    bool contains(const Fp& F, const std::vector<uint32_t>& v) const;
};

/// Row space of the given spanning rows, in reduced echelon form
/// (coordinate columns = pivot columns).
SubspaceBasis row_space_basis(const Fp& F, const Mat& spanning_rows);

/// Basis of {v : a v = 0}, one row per free column of rref(a) in ascending
/// order, each with a unit entry at its free column.
SubspaceBasis kernel_space_basis(const Fp& F, const Mat& a);

} // namespace qci
