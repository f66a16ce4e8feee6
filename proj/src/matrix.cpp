#include "uloc/matrix.hpp"
#include "uloc/errors.hpp"

namespace uloc {

Matrix::Matrix(const Ring* ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), e_(rows * cols, ring->zero()) {}

Matrix Matrix::identity(const Ring* ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring->one();
    return m;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
}

namespace {

void check_same_shape(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw dimension_mismatch("matrix shapes differ");
}

} // namespace

Matrix mat_add(const Matrix& x, const Matrix& y) {
    check_same_shape(x, y);
    Matrix r(x.ring(), x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r.at(i, j) = x.at(i, j) + y.at(i, j);
    return r;
}

Matrix mat_sub(const Matrix& x, const Matrix& y) {
    check_same_shape(x, y);
    Matrix r(x.ring(), x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r.at(i, j) = x.at(i, j) - y.at(i, j);
    return r;
}

Matrix mat_neg(const Matrix& x) {
    Matrix r(x.ring(), x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r.at(i, j) = -x.at(i, j);
    return r;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
    if (x.cols() != y.rows())
        throw dimension_mismatch("matrix product: inner dimensions differ");
    const Ring* ring = x.ring();
    Matrix r(ring, x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            Element acc = ring->zero();
            for (std::size_t k = 0; k < x.cols(); ++k)
                acc = acc + x.at(i, k) * y.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

Matrix star_transpose(const Matrix& x) {
    const Ring* ring = x.ring();
    Matrix r(ring, x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r.at(j, i) = ring->star(x.at(i, j));
    return r;
}

bool mat_invertible(const Matrix& x) {
    try {
        (void)mat_inv(x);
        return true;
    } catch (const singular_matrix&) {
        return false;
    }
}

Matrix mat_inv(const Matrix& x) {
    if (x.rows() != x.cols()) throw dimension_mismatch("mat_inv: not square");
    const Ring* ring = x.ring();
    const auto& fq = ring->residue_field();
    const std::size_t n = x.rows();

    // Gauss-Jordan over the residue field F_q.
    std::vector<std::vector<coeffs>> a(n), id(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i].resize(n);
        id[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = ring->residue(x.at(i, j));
            id[i][j] = i == j ? fq.one() : fq.zero();
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && fq.is_zero(a[piv][col])) ++piv;
        if (piv == n)
            throw singular_matrix("mat_inv: residue image is singular");
        std::swap(a[piv], a[col]);
        std::swap(id[piv], id[col]);
        coeffs pinv = fq.inv(a[col][col]);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = fq.mul(pinv, a[col][j]);
            id[col][j] = fq.mul(pinv, id[col][j]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || fq.is_zero(a[i][col])) continue;
            coeffs c = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = fq.sub(a[i][j], fq.mul(c, a[col][j]));
                id[i][j] = fq.sub(id[i][j], fq.mul(c, id[col][j]));
            }
        }
    }

    // Lift any preimage of the field inverse, then Y <- Y(2 - XY).
    Matrix y(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            y.at(i, j) = ring->lift_residue(id[i][j]);
    int passes = 0;
    for (int e = 1; e < ring->stats().e; e *= 2) ++passes;
    Matrix two = Matrix::identity(ring, n);
    for (std::size_t i = 0; i < n; ++i)
        two.at(i, i) = ring->from_int(2);
    for (int it = 0; it < passes; ++it)
        y = mat_mul(y, mat_sub(two, mat_mul(x, y)));

    Matrix idm = Matrix::identity(ring, n);
    if (!(mat_mul(x, y) == idm) || !(mat_mul(y, x) == idm))
        throw internal_defect("mat_inv: lifted inverse failed exact verification");
    return y;
}

Vector mat_apply(const Matrix& x, const Vector& v) {
    if (x.cols() != v.size())
        throw dimension_mismatch("mat_apply: dimensions differ");
    const Ring* ring = x.ring();
    Vector r;
    r.coords.assign(x.rows(), ring->zero());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        Element acc = ring->zero();
        for (std::size_t k = 0; k < x.cols(); ++k)
            acc = acc + x.at(i, k) * v[k];
        r[i] = acc;
    }
    return r;
}

Vector vec_add(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw dimension_mismatch("vec_add");
    Vector r = u;
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
    return r;
}

Vector vec_sub(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw dimension_mismatch("vec_sub");
    Vector r = u;
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
    return r;
}

Vector vec_scale(const Vector& v, const Element& a) {
    Vector r = v;
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * a;
    return r;
}

Vector standard_vector(const Ring* ring, std::size_t n, std::size_t i) {
    Vector r;
    r.coords.assign(n, ring->zero());
    r[i] = ring->one();
    return r;
}

Matrix columns_to_matrix(const std::vector<Vector>& cols) {
    if (cols.empty()) throw dimension_mismatch("columns_to_matrix: empty");
    const Ring* ring = cols[0][0].ring;
    Matrix r(ring, cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != cols[0].size())
            throw dimension_mismatch("columns_to_matrix: ragged columns");
        for (std::size_t i = 0; i < cols[j].size(); ++i) r.at(i, j) = cols[j][i];
    }
    return r;
}

Vector column_of(const Matrix& x, std::size_t j) {
    Vector r;
    r.coords.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) r.coords.push_back(x.at(i, j));
    return r;
}

FormSpace::FormSpace(std::shared_ptr<const Ring> ring, Matrix gram)
    : ring_(std::move(ring)), gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
        throw dimension_mismatch("FormSpace: Gram matrix must be square, nonempty");
    if (!(star_transpose(gram_) == mat_neg(gram_)))
        throw not_skew_hermitian("FormSpace: Gram matrix is not skew-hermitian");
    try {
        (void)mat_inv(gram_);
    } catch (const singular_matrix&) {
        throw degenerate_form("FormSpace: Gram matrix is not invertible");
    }
}

Element form_eval(const FormSpace& space, const Vector& u, const Vector& v) {
    if (u.size() != space.rank() || v.size() != space.rank())
        throw dimension_mismatch("form_eval: vector rank differs from space");
    const Ring& ring = space.ring();
    Element acc = ring.zero();
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (ring.is_zero(u[i])) continue;
        Element ui = ring.star(u[i]);
        for (std::size_t j = 0; j < v.size(); ++j) {
            const Element& jij = space.gram().at(i, j);
            if (ring.is_zero(jij) || ring.is_zero(v[j])) continue;
            acc = acc + ui * jij * v[j];
        }
    }
    return acc;
}

Matrix standard_j(const Ring* ring, std::size_t m) {
    Matrix j(ring, 2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        j.at(i, m + i) = ring->one();
        j.at(m + i, i) = ring->from_int(-1);
    }
    return j;
}

FormSpace standard_gram(std::shared_ptr<const Ring> ring, std::size_t m) {
    if (m < 1) throw dimension_mismatch("standard_gram: m must be >= 1");
    Matrix j = standard_j(ring.get(), m);
    return FormSpace(std::move(ring), std::move(j));
}

bool is_unitary(const FormSpace& space, const Matrix& x) {
    if (x.rows() != space.rank() || x.cols() != space.rank())
        throw dimension_mismatch("is_unitary: matrix rank differs from space");
    return mat_mul(star_transpose(x), mat_mul(space.gram(), x)) == space.gram();
}

Matrix gram_of(const FormSpace& space, const std::vector<Vector>& vectors) {
    const Ring* ring = space.ring_ptr().get();
    Matrix m(ring, vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors.size(); ++j)
            m.at(i, j) = form_eval(space, vectors[i], vectors[j]);
    return m;
}

} // namespace uloc
