#ifndef ULOC_MATRIX_HPP
#define ULOC_MATRIX_HPP

#include "uloc/errors.hpp"
#include "uloc/ring.hpp"

#include <memory>
#include <vector>

namespace uloc {

// Rectangular matrices over a (possibly noncommutative) ring. Convention,
// fixed project-wide: modules are right A-modules, scalars act on the right
// of vectors, and the form h is *-linear in the first argument and linear in
// the second.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Ring* ring, std::size_t rows, std::size_t cols);

    static Matrix identity(const Ring* ring, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Ring* ring() const { return ring_; }

    Element& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Element& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const;

private:
    const Ring* ring_ = nullptr;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> e_;
};

// A coordinate column in a fixed ambient basis.
struct Vector {
    std::vector<Element> coords;

    std::size_t size() const { return coords.size(); }
    Element& operator[](std::size_t i) { return coords[i]; }
    const Element& operator[](std::size_t i) const { return coords[i]; }
    bool operator==(const Vector& other) const { return coords == other.coords; }
};

Matrix mat_add(const Matrix& x, const Matrix& y);
Matrix mat_sub(const Matrix& x, const Matrix& y);
Matrix mat_mul(const Matrix& x, const Matrix& y);
Matrix mat_neg(const Matrix& x);
Matrix star_transpose(const Matrix& x);

// Two-sided inverse: invert the residue image over F_q by Gaussian
// elimination, lift, then Newton-iterate Y <- Y(2 - XY); the result is
// verified exactly before returning. Throws singular_matrix.
Matrix mat_inv(const Matrix& x);
bool mat_invertible(const Matrix& x);

Vector mat_apply(const Matrix& x, const Vector& v);          // x * v
Vector vec_add(const Vector& u, const Vector& v);
Vector vec_sub(const Vector& u, const Vector& v);
Vector vec_scale(const Vector& v, const Element& a);          // v * a
Vector standard_vector(const Ring* ring, std::size_t n, std::size_t i);
Matrix columns_to_matrix(const std::vector<Vector>& cols);
Vector column_of(const Matrix& x, std::size_t j);

// A free rank-n module with a non-degenerate skew-hermitian Gram matrix J.
// Both invariants (star_transpose(J) = -J and J invertible) are verified at
// construction.
class FormSpace {
public:
    FormSpace(std::shared_ptr<const Ring> ring, Matrix gram);

    const Ring& ring() const { return *ring_; }
    std::shared_ptr<const Ring> ring_ptr() const { return ring_; }
    std::size_t rank() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }

private:
    std::shared_ptr<const Ring> ring_;
    Matrix gram_;
};

struct not_skew_hermitian : dimension_mismatch {
    using dimension_mismatch::dimension_mismatch;
};
struct degenerate_form : singular_matrix {
    using singular_matrix::singular_matrix;
};

// h(u,v) = sum_i,j u_i^* J_ij v_j
Element form_eval(const FormSpace& space, const Vector& u, const Vector& v);

// Rank-2m space with the standard block Gram matrix ((0, 1), (-1, 0)).
FormSpace standard_gram(std::shared_ptr<const Ring> ring, std::size_t m);
Matrix standard_j(const Ring* ring, std::size_t m);

// X^* J X = J, exactly.
bool is_unitary(const FormSpace& space, const Matrix& x);

Matrix gram_of(const FormSpace& space, const std::vector<Vector>& vectors);

} // namespace uloc

#endif
