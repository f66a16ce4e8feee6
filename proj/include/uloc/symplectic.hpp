#ifndef ULOC_SYMPLECTIC_HPP
#define ULOC_SYMPLECTIC_HPP

#include "uloc/errors.hpp"
#include "uloc/matrix.hpp"

#include <vector>

namespace uloc {

struct not_a_basis_vector : precondition_failed {
    using precondition_failed::precondition_failed;
};
struct not_congruent_to_one : precondition_failed {
    using precondition_failed::precondition_failed;
};
struct not_approximately_symplectic : precondition_failed {
    using precondition_failed::precondition_failed;
};
struct not_unitary_downstairs : precondition_failed {
    using precondition_failed::precondition_failed;
};
struct length_mismatch : precondition_failed {
    using precondition_failed::precondition_failed;
};
struct odd_rank : precondition_failed {
    using precondition_failed::precondition_failed;
};

// u_1..u_m, v_1..v_m with h(u_i,u_j) = h(v_i,v_j) = 0 and h(u_i,v_j) = d_ij.
// transform holds the 2m basis vectors as columns (u's first), so
// gram_of(basis) = star_transpose(transform) . J . transform = J_std.
struct SymplecticBasis {
    std::vector<Vector> u;
    std::vector<Vector> v;
    Matrix transform;
};

// Extend an independent list to a full basis by the unit-pivot argument;
// pivot = lowest remaining index with a unit coefficient. The returned basis
// starts with vecs, followed by the surviving standard vectors in index
// order. Throws not_extendable when no unit pivot exists.
std::vector<Vector> complete_to_basis(const FormSpace& space,
                                      const std::vector<Vector>& vecs);

bool is_basis_vector(const FormSpace& space, const Vector& v);

// w with h(v,w) = 1, via w = sum b_j a_j where b completes v to a basis and
// a = G^{-1} e_1 for the basis Gram matrix G.
Vector find_unit_partner(const FormSpace& space, const Vector& v);

// z with h(z,z) = 0 exactly and z = v mod V r^j; requires h(v,v) in r^j.
Vector make_isotropic(const FormSpace& space, const Vector& v, int j);

// z = v h(u,v)^{-1}; requires h(u,v) = 1 mod r^j; then h(u,z) = 1 exactly
// and z = v mod V r^j.
Vector normalize_pairing(const FormSpace& space, const Vector& u,
                         const Vector& v, int j);

// z = u b + v with b = h(v,v)/2; requires h(u,u) = 0 and h(u,v) = 1; then
// h(z,z) = 0 and h(u,z) = 1, in one shot.
Vector fix_partner(const FormSpace& space, const Vector& u, const Vector& v);

// Replace each vector of rest by its projection away from span(vecs):
// w_i = u_i - sum_k v_k a_k with a = M^{-1} (h(v_j, u_i))_j. All outputs are
// orthogonal to every element of vecs; when every pairing h(v_j,u_i) lies in
// r^j the outputs are congruent to the inputs mod V r^j.
std::vector<Vector> orthogonal_complement(const FormSpace& space,
                                          const std::vector<Vector>& vecs,
                                          const std::vector<Vector>& rest);

SymplecticBasis symplectic_basis(const FormSpace& space);

// Repair a basis whose Gram matrix is J_std mod r^j into an exact symplectic
// basis congruent to it mod V r^j. approx is ordered u_1..u_m, v_1..v_m.
SymplecticBasis correct_basis_mod_ideal(const FormSpace& space,
                                        const std::vector<Vector>& approx,
                                        int j);

// Lift a unitary matrix over A/r^j to a unitary matrix over A reducing back
// to it. The space must carry the standard Gram matrix; xbar is a matrix
// over (a ring structurally equal to) space.ring().quotient(j).
Matrix lift_unitary(const FormSpace& space, const Matrix& xbar, int j);

// g in U(V,h) with g u = v, for basis vectors of equal length.
Matrix transport(const FormSpace& space, const Vector& u, const Vector& v);

} // namespace uloc

#endif
