#include "uloc/symplectic.hpp"
#include "uloc/errors.hpp"

#include <algorithm>

namespace uloc {

namespace {

bool vec_congruent(const FormSpace& space, const Vector& a, const Vector& b, int j) {
    const Ring& ring = space.ring();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!ring.in_radical_power(ring.sub(a[i], b[i]), j)) return false;
    return true;
}

// Sum of span_k * coords_k: a subspace coordinate vector mapped to ambient
// coordinates.
Vector up_from_span(const std::vector<Vector>& span, const Vector& coords) {
    const Ring* ring = coords[0].ring;
    Vector acc;
    acc.coords.assign(span[0].size(), ring->zero());
    for (std::size_t k = 0; k < span.size(); ++k)
        acc = vec_add(acc, vec_scale(span[k], coords[k]));
    return acc;
}

FormSpace subspace_of(const FormSpace& space, const std::vector<Vector>& span) {
    return FormSpace(space.ring_ptr(), gram_of(space, span));
}

} // namespace

bool is_basis_vector(const FormSpace& space, const Vector& v) {
    const Ring& ring = space.ring();
    for (const auto& c : v.coords)
        if (ring.is_unit(c)) return true;
    return false;
}

std::vector<Vector> complete_to_basis(const FormSpace& space,
                                      const std::vector<Vector>& vecs) {
    const Ring* ring = space.ring_ptr().get();
    const std::size_t n = space.rank();
    if (vecs.size() > n)
        throw not_extendable("complete_to_basis: more vectors than the rank");
    std::vector<Vector> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        basis.push_back(standard_vector(ring, n, i));
    std::vector<char> replaced(n, 0);

    for (const auto& u : vecs) {
        if (u.size() != n)
            throw dimension_mismatch("complete_to_basis: wrong vector rank");
        Matrix binv = mat_inv(columns_to_matrix(basis));
        Vector coords = mat_apply(binv, u);
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (replaced[i]) continue;
            if (ring->is_unit(coords[i])) {
                pivot = i;
                break;
            }
        }
        if (pivot == n)
            throw not_extendable(
                "complete_to_basis: no unit pivot; input vectors are dependent");
        basis[pivot] = u;
        replaced[pivot] = 1;
    }

    std::vector<Vector> out(vecs);
    for (std::size_t i = 0; i < n; ++i)
        if (!replaced[i]) out.push_back(basis[i]);
    return out;
}

Vector find_unit_partner(const FormSpace& space, const Vector& v) {
    const Ring& ring = space.ring();
    std::vector<Vector> basis;
    try {
        basis = complete_to_basis(space, {v});
    } catch (const not_extendable&) {
        throw not_a_basis_vector("find_unit_partner: v is not a basis vector");
    }
    Matrix g = gram_of(space, basis);
    Matrix ginv = mat_inv(g);
    Vector a = mat_apply(ginv, standard_vector(space.ring_ptr().get(),
                                               space.rank(), 0));
    Vector w = up_from_span(basis, a);
    if (!(form_eval(space, v, w) == ring.one()))
        throw internal_defect("find_unit_partner: h(v,w) != 1");
    return w;
}

Vector make_isotropic(const FormSpace& space, const Vector& v, int j) {
    const Ring& ring = space.ring();
    Element len = form_eval(space, v, v);
    if (!ring.in_radical_power(len, j))
        throw precondition_failed("make_isotropic: h(v,v) not in r^j");
    Element inv2 = ring.inv(ring.from_int(2));
    Vector z = v;
    // each pass moves the defect from the ideal to its square
    const int max_passes = ring.stats().e + 2;
    int pass = 0;
    while (true) {
        Element d = form_eval(space, z, z);
        if (ring.is_zero(d)) break;
        if (++pass > max_passes)
            throw internal_defect("make_isotropic: did not converge");
        Vector w = find_unit_partner(space, z);
        Element b = ring.mul(ring.neg(d), inv2);
        z = vec_add(z, vec_scale(w, b));
    }
    if (!vec_congruent(space, z, v, j))
        throw internal_defect("make_isotropic: congruence mod V r^j broken");
    return z;
}

Vector normalize_pairing(const FormSpace& space, const Vector& u,
                         const Vector& v, int j) {
    const Ring& ring = space.ring();
    Element huv = form_eval(space, u, v);
    if (!ring.in_radical_power(ring.sub(huv, ring.one()), j))
        throw not_congruent_to_one("normalize_pairing: h(u,v) != 1 mod r^j");
    Vector z = vec_scale(v, ring.inv(huv));
    if (!(form_eval(space, u, z) == ring.one()))
        throw internal_defect("normalize_pairing: h(u,z) != 1");
    if (!vec_congruent(space, z, v, j))
        throw internal_defect("normalize_pairing: congruence broken");
    return z;
}

Vector fix_partner(const FormSpace& space, const Vector& u, const Vector& v) {
    const Ring& ring = space.ring();
    if (!ring.is_zero(form_eval(space, u, u)))
        throw precondition_failed("fix_partner: h(u,u) != 0");
    if (!(form_eval(space, u, v) == ring.one()))
        throw precondition_failed("fix_partner: h(u,v) != 1");
    Element b = ring.mul(form_eval(space, v, v), ring.inv(ring.from_int(2)));
    Vector z = vec_add(vec_scale(u, b), v);
    if (!ring.is_zero(form_eval(space, z, z)))
        throw internal_defect("fix_partner: h(z,z) != 0");
    if (!(form_eval(space, u, z) == ring.one()))
        throw internal_defect("fix_partner: h(u,z) != 1");
    return z;
}

std::vector<Vector> orthogonal_complement(const FormSpace& space,
                                          const std::vector<Vector>& vecs,
                                          const std::vector<Vector>& rest) {
    const Ring* ring = space.ring_ptr().get();
    Matrix m = gram_of(space, vecs);
    Matrix minv = mat_inv(m); // throws singular_matrix on a singular Gram
    std::vector<Vector> out;
    out.reserve(rest.size());
    for (const auto& u : rest) {
        Vector col;
        col.coords.reserve(vecs.size());
        for (const auto& v : vecs) col.coords.push_back(form_eval(space, v, u));
        Vector a = mat_apply(minv, col);
        Vector w = u;
        for (std::size_t k = 0; k < vecs.size(); ++k)
            w = vec_sub(w, vec_scale(vecs[k], a[k]));
        for (const auto& v : vecs)
            if (!ring->is_zero(form_eval(space, v, w)))
                throw internal_defect("orthogonal_complement: residual pairing");
        out.push_back(w);
    }
    return out;
}

namespace {

// One hyperbolic pair split off the front, then recursion on the
// complement; returns (u_1..u_m, v_1..v_m) as coordinate vectors of space.
std::pair<std::vector<Vector>, std::vector<Vector>>
symplectic_rec(const FormSpace& space) {
    const Ring* ring = space.ring_ptr().get();
    const std::size_t n = space.rank();
    Vector first = standard_vector(ring, n, 0);
    Vector u = make_isotropic(space, first, 1);
    Vector w = find_unit_partner(space, u);
    Vector v = fix_partner(space, u, w);
    if (n == 2) return {{u}, {v}};

    std::vector<Vector> basis = complete_to_basis(space, {u, v});
    std::vector<Vector> rest(basis.begin() + 2, basis.end());
    std::vector<Vector> comp = orthogonal_complement(space, {u, v}, rest);
    FormSpace sub = subspace_of(space, comp);
    auto [us, vs] = symplectic_rec(sub);
    std::vector<Vector> uu{u}, vv{v};
    for (const auto& s : us) uu.push_back(up_from_span(comp, s));
    for (const auto& s : vs) vv.push_back(up_from_span(comp, s));
    return {uu, vv};
}

SymplecticBasis assemble(const FormSpace& space, std::vector<Vector> us,
                         std::vector<Vector> vs) {
    std::vector<Vector> all(us);
    all.insert(all.end(), vs.begin(), vs.end());
    SymplecticBasis out{std::move(us), std::move(vs), columns_to_matrix(all)};
    if (!(gram_of(space, all) ==
          standard_j(space.ring_ptr().get(), all.size() / 2)))
        throw internal_defect("symplectic basis failed the exact Gram check");
    return out;
}

} // namespace

SymplecticBasis symplectic_basis(const FormSpace& space) {
    if (space.rank() % 2 != 0)
        throw odd_rank("symplectic_basis: rank must be even");
    auto [us, vs] = symplectic_rec(space);
    return assemble(space, std::move(us), std::move(vs));
}

namespace {

std::pair<std::vector<Vector>, std::vector<Vector>>
correct_rec(const FormSpace& space, const std::vector<Vector>& approx, int j) {
    const std::size_t m = approx.size() / 2;
    Vector w1 = make_isotropic(space, approx[0], j);
    Vector z1 = normalize_pairing(space, w1, approx[m], j);
    z1 = fix_partner(space, w1, z1);
    if (m == 1) return {{w1}, {z1}};

    std::vector<Vector> rest;
    for (std::size_t i = 1; i < m; ++i) rest.push_back(approx[i]);
    for (std::size_t i = m + 1; i < 2 * m; ++i) rest.push_back(approx[i]);
    std::vector<Vector> comp = orthogonal_complement(space, {w1, z1}, rest);
    for (std::size_t i = 0; i < rest.size(); ++i)
        if (!vec_congruent(space, comp[i], rest[i], j))
            throw internal_defect("correct_basis: complement drifted mod V r^j");

    FormSpace sub = subspace_of(space, comp);
    std::vector<Vector> sub_approx;
    for (std::size_t i = 0; i < comp.size(); ++i)
        sub_approx.push_back(
            standard_vector(space.ring_ptr().get(), comp.size(), i));
    auto [us, vs] = correct_rec(sub, sub_approx, j);
    std::vector<Vector> uu{w1}, vv{z1};
    for (const auto& s : us) uu.push_back(up_from_span(comp, s));
    for (const auto& s : vs) vv.push_back(up_from_span(comp, s));
    return {uu, vv};
}

} // namespace

SymplecticBasis correct_basis_mod_ideal(const FormSpace& space,
                                        const std::vector<Vector>& approx,
                                        int j) {
    const Ring& ring = space.ring();
    if (approx.size() != space.rank() || approx.size() % 2 != 0)
        throw dimension_mismatch("correct_basis_mod_ideal: need 2m vectors");
    const std::size_t m = approx.size() / 2;
    Matrix g = gram_of(space, approx);
    Matrix jstd = standard_j(space.ring_ptr().get(), m);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            if (!ring.in_radical_power(ring.sub(g.at(r, c), jstd.at(r, c)), j))
                throw not_approximately_symplectic(
                    "correct_basis_mod_ideal: Gram != J_std mod r^j");

    auto [us, vs] = correct_rec(space, approx, j);
    SymplecticBasis out = assemble(space, std::move(us), std::move(vs));
    for (std::size_t i = 0; i < m; ++i) {
        if (!vec_congruent(space, out.u[i], approx[i], j) ||
            !vec_congruent(space, out.v[i], approx[m + i], j))
            throw internal_defect("correct_basis_mod_ideal: congruence broken");
    }
    return out;
}

Matrix lift_unitary(const FormSpace& space, const Matrix& xbar, int j) {
    const Ring& ring = space.ring();
    const std::size_t n = space.rank();
    if (!(space.gram() == standard_j(space.ring_ptr().get(), n / 2)))
        throw precondition_failed("lift_unitary: space must carry the standard Gram");
    auto q = ring.quotient(j);
    if (xbar.rows() != n || xbar.cols() != n)
        throw dimension_mismatch("lift_unitary: wrong matrix size");
    if (xbar.ring() == nullptr || !xbar.ring()->same_structure(*q))
        throw ring_mismatch("lift_unitary: matrix is not over A/r^j");

    // re-anchor the matrix on our own quotient object and check unitarity
    Matrix xq(q.get(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            xq.at(r, c) = q->make_element(xbar.at(r, c).c0, xbar.at(r, c).c1);
    FormSpace qspace = standard_gram(q, n / 2);
    if (!is_unitary(qspace, xq))
        throw not_unitary_downstairs("lift_unitary: X is not unitary over A/r^j");

    std::vector<Vector> approx;
    for (std::size_t c = 0; c < n; ++c) {
        Vector col;
        for (std::size_t r = 0; r < n; ++r)
            col.coords.push_back(ring.lift_from(*q, xq.at(r, c)));
        approx.push_back(std::move(col));
    }
    SymplecticBasis fixed = correct_basis_mod_ideal(space, approx, j);
    Matrix x = fixed.transform;
    if (!is_unitary(space, x))
        throw internal_defect("lift_unitary: lift is not unitary");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!(ring.reduce_to(*q, x.at(r, c)) == xq.at(r, c)))
                throw internal_defect("lift_unitary: lift does not reduce back");
    return x;
}

namespace {

struct HyperbolicSplit {
    Vector x;              // isotropic, ambient coordinates
    Vector y;              // isotropic partner with h(x,y) = 1
    Element coeff;         // u = x + y * coeff
    std::vector<Vector> comp; // spanning list of the orthogonal complement
};

HyperbolicSplit split_off(const FormSpace& space, const Vector& u) {
    const Ring& ring = space.ring();
    Vector partner = find_unit_partner(space, u);
    std::vector<Vector> span{u, partner};
    std::vector<Vector> basis = complete_to_basis(space, span);
    std::vector<Vector> comp;
    if (space.rank() > 2) {
        std::vector<Vector> rest(basis.begin() + 2, basis.end());
        comp = orthogonal_complement(space, span, rest);
    }

    FormSpace w = subspace_of(space, span);
    SymplecticBasis sb = symplectic_basis(w);
    // u is e_1 in the span coordinates; express it against (x, y)
    Vector coords = mat_apply(mat_inv(sb.transform),
                              standard_vector(space.ring_ptr().get(), 2, 0));
    Vector x = sb.u[0], y = sb.v[0];
    Element a = coords[0], b = coords[1];
    if (!ring.is_unit(a)) {
        // u = xa + yb with b the unit: (y, -x) is also a symplectic pair and
        // u = y b + (-x)(-a)
        Vector nx = vec_scale(x, ring.from_int(-1));
        x = y;
        y = nx;
        std::swap(a, b);
        b = ring.neg(b);
    }
    // rescale so u = x + y (a^* b)
    Element astar = ring.star(a);
    Vector xs = vec_scale(x, a);
    Vector ys = vec_scale(y, ring.inv(astar));
    Element coeff = ring.mul(astar, b);

    HyperbolicSplit out{up_from_span(span, xs), up_from_span(span, ys), coeff,
                        std::move(comp)};
    if (!ring.is_zero(form_eval(space, out.x, out.x)) ||
        !ring.is_zero(form_eval(space, out.y, out.y)) ||
        !(form_eval(space, out.x, out.y) == ring.one()))
        throw internal_defect("transport: hyperbolic split is not symplectic");
    Vector rebuilt = vec_add(out.x, vec_scale(out.y, coeff));
    if (!(rebuilt == u))
        throw internal_defect("transport: coordinates of u do not rebuild u");
    return out;
}

} // namespace

Matrix transport(const FormSpace& space, const Vector& u, const Vector& v) {
    const Ring& ring = space.ring();
    if (!is_basis_vector(space, u) || !is_basis_vector(space, v))
        throw not_a_basis_vector("transport: inputs must be basis vectors");
    if (!(form_eval(space, u, u) == form_eval(space, v, v)))
        throw length_mismatch("transport: h(u,u) != h(v,v)");

    HyperbolicSplit su = split_off(space, u);
    HyperbolicSplit sv = split_off(space, v);

    // equal lengths force the coefficient difference to be hermitian
    Element r = ring.sub(sv.coeff, su.coeff);
    if (!(ring.star(r) == r))
        throw internal_defect("transport: coefficient difference not hermitian");
    Vector w_shift = vec_add(sv.x, vec_scale(sv.y, r)); // v = w_shift + z su.coeff
    if (!(vec_add(w_shift, vec_scale(sv.y, su.coeff)) == v))
        throw internal_defect("transport: sheared coordinates do not rebuild v");

    std::vector<Vector> b1u{su.x}, b1v{su.y};
    std::vector<Vector> b2u{w_shift}, b2v{sv.y};
    if (space.rank() > 2) {
        FormSpace cu = subspace_of(space, su.comp);
        FormSpace cv = subspace_of(space, sv.comp);
        SymplecticBasis sbu = symplectic_basis(cu);
        SymplecticBasis sbv = symplectic_basis(cv);
        // match the two complement bases in index order
        for (std::size_t i = 0; i < sbu.u.size(); ++i) {
            b1u.push_back(up_from_span(su.comp, sbu.u[i]));
            b1v.push_back(up_from_span(su.comp, sbu.v[i]));
            b2u.push_back(up_from_span(sv.comp, sbv.u[i]));
            b2v.push_back(up_from_span(sv.comp, sbv.v[i]));
        }
    }
    std::vector<Vector> b1(b1u);
    b1.insert(b1.end(), b1v.begin(), b1v.end());
    std::vector<Vector> b2(b2u);
    b2.insert(b2.end(), b2v.begin(), b2v.end());

    Matrix g = mat_mul(columns_to_matrix(b2), mat_inv(columns_to_matrix(b1)));
    if (!is_unitary(space, g))
        throw internal_defect("transport: result is not unitary");
    if (!(mat_apply(g, u) == v))
        throw internal_defect("transport: g u != v");
    return g;
}

} // namespace uloc
