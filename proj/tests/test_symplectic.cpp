#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "uloc/oracle.hpp"
#include "uloc/symplectic.hpp"

#include <random>

using namespace uloc;

namespace {

std::shared_ptr<const Ring> make_ring(std::int64_t p, int k, int d, int sigma,
                                      int b_exp, bool trunc = false,
                                      StarMode mode = StarMode::quadratic) {
    RingSpec s;
    s.p = p; s.k = k; s.d = d; s.sigma_order = sigma;
    s.b_exponent = b_exp; s.truncate_odd = trunc; s.star_mode = mode;
    return Ring::make(s);
}

std::vector<std::shared_ptr<const Ring>> suite() {
    return {
        make_ring(3, 1, 1, 1, -1),                         // F3[t]/(t^2)
        make_ring(3, 2, 1, 1, -1, false, StarMode::trivial), // Z/9, star = id
        make_ring(3, 2, 1, 1, 1),                          // Z/9[t]/(t^2-3)
        make_ring(3, 2, 1, 1, 1, true),                    // ... with t^3 = 0
        make_ring(3, 1, 2, 2, -1),                         // F9[t;sigma]/(t^2)
        make_ring(3, 2, 1, 1, -1),                         // Z/9[t]/(t^2)
    };
}

Element random_element(const Ring& ring, std::mt19937_64& rng) {
    return ring.from_index(rng() % ring.size());
}

Vector random_vector(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.coords.push_back(random_element(ring, rng));
    return v;
}

Vector random_basis_vector(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Vector v = random_vector(ring, n, rng);
        for (const auto& c : v.coords)
            if (ring.is_unit(c)) return v;
    }
}

Matrix random_invertible(const Ring* ring, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix x(ring, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                x.at(i, j) = random_element(*ring, rng);
        if (mat_invertible(x)) return x;
    }
}

Element random_radical_power_element(const Ring& ring, int j,
                                     std::mt19937_64& rng) {
    for (;;) {
        Element a = random_element(ring, rng);
        if (ring.in_radical_power(a, j)) return a;
    }
}

// a Gram matrix congruent to the standard one: X* J X for invertible X
FormSpace random_congruent_space(std::shared_ptr<const Ring> ring,
                                 std::size_t m, std::mt19937_64& rng) {
    Matrix j = standard_j(ring.get(), m);
    Matrix x = random_invertible(ring.get(), 2 * m, rng);
    return FormSpace(ring, mat_mul(star_transpose(x), mat_mul(j, x)));
}

} // namespace

TEST_CASE("complete_to_basis extends independent lists") {
    std::mt19937_64 rng(1001);
    for (auto ring : suite()) {
        FormSpace space = standard_gram(ring, 2);
        for (int trial = 0; trial < 25; ++trial) {
            Vector v = random_basis_vector(*ring, 4, rng);
            std::vector<Vector> basis = complete_to_basis(space, {v});
            REQUIRE(basis.size() == 4);
            CHECK(basis[0] == v);
            CHECK(mat_invertible(columns_to_matrix(basis)));
        }
        // a dependent list has no unit pivot left
        Vector u = standard_vector(ring.get(), 4, 0);
        CHECK_THROWS_AS((void)complete_to_basis(space, {u, u}), not_extendable);
        // a radical vector is not part of any basis
        Vector r{{ring->t(), ring->t(), ring->zero(), ring->zero()}};
        if (!ring->star_is_identity())
            CHECK_THROWS_AS((void)complete_to_basis(space, {r}), not_extendable);
    }
}

TEST_CASE("find_unit_partner pairs every basis vector to 1") {
    std::mt19937_64 rng(1002);
    for (auto ring : suite()) {
        for (std::size_t m : {1u, 2u}) {
            FormSpace space = random_congruent_space(ring, m, rng);
            for (int trial = 0; trial < 20; ++trial) {
                Vector v = random_basis_vector(*ring, 2 * m, rng);
                Vector w = find_unit_partner(space, v);
                CHECK(form_eval(space, v, w) == ring->one());
            }
        }
        FormSpace space = standard_gram(ring, 1);
        Vector rad{{ring->from_int(3 * (ring->k0() > 1)), ring->zero()}};
        if (ring->k0() > 1)
            CHECK_THROWS_AS((void)find_unit_partner(space, rad),
                            not_a_basis_vector);
    }
}

TEST_CASE("make_isotropic zeroes the length without moving mod V r^j") {
    std::mt19937_64 rng(1003);
    for (auto ring : suite()) {
        FormSpace space = standard_gram(ring, 1);
        for (int trial = 0; trial < 40; ++trial) {
            Vector v = random_basis_vector(*ring, 2, rng);
            // lengths always lie in the radical, so j = 1 always applies
            Vector z = make_isotropic(space, v, 1);
            CHECK(ring->is_zero(form_eval(space, z, z)));
            for (std::size_t i = 0; i < 2; ++i)
                CHECK(ring->in_radical_power(ring->sub(z[i], v[i]), 1));
        }
    }
    // precondition: h(v,v) must lie in r^j
    auto ring = make_ring(3, 2, 1, 1, 1); // e = 4
    FormSpace space = standard_gram(ring, 1);
    Vector v{{ring->one(), ring->t()}};
    Element len = form_eval(space, v, v);
    REQUIRE(!ring->in_radical_power(len, 2));
    CHECK_THROWS_AS((void)make_isotropic(space, v, 2), precondition_failed);
}

TEST_CASE("normalize_pairing and fix_partner") {
    std::mt19937_64 rng(1004);
    auto ring = make_ring(3, 2, 1, 1, 1);
    FormSpace space = standard_gram(ring, 1);
    Vector u = standard_vector(ring.get(), 2, 0);
    for (int trial = 0; trial < 40; ++trial) {
        // v = e2 + (radical drift), so h(u,v) = 1 mod r
        Vector v = standard_vector(ring.get(), 2, 1);
        v[0] = ring->add(v[0], random_radical_power_element(*ring, 1, rng));
        v[1] = ring->add(v[1], random_radical_power_element(*ring, 1, rng));
        Vector z = normalize_pairing(space, u, v, 1);
        CHECK(form_eval(space, u, z) == ring->one());
        Vector w = fix_partner(space, u, z);
        CHECK(ring->is_zero(form_eval(space, w, w)));
        CHECK(form_eval(space, u, w) == ring->one());
    }
    Vector bad = standard_vector(ring.get(), 2, 0); // h(u, e1) = 0, not 1 mod r
    CHECK_THROWS_AS((void)normalize_pairing(space, u, bad, 1),
                    not_congruent_to_one);
    CHECK_THROWS_AS((void)fix_partner(space, bad, bad), precondition_failed);
}

TEST_CASE("orthogonal_complement really is orthogonal") {
    std::mt19937_64 rng(1005);
    for (auto ring : suite()) {
        FormSpace space = random_congruent_space(ring, 2, rng);
        for (int trial = 0; trial < 10; ++trial) {
            SymplecticBasis sb = symplectic_basis(space);
            std::vector<Vector> pair{sb.u[0], sb.v[0]};
            std::vector<Vector> rest{sb.u[1], sb.v[1]};
            std::vector<Vector> comp = orthogonal_complement(space, pair, rest);
            for (const Vector& w : comp)
                for (const Vector& p : pair)
                    CHECK(ring->is_zero(form_eval(space, p, w)));
        }
    }
}

TEST_CASE("symplectic_basis classifies every congruent form") {
    std::mt19937_64 rng(1006);
    for (auto ring : suite()) {
        for (std::size_t m : {1u, 2u}) {
            for (int trial = 0; trial < 15; ++trial) {
                FormSpace space = random_congruent_space(ring, m, rng);
                SymplecticBasis sb = symplectic_basis(space);
                std::vector<Vector> all(sb.u);
                all.insert(all.end(), sb.v.begin(), sb.v.end());
                CHECK(gram_of(space, all) == standard_j(ring.get(), m));
                CHECK(mat_invertible(sb.transform));
            }
        }
    }
    // no odd-rank space can pass the invariants: every skew element lies in
    // the radical, so a 1x1 skew Gram is never invertible
    auto ring = suite()[0];
    Matrix g1(ring.get(), 1, 1);
    g1.at(0, 0) = ring->t();
    CHECK_THROWS_AS(FormSpace(ring, g1), degenerate_form);
}

TEST_CASE("correct_basis_mod_ideal repairs approximate bases") {
    std::mt19937_64 rng(1007);
    for (auto ring : suite()) {
        const int e = ring->stats().e;
        for (std::size_t m : {1u, 2u}) {
            FormSpace space = standard_gram(ring, m);
            for (int trial = 0; trial < 15; ++trial) {
                int j = 1 + (int)(rng() % (std::uint64_t)e);
                // perturb an exact symplectic basis inside V r^j
                Matrix x = random_invertible(ring.get(), 2 * m, rng);
                FormSpace twisted(ring, mat_mul(star_transpose(x),
                                                mat_mul(space.gram(), x)));
                SymplecticBasis exact = symplectic_basis(space);
                std::vector<Vector> approx(exact.u);
                approx.insert(approx.end(), exact.v.begin(), exact.v.end());
                for (Vector& v : approx)
                    for (std::size_t i = 0; i < v.size(); ++i)
                        v[i] = ring->add(
                            v[i], random_radical_power_element(*ring, j, rng));
                SymplecticBasis fixed = correct_basis_mod_ideal(space, approx, j);
                std::vector<Vector> all(fixed.u);
                all.insert(all.end(), fixed.v.begin(), fixed.v.end());
                CHECK(gram_of(space, all) == standard_j(ring.get(), m));
                for (std::size_t c = 0; c < all.size(); ++c)
                    for (std::size_t i = 0; i < all[c].size(); ++i)
                        CHECK(ring->in_radical_power(
                            ring->sub(all[c][i], approx[c][i]), j));
            }
            // h(w1, z1) = 0 instead of 1: not symplectic even mod r
            std::vector<Vector> wrong;
            for (std::size_t i = 0; i < 2 * m; ++i)
                wrong.push_back(standard_vector(ring.get(), 2 * m, i));
            wrong[m] = wrong[0];
            CHECK_THROWS_AS((void)correct_basis_mod_ideal(space, wrong, 1),
                            not_approximately_symplectic);
        }
    }
}

TEST_CASE("lift_unitary is a constructive section of the reduction") {
    std::mt19937_64 rng(1008);
    for (auto ring : suite()) {
        const int e = ring->stats().e;
        FormSpace space = standard_gram(ring, 1);
        for (int j = 1; j < e; ++j) {
            auto q = ring->quotient(j);
            std::vector<Matrix> down =
                enumerate_unitary_group(standard_gram(q, 1), {});
            REQUIRE(!down.empty());
            for (int trial = 0; trial < 10; ++trial) {
                const Matrix& xbar = down[rng() % down.size()];
                Matrix x = lift_unitary(space, xbar, j);
                CHECK(is_unitary(space, x));
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t c = 0; c < 2; ++c)
                        CHECK(ring->reduce_to(*q, x.at(r, c)) == xbar.at(r, c));
            }
            // a non-unitary downstairs matrix is rejected
            Matrix bad = Matrix::identity(q.get(), 2);
            bad.at(0, 1) = q->one();
            bad.at(1, 0) = q->one();
            REQUIRE(!is_unitary(standard_gram(q, 1), bad));
            CHECK_THROWS_AS((void)lift_unitary(space, bad, j),
                            not_unitary_downstairs);
        }
    }
}

TEST_CASE("transport moves any vector to any other of equal length") {
    std::mt19937_64 rng(1009);
    for (auto ring : suite()) {
        FormSpace space = standard_gram(ring, 1);
        // random unitaries, produced by lifting the (small) residue group
        auto q = ring->quotient(1);
        std::vector<Matrix> down = enumerate_unitary_group(standard_gram(q, 1), {});
        for (int trial = 0; trial < 15; ++trial) {
            Vector u = random_basis_vector(*ring, 2, rng);
            Matrix g0 = lift_unitary(space, down[rng() % down.size()], 1);
            Vector v = mat_apply(g0, u);
            Matrix g = transport(space, u, v);
            CHECK(is_unitary(space, g));
            CHECK(mat_apply(g, u) == v);
        }
        // unequal lengths are rejected up front
        Vector e1 = standard_vector(ring.get(), 2, 0);
        if (!ring->star_is_identity()) {
            Vector w{{ring->one(), ring->t()}};
            REQUIRE(!(form_eval(space, w, w) == form_eval(space, e1, e1)));
            CHECK_THROWS_AS((void)transport(space, e1, w), length_mismatch);
        }
    }
    // rank 4: conjugate by an embedded rank-2 unitary
    auto ring = suite()[2];
    FormSpace space4 = standard_gram(ring, 2);
    std::vector<Matrix> group = enumerate_unitary_group(standard_gram(ring, 1), {});
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix& g2 = group[rng() % group.size()];
        Matrix g4 = Matrix::identity(ring.get(), 4);
        // embed on the (u1, v1) block; column order is u1 u2 v1 v2
        g4.at(0, 0) = g2.at(0, 0); g4.at(0, 2) = g2.at(0, 1);
        g4.at(2, 0) = g2.at(1, 0); g4.at(2, 2) = g2.at(1, 1);
        REQUIRE(is_unitary(space4, g4));
        Vector u = random_basis_vector(*ring, 4, rng);
        Vector v = mat_apply(g4, u);
        Matrix g = transport(space4, u, v);
        CHECK(is_unitary(space4, g));
        CHECK(mat_apply(g, u) == v);
    }
}
