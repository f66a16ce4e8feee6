// Acceptance gate: one pass/fail line per criterion, exit nonzero on any
// failure. All checks are exact; there are no tolerances anywhere.

#include "uloc/oracle.hpp"
#include "uloc/symplectic.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <vector>

using namespace uloc;

namespace {

struct SuiteRing {
    std::string label;
    std::shared_ptr<const Ring> ring;
    std::uint64_t pair_count = 0;   // rank-2 symplectic pairs
    std::vector<Matrix> group;      // = U_2(A), via the pair bijection
};

std::shared_ptr<const Ring> make_ring(std::int64_t p, int k, int d, int sigma,
                                      int b_exp, bool trunc = false,
                                      StarMode mode = StarMode::quadratic) {
    RingSpec s;
    s.p = p; s.k = k; s.d = d; s.sigma_order = sigma;
    s.b_exponent = b_exp; s.truncate_odd = trunc; s.star_mode = mode;
    return Ring::make(s);
}

std::vector<SuiteRing> g_suite;

void build_suite() {
    g_suite.push_back({"F3[t]/(t^2)", make_ring(3, 1, 1, 1, -1), 0, {}});
    g_suite.push_back({"Z/9 (star = id)",
                       make_ring(3, 2, 1, 1, -1, false, StarMode::trivial), 0, {}});
    g_suite.push_back({"Z/9[t]/(t^2-3)", make_ring(3, 2, 1, 1, 1), 0, {}});
    g_suite.push_back({"Z/9[t]/(t^2-3,t^3)", make_ring(3, 2, 1, 1, 1, true), 0, {}});
    g_suite.push_back({"F9[t;sigma]/(t^2)", make_ring(3, 1, 2, 2, -1), 0, {}});
    g_suite.push_back({"Z/9[t]/(t^2)", make_ring(3, 2, 1, 1, -1), 0, {}});
    for (SuiteRing& s : g_suite) {
        PairScan scan = enumerate_symplectic_pairs(standard_gram(s.ring, 1));
        s.pair_count = scan.count;
        s.group = std::move(scan.group);
    }
}

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    template <typename A, typename B>
    void equal(const A& a, const B& b, const std::string& what) {
        expect(a == b, what);
    }
};

Element random_element(const Ring& ring, std::mt19937_64& rng) {
    return ring.from_index(rng() % ring.size());
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

// 1. closed-form orders vs exhaustive oracle on the seven-ring suite
Check criterion1() {
    Check c;
    const bigint expected[6] = {72, 648, 5832, 1944, 58320, 5832};
    for (std::size_t i = 0; i < g_suite.size(); ++i) {
        const SuiteRing& s = g_suite[i];
        const RingStats& st = s.ring->stats();
        c.equal(unitary_order_radical_form(st, 1), expected[i],
                s.label + ": radical-form order");
        c.equal(unitary_order_skew_form(st, 1), expected[i],
                s.label + ": skew-form order");
        c.equal(bigint(s.pair_count), expected[i], s.label + ": pair oracle");
        c.equal(bigint(s.group.size()), expected[i], s.label + ": group size");
    }
    // naive matrix filters where |A| <= 9
    c.equal(enumerate_unitary_group_naive(standard_gram(g_suite[0].ring, 1), {})
                .size(),
            (std::size_t)72, "naive filter over F3[t]/(t^2)");
    c.equal(enumerate_unitary_group_naive(standard_gram(g_suite[1].ring, 1), {})
                .size(),
            (std::size_t)648, "naive filter over Z/9");
    // principal branches on their rings
    c.equal(principal_case_order(3, 2, 1, true), bigint(648), "branch (star=id)");
    c.equal(principal_case_order(3, 4, 1, false), bigint(5832), "branch (e even)");
    c.equal(principal_case_order(3, 3, 1, false), bigint(1944), "branch (e odd)");
    c.expect(!principal_structure(*g_suite[5].ring).a7_principal_radical,
             "Z/9[t]/(t^2) must fail the principal-radical probe");
    // rank 4 over F3[t]/(t^2): pair recursion
    std::uint64_t pairs4 =
        enumerate_symplectic_pairs(standard_gram(g_suite[0].ring, 2)).count;
    c.equal(bigint(pairs4), bigint(524880), "rank-4 pair oracle");
    c.equal(bigint(pairs4) * 72, bigint(37791360), "|U_4| via pair recursion");
    c.equal(unitary_order_radical_form(g_suite[0].ring->stats(), 2),
            bigint(37791360), "radical-form order at m=2");
    return c;
}

// 2. reduction maps: oracle image and kernel sizes, chain products
Check criterion2() {
    Check c;
    for (const SuiteRing& s : g_suite) {
        FormSpace space = standard_gram(s.ring, 1);
        const int e = s.ring->stats().e;
        for (int j = 1; j < e; ++j) {
            auto [image, kernel] = reduction_image_and_kernel(space, j, s.group);
            auto q = s.ring->quotient(j);
            std::uint64_t down =
                enumerate_symplectic_pairs(standard_gram(q, 1)).count;
            c.equal(image, down,
                    s.label + " j=" + std::to_string(j) + ": image = |U_2(A/r^j)|");
            c.equal(bigint(kernel), kernel_order(*s.ring, j, 1),
                    s.label + " j=" + std::to_string(j) + ": kernel order");
            c.equal(bigint(image) * kernel, bigint(s.group.size()),
                    s.label + " j=" + std::to_string(j) + ": chain product");
        }
    }
    return c;
}

// 3. constructive surjectivity via lift_unitary
Check criterion3() {
    Check c;
    std::mt19937_64 rng(0x5eed0003);
    {
        const SuiteRing& s = g_suite[0];
        FormSpace space = standard_gram(s.ring, 1);
        auto q = s.ring->quotient(1);
        std::vector<Matrix> sp3 = enumerate_unitary_group(standard_gram(q, 1), {});
        c.equal(sp3.size(), (std::size_t)24, "|Sp_2(3)|");
        for (const Matrix& xbar : sp3) {
            Matrix x = lift_unitary(space, xbar, 1); // asserts its postconditions
            c.expect(is_unitary(space, x), "lift of an Sp_2(3) element");
        }
    }
    for (const SuiteRing& s : g_suite) {
        FormSpace space = standard_gram(s.ring, 1);
        const int e = s.ring->stats().e;
        std::vector<std::shared_ptr<const Ring>> quotients;
        std::vector<std::vector<Matrix>> downstairs;
        for (int j = 1; j < e; ++j) {
            quotients.push_back(s.ring->quotient(j)); // keeps matrix rings alive
            downstairs.push_back(
                enumerate_unitary_group(standard_gram(quotients.back(), 1), {}));
        }
        int successes = 0;
        for (int trial = 0; trial < 500; ++trial) {
            int j = 1 + (int)(rng() % (std::uint64_t)(e - 1));
            const std::vector<Matrix>& grp = downstairs[(std::size_t)j - 1];
            const Matrix& xbar = grp[rng() % grp.size()];
            Matrix x = lift_unitary(space, xbar, j);
            auto q = s.ring->quotient(j);
            bool back = true;
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t col = 0; col < 2; ++col)
                    if (!(s.ring->reduce_to(*q, x.at(r, col)) ==
                          q->make_element(xbar.at(r, col).c0, xbar.at(r, col).c1)))
                        back = false;
            if (is_unitary(space, x) && back) ++successes;
        }
        c.equal(successes, 500, s.label + ": 500/500 seeded lifts");
    }
    return c;
}

// 4. symplectic-basis property suite on random congruent Gram matrices
Check criterion4() {
    Check c;
    std::mt19937_64 rng(0x5eed0004);
    for (const SuiteRing& s : g_suite) {
        const int e = s.ring->stats().e;
        for (std::size_t m : {1u, 2u}) {
            Matrix jstd = standard_j(s.ring.get(), m);
            FormSpace std_space = standard_gram(s.ring, m);
            int good = 0;
            for (int trial = 0; trial < 500; ++trial) {
                Matrix x = random_invertible(s.ring.get(), 2 * m, rng);
                FormSpace space(s.ring,
                                mat_mul(star_transpose(x), mat_mul(jstd, x)));
                SymplecticBasis sb = symplectic_basis(space);
                std::vector<Vector> all(sb.u);
                all.insert(all.end(), sb.v.begin(), sb.v.end());
                if (!(gram_of(space, all) == jstd)) continue;

                // perturb an exact basis inside V r^j and repair it
                int j = 1 + (int)(rng() % (std::uint64_t)e);
                std::vector<Vector> approx;
                for (std::size_t i = 0; i < 2 * m; ++i)
                    approx.push_back(standard_vector(s.ring.get(), 2 * m, i));
                for (Vector& v : approx)
                    for (std::size_t i = 0; i < v.size(); ++i)
                        v[i] = s.ring->add(
                            v[i], random_radical_power_element(*s.ring, j, rng));
                SymplecticBasis fixed =
                    correct_basis_mod_ideal(std_space, approx, j);
                std::vector<Vector> fall(fixed.u);
                fall.insert(fall.end(), fixed.v.begin(), fixed.v.end());
                bool congruent = gram_of(std_space, fall) == jstd;
                for (std::size_t col = 0; col < fall.size() && congruent; ++col)
                    for (std::size_t i = 0; i < fall[col].size(); ++i)
                        if (!s.ring->in_radical_power(
                                s.ring->sub(fall[col][i], approx[col][i]), j)) {
                            congruent = false;
                            break;
                        }
                if (congruent) ++good;
            }
            c.equal(good, 500, s.label + " m=" + std::to_string(m) +
                                   ": 500/500 classifications and repairs");
        }
    }
    return c;
}

// 5. counting suite: bucket uniformity, the rank-1 identity, the recursion
Check criterion5() {
    Check c;
    for (const SuiteRing& s : g_suite) {
        const RingStats& st = s.ring->stats();
        VectorCensus census = enumerate_vectors_by_length(standard_gram(s.ring, 1));
        c.equal(census.buckets.size(), (std::size_t)st.card_S,
                s.label + ": one bucket per skew length");
        for (const auto& [len, count] : census.buckets) {
            c.expect(s.ring->star(len) == s.ring->neg(len),
                     s.label + ": lengths lie in S");
            c.equal(bigint(count), basis_vector_count(st, 1),
                    s.label + ": bucket size");
        }
        c.equal(bigint(st.card_A - st.card_rad) * (bigint(st.card_R) + st.card_m),
                basis_vector_count(st, 1), s.label + ": rank-1 identity");
    }
    // m = 2 census on the smallest ring, plus the recursion identity
    const SuiteRing& f3t = g_suite[0];
    const RingStats& st = f3t.ring->stats();
    VectorCensus census4 = enumerate_vectors_by_length(standard_gram(f3t.ring, 2));
    for (const auto& [len, count] : census4.buckets) {
        (void)len;
        c.equal(bigint(count), basis_vector_count(st, 2), "m=2 bucket size");
    }
    c.equal(basis_vector_count(st, 2),
            basis_vector_count(st, 1) * bigint(st.card_A) * st.card_A +
                bigint(st.card_rad) * st.card_rad * basis_vector_count(st, 1),
            "recursion N(2,s) = N |A|^2 + |r|^2 M");
    return c;
}

// 6. transitivity and stabilizers at m = 1
Check criterion6() {
    Check c;
    for (const SuiteRing& s : g_suite) {
        FormSpace space = standard_gram(s.ring, 1);
        const RingStats& st = s.ring->stats();
        std::uint64_t expected_stab = st.card_A / st.card_S;
        for (const Element& len : s.ring->enumerate_subset(Subset::S)) {
            auto bucket = basis_vectors_with_length(space, len);
            c.expect(!bucket.empty(), s.label + ": bucket nonempty");
            Vector v = decode_vector(space, bucket.front());
            auto orbit = orbit_of(space, s.group, v);
            c.expect(orbit == bucket, s.label + ": orbit equals length bucket");
            std::uint64_t stab = 0;
            for (const Matrix& g : s.group)
                if (mat_apply(g, v) == v) ++stab;
            c.equal(stab, expected_stab, s.label + ": stabilizer = |A|/|S|");
            c.equal(stab * orbit.size(), s.group.size(),
                    s.label + ": orbit times stabilizer");
        }
    }
    return c;
}

// 7. principal-case structure probes
Check criterion7() {
    Check c;
    {
        PrincipalReport r = principal_structure(*g_suite[2].ring); // t^2 = 3
        c.expect(r.a7_principal_radical && r.a8_hermitian_commute &&
                     r.a9_star_nontrivial && r.a10_disjoint && *r.a10_disjoint,
                 "Z/9[t]/(t^2-3): all four hypotheses hold");
        c.expect(r.generator && r.generator_is_skew,
                 "Z/9[t]/(t^2-3): skew generator found");
        c.expect(r.kernel_size && *r.kernel_size == 1,
                 "Z/9[t]/(t^2-3): trivial kernel (e even)");
        c.expect(r.parity_cards_match && *r.parity_cards_match,
                 "Z/9[t]/(t^2-3): parity cardinalities");
        const RingStats& st = g_suite[2].ring->stats();
        c.equal(st.card_A, st.card_R * st.card_R, "|A| = |R|^2 for even e");
    }
    {
        PrincipalReport r = principal_structure(*g_suite[3].ring); // t^3 = 0
        c.expect(r.a7_principal_radical && r.a10_disjoint && *r.a10_disjoint,
                 "truncated ring: hypotheses hold");
        c.expect(r.kernel_size && *r.kernel_size == g_suite[3].ring->stats().q,
                 "truncated ring: kernel of size q (e odd)");
        c.expect(r.parity_cards_match && *r.parity_cards_match,
                 "truncated ring: parity cardinalities");
        const RingStats& st = g_suite[3].ring->stats();
        c.equal(st.card_A * st.q, st.card_R * st.card_R,
                "|A| = |R|^2/q for odd e");
    }
    c.expect(!principal_structure(*g_suite[5].ring).a7_principal_radical,
             "Z/9[t]/(t^2): no principal two-sided generator");
    {
        auto big = make_ring(3, 2, 2, 2, 1); // GR(3,2,2)[t;sigma]/(t^2-3)
        PrincipalReport r = principal_structure(*big);
        c.expect(r.a7_principal_radical, "GR(3,2,2) ramified: generator exists");
        c.expect(r.a10_disjoint && !*r.a10_disjoint,
                 "GR(3,2,2) ramified: R meets Rx nontrivially");
        c.expect(!r.r_multiplicatively_closed,
                 "GR(3,2,2) ramified: R is not a subring");
    }
    return c;
}

// 8. ring axioms, the R x S bijection, and the y - y* = s solution sets
Check criterion8() {
    Check c;
    for (const SuiteRing& s : g_suite) {
        c.expect(s.ring->desk_scale(),
                 s.label + ": exhaustive axiom validation ran");
        std::vector<Element> all = s.ring->enumerate_elements();
        std::vector<Element> herm = s.ring->enumerate_subset(Subset::R);
        std::vector<Element> skew = s.ring->enumerate_subset(Subset::S);
        std::set<std::uint64_t> sums;
        for (const Element& r : herm)
            for (const Element& sk : skew)
                sums.insert(s.ring->index_of(s.ring->add(r, sk)));
        c.equal(sums.size(), all.size(), s.label + ": R x S -> A bijection");

        if (s.ring->size() <= 81) {
            Element half = s.ring->inv(s.ring->from_int(2));
            for (const Element& sk : skew) {
                std::set<std::uint64_t> solutions, expected;
                for (const Element& y : all)
                    if (s.ring->sub(y, s.ring->star(y)) == sk)
                        solutions.insert(s.ring->index_of(y));
                Element base = s.ring->mul(sk, half);
                for (const Element& r : herm)
                    expected.insert(s.ring->index_of(s.ring->add(base, r)));
                c.expect(solutions == expected,
                         s.label + ": solution set of y - y* = s");
            }
        }
    }
    return c;
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    build_suite();

    struct Row {
        const char* what;
        Check (*run)();
    };
    const Row rows[] = {
        {"order formulas match the exhaustive oracle on the seven-ring suite",
         criterion1},
        {"reduction images, kernels and chain products are exact", criterion2},
        {"every reduction lifts constructively (24/24 and 500/500 per ring)",
         criterion3},
        {"symplectic bases and mod-r^j repairs succeed on 500 random forms "
         "per ring and rank",
         criterion4},
        {"length buckets are uniform and satisfy the counting identities",
         criterion5},
        {"orbits are length buckets; stabilizers have order |A|/|S|", criterion6},
        {"principal-case structure probes match on all three marker rings",
         criterion7},
        {"ring axioms, the RxS bijection and y-y*=s solution sets verify "
         "exhaustively",
         criterion8},
    };

    bool all_ok = true;
    int n = 0;
    for (const Row& row : rows) {
        ++n;
        auto t0 = clock::now();
        Check c;
        try {
            c = row.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        double sec = std::chrono::duration<double>(clock::now() - t0).count();
        std::cout << "criterion " << n << ": " << (c.ok ? "PASS" : "FAIL")
                  << " - " << row.what << " (" << sec << "s)";
        if (!c.ok) std::cout << " [" << c.detail << "]";
        std::cout << std::endl;
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
