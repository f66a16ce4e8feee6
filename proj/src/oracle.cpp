#include "uloc/oracle.hpp"
#include "uloc/errors.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <thread>

namespace uloc {

namespace {

bigint pow_card(std::uint64_t card, std::uint64_t exp) {
    return big_pow(bigint(card), exp);
}

Vector vector_from_scan_index(const FormSpace& space, std::uint64_t idx) {
    const Ring& ring = space.ring();
    const std::uint64_t card = ring.size();
    Vector v;
    v.coords.reserve(space.rank());
    for (std::size_t i = 0; i < space.rank(); ++i) {
        v.coords.push_back(ring.from_index(idx % card));
        idx /= card;
    }
    return v;
}

void check_vector_budget(const FormSpace& space, const EnumerationBudget& b) {
    bigint total = pow_card(space.ring().size(), space.rank());
    if (total > b.max_vectors)
        throw budget_exceeded("vector scan exceeds max_vectors");
}

bool is_basis_vec(const Ring& ring, const Vector& v) {
    for (const auto& c : v.coords)
        if (ring.is_unit(c)) return true;
    return false;
}

} // namespace

VectorCensus enumerate_vectors_by_length(const FormSpace& space,
                                         const EnumerationBudget& budget) {
    check_vector_budget(space, budget);
    const Ring& ring = space.ring();
    const std::uint64_t total =
        pow_card(ring.size(), space.rank()).convert_to<std::uint64_t>();

    std::map<std::uint64_t, std::uint64_t> by_length_idx;
    VectorCensus out;
    out.total = total;
    for (std::uint64_t i = 0; i < total; ++i) {
        Vector v = vector_from_scan_index(space, i);
        if (!is_basis_vec(ring, v)) {
            ++out.non_basis;
            continue;
        }
        ++by_length_idx[ring.index_of(form_eval(space, v, v))];
    }
    for (const auto& [idx, count] : by_length_idx)
        out.buckets.emplace_back(ring.from_index(idx), count);
    return out;
}

std::vector<std::uint64_t> encode_vector(const FormSpace& space,
                                         const Vector& v) {
    std::vector<std::uint64_t> enc;
    enc.reserve(v.size());
    for (const auto& c : v.coords) enc.push_back(space.ring().index_of(c));
    return enc;
}

Vector decode_vector(const FormSpace& space,
                     const std::vector<std::uint64_t>& enc) {
    Vector v;
    v.coords.reserve(enc.size());
    for (std::uint64_t i : enc) v.coords.push_back(space.ring().from_index(i));
    return v;
}

std::vector<std::vector<std::uint64_t>>
basis_vectors_with_length(const FormSpace& space, const Element& s,
                          const EnumerationBudget& budget) {
    check_vector_budget(space, budget);
    const Ring& ring = space.ring();
    const std::uint64_t total =
        pow_card(ring.size(), space.rank()).convert_to<std::uint64_t>();
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        Vector v = vector_from_scan_index(space, i);
        if (!is_basis_vec(ring, v)) continue;
        if (form_eval(space, v, v) == s) out.push_back(encode_vector(space, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PairScan enumerate_symplectic_pairs(const FormSpace& space,
                                    const EnumerationBudget& budget,
                                    unsigned workers) {
    const Ring& ring = space.ring();
    bigint vec_total = pow_card(ring.size(), space.rank());
    if (vec_total > budget.max_vectors)
        throw budget_exceeded("pair scan exceeds max_vectors");
    if (vec_total * vec_total > budget.max_pairs)
        throw budget_exceeded("pair scan exceeds max_pairs");
    const std::uint64_t total = vec_total.convert_to<std::uint64_t>();

    // only zero-length vectors can occur in a symplectic pair
    std::vector<Vector> isotropic;
    for (std::uint64_t i = 0; i < total; ++i) {
        Vector v = vector_from_scan_index(space, i);
        if (ring.is_zero(form_eval(space, v, v))) isotropic.push_back(std::move(v));
    }

    if (workers == 0)
        workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    workers = std::max(1u, std::min<unsigned>(workers, (unsigned)isotropic.size()));
    const bool collect = space.rank() == 2;
    const Element one = ring.one();

    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::vector<Matrix>> groups(workers);
    auto run = [&](unsigned w) {
        const std::size_t lo = isotropic.size() * w / workers;
        const std::size_t hi = isotropic.size() * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) {
            const Vector& u = isotropic[i];
            for (const Vector& v : isotropic) {
                if (!(form_eval(space, u, v) == one)) continue;
                ++counts[w];
                if (collect) groups[w].push_back(columns_to_matrix({u, v}));
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    PairScan out;
    for (unsigned w = 0; w < workers; ++w) {
        out.count += counts[w];
        out.group.insert(out.group.end(), groups[w].begin(), groups[w].end());
    }
    return out;
}

std::vector<Matrix> enumerate_unitary_group_naive(const FormSpace& space,
                                                  const EnumerationBudget& budget) {
    const Ring& ring = space.ring();
    const std::size_t n = space.rank();
    bigint total_big = pow_card(ring.size(), (std::uint64_t)n * n);
    if (total_big > budget.max_matrices)
        throw budget_exceeded("naive matrix scan exceeds max_matrices");
    const std::uint64_t total = total_big.convert_to<std::uint64_t>();
    const std::uint64_t card = ring.size();

    std::vector<Matrix> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Matrix x(&ring, n, n);
        std::uint64_t rem = idx;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                x.at(i, j) = ring.from_index(rem % card);
                rem /= card;
            }
        if (is_unitary(space, x)) out.push_back(std::move(x));
    }
    return out;
}

std::vector<Matrix> enumerate_unitary_group(const FormSpace& space,
                                            const EnumerationBudget& budget) {
    if (space.rank() == 2) {
        try {
            return enumerate_symplectic_pairs(space, budget).group;
        } catch (const budget_exceeded&) {
            // fall through to the naive route
        }
    }
    return enumerate_unitary_group_naive(space, budget);
}

bigint oracle_group_order(std::shared_ptr<const Ring> ring, int m,
                          const EnumerationBudget& budget) {
    bigint order = 1;
    for (int i = m; i >= 1; --i) {
        FormSpace space = standard_gram(ring, (std::size_t)i);
        order *= enumerate_symplectic_pairs(space, budget).count;
    }
    return order;
}

std::vector<std::vector<std::uint64_t>>
orbit_of(const FormSpace& space, const std::vector<Matrix>& group,
         const Vector& v) {
    std::set<std::vector<std::uint64_t>> orbit;
    for (const Matrix& g : group)
        orbit.insert(encode_vector(space, mat_apply(g, v)));
    return {orbit.begin(), orbit.end()};
}

std::pair<std::uint64_t, std::uint64_t>
reduction_image_and_kernel(const FormSpace& space, int j,
                           const std::vector<Matrix>& group) {
    const Ring& ring = space.ring();
    if (j < 1 || j >= ring.stats().e)
        throw not_proper("reduction_image_and_kernel: need 1 <= j < e");
    auto q = ring.quotient(j);
    const std::size_t n = space.rank();

    std::set<std::vector<std::uint64_t>> images;
    std::uint64_t kernel = 0;
    for (const Matrix& g : group) {
        std::vector<std::uint64_t> enc;
        enc.reserve(n * n);
        bool is_identity = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < n; ++c) {
                Element r = ring.reduce_to(*q, g.at(i, c));
                enc.push_back(q->index_of(r));
                Element expected = i == c ? q->one() : q->zero();
                if (!(r == expected)) is_identity = false;
            }
        images.insert(std::move(enc));
        if (is_identity) ++kernel;
    }
    return {images.size(), kernel};
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

} // namespace

std::vector<CountReport> verify_all(std::shared_ptr<const Ring> ring, int m,
                                    const EnumerationBudget& budget) {
    const RingStats& stats = ring->stats();
    std::vector<CountReport> out;

    std::optional<bigint> group_order;
    {
        Timer t;
        CountReport r = make_report("unitary_order_radical_form",
                                    unitary_order_radical_form(stats, m));
        try {
            group_order = oracle_group_order(ring, m, budget);
            attach_oracle(r, *group_order);
        } catch (const budget_exceeded&) {
            r.note = "skipped: enumeration budget";
        }
        r.elapsed_ms = t.ms();
        out.push_back(std::move(r));
    }
    {
        Timer t;
        CountReport r = make_report("unitary_order_skew_form",
                                    unitary_order_skew_form(stats, m));
        if (group_order) attach_oracle(r, *group_order);
        else r.note = "skipped: enumeration budget";
        r.elapsed_ms = t.ms();
        out.push_back(std::move(r));
    }

    FormSpace space = standard_gram(ring, (std::size_t)m);
    {
        Timer t;
        CountReport r =
            make_report("basis_vector_count", basis_vector_count(stats, m));
        try {
            VectorCensus census = enumerate_vectors_by_length(space, budget);
            std::optional<bigint> bucket;
            bool uniform = true;
            for (const auto& [len, count] : census.buckets) {
                (void)len;
                if (!bucket) bucket = count;
                else if (*bucket != count) uniform = false;
            }
            if (bucket && uniform) attach_oracle(r, *bucket);
            else if (bucket) {
                attach_oracle(r, bigint(-1));
                r.note = "length buckets are not uniform";
            }
        } catch (const budget_exceeded&) {
            r.note = "skipped: enumeration budget";
        }
        r.elapsed_ms = t.ms();
        out.push_back(std::move(r));
    }

    std::vector<Matrix> group;
    {
        Timer t;
        CountReport r = make_report("symplectic_pair_count",
                                    symplectic_pair_count(stats, m));
        try {
            PairScan scan = enumerate_symplectic_pairs(space, budget);
            attach_oracle(r, bigint(scan.count));
            group = std::move(scan.group);
        } catch (const budget_exceeded&) {
            r.note = "skipped: enumeration budget";
        }
        r.elapsed_ms = t.ms();
        out.push_back(std::move(r));
    }

    {
        Timer t;
        CountReport r =
            make_report("stabilizer_order", stabilizer_order(stats, m));
        if (!group.empty()) {
            Vector e1 = standard_vector(ring.get(), space.rank(), 0);
            std::uint64_t fixed = 0;
            for (const Matrix& g : group)
                if (mat_apply(g, e1) == e1) ++fixed;
            attach_oracle(r, bigint(fixed));
        } else {
            r.note = "skipped: group not enumerated";
        }
        r.elapsed_ms = t.ms();
        out.push_back(std::move(r));
    }

    for (int j = 1; j < stats.e; ++j) {
        Timer t;
        std::optional<std::pair<std::uint64_t, std::uint64_t>> scan;
        if (!group.empty()) scan = reduction_image_and_kernel(space, j, group);

        CountReport r = make_report("kernel_order(j=" + std::to_string(j) + ")",
                                    kernel_order(*ring, j, m));
        if (scan) attach_oracle(r, bigint(scan->second));
        else r.note = "skipped: group not enumerated";
        r.elapsed_ms = t.ms();
        out.push_back(std::move(r));

        Timer t2;
        auto qring = ring->quotient(j);
        CountReport ri =
            make_report("reduction_image(j=" + std::to_string(j) + ")",
                        unitary_order_radical_form(qring->stats(), m));
        if (scan) attach_oracle(ri, bigint(scan->first));
        else ri.note = "skipped: group not enumerated";
        ri.elapsed_ms = t2.ms();
        out.push_back(std::move(ri));
    }

    {
        Timer t;
        CountReport r = make_report("principal_case_order", 0);
        try {
            PrincipalReport ps = principal_structure(*ring);
            bool trivial = ring->star_is_identity();
            bool applicable =
                ps.a7_principal_radical &&
                (trivial || (ps.a8_hermitian_commute && ps.a9_star_nontrivial &&
                             ps.a10_disjoint && *ps.a10_disjoint));
            if (applicable) {
                r.formula_value =
                    principal_case_order(bigint(stats.q), stats.e, m, trivial);
                if (group_order) attach_oracle(r, *group_order);
                else r.note = "skipped: enumeration budget";
            } else {
                r.note = !ps.a7_principal_radical
                             ? "not applicable (radical is not two-sided principal)"
                             : "not applicable (principal-case hypotheses fail)";
            }
        } catch (const budget_exceeded&) {
            r.note = "skipped: enumeration budget";
        }
        r.elapsed_ms = t.ms();
        out.push_back(std::move(r));
    }

    return out;
}

} // namespace uloc
