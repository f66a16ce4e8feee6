#include "uloc/orders.hpp"
#include "uloc/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace uloc {

CountReport make_report(std::string name, bigint formula) {
    CountReport r;
    r.name = std::move(name);
    r.formula_value = std::move(formula);
    return r;
}

void attach_oracle(CountReport& r, bigint oracle) {
    r.oracle_value = std::move(oracle);
    r.match = (*r.oracle_value == r.formula_value);
}

namespace {

nlohmann::json report_json(const CountReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["formula_value"] = r.formula_value.str();
    if (r.oracle_value)
        j["oracle_value"] = r.oracle_value->str();
    else
        j["oracle_value"] = nullptr;
    if (r.match)
        j["match"] = *r.match;
    else
        j["match"] = nullptr;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace

std::string report_to_json(const CountReport& r) {
    return report_json(r).dump();
}

std::string report_list_to_json(const std::vector<CountReport>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return arr.dump(2);
}

std::string report_csv_header() {
    return "name,formula_value,oracle_value,match,elapsed_ms";
}

std::string report_to_csv(const CountReport& r) {
    std::ostringstream os;
    os << r.name << ',' << r.formula_value.str() << ',';
    if (r.oracle_value) os << r.oracle_value->str();
    os << ',';
    if (r.match) os << (*r.match ? "true" : "false");
    os << ',' << r.elapsed_ms;
    return os.str();
}

bigint big_pow(bigint base, std::uint64_t exp) {
    bigint r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

namespace {

// (q^{2m}-1)(q^{2(m-1)}-1)...(q^2-1)
bigint euler_product(const bigint& q, int m) {
    bigint r = 1;
    for (int i = 1; i <= m; ++i) r *= big_pow(q, 2 * (std::uint64_t)i) - 1;
    return r;
}

void check_m(int m) {
    if (m < 1) throw invalid_spec("order formula: m must be >= 1");
}

} // namespace

bigint sp_order(bigint q, int m) {
    check_m(m);
    return big_pow(q, (std::uint64_t)m * m) * euler_product(q, m);
}

bigint unitary_order_radical_form(const RingStats& stats, int m) {
    check_m(m);
    const std::uint64_t mm = (std::uint64_t)m;
    return big_pow(stats.card_rad, 2 * mm * mm - mm) *
           big_pow(stats.card_m, 2 * mm) *
           big_pow(stats.q, mm * mm) * euler_product(stats.q, m);
}

bigint unitary_order_skew_form(const RingStats& stats, int m) {
    check_m(m);
    const std::uint64_t mm = (std::uint64_t)m;
    bigint num = big_pow(stats.card_rad, mm * (mm + 1)) *
                 big_pow(stats.card_A, mm * mm) * euler_product(stats.q, m);
    bigint den = big_pow(stats.card_S, 2 * mm);
    if (num % den != 0)
        throw internal_defect("unitary_order_skew_form: non-integral quotient");
    return num / den;
}

bigint kernel_order(const Ring& ring, int j, int m) {
    check_m(m);
    if (j < 1 || j >= ring.stats().e)
        throw not_proper("kernel_order: need 1 <= j < e");
    std::uint64_t card_i = ring.radical_power_size(j);
    std::uint64_t card_im = 0;
    for (const Element& a : ring.enumerate_subset(Subset::rad_power, j))
        if (ring.star(a) == a) ++card_im;
    const std::uint64_t mm = (std::uint64_t)m;
    return big_pow(card_i, 2 * mm * mm - mm) * big_pow(card_im, 2 * mm);
}

bigint basis_vector_count(const RingStats& stats, int m) {
    check_m(m);
    const std::uint64_t mm = (std::uint64_t)m;
    bigint num = big_pow(stats.card_A, 2 * mm) - big_pow(stats.card_rad, 2 * mm);
    if (num % bigint(stats.card_S) != 0)
        throw internal_defect("basis_vector_count: non-integral quotient");
    return num / stats.card_S;
}

bigint basis_vector_count_rank1(const RingStats& stats) {
    return bigint(stats.card_A - stats.card_rad) *
           (bigint(stats.card_R) + stats.card_m);
}

bigint symplectic_pair_count(const RingStats& stats, int m) {
    check_m(m);
    const std::uint64_t mm = (std::uint64_t)m;
    bigint num = (big_pow(stats.card_A, 2 * mm) - big_pow(stats.card_rad, 2 * mm)) *
                 big_pow(stats.card_A, 2 * mm - 1);
    bigint den = bigint(stats.card_S) * stats.card_S;
    if (num % den != 0)
        throw internal_defect("symplectic_pair_count: non-integral quotient");
    return num / den;
}

bigint stabilizer_order(const RingStats& stats, int m) {
    check_m(m);
    const std::uint64_t mm = (std::uint64_t)m;
    bigint sub = m == 1 ? bigint(1) : unitary_order_radical_form(stats, m - 1);
    bigint num = sub * big_pow(stats.card_A, 2 * mm - 1);
    if (num % bigint(stats.card_S) != 0)
        throw internal_defect("stabilizer_order: non-integral quotient");
    return num / stats.card_S;
}

bigint principal_case_order(bigint q, int e, int m, bool star_trivial) {
    check_m(m);
    if (e < 1) throw branch_unavailable("principal_case_order: e must be >= 1");
    const std::uint64_t mm = (std::uint64_t)m;
    bigint p = euler_product(q, m);
    if (star_trivial)
        return big_pow(q, (std::uint64_t)(e - 1) * (2 * mm * mm + mm) + mm * mm) * p;
    if (e % 2 == 0) {
        const std::uint64_t l = (std::uint64_t)e / 2;
        return big_pow(q, (2 * l - 1) * (2 * mm * mm - mm)) *
               big_pow(q, 2 * (l - 1) * mm) * big_pow(q, mm * mm) * p;
    }
    const std::uint64_t l = ((std::uint64_t)e + 1) / 2;
    return big_pow(q, (2 * l - 2) * (2 * mm * mm - mm)) *
           big_pow(q, 2 * (l - 1) * mm) * big_pow(q, mm * mm) * p;
}

PrincipalReport principal_structure(const Ring& ring) {
    if (!ring.desk_scale())
        throw budget_exceeded("principal_structure: ring is not desk scale");
    PrincipalReport out;

    std::vector<Element> all = ring.enumerate_elements();
    std::vector<Element> rad = ring.enumerate_subset(Subset::rad_power, 1);
    std::vector<Element> herm;
    for (const Element& a : all)
        if (ring.star(a) == a) herm.push_back(a);

    std::unordered_set<std::uint64_t> rad_idx;
    for (const Element& a : rad) rad_idx.insert(ring.index_of(a));

    auto generates_two_sided = [&](const Element& a) {
        std::unordered_set<std::uint64_t> left, right;
        for (const Element& x : all) {
            left.insert(ring.index_of(ring.mul(x, a)));
            right.insert(ring.index_of(ring.mul(a, x)));
        }
        return left == rad_idx && right == rad_idx;
    };

    // a7: any two-sided principal generator of the radical; the chosen x is
    // additionally hermitian or skew, first such in enumeration order
    std::optional<Element> any_gen;
    for (const Element& a : rad) {
        bool symmetric = ring.star(a) == a || ring.star(a) == ring.neg(a);
        if (!symmetric && any_gen) continue;
        if (!generates_two_sided(a)) continue;
        if (!any_gen) any_gen = a;
        if (symmetric) {
            out.generator = a;
            out.generator_is_skew = !(ring.star(a) == a);
            break;
        }
    }
    out.a7_principal_radical = any_gen.has_value();

    out.a9_star_nontrivial = false;
    for (const Element& a : all)
        if (!(ring.star(a) == a)) {
            out.a9_star_nontrivial = true;
            break;
        }

    out.a8_hermitian_commute = true;
    out.r_multiplicatively_closed = true;
    std::unordered_set<std::uint64_t> herm_idx;
    for (const Element& a : herm) herm_idx.insert(ring.index_of(a));
    for (const Element& a : herm)
        for (const Element& b : herm) {
            Element ab = ring.mul(a, b);
            if (!(ab == ring.mul(b, a))) out.a8_hermitian_commute = false;
            if (!herm_idx.count(ring.index_of(ab)))
                out.r_multiplicatively_closed = false;
        }

    if (out.generator) {
        const Element& x = *out.generator;
        bool disjoint = true;
        std::uint64_t kernel = 0;
        for (const Element& r : herm) {
            Element rx = ring.mul(r, x);
            if (ring.is_zero(rx)) ++kernel;
            else if (herm_idx.count(ring.index_of(rx))) disjoint = false;
        }
        out.a10_disjoint = disjoint;
        out.kernel_size = kernel;
    }

    if (out.a7_principal_radical && out.a8_hermitian_commute &&
        out.a9_star_nontrivial && out.a10_disjoint && *out.a10_disjoint) {
        const RingStats& s = ring.stats();
        const std::uint64_t q = s.q;
        const int e = s.e;
        const std::uint64_t l = e % 2 == 0 ? (std::uint64_t)e / 2
                                           : ((std::uint64_t)e + 1) / 2;
        auto upow = [&](std::uint64_t base, std::uint64_t exp) {
            std::uint64_t r = 1;
            for (std::uint64_t i = 0; i < exp; ++i) r *= base;
            return r;
        };
        out.predicted_card_rad = upow(q, e % 2 == 0 ? 2 * l - 1 : 2 * l - 2);
        out.predicted_card_m = upow(q, l - 1);
        out.parity_cards_match = (*out.predicted_card_rad == s.card_rad &&
                                  *out.predicted_card_m == s.card_m);
    }
    return out;
}

namespace {

std::string element_text(const Ring& ring, const Element& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.c0.size(); ++i)
        os << (i ? "," : "") << a.c0[i];
    os << '|';
    for (std::size_t i = 0; i < a.c1.size(); ++i)
        os << (i ? "," : "") << a.c1[i];
    os << ']';
    (void)ring;
    return os.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string principal_report_to_text(const Ring& ring,
                                     const PrincipalReport& r) {
    std::ostringstream os;
    os << "radical is two-sided principal: " << yn(r.a7_principal_radical) << '\n';
    os << "hermitian part commutes:        " << yn(r.a8_hermitian_commute) << '\n';
    os << "star is nontrivial:             " << yn(r.a9_star_nontrivial) << '\n';
    os << "hermitian part mult. closed:    " << yn(r.r_multiplicatively_closed) << '\n';
    if (r.generator) {
        os << "chosen generator x:             " << element_text(ring, *r.generator)
           << " (" << (r.generator_is_skew ? "skew-hermitian" : "hermitian") << ")\n";
        os << "R and Rx meet only in 0:        " << yn(*r.a10_disjoint) << '\n';
        os << "kernel of r -> rx on R:         " << *r.kernel_size << '\n';
    }
    if (r.predicted_card_rad) {
        os << "parity-predicted |rad|, |m|:    " << *r.predicted_card_rad << ", "
           << *r.predicted_card_m << " (match: " << yn(*r.parity_cards_match)
           << ")\n";
    }
    return os.str();
}

} // namespace uloc
