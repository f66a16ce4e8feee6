#ifndef ULOC_ORDERS_HPP
#define ULOC_ORDERS_HPP

#include "uloc/errors.hpp"
#include "uloc/ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace uloc {

using bigint = boost::multiprecision::cpp_int;

// One named count: the closed-form value, optionally the exhaustive value it
// was checked against.
struct CountReport {
    std::string name;
    bigint formula_value;
    std::optional<bigint> oracle_value;
    std::optional<bool> match;
    double elapsed_ms = 0.0;
    std::string note; // "skipped: ..." when the oracle was out of budget

    bool failed() const { return match.has_value() && !*match; }
};

CountReport make_report(std::string name, bigint formula);
void attach_oracle(CountReport& r, bigint oracle);

std::string report_to_json(const CountReport& r);
std::string report_list_to_json(const std::vector<CountReport>& rs);
std::string report_csv_header();
std::string report_to_csv(const CountReport& r);

bigint big_pow(bigint base, std::uint64_t exp);

// q^{m^2} (q^{2m}-1)(q^{2(m-1)}-1)...(q^2-1)
bigint sp_order(bigint q, int m);

// |r|^{2m^2-m} |m|^{2m} q^{m^2} (q^{2m}-1)...(q^2-1)
bigint unitary_order_radical_form(const RingStats& stats, int m);

// |r|^{m(m+1)} |A|^{m^2} (q^{2m}-1)...(q^2-1) / |S|^{2m};
// equals unitary_order_radical_form on every valid stats block.
bigint unitary_order_skew_form(const RingStats& stats, int m);

// |i|^{2m^2-m} |i ^ m|^{2m} for i = r^j; the subset cardinalities come from
// ring enumeration, so the ring must be desk scale. Requires 1 <= j < e.
bigint kernel_order(const Ring& ring, int j, int m);

// N(m,s) = (|A|^{2m} - |r|^{2m}) / |S|, independent of the length s.
bigint basis_vector_count(const RingStats& stats, int m);
// the rank-1 form (|A| - |r|)(|R| + |m|); must agree with the general one.
bigint basis_vector_count_rank1(const RingStats& stats);

// (|A|^{2m} - |r|^{2m}) |A|^{2m-1} / |S|^2; equals |U_2(A)| when m = 1.
bigint symplectic_pair_count(const RingStats& stats, int m);

// |U_{2(m-1)}(A)| * |A|^{2m-1} / |S|, with |U_0| = 1.
bigint stabilizer_order(const RingStats& stats, int m);

struct branch_unavailable : invalid_spec {
    using invalid_spec::invalid_spec;
};

// Unitary group order in the principal commutative case, keyed on the star
// and the parity of e:
//   star trivial:  q^{(e-1)(2m^2+m)+m^2} P
//   e = 2l:        q^{(2l-1)(2m^2-m)} q^{2(l-1)m} q^{m^2} P
//   e = 2l-1 odd:  q^{(2l-2)(2m^2-m)} q^{2(l-1)m} q^{m^2} P
// with P = (q^{2m}-1)...(q^2-1).
bigint principal_case_order(bigint q, int e, int m, bool star_trivial);

// Exhaustive structure probe for the principal-case hypotheses.
struct PrincipalReport {
    bool a7_principal_radical = false;   // some a with Aa = aA = r
    bool a8_hermitian_commute = false;   // R is commutative
    bool a9_star_nontrivial = false;
    bool r_multiplicatively_closed = false;

    // first hermitian-or-skew two-sided generator in enumeration order,
    // present iff a7 holds (one always exists in that case)
    std::optional<Element> generator;
    bool generator_is_skew = false;
    std::optional<bool> a10_disjoint;            // R ^ R x = {0}
    std::optional<std::uint64_t> kernel_size;    // # of r in R with r x = 0

    // parity profile q^{2l-1} / q^{2l-2} for |r| and q^{l-1} for |m|,
    // present iff a7-a10 all hold
    std::optional<std::uint64_t> predicted_card_rad;
    std::optional<std::uint64_t> predicted_card_m;
    std::optional<bool> parity_cards_match;
};

PrincipalReport principal_structure(const Ring& ring);

std::string principal_report_to_text(const Ring& ring, const PrincipalReport& r);

} // namespace uloc

#endif
