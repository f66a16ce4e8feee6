#ifndef ULOC_RING_HPP
#define ULOC_RING_HPP

#include "uloc/galois.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace uloc {

enum class StarMode { quadratic, trivial };

// A finite local ring with involution from the twisted quadratic extension
// family: A = B[t;sigma]/(t^2 - b), B = GR(p,k,d), b = p^j or 0, with an
// optional extra relation t^(2k-1) = 0, or A = B itself with * = identity.
struct RingSpec {
    std::int64_t p = 3;
    int k = 1;
    int d = 1;
    int sigma_order = 1;        // 2 requires d even
    int b_exponent = -1;        // -1 encodes b = 0, else b = p^j with 1 <= j <= k
    bool truncate_odd = false;
    StarMode star_mode = StarMode::quadratic;
};

struct RingStats {
    std::uint64_t card_A = 0;
    std::uint64_t card_rad = 0;
    int e = 0;                  // nilpotency degree of the radical
    std::uint64_t q = 0;        // residue field size
    std::uint64_t card_R = 0;   // hermitian elements
    std::uint64_t card_S = 0;   // skew-hermitian elements
    std::uint64_t card_m = 0;   // R intersect radical
};

class Ring;

// A canonical-form ring element c0 + c1*t. Coefficient vectors have length d
// with entries reduced modulo p^k0 (c0 slot) and p^k1 (c1 slot). Elements are
// immutable values.
struct Element {
    const Ring* ring = nullptr;
    coeffs c0;
    coeffs c1;

    // Equality = equality of canonical coefficient vectors, between elements
    // of the same (or structurally identical) ring.
    bool operator==(const Element& other) const;
    bool operator!=(const Element& other) const { return !(*this == other); }
};

enum class Subset { R, S, m, rad_power };

class Ring : public std::enable_shared_from_this<Ring> {
public:
    // Construct and validate a ring. For |A| <= min(budget, 10^6) the axioms
    // (A1)-(A4) are checked exhaustively; larger rings are validated
    // structurally (by construction).
    static std::shared_ptr<const Ring> make(const RingSpec& spec,
                                            std::uint64_t budget = default_budget);

    static constexpr std::uint64_t default_budget = 1ull << 20;

    const RingStats& stats() const { return stats_; }
    std::uint64_t size() const { return stats_.card_A; }
    std::int64_t p() const { return p_; }
    int d() const { return d_; }
    int k0() const { return k0_; }
    int k1() const { return k1_; }
    int b_exponent() const { return b_exp_; }
    bool has_sigma() const { return has_sigma_; }
    bool star_is_identity() const { return k1_ == 0; }
    const std::vector<std::int64_t>& defining_poly() const { return f_; }
    std::string describe() const;

    // Two rings with identical construction data carry identical element
    // encodings even when they are distinct objects.
    bool same_structure(const Ring& other) const;

    Element zero() const;
    Element one() const;
    Element t() const;             // zero when k1 == 0
    Element from_int(std::int64_t n) const;
    Element make_element(coeffs c0, coeffs c1) const; // canonicalizes

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element star(const Element& a) const;
    bool is_unit(const Element& a) const;
    Element inv(const Element& a) const;
    bool is_zero(const Element& a) const;

    // Order-2 automorphism of the base Galois ring; throws when sigma_order=1.
    coeffs sigma_on_base(const coeffs& c) const;

    // Deterministic element <-> index encoding, index in [0, |A|).
    std::uint64_t index_of(const Element& a) const;
    Element from_index(std::uint64_t idx) const;

    // Radical powers r^i are determined by an exponent profile:
    // r^i = p^a B + p^c B t. in_radical_power(a, i) tests membership; i = 0
    // is all of A, i >= e is {0}.
    bool in_radical_power(const Element& a, int i) const;
    // |r^i| and |r^i intersect m| (the latter by scan at desk scale).
    std::uint64_t radical_power_size(int i) const;

    // Exhaustive listings; throw budget_exceeded above the enumeration budget.
    std::vector<Element> enumerate_elements() const;
    std::vector<Element> enumerate_subset(Subset which, int j = 0) const;

    // Quotient A/r^j with induced involution, plus the canonical maps.
    // Requires 1 <= j < e.
    std::shared_ptr<const Ring> quotient(int j) const;
    Element reduce_to(const Ring& q, const Element& a) const;
    Element lift_from(const Ring& q, const Element& a) const;

    // Residue field F_q and the residue image of an element.
    const galois::ResidueField& residue_field() const { return *fq_; }
    coeffs residue(const Element& a) const;
    Element lift_residue(const coeffs& rbar) const; // canonical coefficient lift

    std::uint64_t budget() const { return budget_; }
    bool desk_scale() const { return desk_; }

    // Lazily built index tables for enumeration-heavy callers; available only
    // for |A| <= 2048.
    bool tables_available() const;
    std::int32_t mul_idx(std::int32_t a, std::int32_t b) const;
    std::int32_t add_idx(std::int32_t a, std::int32_t b) const;
    std::int32_t star_idx(std::int32_t a) const;
    std::int32_t neg_idx(std::int32_t a) const;
    bool unit_idx(std::int32_t a) const;
    bool rad_power_idx(std::int32_t a, int i) const;

private:
    Ring() = default;
    static std::shared_ptr<const Ring> make_internal(std::int64_t p, int d,
                                                     int k0, int k1, int b_exp,
                                                     bool has_sigma,
                                                     std::uint64_t budget);
    void compute_stats();
    void validate_exhaustively() const;
    void check_same_ring(const Element& a, const Element& b) const;
    std::pair<int, int> radical_exponents(int i) const; // (a_i, c_i), capped

    std::int64_t p_ = 0;
    int d_ = 0;
    int k0_ = 0;
    int k1_ = 0;
    std::int64_t m0_ = 0; // p^k0
    std::int64_t m1_ = 0; // p^k1 (1 when k1 == 0)
    std::vector<std::int64_t> f_;      // monic, d+1 coeffs, reduced mod m0
    int b_exp_ = -1;
    coeffs b_val_;                     // p^b_exp mod m0 (zero vector for b = 0)
    bool has_sigma_ = false;
    coeffs sigma_root_;                // image of x, mod m0
    std::shared_ptr<galois::ResidueField> fq_;
    RingStats stats_;
    std::uint64_t budget_ = default_budget;
    bool desk_ = false;

    struct Tables;
    mutable std::shared_ptr<Tables> tables_;
    void build_tables() const;
};

// Element-level free operators for readability; both operands must belong to
// the same ring.
inline Element operator+(const Element& a, const Element& b) { return a.ring->add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return a.ring->sub(a, b); }
inline Element operator-(const Element& a) { return a.ring->neg(a); }
inline Element operator*(const Element& a, const Element& b) { return a.ring->mul(a, b); }

} // namespace uloc

#endif
