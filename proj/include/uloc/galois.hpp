#ifndef ULOC_GALOIS_HPP
#define ULOC_GALOIS_HPP

#include <cstdint>
#include <vector>

namespace uloc {

// Coefficient vectors represent elements of Z/m[x]/(f) with f monic of
// degree d; a vector has length d, entries in [0, m).
using coeffs = std::vector<std::int64_t>;

namespace galois {

// Lexicographically smallest monic degree-d polynomial over F_p that is
// irreducible, returned as d+1 coefficients (constant term first, leading
// coefficient 1). Candidates are ordered by the base-p integer value of
// their non-leading coefficient vector, high-degree coefficients most
// significant.
std::vector<std::int64_t> find_defining_poly(std::int64_t p, int d);

bool is_irreducible_mod_p(const std::vector<std::int64_t>& f, std::int64_t p);

// Arithmetic in B = Z/m[x]/(f), m a prime power, f monic of degree d with
// coefficients reduced mod m.
coeffs poly_add(const coeffs& a, const coeffs& b, std::int64_t m);
coeffs poly_sub(const coeffs& a, const coeffs& b, std::int64_t m);
coeffs poly_neg(const coeffs& a, std::int64_t m);
coeffs poly_scale(const coeffs& a, std::int64_t c, std::int64_t m);
coeffs poly_mul(const coeffs& a, const coeffs& b,
                const std::vector<std::int64_t>& f, std::int64_t m);

// Substitution homomorphism c(x) |-> c(r) in B.
coeffs poly_eval_at(const coeffs& c, const coeffs& r,
                    const std::vector<std::int64_t>& f, std::int64_t m);

// Inverse of a unit of B = Z/p^k[x]/(f): residue-field inverse followed by
// Newton lifting y <- y(2 - ay). Throws not_a_unit.
coeffs base_inv(const coeffs& a, const std::vector<std::int64_t>& f,
                std::int64_t p, int k);

bool base_is_unit(const coeffs& a, std::int64_t p);

// Image of x under the order-2 automorphism of GR(p,k,d), d even: the mod-p
// Frobenius image x^(p^(d/2)) Hensel-lifted to a root of f mod p^k.
coeffs sigma_root(const std::vector<std::int64_t>& f, std::int64_t p, int k,
                  int d);

// Residue field F_q = F_p[x]/(f mod p), q = p^d.
class ResidueField {
public:
    ResidueField(std::int64_t p, std::vector<std::int64_t> f_mod_p);

    std::int64_t p() const { return p_; }
    int degree() const { return d_; }
    std::int64_t q() const { return q_; }

    coeffs zero() const { return coeffs(d_, 0); }
    coeffs one() const;
    bool is_zero(const coeffs& a) const;
    coeffs add(const coeffs& a, const coeffs& b) const;
    coeffs sub(const coeffs& a, const coeffs& b) const;
    coeffs neg(const coeffs& a) const;
    coeffs mul(const coeffs& a, const coeffs& b) const;
    coeffs pow(const coeffs& a, std::int64_t n) const;
    coeffs inv(const coeffs& a) const; // a^(q-2); throws not_a_unit on zero

private:
    std::int64_t p_;
    int d_;
    std::int64_t q_;
    std::vector<std::int64_t> f_;
};

bool is_prime(std::int64_t n);

std::int64_t pow_i64(std::int64_t b, int e);

} // namespace galois
} // namespace uloc

#endif
