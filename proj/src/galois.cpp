#include "uloc/galois.hpp"
#include "uloc/errors.hpp"

#include <algorithm>
#include <cassert>

namespace uloc::galois {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Remainder of a (dense, any length) modulo monic f, coefficients mod m.
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& f,
                                   std::int64_t m) {
    const int d = static_cast<int>(f.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= d; --i) {
        std::int64_t c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (int j = 0; j < d; ++j)
            a[i - d + j] = mod(a[i - d + j] - c * f[j], m);
    }
    a.resize(d);
    return a;
}

} // namespace

std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t i = 2; i * i <= n; ++i)
        if (n % i == 0) return false;
    return true;
}

coeffs poly_add(const coeffs& a, const coeffs& b, std::int64_t m) {
    coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] + b[i], m);
    return r;
}

coeffs poly_sub(const coeffs& a, const coeffs& b, std::int64_t m) {
    coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] - b[i], m);
    return r;
}

coeffs poly_neg(const coeffs& a, std::int64_t m) {
    coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(-a[i], m);
    return r;
}

coeffs poly_scale(const coeffs& a, std::int64_t c, std::int64_t m) {
    coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] * c, m);
    return r;
}

coeffs poly_mul(const coeffs& a, const coeffs& b,
                const std::vector<std::int64_t>& f, std::int64_t m) {
    const std::size_t d = a.size();
    std::vector<std::int64_t> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] = mod(prod[i + j] + a[i] * b[j], m);
    }
    return poly_rem(std::move(prod), f, m);
}

coeffs poly_eval_at(const coeffs& c, const coeffs& r,
                    const std::vector<std::int64_t>& f, std::int64_t m) {
    // Horner: c(r) = (...(c_{d-1} r + c_{d-2}) r + ...) + c_0
    const int d = static_cast<int>(c.size());
    coeffs acc(d, 0);
    for (int i = d - 1; i >= 0; --i) {
        acc = poly_mul(acc, r, f, m);
        acc[0] = mod(acc[0] + c[i], m);
    }
    return acc;
}

bool base_is_unit(const coeffs& a, std::int64_t p) {
    for (auto c : a)
        if (c % p != 0) return true;
    return false;
}

coeffs base_inv(const coeffs& a, const std::vector<std::int64_t>& f,
                std::int64_t p, int k) {
    if (!base_is_unit(a, p)) throw not_a_unit("base_inv: element is in the radical");
    const int d = static_cast<int>(a.size());
    const std::int64_t m = pow_i64(p, k);

    std::vector<std::int64_t> fbar(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fbar[i] = mod(f[i], p);
    ResidueField fq(p, fbar);
    coeffs abar(d);
    for (int i = 0; i < d; ++i) abar[i] = mod(a[i], p);

    coeffs y = fq.inv(abar); // lifted canonically: entries already in [0,p)
    // y correct mod p; each pass squares the precision in the radical
    int passes = 0;
    for (int e = 1; e < k; e *= 2) ++passes;
    for (int i = 0; i < passes; ++i) {
        coeffs ay = poly_mul(a, y, f, m);
        coeffs two_minus(ay.size());
        for (std::size_t j = 0; j < ay.size(); ++j) two_minus[j] = mod(-ay[j], m);
        two_minus[0] = mod(two_minus[0] + 2, m);
        y = poly_mul(y, two_minus, f, m);
    }
    coeffs check = poly_mul(a, y, f, m);
    for (int i = 0; i < d; ++i)
        if (check[i] != (i == 0 ? 1 : 0))
            throw internal_defect("base_inv: lifted inverse failed verification");
    return y;
}

bool is_irreducible_mod_p(const std::vector<std::int64_t>& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2 over F_p.
    for (int dg = 1; dg <= d / 2; ++dg) {
        std::vector<std::int64_t> g(dg + 1, 0);
        g[dg] = 1;
        const std::int64_t count = pow_i64(p, dg);
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::int64_t t = idx;
            for (int i = 0; i < dg; ++i) {
                g[i] = t % p;
                t /= p;
            }
            // Does g divide f? Compute f mod g.
            std::vector<std::int64_t> rem(f);
            for (int i = static_cast<int>(rem.size()) - 1; i >= dg; --i) {
                std::int64_t c = rem[i] % p;
                if (c == 0) continue;
                rem[i] = 0;
                for (int j = 0; j < dg; ++j)
                    rem[i - dg + j] = mod(rem[i - dg + j] - c * g[j], p);
            }
            bool zero = true;
            for (int i = 0; i < dg; ++i)
                if (rem[i] % p != 0) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> find_defining_poly(std::int64_t p, int d) {
    std::vector<std::int64_t> f(d + 1, 0);
    f[d] = 1;
    const std::int64_t count = pow_i64(p, d);
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::int64_t t = idx;
        for (int i = 0; i < d; ++i) {
            f[i] = t % p;
            t /= p;
        }
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw internal_defect("find_defining_poly: no irreducible polynomial found");
}

coeffs sigma_root(const std::vector<std::int64_t>& f, std::int64_t p, int k,
                  int d) {
    if (d % 2 != 0)
        throw invalid_spec("sigma_root: order-2 automorphism requires even degree");
    const std::int64_t m = pow_i64(p, k);
    std::vector<std::int64_t> fbar(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fbar[i] = mod(f[i], p);
    ResidueField fq(p, fbar);

    // candidate root mod p: x^(p^(d/2))
    coeffs x = fq.zero();
    if (d == 1) x[0] = mod(-fbar[0], p);
    else x[1] = 1;
    std::int64_t exponent = 1;
    for (int i = 0; i < d / 2; ++i) exponent *= p;
    coeffs r = fq.pow(x, exponent);

    // Hensel lift: Newton iteration r <- r - f(r)/f'(r) in Z/p^k[x]/(f)
    std::vector<std::int64_t> fk(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fk[i] = mod(f[i], m);
    coeffs fprime(d, 0);
    for (int i = 1; i <= d; ++i) fprime[i - 1] = mod(fk[i] * i, m);

    int passes = 0;
    for (int e = 1; e < k; e *= 2) ++passes;
    ++passes; // one verification pass even at k = 1
    for (int it = 0; it < passes; ++it) {
        // f(r) in B, including the monic leading term
        coeffs val = poly_eval_at(coeffs(fk.begin(), fk.begin() + d), r, fk, m);
        coeffs rd = r;
        for (int i = 1; i < d; ++i) rd = poly_mul(rd, r, fk, m);
        val = poly_add(val, rd, m);
        bool zero = std::all_of(val.begin(), val.end(),
                                [](std::int64_t c) { return c == 0; });
        if (zero) break;
        coeffs der = poly_eval_at(fprime, r, fk, m);
        coeffs corr = poly_mul(val, base_inv(der, fk, p, k), fk, m);
        r = poly_sub(r, corr, m);
    }
    // verify f(r) = 0 exactly
    coeffs val = poly_eval_at(coeffs(fk.begin(), fk.begin() + d), r, fk, m);
    coeffs rd = r;
    for (int i = 1; i < d; ++i) rd = poly_mul(rd, r, fk, m);
    val = poly_add(val, rd, m);
    for (auto c : val)
        if (c != 0) throw internal_defect("sigma_root: Hensel lift did not converge");
    return r;
}

ResidueField::ResidueField(std::int64_t p, std::vector<std::int64_t> f_mod_p)
    : p_(p), d_(static_cast<int>(f_mod_p.size()) - 1), f_(std::move(f_mod_p)) {
    q_ = pow_i64(p_, d_);
}

coeffs ResidueField::one() const {
    coeffs r(d_, 0);
    r[0] = 1;
    return r;
}

bool ResidueField::is_zero(const coeffs& a) const {
    return std::all_of(a.begin(), a.end(),
                       [this](std::int64_t c) { return mod(c, p_) == 0; });
}

coeffs ResidueField::add(const coeffs& a, const coeffs& b) const {
    return poly_add(a, b, p_);
}

coeffs ResidueField::sub(const coeffs& a, const coeffs& b) const {
    return poly_sub(a, b, p_);
}

coeffs ResidueField::neg(const coeffs& a) const { return poly_neg(a, p_); }

coeffs ResidueField::mul(const coeffs& a, const coeffs& b) const {
    return poly_mul(a, b, f_, p_);
}

coeffs ResidueField::pow(const coeffs& a, std::int64_t n) const {
    coeffs r = one();
    coeffs base = a;
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

coeffs ResidueField::inv(const coeffs& a) const {
    if (is_zero(a)) throw not_a_unit("ResidueField::inv of zero");
    return pow(a, q_ - 2);
}

} // namespace uloc::galois
