#include "uloc/ring.hpp"
#include "uloc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace uloc {

using galois::pow_i64;

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

coeffs reduce_vec(const coeffs& a, std::int64_t m) {
    coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], m);
    return r;
}

bool all_zero(const coeffs& a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

} // namespace

struct Ring::Tables {
    std::vector<std::int32_t> mul;
    std::vector<std::int32_t> add;
    std::vector<std::int32_t> star;
    std::vector<std::int32_t> neg;
    std::vector<std::uint8_t> unit;
    std::vector<std::vector<std::uint8_t>> radpow; // index j in [0, e]
    std::size_t n = 0;
};

bool Element::operator==(const Element& other) const {
    if (ring != other.ring &&
        (ring == nullptr || other.ring == nullptr || !ring->same_structure(*other.ring)))
        return false;
    return c0 == other.c0 && c1 == other.c1;
}

std::shared_ptr<const Ring> Ring::make(const RingSpec& spec, std::uint64_t budget) {
    if (!galois::is_prime(spec.p) || spec.p < 3)
        throw invalid_spec("p must be an odd prime");
    if (spec.k < 1) throw invalid_spec("k must be positive");
    if (spec.d < 1) throw invalid_spec("d must be positive");
    if (spec.sigma_order != 1 && spec.sigma_order != 2)
        throw invalid_spec("sigma_order must be 1 or 2");
    if (spec.sigma_order == 2 && spec.d % 2 != 0)
        throw invalid_spec("sigma_order = 2 requires even residue degree d");
    if (spec.b_exponent != -1 && (spec.b_exponent < 1 || spec.b_exponent > spec.k))
        throw invalid_spec("b_exponent must satisfy 1 <= j <= k (or b = 0)");
    if (spec.star_mode == StarMode::trivial && spec.sigma_order != 1)
        throw invalid_spec("trivial star mode forces sigma_order = 1");

    int k0 = spec.k;
    int k1 = 0;
    int b_exp = spec.b_exponent;
    if (spec.star_mode == StarMode::quadratic) {
        k1 = spec.k;
        if (spec.truncate_odd) {
            // t^(2k-1) = 0: with b = p^j this is p^(j(k-1)) t = 0, so the c1
            // slot lives mod p^min(k, j(k-1)). For b = 0 the relation is
            // already implied by t^2 = 0 unless k = 1, where it kills t.
            if (b_exp >= 1)
                k1 = std::min(spec.k, b_exp * (spec.k - 1));
            else if (spec.k == 1)
                k1 = 0;
        }
    } else {
        b_exp = -1;
    }
    return make_internal(spec.p, spec.d, k0, k1, b_exp,
                         spec.sigma_order == 2 && k1 > 0, budget);
}

std::shared_ptr<const Ring> Ring::make_internal(std::int64_t p, int d, int k0,
                                                int k1, int b_exp,
                                                bool has_sigma,
                                                std::uint64_t budget) {
    auto ring = std::shared_ptr<Ring>(new Ring());
    ring->p_ = p;
    ring->d_ = d;
    ring->k0_ = k0;
    ring->k1_ = k1;
    ring->m0_ = pow_i64(p, k0);
    ring->m1_ = k1 > 0 ? pow_i64(p, k1) : 1;
    ring->b_exp_ = b_exp;
    ring->has_sigma_ = has_sigma && k1 > 0;
    ring->budget_ = budget;

    auto f = galois::find_defining_poly(p, d);
    for (auto& c : f) c = mod(c, ring->m0_);
    ring->f_ = f;

    std::vector<std::int64_t> fbar(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fbar[i] = mod(f[i], p);
    ring->fq_ = std::make_shared<galois::ResidueField>(p, fbar);

    ring->b_val_ = coeffs(d, 0);
    if (b_exp >= 1 && k1 > 0) ring->b_val_[0] = mod(pow_i64(p, b_exp), ring->m0_);
    // multiplication of two c1 slots lands in the c0 slot scaled by b; the
    // result must be well defined from c1 mod p^k1 alone
    if (b_exp >= 1 && k1 > 0 && k1 + b_exp < k0)
        throw internal_defect("inconsistent slot moduli: k1 + j < k0");

    if (ring->has_sigma_)
        ring->sigma_root_ = galois::sigma_root(ring->f_, p, k0, d);

    ring->compute_stats();
    if (ring->size() <= std::min<std::uint64_t>(budget, 1000000ull)) {
        ring->desk_ = true;
        ring->validate_exhaustively();
    }
    if (ring->size() <= 2048) ring->build_tables();
    return ring;
}

std::pair<int, int> Ring::radical_exponents(int i) const {
    if (i <= 0) return {0, 0};
    int a, c;
    if (k1_ == 0) {
        a = i;
        c = 0;
    } else if (b_exp_ == 1) {
        a = (i + 1) / 2;
        c = i / 2;
    } else { // b = 0 or b = p^j with j >= 2
        a = i;
        c = i - 1;
    }
    return {std::min(a, k0_), std::min(c, k1_)};
}

void Ring::compute_stats() {
    const std::uint64_t q = static_cast<std::uint64_t>(pow_i64(p_, d_));
    std::uint64_t size = 1;
    for (int i = 0; i < d_; ++i) size *= static_cast<std::uint64_t>(m0_);
    if (k1_ > 0)
        for (int i = 0; i < d_; ++i) size *= static_cast<std::uint64_t>(m1_);
    stats_.card_A = size;
    stats_.q = q;
    stats_.card_rad = size / q;

    int e = 1;
    while (true) {
        auto [a, c] = radical_exponents(e);
        if (a >= k0_ && c >= k1_) break;
        ++e;
    }
    stats_.e = e;

    auto powq = [&](int exp_k, int half) {
        // p^(exp_k * d) or p^(exp_k * d / 2)
        std::uint64_t r = 1;
        int n = half ? exp_k * d_ / 2 : exp_k * d_;
        for (int i = 0; i < n; ++i) r *= static_cast<std::uint64_t>(p_);
        return r;
    };
    if (k1_ == 0) {
        stats_.card_R = size;
        stats_.card_S = 1;
        stats_.card_m = stats_.card_rad;
    } else if (!has_sigma_) {
        stats_.card_R = powq(k0_, false);
        stats_.card_S = powq(k1_, false);
        stats_.card_m = powq(k0_ - 1, false);
    } else {
        stats_.card_R = powq(k0_, false) * powq(k1_, true);
        stats_.card_S = powq(k1_, true);
        stats_.card_m = powq(k0_ - 1, false) * powq(k1_, true);
    }
    if (stats_.card_R * stats_.card_S != stats_.card_A)
        throw internal_defect("stats: |A| != |R||S|");
}

void Ring::validate_exhaustively() const {
    const std::uint64_t n = size();
    Element two = from_int(2);
    if (!is_unit(two)) throw axiom_failure("(A2) fails: 2 is not a unit");

    std::uint64_t count_R = 0, count_S = 0, count_m = 0, count_rad = 0;
    std::vector<std::uint64_t> rad_indices;
    for (std::uint64_t i = 0; i < n; ++i) {
        Element a = from_index(i);
        const bool unit = is_unit(a);
        const bool rad = in_radical_power(a, 1);
        if (unit == rad)
            throw axiom_failure("(A1) fails: unit/radical partition broken");
        if (rad) {
            ++count_rad;
            rad_indices.push_back(i);
        }
        Element as = star(a);
        if (as == a) {
            ++count_R;
            if (rad) ++count_m;
        }
        if (as == neg(a)) {
            ++count_S;
            if (!rad) throw axiom_failure("(A3) fails: skew element outside radical");
        }
        if (!in_radical_power(sub(a, as), 1))
            throw axiom_failure("(A3) fails: a - a* outside radical");
    }
    if (count_rad != stats_.card_rad || count_R != stats_.card_R ||
        count_S != stats_.card_S || count_m != stats_.card_m)
        throw axiom_failure("structural subgroup cardinalities disagree with enumeration");

    // (A4) + the radical-power profile: close r^i under products with r and
    // addition, and compare with the exponent profile at every level.
    std::vector<char> current(n, 0);
    for (auto i : rad_indices) current[i] = 1;
    for (int level = 1; level <= stats_.e + 1; ++level) {
        std::uint64_t csize = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (!current[i]) continue;
            ++csize;
            if (!in_radical_power(from_index(i), level))
                throw axiom_failure("radical power profile too small at level " +
                                    std::to_string(level));
        }
        if (csize != radical_power_size(level))
            throw axiom_failure("radical power profile size mismatch at level " +
                                std::to_string(level));
        if (level == stats_.e) {
            if (csize != 1) throw axiom_failure("(A4) fails: r^e != 0");
            break;
        }
        if (csize == 1)
            throw axiom_failure("(A4): radical vanished before the reported e");
        // next level: additive closure of (current . rad)
        std::vector<char> next(n, 0);
        std::vector<std::uint64_t> gens;
        for (std::uint64_t i = 0; i < n; ++i) {
            if (!current[i]) continue;
            Element x = from_index(i);
            for (auto j : rad_indices) {
                std::uint64_t pidx = index_of(mul(x, from_index(j)));
                if (!next[pidx]) {
                    next[pidx] = 1;
                    gens.push_back(pidx);
                }
            }
        }
        std::vector<std::uint64_t> work(gens);
        std::vector<char> member(n, 0);
        member[0] = 1;
        std::vector<std::uint64_t> stack{0};
        while (!stack.empty()) {
            std::uint64_t x = stack.back();
            stack.pop_back();
            Element ex = from_index(x);
            for (auto g : gens) {
                std::uint64_t s = index_of(add(ex, from_index(g)));
                if (!member[s]) {
                    member[s] = 1;
                    stack.push_back(s);
                }
            }
        }
        current.assign(member.begin(), member.end());
    }
}

std::string Ring::describe() const {
    std::ostringstream os;
    os << "GR(" << p_ << "," << k0_ << "," << d_ << ")";
    if (k1_ > 0) {
        os << "[t" << (has_sigma_ ? ";sigma" : "") << "]/(t^2";
        if (b_exp_ >= 1) os << "-" << pow_i64(p_, b_exp_);
        os << ")";
        if (k1_ < k0_) os << " with t-slot mod " << m1_;
    } else {
        os << " (star = id)";
    }
    return os.str();
}

bool Ring::same_structure(const Ring& other) const {
    // b enters arithmetic only through its reduced value mod p^k0, so rings
    // whose radicands agree after reduction share one element encoding
    return p_ == other.p_ && d_ == other.d_ && k0_ == other.k0_ &&
           k1_ == other.k1_ && b_val_ == other.b_val_ &&
           has_sigma_ == other.has_sigma_ && f_ == other.f_;
}

void Ring::check_same_ring(const Element& a, const Element& b) const {
    if (a.ring != b.ring && !(a.ring && b.ring && a.ring->same_structure(*b.ring)))
        throw ring_mismatch("elements belong to different rings");
    if (a.ring != this && !(a.ring && a.ring->same_structure(*this)))
        throw ring_mismatch("element does not belong to this ring");
}

Element Ring::zero() const { return Element{this, coeffs(d_, 0), coeffs(d_, 0)}; }

Element Ring::one() const {
    Element r = zero();
    r.c0[0] = 1;
    return r;
}

Element Ring::t() const {
    Element r = zero();
    if (k1_ > 0) r.c1[0] = 1;
    return r;
}

Element Ring::from_int(std::int64_t n) const {
    Element r = zero();
    r.c0[0] = mod(n, m0_);
    return r;
}

Element Ring::make_element(coeffs c0, coeffs c1) const {
    if (static_cast<int>(c0.size()) != d_ || static_cast<int>(c1.size()) != d_)
        throw dimension_mismatch("coefficient vectors must have length d");
    Element r{this, reduce_vec(c0, m0_), reduce_vec(c1, m1_)};
    if (k1_ == 0) std::fill(r.c1.begin(), r.c1.end(), 0);
    return r;
}

Element Ring::add(const Element& a, const Element& b) const {
    check_same_ring(a, b);
    return Element{this, galois::poly_add(a.c0, b.c0, m0_),
                   k1_ > 0 ? galois::poly_add(a.c1, b.c1, m1_) : coeffs(d_, 0)};
}

Element Ring::sub(const Element& a, const Element& b) const {
    check_same_ring(a, b);
    return Element{this, galois::poly_sub(a.c0, b.c0, m0_),
                   k1_ > 0 ? galois::poly_sub(a.c1, b.c1, m1_) : coeffs(d_, 0)};
}

Element Ring::neg(const Element& a) const {
    check_same_ring(a, a);
    return Element{this, galois::poly_neg(a.c0, m0_),
                   k1_ > 0 ? galois::poly_neg(a.c1, m1_) : coeffs(d_, 0)};
}

coeffs Ring::sigma_on_base(const coeffs& c) const {
    if (!has_sigma_) return c;
    return galois::poly_eval_at(c, sigma_root_, f_, m0_);
}

Element Ring::mul(const Element& a, const Element& b) const {
    check_same_ring(a, b);
    // (c0 + c1 t)(c0' + c1' t) = c0 c0' + c1 sigma(c1') b + (c0 c1' + c1 sigma(c0')) t
    coeffs r0 = galois::poly_mul(a.c0, b.c0, f_, m0_);
    coeffs r1(d_, 0);
    if (k1_ > 0) {
        coeffs sc1 = sigma_on_base(b.c1);
        if (!all_zero(b_val_)) {
            coeffs cross = galois::poly_mul(a.c1, sc1, f_, m0_);
            cross = galois::poly_mul(cross, b_val_, f_, m0_);
            r0 = galois::poly_add(r0, cross, m0_);
        }
        coeffs t1 = galois::poly_mul(a.c0, b.c1, f_, m0_);
        coeffs t2 = galois::poly_mul(a.c1, sigma_on_base(b.c0), f_, m0_);
        r1 = reduce_vec(galois::poly_add(t1, t2, m0_), m1_);
    }
    return Element{this, std::move(r0), std::move(r1)};
}

Element Ring::star(const Element& a) const {
    check_same_ring(a, a);
    if (k1_ == 0) return a;
    coeffs c1 = reduce_vec(galois::poly_neg(sigma_on_base(a.c1), m0_), m1_);
    return Element{this, a.c0, std::move(c1)};
}

bool Ring::is_unit(const Element& a) const {
    check_same_ring(a, a);
    return galois::base_is_unit(a.c0, p_);
}

bool Ring::is_zero(const Element& a) const {
    return all_zero(a.c0) && all_zero(a.c1);
}

coeffs Ring::residue(const Element& a) const { return reduce_vec(a.c0, p_); }

Element Ring::lift_residue(const coeffs& rbar) const {
    Element r = zero();
    r.c0 = reduce_vec(rbar, m0_);
    return r;
}

Element Ring::inv(const Element& a) const {
    if (!is_unit(a)) throw not_a_unit("inv: element is not a unit");
    Element y = lift_residue(fq_->inv(residue(a)));
    int passes = 0;
    for (int e = 1; e < stats_.e; e *= 2) ++passes;
    Element two = from_int(2);
    for (int i = 0; i < passes; ++i) y = mul(y, sub(two, mul(a, y)));
    if (!(mul(a, y) == one()) || !(mul(y, a) == one()))
        throw internal_defect("inv: radical lifting failed verification");
    return y;
}

std::uint64_t Ring::index_of(const Element& a) const {
    std::uint64_t idx1 = 0;
    if (k1_ > 0)
        for (int i = d_ - 1; i >= 0; --i)
            idx1 = idx1 * static_cast<std::uint64_t>(m1_) + static_cast<std::uint64_t>(a.c1[i]);
    std::uint64_t idx0 = 0;
    for (int i = d_ - 1; i >= 0; --i)
        idx0 = idx0 * static_cast<std::uint64_t>(m0_) + static_cast<std::uint64_t>(a.c0[i]);
    std::uint64_t base = 1;
    for (int i = 0; i < d_; ++i) base *= static_cast<std::uint64_t>(m0_);
    return idx0 + base * idx1;
}

Element Ring::from_index(std::uint64_t idx) const {
    Element r = zero();
    for (int i = 0; i < d_; ++i) {
        r.c0[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(m0_));
        idx /= static_cast<std::uint64_t>(m0_);
    }
    if (k1_ > 0)
        for (int i = 0; i < d_; ++i) {
            r.c1[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(m1_));
            idx /= static_cast<std::uint64_t>(m1_);
        }
    return r;
}

bool Ring::in_radical_power(const Element& a, int i) const {
    if (i <= 0) return true;
    if (i >= stats_.e) return is_zero(a);
    auto [ae, ce] = radical_exponents(i);
    const std::int64_t pa = pow_i64(p_, ae);
    for (auto c : a.c0)
        if (c % pa != 0) return false;
    if (k1_ > 0) {
        const std::int64_t pc = pow_i64(p_, ce);
        for (auto c : a.c1)
            if (c % pc != 0) return false;
    }
    return true;
}

std::uint64_t Ring::radical_power_size(int i) const {
    if (i <= 0) return size();
    if (i >= stats_.e) return 1;
    auto [ae, ce] = radical_exponents(i);
    std::uint64_t r = 1;
    for (int x = 0; x < (k0_ - ae) * d_; ++x) r *= static_cast<std::uint64_t>(p_);
    for (int x = 0; x < (k1_ - ce) * d_; ++x) r *= static_cast<std::uint64_t>(p_);
    return r;
}

std::vector<Element> Ring::enumerate_elements() const {
    if (size() > budget_)
        throw budget_exceeded("ring exceeds the enumeration budget");
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint64_t i = 0; i < size(); ++i) out.push_back(from_index(i));
    return out;
}

std::vector<Element> Ring::enumerate_subset(Subset which, int j) const {
    if (size() > budget_)
        throw budget_exceeded("ring exceeds the enumeration budget");
    std::vector<Element> out;
    for (std::uint64_t i = 0; i < size(); ++i) {
        Element a = from_index(i);
        bool keep = false;
        switch (which) {
            case Subset::R: keep = star(a) == a; break;
            case Subset::S: keep = star(a) == neg(a); break;
            case Subset::m: keep = star(a) == a && in_radical_power(a, 1); break;
            case Subset::rad_power: keep = in_radical_power(a, j); break;
        }
        if (keep) out.push_back(a);
    }
    return out;
}

std::shared_ptr<const Ring> Ring::quotient(int j) const {
    if (j < 1 || j >= stats_.e)
        throw not_proper("quotient: need 1 <= j < e");
    auto [a, c] = radical_exponents(j);
    return make_internal(p_, d_, a, c, b_exp_, has_sigma_ && c > 0, budget_);
}

Element Ring::reduce_to(const Ring& q, const Element& a) const {
    check_same_ring(a, a);
    if (q.p_ != p_ || q.d_ != d_ || q.k0_ > k0_ || q.k1_ > k1_)
        throw ring_mismatch("reduce_to: not a quotient of this ring");
    coeffs c0 = reduce_vec(a.c0, q.m0_);
    coeffs c1 = q.k1_ > 0 ? reduce_vec(a.c1, q.m1_) : coeffs(d_, 0);
    return Element{&q, std::move(c0), std::move(c1)};
}

Element Ring::lift_from(const Ring& q, const Element& a) const {
    if (q.p_ != p_ || q.d_ != d_ || q.k0_ > k0_ || q.k1_ > k1_)
        throw ring_mismatch("lift_from: not a quotient of this ring");
    return Element{this, a.c0, a.c1};
}

bool Ring::tables_available() const { return tables_ != nullptr; }

void Ring::build_tables() const {
    auto t = std::make_shared<Tables>();
    const std::size_t n = static_cast<std::size_t>(size());
    t->n = n;
    t->mul.resize(n * n);
    t->add.resize(n * n);
    t->star.resize(n);
    t->neg.resize(n);
    t->unit.resize(n);
    t->radpow.assign(static_cast<std::size_t>(stats_.e) + 1,
                     std::vector<std::uint8_t>(n, 0));
    std::vector<Element> elems;
    elems.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) elems.push_back(from_index(i));
    for (std::size_t i = 0; i < n; ++i) {
        t->star[i] = static_cast<std::int32_t>(index_of(star(elems[i])));
        t->neg[i] = static_cast<std::int32_t>(index_of(neg(elems[i])));
        t->unit[i] = is_unit(elems[i]) ? 1 : 0;
        for (int j = 0; j <= stats_.e; ++j)
            t->radpow[static_cast<std::size_t>(j)][i] =
                in_radical_power(elems[i], j) ? 1 : 0;
        for (std::size_t j = 0; j < n; ++j) {
            t->mul[i * n + j] = static_cast<std::int32_t>(index_of(mul(elems[i], elems[j])));
            t->add[i * n + j] = static_cast<std::int32_t>(index_of(add(elems[i], elems[j])));
        }
    }
    tables_ = std::move(t);
}

std::int32_t Ring::mul_idx(std::int32_t a, std::int32_t b) const {
    return tables_->mul[static_cast<std::size_t>(a) * tables_->n + static_cast<std::size_t>(b)];
}

std::int32_t Ring::add_idx(std::int32_t a, std::int32_t b) const {
    return tables_->add[static_cast<std::size_t>(a) * tables_->n + static_cast<std::size_t>(b)];
}

std::int32_t Ring::star_idx(std::int32_t a) const {
    return tables_->star[static_cast<std::size_t>(a)];
}

std::int32_t Ring::neg_idx(std::int32_t a) const {
    return tables_->neg[static_cast<std::size_t>(a)];
}

bool Ring::unit_idx(std::int32_t a) const {
    return tables_->unit[static_cast<std::size_t>(a)] != 0;
}

bool Ring::rad_power_idx(std::int32_t a, int i) const {
    if (i <= 0) return true;
    if (i > stats_.e) i = stats_.e;
    return tables_->radpow[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] != 0;
}

} // namespace uloc
