#ifndef ULOC_ORACLE_HPP
#define ULOC_ORACLE_HPP

#include "uloc/orders.hpp"
#include "uloc/symplectic.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace uloc {

// Caps on exhaustive scans. An oracle that would exceed its cap throws
// budget_exceeded (or is reported as skipped); it never samples.
struct EnumerationBudget {
    std::uint64_t max_vectors = 100000;     // cap on |A|^{2m}
    std::uint64_t max_pairs = 100000000;    // cap on ordered vector pairs
    std::uint64_t max_matrices = 10000000;  // cap on |A|^{4m^2}
};

// Census of all |A|^{2m} coordinate vectors: basis vectors bucketed by exact
// length h(v,v) (bucket order = element index order of the length), plus the
// complementary non-basis total.
struct VectorCensus {
    std::vector<std::pair<Element, std::uint64_t>> buckets;
    std::uint64_t non_basis = 0;
    std::uint64_t total = 0;
};

VectorCensus enumerate_vectors_by_length(const FormSpace& space,
                                         const EnumerationBudget& budget = {});

// Sorted canonical coordinate encodings of all basis vectors of length s.
std::vector<std::uint64_t> encode_vector(const FormSpace& space, const Vector& v);
Vector decode_vector(const FormSpace& space, const std::vector<std::uint64_t>& enc);
std::vector<std::vector<std::uint64_t>>
basis_vectors_with_length(const FormSpace& space, const Element& s,
                          const EnumerationBudget& budget = {});

// Ordered pairs (u, v) with h(u,u) = h(v,v) = 0 and h(u,v) = 1, by a
// parallel partitioned double scan; at m = 1 the pairs are also returned as
// the columns of the unitary matrices they define, in scan order.
struct PairScan {
    std::uint64_t count = 0;
    std::vector<Matrix> group; // nonempty only when rank = 2
};

PairScan enumerate_symplectic_pairs(const FormSpace& space,
                                    const EnumerationBudget& budget = {},
                                    unsigned workers = 0);

// The full unitary group, through the symplectic-pair bijection at m = 1 or
// the naive matrix filter; both are deterministic lists. The returned
// matrices hold non-owning pointers to the space's ring: keep the ring (or a
// FormSpace over it) alive for as long as the matrices are used.
std::vector<Matrix> enumerate_unitary_group(const FormSpace& space,
                                            const EnumerationBudget& budget = {});
std::vector<Matrix> enumerate_unitary_group_naive(const FormSpace& space,
                                                  const EnumerationBudget& budget = {});

// |U_{2m}(A)| by the pair recursion |U_{2m}| = #pairs * |U_{2(m-1)}|, every
// level taken from a scan, none from a formula.
bigint oracle_group_order(std::shared_ptr<const Ring> ring, int m,
                          const EnumerationBudget& budget = {});

// {g v : g in group} as sorted canonical encodings.
std::vector<std::vector<std::uint64_t>>
orbit_of(const FormSpace& space, const std::vector<Matrix>& group,
         const Vector& v);

// Reduce every group element mod r^j; returns (distinct image count,
// kernel count). Requires 1 <= j < e.
std::pair<std::uint64_t, std::uint64_t>
reduction_image_and_kernel(const FormSpace& space, int j,
                           const std::vector<Matrix>& group);

// Every closed-form count checked against its oracle where the budget
// allows; infeasible oracles are reported skipped, never faked.
std::vector<CountReport> verify_all(std::shared_ptr<const Ring> ring, int m,
                                    const EnumerationBudget& budget = {});

} // namespace uloc

#endif
