#ifndef ULOC_TEXTIO_HPP
#define ULOC_TEXTIO_HPP

#include "uloc/matrix.hpp"

#include <string>
#include <vector>

namespace uloc {

// Ring spec text: one `key=value` per line, `#` comments, keys p, k, d,
// sigma_order, b_exponent (or b=zero), truncate_odd, star_mode. Unknown keys
// are rejected with the key named in the diagnostic.
RingSpec parse_ring_spec_text(const std::string& text);
RingSpec load_ring_spec(const std::string& path);
std::string ring_spec_to_text(const RingSpec& spec);

// Element text: `c0|c1`, each side a comma-joined coefficient vector of
// length d. Lossless round trip.
std::string element_to_text(const Element& a);
Element parse_element(const Ring& ring, const std::string& text);

// Matrix text: rows separated by `;`, entries within a row separated by
// whitespace. A vector is an n x 1 matrix (one entry per row).
std::string matrix_to_text(const Matrix& x);
Matrix parse_matrix(const Ring* ring, const std::string& text);
std::string vector_to_text(const Vector& v);
Vector parse_vector(const Ring* ring, const std::string& text);

// Sweep file: `[ring]` opens a block; inside, ring-spec keys plus one or
// more `m=` lines and an optional `label=`.
struct SweepEntry {
    RingSpec spec;
    std::vector<int> ms;
    std::string label;
};

std::vector<SweepEntry> parse_sweep_text(const std::string& text);
std::vector<SweepEntry> load_sweep(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace uloc

#endif
