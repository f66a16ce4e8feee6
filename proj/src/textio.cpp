#include "uloc/textio.hpp"
#include "uloc/errors.hpp"

#include <fstream>
#include <sstream>

namespace uloc {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(trim(s), &pos);
        if (pos != trim(s).size())
            throw parse_error(where + ": trailing characters in '" + s + "'");
        return v;
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error(where + ": not an integer: '" + s + "'");
    }
}

bool parse_bool(const std::string& s, const std::string& where) {
    std::string v = trim(s);
    if (v == "true") return true;
    if (v == "false") return false;
    throw parse_error(where + ": expected true or false, got '" + s + "'");
}

// Applies one key=value line to spec; returns false for keys it does not own.
bool apply_spec_key(RingSpec& spec, const std::string& key,
                    const std::string& value, int lineno) {
    const std::string where = "line " + std::to_string(lineno);
    if (key == "p") spec.p = parse_int(value, where + " (p)");
    else if (key == "k") spec.k = (int)parse_int(value, where + " (k)");
    else if (key == "d") spec.d = (int)parse_int(value, where + " (d)");
    else if (key == "sigma_order")
        spec.sigma_order = (int)parse_int(value, where + " (sigma_order)");
    else if (key == "b_exponent")
        spec.b_exponent = (int)parse_int(value, where + " (b_exponent)");
    else if (key == "b") {
        if (trim(value) != "zero")
            throw parse_error(where + ": key 'b' accepts only 'zero'");
        spec.b_exponent = -1;
    } else if (key == "truncate_odd")
        spec.truncate_odd = parse_bool(value, where + " (truncate_odd)");
    else if (key == "star_mode") {
        std::string v = trim(value);
        if (v == "quadratic") spec.star_mode = StarMode::quadratic;
        else if (v == "trivial") spec.star_mode = StarMode::trivial;
        else
            throw parse_error(where +
                              ": star_mode must be quadratic or trivial");
    } else {
        return false;
    }
    return true;
}

} // namespace

RingSpec parse_ring_spec_text(const std::string& text) {
    RingSpec spec;
    int lineno = 0;
    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("line " + std::to_string(lineno) +
                              ": expected key=value, got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = line.substr(eq + 1);
        if (!apply_spec_key(spec, key, value, lineno))
            throw parse_error("line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
    }
    return spec;
}

RingSpec load_ring_spec(const std::string& path) {
    return parse_ring_spec_text(read_file(path));
}

std::string ring_spec_to_text(const RingSpec& spec) {
    std::ostringstream os;
    os << "p=" << spec.p << '\n';
    os << "k=" << spec.k << '\n';
    os << "d=" << spec.d << '\n';
    os << "sigma_order=" << spec.sigma_order << '\n';
    if (spec.b_exponent < 0) os << "b=zero\n";
    else os << "b_exponent=" << spec.b_exponent << '\n';
    os << "truncate_odd=" << (spec.truncate_odd ? "true" : "false") << '\n';
    os << "star_mode="
       << (spec.star_mode == StarMode::quadratic ? "quadratic" : "trivial")
       << '\n';
    return os.str();
}

namespace {

std::string coeffs_to_text(const coeffs& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    return os.str();
}

coeffs parse_coeffs(const std::string& s, std::size_t expect,
                    const std::string& where) {
    coeffs out;
    for (const std::string& part : split(s, ','))
        out.push_back(parse_int(part, where));
    if (out.size() != expect)
        throw parse_error(where + ": expected " + std::to_string(expect) +
                          " coefficients, got " + std::to_string(out.size()));
    return out;
}

} // namespace

std::string element_to_text(const Element& a) {
    return coeffs_to_text(a.c0) + "|" + coeffs_to_text(a.c1);
}

Element parse_element(const Ring& ring, const std::string& text) {
    std::string s = trim(text);
    std::size_t bar = s.find('|');
    if (bar == std::string::npos)
        throw parse_error("element '" + s + "': expected c0|c1");
    const std::size_t d = (std::size_t)ring.d();
    coeffs c0 = parse_coeffs(s.substr(0, bar), d, "element c0");
    coeffs c1 = parse_coeffs(s.substr(bar + 1), d, "element c1");
    return ring.make_element(std::move(c0), std::move(c1));
}

std::string matrix_to_text(const Matrix& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (j) os << ' ';
            os << element_to_text(x.at(i, j));
        }
    }
    return os.str();
}

Matrix parse_matrix(const Ring* ring, const std::string& text) {
    std::vector<std::vector<Element>> rows;
    for (const std::string& rowtext : split(text, ';')) {
        std::vector<Element> row;
        std::istringstream is(rowtext);
        std::string tok;
        while (is >> tok) row.push_back(parse_element(*ring, tok));
        if (row.empty())
            throw parse_error("matrix: empty row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("matrix: no rows");
    Matrix x(ring, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw parse_error("matrix: ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            x.at(i, j) = rows[i][j];
    }
    return x;
}

std::string vector_to_text(const Vector& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << "; ";
        os << element_to_text(v[i]);
    }
    return os.str();
}

Vector parse_vector(const Ring* ring, const std::string& text) {
    Matrix x = parse_matrix(ring, text);
    if (x.cols() != 1)
        throw parse_error("vector: expected one entry per row");
    return column_of(x, 0);
}

std::vector<SweepEntry> parse_sweep_text(const std::string& text) {
    std::vector<SweepEntry> out;
    bool in_block = false;
    int lineno = 0;
    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line == "[ring]") {
            out.emplace_back();
            in_block = true;
            continue;
        }
        if (!in_block)
            throw parse_error("line " + std::to_string(lineno) +
                              ": content before the first [ring] block");
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("line " + std::to_string(lineno) +
                              ": expected key=value, got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = line.substr(eq + 1);
        if (key == "m") {
            out.back().ms.push_back(
                (int)parse_int(value, "line " + std::to_string(lineno) + " (m)"));
        } else if (key == "label") {
            out.back().label = trim(value);
        } else if (!apply_spec_key(out.back().spec, key, value, lineno)) {
            throw parse_error("line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
        }
    }
    for (const SweepEntry& e : out)
        if (e.ms.empty())
            throw parse_error("sweep: every [ring] block needs an m= line");
    return out;
}

std::vector<SweepEntry> load_sweep(const std::string& path) {
    return parse_sweep_text(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw parse_error("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw parse_error("cannot open file for writing: " + path);
    f << content;
}

} // namespace uloc
