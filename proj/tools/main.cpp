#include "uloc/oracle.hpp"
#include "uloc/symplectic.hpp"
#include "uloc/textio.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace uloc;

// exit-code contract: 0 = all checks pass or skip, 1 = mismatch or defect,
// 2 = usage or parse error
constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct RingOpts {
    std::string spec_path;
    std::int64_t p = 3;
    int k = 1;
    int d = 1;
    int sigma_order = 1;
    std::string b = "zero";
    bool truncate_odd = false;
    std::string star = "quadratic";
    std::uint64_t budget = Ring::default_budget;
};

struct CommonOpts {
    std::string format = "text";
    std::string output;
    std::uint64_t seed = 0;
    EnumerationBudget enum_budget;
};

void add_ring_opts(CLI::App* cmd, RingOpts& o) {
    cmd->add_option("--spec", o.spec_path, "ring spec file (key=value lines)");
    cmd->add_option("--p", o.p, "odd prime");
    cmd->add_option("--k", o.k, "precision of Z/p^k");
    cmd->add_option("--d", o.d, "degree of the Galois ring extension");
    cmd->add_option("--sigma-order", o.sigma_order,
                    "order of the base automorphism (1 or 2)");
    cmd->add_option("--b", o.b, "radicand: 'zero' or an exponent j for p^j");
    cmd->add_flag("--truncate-odd", o.truncate_odd,
                  "impose the extra relation t^(2k-1) = 0");
    cmd->add_option("--star", o.star, "star mode: quadratic | trivial")
        ->check(CLI::IsMember({"quadratic", "trivial"}));
    cmd->add_option("--budget", o.budget, "ring validation budget");
}

void add_common_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--output", o.output, "write the report to a file");
    cmd->add_option("--seed", o.seed, "seed recorded in the report");
    cmd->add_option("--max-vectors", o.enum_budget.max_vectors);
    cmd->add_option("--max-pairs", o.enum_budget.max_pairs);
    cmd->add_option("--max-matrices", o.enum_budget.max_matrices);
}

RingSpec to_spec(const RingOpts& o) {
    if (!o.spec_path.empty()) return load_ring_spec(o.spec_path);
    RingSpec s;
    s.p = o.p;
    s.k = o.k;
    s.d = o.d;
    s.sigma_order = o.sigma_order;
    if (o.b == "zero") {
        s.b_exponent = -1;
    } else {
        try {
            s.b_exponent = std::stoi(o.b);
        } catch (const std::exception&) {
            throw parse_error("--b expects 'zero' or an integer exponent");
        }
    }
    s.truncate_odd = o.truncate_odd;
    s.star_mode = o.star == "trivial" ? StarMode::trivial : StarMode::quadratic;
    return s;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        write_file(o.output, text);
    }
}

std::string reports_to_text(const std::vector<CountReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << r.name << ": " << r.formula_value.str();
        if (r.oracle_value)
            os << "  oracle=" << r.oracle_value->str()
               << (r.match && *r.match ? "  match" : "  MISMATCH");
        if (!r.note.empty()) os << "  [" << r.note << "]";
        os << '\n';
    }
    return os.str();
}

std::string format_reports(const CommonOpts& o,
                           const std::vector<CountReport>& reports) {
    if (o.format == "json") return report_list_to_json(reports);
    if (o.format == "csv") {
        std::ostringstream os;
        os << report_csv_header() << '\n';
        for (const auto& r : reports) os << report_to_csv(r) << '\n';
        return os.str();
    }
    return reports_to_text(reports);
}

bool any_failed(const std::vector<CountReport>& reports) {
    for (const auto& r : reports)
        if (r.failed()) return true;
    return false;
}

// Formula-only report set; rows whose enumeration prerequisites exceed the
// desk budget are marked skipped rather than dropped.
std::vector<CountReport> formula_reports(std::shared_ptr<const Ring> ring,
                                         int m, bool orders_only) {
    const RingStats& stats = ring->stats();
    std::vector<CountReport> out;
    if (orders_only) {
        out.push_back(make_report("unitary_order_radical_form",
                                  unitary_order_radical_form(stats, m)));
        out.push_back(make_report("unitary_order_skew_form",
                                  unitary_order_skew_form(stats, m)));
        for (int j = 1; j < stats.e; ++j) {
            CountReport r = make_report("kernel_order(j=" + std::to_string(j) + ")", 0);
            try {
                r.formula_value = kernel_order(*ring, j, m);
            } catch (const budget_exceeded&) {
                r.note = "skipped: enumeration budget";
            }
            out.push_back(std::move(r));
        }
        CountReport pr = make_report("principal_case_order", 0);
        try {
            PrincipalReport ps = principal_structure(*ring);
            bool trivial = ring->star_is_identity();
            bool applicable =
                ps.a7_principal_radical &&
                (trivial || (ps.a8_hermitian_commute && ps.a9_star_nontrivial &&
                             ps.a10_disjoint && *ps.a10_disjoint));
            if (applicable)
                pr.formula_value =
                    principal_case_order(bigint(stats.q), stats.e, m, trivial);
            else
                pr.note = "not applicable";
        } catch (const budget_exceeded&) {
            pr.note = "skipped: enumeration budget";
        }
        out.push_back(std::move(pr));
    } else {
        out.push_back(
            make_report("basis_vector_count", basis_vector_count(stats, m)));
        if (m == 1)
            out.push_back(make_report("basis_vector_count_rank1",
                                      basis_vector_count_rank1(stats)));
        out.push_back(make_report("symplectic_pair_count",
                                  symplectic_pair_count(stats, m)));
        out.push_back(
            make_report("stabilizer_order", stabilizer_order(stats, m)));
    }
    return out;
}

std::vector<CountReport> filter_reports(std::vector<CountReport> all,
                                        bool orders_only) {
    auto is_order_row = [](const std::string& name) {
        return name.rfind("unitary_order", 0) == 0 ||
               name.rfind("kernel_order", 0) == 0 ||
               name.rfind("reduction_image", 0) == 0 ||
               name == "principal_case_order";
    };
    std::vector<CountReport> out;
    for (auto& r : all)
        if (is_order_row(r.name) == orders_only) out.push_back(std::move(r));
    return out;
}

int cmd_ring(const RingOpts& ro, const CommonOpts& co) {
    auto ring = Ring::make(to_spec(ro), ro.budget);
    const RingStats& s = ring->stats();
    if (co.format == "json") {
        nlohmann::json j;
        j["ring"] = ring->describe();
        j["card_A"] = std::to_string(s.card_A);
        j["card_rad"] = std::to_string(s.card_rad);
        j["e"] = s.e;
        j["q"] = std::to_string(s.q);
        j["card_R"] = std::to_string(s.card_R);
        j["card_S"] = std::to_string(s.card_S);
        j["card_m"] = std::to_string(s.card_m);
        j["axioms_checked_exhaustively"] = ring->desk_scale();
        try {
            PrincipalReport ps = principal_structure(*ring);
            nlohmann::json p;
            p["radical_two_sided_principal"] = ps.a7_principal_radical;
            p["hermitian_part_commutes"] = ps.a8_hermitian_commute;
            p["star_nontrivial"] = ps.a9_star_nontrivial;
            p["hermitian_part_mult_closed"] = ps.r_multiplicatively_closed;
            if (ps.a10_disjoint) p["r_meets_rx_trivially"] = *ps.a10_disjoint;
            if (ps.kernel_size) p["kernel_size"] = *ps.kernel_size;
            if (ps.parity_cards_match)
                p["parity_cards_match"] = *ps.parity_cards_match;
            j["principal_structure"] = p;
        } catch (const budget_exceeded&) {
            j["principal_structure"] = nullptr;
        }
        emit(co, j.dump(2));
    } else {
        std::ostringstream os;
        os << ring->describe() << '\n';
        os << "|A|=" << s.card_A << " |rad|=" << s.card_rad << " e=" << s.e
           << " q=" << s.q << " |R|=" << s.card_R << " |S|=" << s.card_S
           << " |m|=" << s.card_m << '\n';
        os << "axioms checked exhaustively: "
           << (ring->desk_scale() ? "yes" : "no (structural only)") << '\n';
        try {
            os << principal_report_to_text(*ring, principal_structure(*ring));
        } catch (const budget_exceeded&) {
            os << "principal structure: skipped (enumeration budget)\n";
        }
        emit(co, os.str());
    }
    return exit_ok;
}

int cmd_counts(const RingOpts& ro, const CommonOpts& co, int m, bool oracle,
               bool orders_only) {
    auto ring = Ring::make(to_spec(ro), ro.budget);
    std::vector<CountReport> reports =
        oracle ? filter_reports(verify_all(ring, m, co.enum_budget), orders_only)
               : formula_reports(ring, m, orders_only);
    emit(co, format_reports(co, reports));
    return any_failed(reports) ? exit_mismatch : exit_ok;
}

int cmd_basis(const RingOpts& ro, const CommonOpts& co,
              const std::string& gram_path) {
    auto ring = Ring::make(to_spec(ro), ro.budget);
    Matrix gram = parse_matrix(ring.get(), read_file(gram_path));
    FormSpace space(ring, gram);
    SymplecticBasis basis = symplectic_basis(space);
    std::ostringstream os;
    for (std::size_t i = 0; i < basis.u.size(); ++i)
        os << "u" << i + 1 << " = " << vector_to_text(basis.u[i]) << '\n';
    for (std::size_t i = 0; i < basis.v.size(); ++i)
        os << "v" << i + 1 << " = " << vector_to_text(basis.v[i]) << '\n';
    os << "transform = " << matrix_to_text(basis.transform) << '\n';
    emit(co, os.str());
    return exit_ok;
}

int cmd_lift(const RingOpts& ro, const CommonOpts& co, int j,
             const std::string& matrix_path) {
    auto ring = Ring::make(to_spec(ro), ro.budget);
    auto q = ring->quotient(j);
    Matrix xbar = parse_matrix(q.get(), read_file(matrix_path));
    if (xbar.rows() % 2 != 0)
        throw parse_error("lift: matrix rank must be even");
    FormSpace space = standard_gram(ring, xbar.rows() / 2);
    Matrix x = lift_unitary(space, xbar, j);
    emit(co, matrix_to_text(x) + "\n");
    return exit_ok;
}

int cmd_transport(const RingOpts& ro, const CommonOpts& co,
                  const std::string& u_path, const std::string& v_path) {
    auto ring = Ring::make(to_spec(ro), ro.budget);
    Vector u = parse_vector(ring.get(), read_file(u_path));
    Vector v = parse_vector(ring.get(), read_file(v_path));
    if (u.size() % 2 != 0)
        throw parse_error("transport: vector rank must be even");
    FormSpace space = standard_gram(ring, u.size() / 2);
    Matrix g = transport(space, u, v);
    emit(co, matrix_to_text(g) + "\n");
    return exit_ok;
}

int cmd_verify(const CommonOpts& co, const std::string& sweep_path,
               std::uint64_t ring_budget) {
    std::vector<SweepEntry> sweep = load_sweep(sweep_path);
    bool failed = false;
    nlohmann::json entries = nlohmann::json::array();
    std::ostringstream text;
    for (const SweepEntry& entry : sweep) {
        auto ring = Ring::make(entry.spec, ring_budget);
        std::string label =
            entry.label.empty() ? ring->describe() : entry.label;
        for (int m : entry.ms) {
            std::vector<CountReport> reports =
                verify_all(ring, m, co.enum_budget);
            if (any_failed(reports)) failed = true;
            if (co.format == "json") {
                nlohmann::json e;
                e["ring"] = label;
                e["m"] = m;
                e["reports"] =
                    nlohmann::json::parse(report_list_to_json(reports));
                entries.push_back(std::move(e));
            } else {
                text << "== " << label << "  m=" << m << " ==\n"
                     << reports_to_text(reports);
            }
        }
    }
    if (co.format == "json") {
        nlohmann::json j;
        j["entries"] = std::move(entries);
        emit(co, j.dump(2));
    } else {
        text << (failed ? "RESULT: mismatch\n" : "RESULT: all match or skip\n");
        emit(co, text.str());
    }
    return failed ? exit_mismatch : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic and exhaustive verification for unitary "
                 "groups over finite local rings with involution"};
    app.require_subcommand(1);

    RingOpts ro;
    CommonOpts co;
    int m = 1;
    int j = 1;
    bool oracle = false;
    std::string gram_path, matrix_path, u_path, v_path, sweep_path;

    CLI::App* c_ring = app.add_subcommand("ring", "ring stats and structure");
    add_ring_opts(c_ring, ro);
    add_common_opts(c_ring, co);

    CLI::App* c_order = app.add_subcommand("order", "group-order formulas");
    add_ring_opts(c_order, ro);
    add_common_opts(c_order, co);
    c_order->add_option("--m", m, "half the rank");
    c_order->add_flag("--oracle", oracle, "attach exhaustive oracle values");

    CLI::App* c_count = app.add_subcommand("count", "vector/pair counting formulas");
    add_ring_opts(c_count, ro);
    add_common_opts(c_count, co);
    c_count->add_option("--m", m, "half the rank");
    c_count->add_flag("--oracle", oracle, "attach exhaustive oracle values");

    CLI::App* c_basis = app.add_subcommand("basis", "symplectic basis of a Gram matrix");
    add_ring_opts(c_basis, ro);
    add_common_opts(c_basis, co);
    c_basis->add_option("--gram", gram_path, "Gram matrix file")->required();

    CLI::App* c_lift = app.add_subcommand("lift", "lift a unitary matrix from A/r^j");
    add_ring_opts(c_lift, ro);
    add_common_opts(c_lift, co);
    c_lift->add_option("--j", j, "radical power of the quotient");
    c_lift->add_option("--matrix", matrix_path, "matrix file over A/r^j")->required();

    CLI::App* c_transport = app.add_subcommand(
        "transport", "unitary matrix sending u to v (equal lengths)");
    add_ring_opts(c_transport, ro);
    add_common_opts(c_transport, co);
    c_transport->add_option("--u", u_path, "vector file")->required();
    c_transport->add_option("--v", v_path, "vector file")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "run a sweep of oracle checks");
    add_common_opts(c_verify, co);
    c_verify->add_option("--sweep", sweep_path, "sweep file")->required();
    std::uint64_t verify_budget = Ring::default_budget;
    c_verify->add_option("--budget", verify_budget, "ring validation budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (c_ring->parsed()) return cmd_ring(ro, co);
        if (c_order->parsed()) return cmd_counts(ro, co, m, oracle, true);
        if (c_count->parsed()) return cmd_counts(ro, co, m, oracle, false);
        if (c_basis->parsed()) return cmd_basis(ro, co, gram_path);
        if (c_lift->parsed()) return cmd_lift(ro, co, j, matrix_path);
        if (c_transport->parsed()) return cmd_transport(ro, co, u_path, v_path);
        if (c_verify->parsed()) return cmd_verify(co, sweep_path, verify_budget);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const invalid_spec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_mismatch;
    }
    return exit_usage;
}
