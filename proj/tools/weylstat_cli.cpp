// Command-line front end: exact expected-norm, core, tableaux and cumulant
// computations with deterministic JSON/CSV/pretty output.
//
// Exit codes: 0 success, 1 verification failures, 2 usage/domain errors,
// 3 resource caps.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylstat/cores.hpp"
#include "weylstat/cumulants.hpp"
#include "weylstat/errors.hpp"
#include "weylstat/partition.hpp"
#include "weylstat/qpoly.hpp"
#include "weylstat/rep.hpp"
#include "weylstat/root_system.hpp"
#include "weylstat/typea.hpp"
#include "weylstat/verifier.hpp"

namespace {

using namespace weylstat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct GlobalFlags {
    std::string format = "pretty";
    bool approx = false;
    std::int64_t dim_cap = 200000;
    std::string out_file;
};

/// Render a rational: exact everywhere; --approx adds a decimal hint in the
/// pretty format only, so machine formats never change with the flag.
std::string show(const Rational& r, const GlobalFlags& flags) {
    if (!flags.approx || flags.format != "pretty") return r.str();
    std::ostringstream os;
    os << r.str() << " (~" << r.approx() << ')';
    return os.str();
}

void emit(const std::string& text, const GlobalFlags& flags) {
    if (flags.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(flags.out_file, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + flags.out_file);
    out << text;
}

std::string csv_escape(const std::string& field) {
    if (field.find(',') == std::string::npos && field.find('"') == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

/// A flat key/value report plus optional uniform table, renderable in all
/// three formats with byte-deterministic output.
struct Report {
    std::vector<std::pair<std::string, std::string>> scalars;
    std::vector<std::string> table_columns;
    std::vector<std::vector<std::string>> table_rows;
    bool table_only_csv = false;  // csv prints the table when present

    std::string render(const GlobalFlags& flags) const {
        if (flags.format == "json") {
            json object = json::object();
            for (const auto& [key, value] : scalars) object[key] = value;
            if (!table_columns.empty()) {
                json rows = json::array();
                for (const auto& row : table_rows) {
                    json entry = json::object();
                    for (std::size_t i = 0; i < table_columns.size(); ++i)
                        entry[table_columns[i]] = row[i];
                    rows.push_back(entry);
                }
                object["rows"] = rows;
            }
            return object.dump() + "\n";
        }
        if (flags.format == "csv") {
            std::string out;
            if (!table_columns.empty() && table_only_csv) {
                for (std::size_t i = 0; i < table_columns.size(); ++i)
                    out += (i ? "," : "") + csv_escape(table_columns[i]);
                out += '\n';
                for (const auto& row : table_rows) {
                    for (std::size_t i = 0; i < row.size(); ++i)
                        out += (i ? "," : "") + csv_escape(row[i]);
                    out += '\n';
                }
                return out;
            }
            std::string header, values;
            for (std::size_t i = 0; i < scalars.size(); ++i) {
                header += (i ? "," : "") + csv_escape(scalars[i].first);
                values += (i ? "," : "") + csv_escape(scalars[i].second);
            }
            return header + "\n" + values + "\n";
        }
        // pretty
        std::size_t width = 0;
        for (const auto& [key, value] : scalars) width = std::max(width, key.size());
        std::string out;
        for (const auto& [key, value] : scalars)
            out += key + std::string(width - key.size() + 2, ' ') + value + "\n";
        if (!table_columns.empty()) {
            std::vector<std::size_t> widths(table_columns.size());
            for (std::size_t i = 0; i < table_columns.size(); ++i)
                widths[i] = table_columns[i].size();
            for (const auto& row : table_rows)
                for (std::size_t i = 0; i < row.size(); ++i)
                    widths[i] = std::max(widths[i], row[i].size());
            out += '\n';
            for (std::size_t i = 0; i < table_columns.size(); ++i)
                out += table_columns[i] +
                       std::string(widths[i] - table_columns[i].size() + 2, ' ');
            out += '\n';
            for (const auto& row : table_rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out += row[i] + std::string(widths[i] - row[i].size() + 2, ' ');
                out += '\n';
            }
        }
        return out;
    }
};

int cmd_expected_norm(const std::string& type, const std::string& weight, bool with_weights,
                      const GlobalFlags& flags) {
    const auto rs = RootSystem::build(type);
    const Weight lambda = parse_weight(weight, rs.rank());
    const auto ws = weight_multiplicities(rs, lambda, flags.dim_cap);
    const Rational lhs = expected_norm(rs, ws);
    const Rational rhs = expected_norm_closed_form(rs, lambda);

    Report report;
    report.scalars = {{"type", rs.type().str()},
                      {"lambda", weight_str(lambda)},
                      {"dim", to_string(ws.dim)},
                      {"coxeter_number", std::to_string(rs.coxeter_number())},
                      {"casimir", show(casimir_eigenvalue(rs, lambda), flags)},
                      {"expected_norm", show(lhs, flags)},
                      {"closed_form", show(rhs, flags)},
                      {"match", lhs == rhs ? "true" : "false"}};
    if (with_weights) {
        report.table_columns = {"mu", "multiplicity", "orbit", "norm2"};
        report.table_only_csv = true;
        for (const auto& entry : ws.dominant)
            report.table_rows.push_back({weight_str(entry.mu), to_string(entry.multiplicity),
                                         to_string(entry.orbit),
                                         show(rs.inner(entry.mu, entry.mu), flags)});
    }
    emit(report.render(flags), flags);
    return lhs == rhs ? kExitOk : kExitCheckFailure;
}

int cmd_cores(std::int64_t a, std::int64_t b, bool list, bool alcove, bool phi,
              const GlobalFlags& flags) {
    const std::int64_t cap = std::max(cores::kDefaultCoreCap, std::max(a, b));
    if (cap > 16) throw CapExceeded("core parameters above 16 are not desk-scale");
    const auto cores_list = cores::simultaneous_cores(a, b, cap);
    const Rational mean = cores::expected_size(a, b, cap);
    const Rational mean_closed = cores::expected_size_closed_form(a, b);

    Report report;
    report.scalars = {{"a", std::to_string(a)},
                      {"b", std::to_string(b)},
                      {"count", std::to_string(cores_list.size())},
                      {"anderson_count", to_string(cores::anderson_count(a, b))},
                      {"mean_size", show(mean, flags)},
                      {"mean_size_closed_form", show(mean_closed, flags)},
                      {"max_size", to_string(cores::max_core_size(a, b))}};
    if (alcove || phi) {
        const auto points = cores::alcove_points(a, b);
        if (alcove) {
            Rational total(0);
            for (const auto& x : points) total += cores::size_b_statistic(x, a, b);
            const Rational alcove_mean =
                total / Rational(Integer(static_cast<long>(points.size())));
            report.scalars.emplace_back("alcove_points", std::to_string(points.size()));
            report.scalars.emplace_back("alcove_mean_size", show(alcove_mean, flags));
            report.scalars.emplace_back("cx_mean", show(cores::cx_mean(a, b), flags));
            report.scalars.emplace_back("cx_mean_closed_form",
                                        show(cores::cx_mean_closed_form(a, b), flags));
        }
        if (phi) {
            std::set<Weight> image;
            for (const auto& x : points) image.insert(cores::phi(x, a, b));
            report.scalars.emplace_back("phi_image", std::to_string(image.size()));
            report.scalars.emplace_back("phi_expected",
                                        to_string(binomial(Integer(a + b - 1), b)));
            report.scalars.emplace_back(
                "phi_bijective", image.size() == points.size() ? "true" : "false");
        }
    }
    if (list) {
        report.table_columns = {"partition", "size"};
        report.table_only_csv = true;
        for (const auto& core : cores_list)
            report.table_rows.push_back(
                {core.partition.empty() ? "0" : partition_str(core.partition),
                 std::to_string(core.size)});
    }
    emit(report.render(flags), flags);
    return kExitOk;
}

int cmd_tableaux(const std::string& shape_str, int n, const GlobalFlags& flags) {
    const Partition shape = parse_partition(shape_str);
    const Rational tableaux = typea::expected_norm_tableaux(shape, n);
    const Rational pieri = typea::pieri_rhs_closed_form(shape, n);
    const Rational theorem = typea::theorem_rhs(shape, n);

    Report report;
    report.scalars = {{"shape", shape.empty() ? "0" : partition_str(shape)},
                      {"n", std::to_string(n)},
                      {"tableau_count", to_string(typea::schur_eval_ones(shape, n))},
                      {"expected_norm_tableaux", show(tableaux, flags)},
                      {"pieri_closed_form", show(pieri, flags)},
                      {"theorem_rhs", show(theorem, flags)},
                      {"match", tableaux == pieri && pieri == theorem ? "true" : "false"}};
    emit(report.render(flags), flags);
    return tableaux == pieri && pieri == theorem ? kExitOk : kExitCheckFailure;
}

int cmd_cumulants(const std::string& kind, const std::string& type, std::int64_t p, int node,
                  std::int64_t k, const std::string& rect, std::int64_t n, int max_r,
                  bool oracle, const GlobalFlags& flags) {
    cumulants::QProduct dist;
    Report report;
    report.scalars.emplace_back("kind", kind);

    auto poset_from_flags = [&]() -> cumulants::MinusculePoset {
        if (!rect.empty()) {
            const Weight sides = parse_weight(rect);
            if (sides.size() != 2) throw ParseError("--rect expects two comma-separated sides");
            report.scalars.emplace_back("rect", weight_str(sides));
            return cumulants::rectangle_poset(sides[0], sides[1]);
        }
        if (type.empty()) throw ParseError("pp/syt need either --rect or --type with --node");
        const auto rs = RootSystem::build(type);
        report.scalars.emplace_back("type", rs.type().str());
        report.scalars.emplace_back("node", std::to_string(node));
        return cumulants::minuscule_poset(rs, node);
    };

    if (kind == "inv") {
        if (type.empty()) throw ParseError("inv needs --type");
        const auto rs = RootSystem::build(type);
        report.scalars.emplace_back("type", rs.type().str());
        dist = cumulants::inversions_distribution(rs);
    } else if (kind == "cat") {
        if (type.empty()) throw ParseError("cat needs --type and --p");
        const auto rs = RootSystem::build(type);
        report.scalars.emplace_back("type", rs.type().str());
        report.scalars.emplace_back("p", std::to_string(p));
        dist = cumulants::rational_catalan_distribution(rs, p);
    } else if (kind == "pp") {
        const auto poset = poset_from_flags();
        report.scalars.emplace_back("k", std::to_string(k));
        dist = cumulants::pp_distribution(poset, k);
    } else if (kind == "syt") {
        dist = cumulants::syt_maj_distribution(poset_from_flags());
    } else {  // dpp, enforced by the option validator
        report.scalars.emplace_back("n", std::to_string(n));
        dist = cumulants::dpp_distribution(n);
    }

    const auto brute =
        oracle ? cumulants::brute_cumulants(dist, max_r) : std::vector<Rational>{};
    report.table_columns = oracle ? std::vector<std::string>{"r", "lemma", "oracle", "match"}
                                  : std::vector<std::string>{"r", "lemma"};
    report.table_only_csv = true;
    for (int r = 1; r <= max_r; ++r) {
        const Rational lemma = cumulants::lemma_cumulant(dist, r);
        std::vector<std::string> row{std::to_string(r), show(lemma, flags)};
        if (oracle) {
            row.push_back(show(brute[static_cast<std::size_t>(r - 1)], flags));
            row.push_back(lemma == brute[static_cast<std::size_t>(r - 1)] ? "true" : "false");
        }
        report.table_rows.push_back(std::move(row));
    }
    emit(report.render(flags), flags);
    if (oracle)
        for (int r = 1; r <= max_r; ++r)
            if (cumulants::lemma_cumulant(dist, r) != brute[static_cast<std::size_t>(r - 1)])
                return kExitCheckFailure;
    return kExitOk;
}

int cmd_verify(const std::string& suite, bool inject_fault, const GlobalFlags& flags) {
    verifier::Options opts;
    opts.exec = Exec::parallel;
    opts.inject_fault = inject_fault;
    const auto checks = verifier::run_suite(suite, opts);
    std::string rendered;
    if (flags.format == "csv")
        rendered = verifier::to_csv(checks);
    else if (flags.format == "pretty")
        rendered = verifier::to_table(checks, flags.approx);
    else
        rendered = verifier::to_jsonl(checks);
    emit(rendered, flags);
    return verifier::count_failures(checks) == 0 ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weylstat: exact statistics of weight systems, core partitions, tableaux "
                 "and q-product distributions"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format (default pretty)")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_flag("--approx", flags.approx,
                 "Append decimal approximations in pretty output (display only)");
    app.add_option("--dim-cap", flags.dim_cap,
                   "Maximum representation dimension (default 200000)")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{10000000}));
    app.add_option("--out", flags.out_file, "Write the report to a file instead of stdout");

    auto* norm_cmd = app.add_subcommand(
        "expected-norm", "Expected squared weight norm of an irreducible representation");
    norm_cmd->fallthrough();
    std::string norm_type, norm_weight;
    bool norm_weights = false;
    norm_cmd->add_option("--type", norm_type, "Cartan type, e.g. A2 or I2(7)")->required();
    norm_cmd->add_option("--weight", norm_weight, "Highest weight in fundamental coordinates")
        ->required();
    norm_cmd->add_flag("--weights", norm_weights,
                       "Include the dominant weight/multiplicity/orbit table");

    auto* cores_cmd =
        app.add_subcommand("cores", "Simultaneous (a,b)-core statistics and alcove geometry");
    cores_cmd->fallthrough();
    std::int64_t cores_a = 0, cores_b = 0;
    bool cores_list = false, cores_alcove = false, cores_phi = false;
    cores_cmd->add_option("--a", cores_a, "First core parameter")->required();
    cores_cmd->add_option("--b", cores_b, "Second core parameter")->required();
    cores_cmd->add_flag("--list", cores_list, "List every core with its size");
    cores_cmd->add_flag("--alcove", cores_alcove, "Dilated-alcove lattice statistics");
    cores_cmd->add_flag("--phi", cores_phi, "Check the alcove-to-weights bijection");

    auto* tab_cmd = app.add_subcommand(
        "tableaux", "Semistandard tableau content statistics against both closed forms");
    tab_cmd->fallthrough();
    std::string tab_shape;
    int tab_n = 0;
    tab_cmd->add_option("--shape", tab_shape, "Partition, e.g. 2,1")->required();
    tab_cmd->add_option("--n", tab_n, "Entry bound (number of variables)")
        ->required()
        ->check(CLI::Range(1, 8));

    auto* cum_cmd =
        app.add_subcommand("cumulants", "Cumulants of q-product distributions via the lemma");
    cum_cmd->fallthrough();
    std::string cum_kind, cum_type, cum_rect;
    std::int64_t cum_p = 1, cum_k = 1, cum_n = 1;
    int cum_node = 1, cum_r = 2;
    bool cum_oracle = false;
    cum_cmd->add_option("kind", cum_kind, "inv | cat | pp | syt | dpp")
        ->required()
        ->check(CLI::IsMember({"inv", "cat", "pp", "syt", "dpp"}));
    cum_cmd->add_option("--type", cum_type, "Cartan type (inv, cat, pp, syt)");
    cum_cmd->add_option("--p", cum_p, "Rational Catalan parameter, coprime to h (cat)");
    cum_cmd->add_option("--node", cum_node, "Minuscule node, 1-based (pp, syt)");
    cum_cmd->add_option("--k", cum_k, "Plane partition height bound (pp)")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{50}));
    cum_cmd->add_option("--rect", cum_rect, "Rectangle poset sides, e.g. 2,3 (pp, syt)");
    cum_cmd->add_option("--n", cum_n, "DPP order (dpp)")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{12}));
    cum_cmd->add_option("--r", cum_r, "Highest cumulant order (default 2)")
        ->check(CLI::Range(1, 12));
    cum_cmd->add_flag("--oracle", cum_oracle,
                      "Also expand the distribution and report brute-force cumulants");

    auto* verify_cmd =
        app.add_subcommand("verify", "Run a verification suite and report every check");
    verify_cmd->fallthrough();
    std::string verify_suite;
    bool verify_fault = false;
    verify_cmd->add_option("--suite", verify_suite, "main | cores | typea | cumulants | all")
        ->required();
    verify_cmd->add_flag("--inject-fault", verify_fault, "")->group("");  // test hook, hidden
    std::string verify_format_default = "json";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (norm_cmd->parsed())
            return cmd_expected_norm(norm_type, norm_weight, norm_weights, flags);
        if (cores_cmd->parsed())
            return cmd_cores(cores_a, cores_b, cores_list, cores_alcove, cores_phi, flags);
        if (tab_cmd->parsed()) return cmd_tableaux(tab_shape, tab_n, flags);
        if (cum_cmd->parsed())
            return cmd_cumulants(cum_kind, cum_type, cum_p, cum_node, cum_k, cum_rect, cum_n,
                                 cum_r, cum_oracle, flags);
        if (verify_cmd->parsed()) {
            // verify defaults to machine-readable JSONL when --format is untouched
            if (app.count("--format") == 0) flags.format = verify_format_default;
            return cmd_verify(verify_suite, verify_fault, flags);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
