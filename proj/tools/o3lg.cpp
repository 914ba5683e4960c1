// o3lg: subduction frequencies, little groups and symmetry detection for
// closed subgroups of O(3).
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 internal
// consistency error, 4 zero coefficient vector.

#include "o3lg/axial_little_groups.hpp"
#include "o3lg/chain_criteria.hpp"
#include "o3lg/errors.hpp"
#include "o3lg/ground_truth.hpp"
#include "o3lg/numeric_oracle.hpp"
#include "o3lg/verification.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace o3lg;
using ojson = nlohmann::ordered_json;

namespace {

enum class Format { Text, Json, Csv };

struct Config {
    Format format = Format::Text;
    double tol = 1e-7;
    int n_max = 0;  // 0: per-irrep default
    std::uint64_t seed = 1;
};

// Rows of strings with a header; rendered as aligned text, csv or a json array.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print(const Table& t, Format f)
{
    if (f == Format::Json) {
        ojson arr = ojson::array();
        for (const auto& r : t.rows) {
            ojson o;
            for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = r[i];
            arr.push_back(o);
        }
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (f == Format::Csv) {
        auto line = [](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_field(r[i]);
            std::cout << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        return;
    }
    std::vector<std::size_t> w(t.header.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.header[i].size();
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            s += r[i];
            if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
        }
        std::cout << s << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

// Fixed-precision number with negative zero folded away, for stable diffs.
std::string num(double x, int digits = 10)
{
    if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0.0;
    return fmt::format("{:.{}f}", x, digits);
}

std::string join(const std::vector<std::string>& v, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

// "4+" and "4-" are O(3) labels, a bare "4" is SO(3).
Irrep rotation_irrep(const std::string& s)
{
    const bool signed_label = !s.empty() && (s.back() == '+' || s.back() == '-');
    return parse_irrep({signed_label ? Family::O3 : Family::SO3, 0}, s);
}

std::string read_input(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

ojson coeff_json(const CoeffVector& a)
{
    ojson c = ojson::object();
    for (int i = 0; i < a.coeffs.size(); ++i) c[coeff_label(i)] = std::stod(num(a.coeffs(i), 12));
    return {{"l", a.l}, {"parity", a.parity > 0 ? "+" : "-"}, {"coeffs", c}};
}

std::string coeff_text(const CoeffVector& a)
{
    std::vector<std::string> parts;
    for (int i = 0; i < a.coeffs.size(); ++i)
        if (std::abs(a.coeffs(i)) > 1e-12) parts.push_back(num(a.coeffs(i), 10) + "*Z" + coeff_label(i));
    return parts.empty() ? "0" : join(parts, " + ");
}

std::string matrix_text(const Eigen::Matrix3d& m)
{
    std::string s;
    for (int i = 0; i < 3; ++i)
        s += fmt::format("  [{:>14} {:>14} {:>14}]\n", num(m(i, 0)), num(m(i, 1)), num(m(i, 2)));
    return s;
}

ojson matrix_json(const Eigen::Matrix3d& m)
{
    ojson rows = ojson::array();
    for (int i = 0; i < 3; ++i) rows.push_back({std::stod(num(m(i, 0), 12)), std::stod(num(m(i, 1), 12)),
                                                std::stod(num(m(i, 2), 12))});
    return rows;
}

// ---- subduce ---------------------------------------------------------------

int cmd_subduce(const Config& cfg, const std::string& group, const std::string& irrep)
{
    const GroupId h = canonicalize_label(group);
    const Irrep ir = rotation_irrep(irrep);
    SubductionResult r = subduce(h, ir);
    std::string check = "n/a";
    if (is_finite(h)) {
        const int t = subduce_trace(h, ir).c;
        if (t != r.c)
            throw ConsistencyError(fmt::format("closed form gives {} but the trace gives {} for ({}, {})", r.c, t,
                                               h.label(), ir.label()));
        check = "trace agrees";
    }
    if (cfg.format == Format::Text) {
        std::cout << r.c << "\n";
        std::cerr << "method: " << method_name(r.method) << "; cross-check: " << check << "\n";
        return 0;
    }
    print(Table{{"group", "irrep", "c", "method", "cross_check"},
                {{h.label(), ir.label(), std::to_string(r.c), method_name(r.method), check}}},
          cfg.format);
    return 0;
}

// ---- littlegroups ----------------------------------------------------------

std::vector<std::string> entry_row(const Irrep& ir, const LittleGroupEntry& e)
{
    return {ir.label(), e.group.label(), std::to_string(e.c), std::to_string(e.f0), std::to_string(e.fm),
            std::to_string(e.stratum_dim), e.rep_vector ? join(*e.rep_vector) : "invariant basis"};
}

int cmd_littlegroups(const Config& cfg, const std::string& parent_label, std::optional<int> l,
                     std::optional<std::string> irrep, std::optional<int> l_max)
{
    const GroupId parent = canonicalize_label(parent_label);
    if (is_axial_infinite(parent)) {
        std::vector<Irrep> irreps;
        if (irrep) irreps.push_back(parse_irrep(parent, *irrep));
        else irreps = axial_irreps(parent, l_max.value_or(l.value_or(4)));
        Table t{{"irrep", "group", "dim", "printed"}, {}};
        for (const auto& ir : irreps) {
            const auto r = axial_little_group(ir);
            t.rows.push_back({ir.label(), r.little_group.label(), std::to_string(r.vector_dim),
                              r.flagged ? r.published.label() : r.little_group.label()});
        }
        print(t, cfg.format);
        return 0;
    }
    if (parent.family != Family::SO3 && parent.family != Family::O3)
        throw ParseError("littlegroups needs SO3, O3 or an infinite axial parent, not " + parent.label());
    const bool o3 = parent.family == Family::O3;

    std::vector<Irrep> irreps;
    if (irrep) {
        irreps.push_back(parse_irrep(parent, *irrep));
    } else {
        int lo = 0, hi = 0;
        if (l) lo = hi = *l;
        else if (l_max) hi = *l_max;
        else throw ParseError("give --l, --irrep or --lmax");
        if (lo < 0) throw ParseError("l must be non-negative");
        for (int k = lo; k <= hi; ++k) {
            if (!o3) irreps.push_back(Irrep::so3(k));
            else {
                irreps.push_back(Irrep::o3(k, 1));
                irreps.push_back(Irrep::o3(k, -1));
            }
        }
    }
    Table t{{"irrep", "group", "c", "f0", "fm", "stratum_dim", "rep_vector"}, {}};
    for (const auto& ir : irreps) {
        const auto n = cfg.n_max > 0 ? std::optional<int>(cfg.n_max) : std::nullopt;
        for (const auto& e : massive_little_groups(parent, ir, n)) t.rows.push_back(entry_row(ir, e));
    }
    print(t, cfg.format);
    return 0;
}

// ---- table -----------------------------------------------------------------

Table frequency_table()
{
    const auto rows = load_frequency_table();
    std::vector<GroupId> listed;
    for (const auto& r : rows) listed.push_back(r.group);
    const auto slice = subgroups({Family::O3, 0}, 6);
    auto within = [&](const GroupId& g) { return std::find(listed.begin(), listed.end(), g) != listed.end(); };

    Table t;
    t.header = {"group", "fbar", "0+"};
    for (const auto& s : frequency_irreps()) t.header.push_back(s);
    t.header.push_back("adjacent");
    for (const auto& g : listed) {
        std::vector<std::string> row{g.label(), std::to_string(dims(g).fbar)};
        row.push_back(std::to_string(subduce(g, Irrep::o3(0, 1)).c));
        for (const auto& s : frequency_irreps()) row.push_back(std::to_string(subduce(g, rotation_irrep(s)).c));
        std::vector<std::string> up;
        for (const auto& x : adjacent_supergroups(g, slice))
            if (within(x)) up.push_back(x.label());
        row.push_back(join(up));
        t.rows.push_back(row);
    }
    return t;
}

// Groups down the rows, irreps across, stratum dimension in the cells.
Table little_group_grid(const GroupId& parent, const std::vector<Irrep>& irreps)
{
    std::vector<GroupId> order;
    std::map<std::pair<GroupId, std::string>, int> cell;
    for (const auto& ir : irreps)
        for (const auto& e : massive_little_groups(parent, ir)) {
            if (std::find(order.begin(), order.end(), e.group) == order.end()) order.push_back(e.group);
            cell[{e.group, ir.label()}] = e.stratum_dim;
        }
    std::stable_sort(order.begin(), order.end(), listing_less);
    Table t;
    t.header = {"group"};
    for (const auto& ir : irreps) t.header.push_back(ir.label());
    for (const auto& g : order) {
        std::vector<std::string> row{g.label()};
        for (const auto& ir : irreps) {
            const auto it = cell.find({g, ir.label()});
            row.push_back(it == cell.end() ? "-" : std::to_string(it->second));
        }
        t.rows.push_back(row);
    }
    return t;
}

// General-l rules evaluated at one irrep: each family up to n_max with its
// frequency, little-group status and representation vector.
Table rules_table(const Irrep& ir, int n_max)
{
    const GroupId parent = ir.parent;
    const auto lgs = massive_little_groups(parent, ir, std::max(n_max, default_n_max(ir.l)));
    const auto slice = subgroups(parent, n_max);
    Table t{{"group", "c", "little_group", "rep_vector"}, {}};
    for (const auto& g : slice.nodes) {
        const int c = subduce(g, ir).c;
        const bool lg = std::any_of(lgs.begin(), lgs.end(), [&](const auto& e) { return e.group == g; });
        std::string vec = "-";
        if (lg) {
            try {
                vec = join(rep_vectors(g, ir));
            } catch (const DomainError&) {
                vec = "invariant basis";
            }
        }
        t.rows.push_back({g.label(), std::to_string(c), lg ? "yes" : "no", vec});
    }
    return t;
}

int cmd_table(const Config& cfg, std::string name, std::optional<int> l_max, std::optional<std::string> irrep)
{
    static const std::map<std::string, std::string> alias{
        {"1", "so3-rules"}, {"2", "o3-rules"}, {"3", "frequencies"}, {"4", "so3"}, {"5", "o3"}};
    if (alias.count(name)) name = alias.at(name);
    Table t;
    if (name == "frequencies") {
        t = frequency_table();
    } else if (name == "so3") {
        std::vector<Irrep> irs;
        for (int l = 0; l <= l_max.value_or(4); ++l) irs.push_back(Irrep::so3(l));
        t = little_group_grid({Family::SO3, 0}, irs);
    } else if (name == "o3") {
        std::vector<Irrep> irs;
        for (int p : {1, -1})
            for (int l = 0; l <= l_max.value_or(9); ++l) irs.push_back(Irrep::o3(l, p));
        t = little_group_grid({Family::O3, 0}, irs);
    } else if (name == "so3-rules" || name == "o3-rules") {
        const bool o3 = name == "o3-rules";
        Irrep ir = o3 ? Irrep::o3(6, 1) : Irrep::so3(6);
        if (irrep) ir = parse_irrep({o3 ? Family::O3 : Family::SO3, 0}, *irrep);
        t = rules_table(ir, cfg.n_max > 0 ? cfg.n_max : 6);
    } else {
        throw ParseError("unknown table '" + name + "'; expected frequencies, so3, o3, so3-rules, o3-rules or 1-5");
    }
    print(t, cfg.format);
    return 0;
}

// ---- symmetry, canonicalize, invariants -----------------------------------

std::string axis_angle(const Eigen::Matrix3d& m)
{
    const Eigen::AngleAxisd aa(m);
    if (std::abs(aa.angle()) < 1e-8) return "identity";
    const auto& a = aa.axis();
    return fmt::format("{} rad about ({}, {}, {})", num(aa.angle()), num(a.x()), num(a.y()), num(a.z()));
}

int cmd_symmetry(const Config& cfg, const std::string& path)
{
    const auto a = parse_coeff_json(read_input(path));
    DetectOptions opt;
    opt.tol = cfg.tol;
    const auto r = detect_symmetry(a, opt);
    if (cfg.format == Format::Json) {
        ojson w = ojson::array();
        for (const auto& x : r.witnesses)
            w.push_back({{"axis", {std::stod(num(x.element.axis.x(), 12)), std::stod(num(x.element.axis.y(), 12)),
                                   std::stod(num(x.element.axis.z(), 12))}},
                         {"angle", std::stod(num(x.element.angle, 12))},
                         {"improper", x.element.improper},
                         {"residual", x.residual}});
        ojson j{{"group", r.group.label()}, {"orientation", matrix_json(r.orientation)}, {"witnesses", w},
                {"warnings", r.warnings}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.format == Format::Csv) {
        Table t{{"axis_x", "axis_y", "axis_z", "angle", "improper", "residual"}, {}};
        for (const auto& x : r.witnesses)
            t.rows.push_back({num(x.element.axis.x()), num(x.element.axis.y()), num(x.element.axis.z()),
                              num(x.element.angle), x.element.improper ? "1" : "0", fmt::format("{:.3e}", x.residual)});
        std::cout << "# group " << r.group.label() << "\n";
        print(t, Format::Csv);
        return 0;
    }
    std::cout << "group: " << r.group.label() << "\n";
    std::cout << "orientation: " << axis_angle(r.orientation) << "\n" << matrix_text(r.orientation);
    std::cout << "witnesses:\n";
    for (const auto& x : r.witnesses)
        std::cout << fmt::format("  {}{} rad about ({}, {}, {})  residual {:.3e}\n", x.element.improper ? "i*" : "",
                                 num(x.element.angle, 6), num(x.element.axis.x(), 6), num(x.element.axis.y(), 6),
                                 num(x.element.axis.z(), 6), x.residual);
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
    return 0;
}

int cmd_canonicalize(const Config& cfg, const std::string& path, const std::string& target)
{
    const auto a = parse_coeff_json(read_input(path));
    const auto c = canonicalize(a, target, 32, cfg.seed);
    if (cfg.format == Format::Json) {
        ojson j{{"rotation", matrix_json(c.rotation)}, {"residual", c.residual}, {"vector", coeff_json(c.coeffs)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.format == Format::Csv) {
        Table t{{"label", "coefficient"}, {}};
        for (int i = 0; i < c.coeffs.coeffs.size(); ++i) t.rows.push_back({coeff_label(i), num(c.coeffs.coeffs(i))});
        print(t, Format::Csv);
        return 0;
    }
    std::cout << "rotation: " << axis_angle(c.rotation) << "\n" << matrix_text(c.rotation);
    std::cout << "residual: " << fmt::format("{:.3e}", c.residual) << "\n";
    std::cout << "vector: " << coeff_text(c.coeffs) << "\n";
    return 0;
}

int cmd_invariants(const Config& cfg, const std::string& group, const std::string& irrep)
{
    const GroupId h = canonicalize_label(group);
    const Irrep ir = rotation_irrep(irrep);
    const auto basis = invariant_basis(h, ir);
    if (cfg.format == Format::Json) {
        ojson arr = ojson::array();
        for (const auto& b : basis) arr.push_back(coeff_json(b));
        std::cout << ojson{{"group", h.label()}, {"irrep", ir.label()}, {"rank", basis.size()}, {"basis", arr}}.dump(2)
                  << "\n";
        return 0;
    }
    if (cfg.format == Format::Csv) {
        Table t{{"vector", "label", "coefficient"}, {}};
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (int i = 0; i < basis[k].coeffs.size(); ++i)
                t.rows.push_back({std::to_string(k), coeff_label(i), num(basis[k].coeffs(i))});
        print(t, Format::Csv);
        return 0;
    }
    std::cout << "rank " << basis.size() << "\n";
    for (const auto& b : basis) std::cout << coeff_text(b) << "\n";
    return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Config& cfg, bool tables, bool criteria, bool oracle, int l_max)
{
    std::vector<int> ids;
    if (tables) ids.insert(ids.end(), {1, 2, 3, 4, 6});
    if (criteria) ids.insert(ids.end(), {5, 11});
    if (oracle) ids.insert(ids.end(), {7, 8, 9, 10, 12});
    if (ids.empty())
        for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
    std::sort(ids.begin(), ids.end());

    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.oracle_lmax = l_max;
    bool ok = true;
    ojson report{{"seed", cfg.seed}, {"criteria", ojson::array()}};
    std::vector<SuiteResult> results;
    for (int id : ids) {
        results.push_back(run_criterion(id, opt));
        ok = ok && results.back().passed(false);
    }
    if (cfg.format == Format::Json) {
        for (const auto& r : results) {
            ojson checks = ojson::array();
            for (const auto& c : r.checks) {
                ojson o{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
                if (!c.ledger_id.empty()) o["ledger"] = c.ledger_id;
                checks.push_back(o);
            }
            report["criteria"].push_back({{"id", r.criterion},
                                          {"title", r.title},
                                          {"status", r.passed(false) ? "PASS" : "FAIL"},
                                          {"strict", r.passed(true) ? "PASS" : "FAIL"},
                                          {"checks", checks}});
        }
        ojson ledger = ojson::array();
        for (const auto& d : load_discrepancies())
            ledger.push_back({{"id", d.id}, {"kind", d.kind}, {"subject", d.subject}, {"irrep", d.irrep},
                              {"printed", d.printed}, {"derived", d.derived}, {"note", d.note}});
        report["ledger"] = ledger;
        report["status"] = ok ? "PASS" : "FAIL";
        std::cout << report.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    Table t{{"criterion", "status", "strict", "pass", "ledgered", "fail", "title"}, {}};
    for (const auto& r : results)
        t.rows.push_back({std::to_string(r.criterion), r.passed(false) ? "PASS" : "FAIL",
                          r.passed(true) ? "PASS" : "FAIL", std::to_string(r.count(CheckStatus::Pass)),
                          std::to_string(r.count(CheckStatus::Ledgered)), std::to_string(r.count(CheckStatus::Fail)),
                          r.title});
    print(t, cfg.format);
    if (cfg.format == Format::Text)
        for (const auto& r : results)
            for (const auto& c : r.checks)
                if (c.status != CheckStatus::Pass)
                    std::cout << fmt::format("  [{}] {} {}: {}{}\n", r.criterion, status_name(c.status), c.name,
                                             c.detail, c.ledger_id.empty() ? "" : "  (ledger " + c.ledger_id + ")");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Isotropy subgroups for irreducible representations of O(3) and SO(3)"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}}))
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "Symmetry detection tolerance")->capture_default_str();
    app.add_option("--nmax", cfg.n_max, "Largest n of Cn/Dn families in lattice slices (0: max(2l+1, 6))")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

    std::function<int()> run;

    std::string group, irrep_s, path, target = "2-", parent;
    std::optional<int> l, l_max;
    std::optional<std::string> irrep_opt;
    int verify_lmax = 6;
    bool tables = false, criteria = false, oracle = false;

    auto* sub = app.add_subcommand("subduce", "Subduction frequency of an irrep on a group");
    sub->add_option("group", group)->required();
    sub->add_option("irrep", irrep_s, "4+ / 4- for O(3), 4 for SO(3)")->required();
    sub->callback([&] { run = [&] { return cmd_subduce(cfg, group, irrep_s); }; });

    auto* lg = app.add_subcommand("littlegroups", "Little groups of an irrep or a range of l");
    lg->add_option("parent", parent, "SO3, O3, Cinf, Cinfh, Cinfv, Dinf or Dinfh")->required();
    lg->add_option("--l", l, "Rank l (O3: both parities)");
    lg->add_option("--irrep", irrep_opt, "Single irrep label");
    lg->add_option("--lmax", l_max, "Sweep l = 0..lmax (axial parents: |m|, n up to lmax)");
    lg->callback([&] { run = [&] { return cmd_littlegroups(cfg, parent, l, irrep_opt, l_max); }; });

    auto* tb = app.add_subcommand("table", "Emit a reproduced table");
    tb->add_option("name", group, "frequencies|so3|o3|so3-rules|o3-rules (or 3|4|5|1|2)")->required();
    tb->add_option("--lmax", l_max, "Largest l for so3/o3");
    tb->add_option("--irrep", irrep_opt, "Irrep for the rules tables (default 6 / 6+)");
    tb->callback([&] { run = [&] { return cmd_table(cfg, group, l_max, irrep_opt); }; });

    auto* sy = app.add_subcommand("symmetry", "Detect the symmetry group of a coefficient vector");
    sy->add_option("file", path, "JSON coefficient vector, '-' for stdin")->required();
    sy->callback([&] { run = [&] { return cmd_symmetry(cfg, path); }; });

    auto* ca = app.add_subcommand("canonicalize", "Rotate a vector to zero 1+, 1- and a target coefficient");
    ca->add_option("file", path, "JSON coefficient vector, '-' for stdin")->required();
    ca->add_option("--target", target, "Third coefficient to remove")->capture_default_str();
    ca->callback([&] { run = [&] { return cmd_canonicalize(cfg, path, target); }; });

    auto* in = app.add_subcommand("invariants", "Orthonormal basis of the invariants of a group in an irrep");
    in->add_option("group", group)->required();
    in->add_option("irrep", irrep_s)->required();
    in->callback([&] { run = [&] { return cmd_invariants(cfg, group, irrep_s); }; });

    auto* ve = app.add_subcommand("verify", "Run the acceptance suites");
    ve->add_flag("--tables", tables, "Table reproduction suites");
    ve->add_flag("--criteria", criteria, "Chain-criterion regressions");
    ve->add_flag("--oracle", oracle, "Numeric-oracle suites");
    ve->add_option("--lmax", verify_lmax, "Largest l of the oracle sweep")->capture_default_str();
    ve->callback([&] { run = [&] { return cmd_verify(cfg, tables, criteria, oracle, verify_lmax); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroVectorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 3;
    }
}
