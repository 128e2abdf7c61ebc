#include "commands.hpp"

#include "io.hpp"

#include "twd/catalog.hpp"
#include "twd/cohochschild.hpp"
#include "twd/free_diff.hpp"
#include "twd/twisted.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace twd::cli {

namespace {

using io::json;

struct Report {
    json command = json::array();
    json inputs = json::object();
    VerificationReport checks;
    json results = json::object();
};

json report_json(const Report& r)
{
    json verdicts = json::array();
    for (const auto& c : r.checks.checks)
        verdicts.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    return {{"schema", kReportSchema}, {"version", kToolVersion}, {"command", r.command}, {"inputs", r.inputs},
        {"verdicts", verdicts}, {"results", r.results}, {"status", r.checks.passed() ? "pass" : "fail"}};
}

void flatten(const std::string& prefix, const json& j, std::ostringstream& os)
{
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items())
            flatten(prefix.empty() ? k : prefix + "." + k, v, os);
        return;
    }
    if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())
        && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_object(); })) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(prefix + "[" + std::to_string(i) + "]", j[i], os);
        return;
    }
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

std::string render_text(const Report& r)
{
    std::ostringstream os;
    std::string cmd;
    for (const auto& a : r.command)
        cmd += (cmd.empty() ? "" : " ") + a.get<std::string>();
    os << "command: " << cmd << "\n";
    for (const auto& [role, v] : r.inputs.items())
        os << "input " << role << ": sha256 " << v.at("sha256").get<std::string>() << "\n";
    for (const auto& c : r.checks.checks) {
        os << (c.passed ? "pass  " : "FAIL  ") << c.name;
        if (!c.passed && !c.witness.empty())
            os << ": " << c.witness;
        os << "\n";
    }
    flatten("", r.results, os);
    os << "status: " << (r.checks.passed() ? "pass" : "fail") << "\n";
    return os.str();
}

std::string render(const Report& r, const std::string& format)
{
    return format == "text" ? render_text(r) : report_json(r).dump(2) + "\n";
}

// Loads an input file, recording its digest under `role`.
std::string load(Report& r, const std::string& role, const std::string& path)
{
    std::string text = io::read_input(path);
    r.inputs[role] = {{"sha256", io::sha256_hex(text)}};
    return text;
}

Bialgebra need_bialgebra(const io::Algebra& a, const char* cmd)
{
    if (const auto* b = std::get_if<Bialgebra>(&a))
        return *b;
    throw FormatError(std::string(cmd) + " expects a bialgebra file");
}

LieAlgebra need_lie(const io::Algebra& a, const char* cmd)
{
    if (const auto* g = std::get_if<LieAlgebra>(&a))
        return *g;
    throw FormatError(std::string(cmd) + " expects a lie_algebra file");
}

json endo_json(const DenseMat<Q>& d, const std::vector<std::string>& names)
{
    json out = json::object();
    for (Index i = 0; i < d.cols(); ++i)
        out[names[static_cast<std::size_t>(i)]] = format_tensor(Tensor::from_vector(d.col(i)), names);
    return out;
}

json twisted_json(const Bialgebra& b, const TwistedDerivation& t)
{
    return {{"d", endo_json(t.d, b.basis_names())}, {"phi", format_tensor(t.phi, b.basis_names())}};
}

std::string wedge_display(int dim, int n, const Vec<Q>& v, const std::vector<std::string>& names)
{
    const auto basis = exterior_basis(dim, n);
    std::string s;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const Q& c = v(static_cast<Index>(r));
        if (c == 0)
            continue;
        if (!s.empty())
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        const Q a = abs(c);
        if (a != 1)
            s += a.str() + "*";
        std::string w;
        for (int i : basis[r])
            w += (w.empty() ? "" : "∧") + names[static_cast<std::size_t>(i)];
        s += w.empty() ? "1" : w;
    }
    return s.empty() ? "0" : s;
}

// Subcommands.

void cmd_verify(Report& r, const std::string& file)
{
    const auto a = io::parse_algebra(load(r, "algebra", file));
    if (const auto* b = std::get_if<Bialgebra>(&a)) {
        r.checks = verify_bialgebra(*b);
        r.results = {{"kind", "bialgebra"}, {"name", b->name()}, {"dim", b->dim()}, {"has_antipode", b->antipode().has_value()}};
    } else {
        const auto& g = std::get<LieAlgebra>(a);
        r.checks = verify_lie(g);
        r.results = {{"kind", "lie_algebra"}, {"name", g.name()}, {"dim", g.dim()}};
    }
}

void cmd_cohomology(Report& r, const std::string& file, int degree, int max_degree)
{
    const Bialgebra b = need_bialgebra(io::parse_algebra(load(r, "algebra", file)), "cohomology");
    if (degree < 0)
        throw FormatError("--degree must be non-negative");
    if (max_degree < degree)
        max_degree = degree;
    json degrees = json::array();
    for (int n = degree; n <= max_degree; ++n) {
        const CohomologyResult h = cohomology(b, n);
        json reps = json::array();
        for (const auto& t : h.representatives)
            reps.push_back(io::tensor_json(t, b.basis_names()));
        degrees.push_back({{"degree", n}, {"dim", h.dim}, {"cocycle_dim", h.cocycle_dim},
            {"coboundary_dim", h.coboundary_dim}, {"representatives", reps}});
        if (n >= 1) {
            const Matrix<Q> dd = multiply(differential(b, n), differential(b, n - 1));
            r.checks.add("∂∘∂ = 0 into degree " + std::to_string(n + 1), is_zero(dd), "nonzero composite");
        }
    }
    r.results = {{"name", b.name()}, {"degrees", degrees}};
}

void cmd_twisted(Report& r, const std::string& file, bool crossed, bool jacobiator, bool separate_all)
{
    const Bialgebra b = need_bialgebra(io::parse_algebra(load(r, "algebra", file)), "twisted");
    const TwistedCrossedModule cm = crossed_module(b);
    json basis = json::array();
    bool all_ok = true;
    std::string witness;
    for (const auto& v : cm.der.vectors()) {
        const TwistedDerivation t = unpack(b, v);
        const VerificationReport vr = verify_twisted_derivation(b, t);
        if (!vr.passed() && all_ok) {
            all_ok = false;
            for (const auto& c : vr.checks)
                if (!c.passed)
                    witness = c.name + ": " + c.witness;
        }
        basis.push_back(twisted_json(b, t));
    }
    r.checks.add("Der_tw basis satisfies Leibniz, conjd, cocd, normd", all_ok, witness);
    r.results["name"] = b.name();
    r.results["der_tw_dim"] = cm.der.dim();
    r.results["der_tw_basis"] = basis;
    r.results["der0_dim"] = invariant_twists(b).dim();
    r.results["der_bialg_dim"] = bialgebra_derivations(b).dim();

    if (crossed || jacobiator) {
        r.checks.append(cm.inv.report, "crossed module: ");
        const Index p = cm.inv.pi0_dim();
        json sections = json::array();
        for (Index u = 0; u < p; ++u)
            sections.push_back(twisted_json(b, cm.section(b, u)));
        json pi1 = json::array();
        for (const auto& v : cm.pi1_vectors())
            pi1.push_back(format_tensor(Tensor::from_vector(v), b.basis_names()));
        json cmj = {{"pi0_dim", p}, {"pi1_dim", cm.inv.pi1.dim()}, {"pi0_bracket", io::table_json(cm.inv.pi0_bracket, p)},
            {"pi0_sections", sections}, {"pi1_basis", pi1}, {"boundary_image_dim", cm.inv.boundary_image.dim()}};
        // Dimension of [π0, π0].
        std::vector<Vec<Q>> derived;
        for (const auto& v : cm.inv.pi0_bracket)
            derived.push_back(v);
        cmj["pi0_derived_dim"] = p == 0 ? 0 : Subspace<Q>::span(p, derived).dim();
        r.results["crossed_module"] = cmj;
    }
    if (jacobiator) {
        const Index p = cm.inv.pi0_dim();
        json entries = json::array();
        for (Index i = 0; i < p; ++i)
            for (Index j = 0; j < p; ++j)
                for (Index k = 0; k < p; ++k) {
                    const Vec<Q>& v = cm.inv.jacobiator[static_cast<std::size_t>((i * p + j) * p + k)];
                    if (!is_zero(v))
                        entries.push_back({{"args", {i, j, k}}, {"value", io::sparse_json(v)}});
                }
        r.results["jacobiator"] = {{"identically_zero", entries.empty()}, {"nonzero_entries", entries}};
    }
    if (separate_all) {
        const OuterQuotients oq = outer_quotients(b);
        json seps = json::array();
        Index k = 0;
        for (const auto& v : cm.der.vectors()) {
            const auto s = separate(b, unpack(b, v));
            json e = {{"index", k++}, {"separable", s.has_value()}};
            if (s) {
                e["a"] = format_tensor(Tensor::from_vector(s->a), b.basis_names());
                e["separated"] = twisted_json(b, s->separated);
            }
            seps.push_back(e);
        }
        r.results["separation"] = {{"all_separable", oq.separated}, {"out_der0_dim", oq.out_der0.dim()},
            {"out_bialg_dim", oq.out_bialg.dim()}, {"basis", seps}};
        if (oq.separated)
            r.checks.append(oq.semidirect, "semidirect: ");
    }
}

TriangleForm triangle_of(const std::string& s)
{
    if (s == "consistent")
        return TriangleForm::Consistent;
    if (s == "printed")
        return TriangleForm::Printed;
    throw FormatError("--triangle must be 'consistent' or 'printed'");
}

StabilizerForm stabilizer_of(const std::string& s)
{
    if (s == "printed")
        return StabilizerForm::Printed;
    if (s == "from-action")
        return StabilizerForm::FromAction;
    throw FormatError("--stabilizer-form must be 'printed' or 'from-action'");
}

void cmd_rmatrix(Report& r, const std::string& file, const std::string& rfile, bool tangent, bool stabilizer,
    const std::string& triangle, const std::string& stab_form)
{
    const Bialgebra b = need_bialgebra(io::parse_algebra(load(r, "algebra", file)), "rmatrix");
    const Tensor R = io::to_tensor(b, io::parse_element(load(r, "R", rfile)));
    if (R.degree() != 2)
        throw FormatError("R must have degree 2");
    const TriangleForm tf = triangle_of(triangle);
    const StabilizerForm sf = stabilizer_of(stab_form);
    r.checks = r_matrix_verify(b, R, tf);
    r.results["R"] = io::tensor_json(R, b.basis_names());
    if (tangent) {
        const Subspace<Q> t = tangent_r_space(b, R, tf);
        json basis = json::array();
        for (const auto& v : t.vectors())
            basis.push_back(io::tensor_json(Tensor::from_dense(b.dim(), 2, v), b.basis_names()));
        r.results["tangent"] = {{"dim", t.dim()}, {"basis", basis}};
    }
    if (stabilizer) {
        const Subspace<Q> s = stabilizer_der(b, R, sf);
        json basis = json::array();
        for (const auto& v : s.vectors())
            basis.push_back(twisted_json(b, unpack(b, v)));
        json module = json::array();
        for (const auto& c : r_module_check(b, R, tf, sf).checks)
            module.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
        r.results["stabilizer"] = {{"dim", s.dim()}, {"basis", basis}, {"module_checks", module}};
    }
}

void cmd_lie(Report& r, const std::string& file, bool outder, int ext_n, bool schouten_flag, bool semidirect)
{
    const LieAlgebra g = need_lie(io::parse_algebra(load(r, "algebra", file)), "lie");
    r.checks = verify_lie(g);
    r.results["name"] = g.name();
    r.results["dim"] = g.dim();
    if (outder) {
        const OuterDerivations o = outer_derivations(g);
        json lifts = json::array();
        for (Index u = 0; u < o.outer.dim(); ++u)
            lifts.push_back(endo_json(o.lift(g.dim(), u), g.basis_names()));
        r.results["outder"] = {{"der_dim", o.der.dim()}, {"inner_dim", o.inner.dim()}, {"outer_dim", o.outer.dim()},
            {"bracket", io::table_json(o.bracket, o.outer.dim())}, {"lifts", lifts}};
    }
    if (ext_n >= 0) {
        const Subspace<Q> inv = exterior_invariants(g, ext_n);
        json basis = json::array();
        for (const auto& v : inv.vectors())
            basis.push_back({{"coords", io::sparse_json(v)}, {"display", wedge_display(g.dim(), ext_n, v, g.basis_names())}});
        r.results["exterior_invariants"] = {{"degree", ext_n}, {"dim", inv.dim()}, {"basis", basis}};
    }
    if (schouten_flag) {
        const Subspace<Q> inv = exterior_invariants(g, 2);
        bool ok = true;
        std::string witness;
        for (Index i = 0; i < inv.dim(); ++i)
            for (Index j = 0; j < inv.dim(); ++j) {
                const Vec<Q> s = schouten(g, 2, inv.vector(i), 2, inv.vector(j));
                if (!is_zero(s) && ok) {
                    ok = false;
                    witness = "[[" + std::to_string(i) + "," + std::to_string(j) + "]] = "
                        + wedge_display(g.dim(), 3, s, g.basis_names());
                }
            }
        r.checks.add("Schouten bracket vanishes on (Λ²g)^g", ok, witness);
        r.results["schouten"] = {{"invariant_dim", inv.dim()}, {"vanishes", ok}};
    }
    if (semidirect) {
        const Semidirect s = semidirect_outder_tw(g);
        r.checks.append(s.report, "semidirect: ");
        r.results["semidirect"] = {{"outer_dim", s.outer_dim()}, {"twist_dim", s.twist_dim()},
            {"basis_names", s.algebra.basis_names()}, {"bracket", [&] {
                 json t = json::array();
                 for (const auto& c : s.algebra.constants())
                     t.push_back({c.i, c.j, c.k, io::scalar_json(c.value)});
                 return t;
             }()}};
    }
}

json graded_json(const GradedCohomology& h)
{
    json pieces = json::array();
    for (const auto& p : h.pieces)
        pieces.push_back({{"total_degree", p.m}, {"cochain_dim", p.cochain_dim}, {"dim", p.dim},
            {"cocycle_dim", p.cocycle_dim}, {"coboundary_dim", p.coboundary_dim}});
    json alt = json::array();
    for (const auto& v : h.alt_images)
        alt.push_back(io::sparse_json(v));
    return {{"degree", h.n}, {"truncation", h.N}, {"invariant", h.invariant}, {"dim", h.dim}, {"expected", h.expected},
        {"pieces", pieces}, {"alt_images", alt}};
}

void cmd_ug(Report& r, const std::string& file, int n, int trunc, bool invariant, const std::string& twist)
{
    const LieAlgebra g = need_lie(io::parse_algebra(load(r, "algebra", file)), "ug");
    r.results["name"] = g.name();
    if (!twist.empty()) {
        const Tensor phi = io::to_lie_tensor(g, io::parse_element(load(r, "twist", twist)));
        if (phi.degree() != 2)
            throw FormatError("the twist must have degree 2");
        r.checks = ug_invariant_twist_check(g, phi);
        r.results["twist"] = io::tensor_json(phi, g.basis_names());
        return;
    }
    if (trunc < 0)
        throw FormatError("--graded-cohomology needs --trunc");
    const GradedCohomology h = invariant ? invariant_graded_cohomology(g, trunc, n) : graded_cohomology(g, trunc, n);
    r.checks = h.report;
    json reps = json::array();
    for (const auto& t : h.representatives)
        reps.push_back(format_u(t, g.basis_names()));
    json out = graded_json(h);
    out["representatives"] = reps;
    r.results["graded_cohomology"] = out;
}

void cmd_ediff(Report& r, const std::string& file, const std::string& phi_file, int weight, bool verify, bool separation)
{
    const auto a = io::parse_algebra(load(r, "base", file));
    if (!std::holds_alternative<LieAlgebra>(a))
        throw PreconditionError("unsupported base: ediff takes the abelian Lie algebra whose U is the polynomial base");
    const LieAlgebra& g = std::get<LieAlgebra>(a);
    const UTensor phi = io::to_words(g.basis_names(), io::parse_element(load(r, "phi", phi_file)));
    const FreeDiffAlgebra e(g, phi, weight);
    const auto names = e.letter_names();
    json dims = json::array();
    for (int w = 0; w <= weight; ++w)
        dims.push_back(e.piece_dim(w));
    json letters = json::array();
    for (int id = 0; id < weight * e.generators(); ++id)
        letters.push_back({{"letter", e.letter_name(id)}, {"weight", e.letter_weight(id)},
            {"coproduct", format_u(e.letter_coproduct(id), names)}});
    r.results = {{"generators", g.basis_names()}, {"phi", format_u(e.phi(), g.basis_names())}, {"weight_cap", weight},
        {"piece_dims", dims}, {"letters", letters}};
    if (verify) {
        const FreeDiffReport fr = verify_twisted_derivation_of_e(e);
        r.checks = fr.report;
        r.results["coderivation_witness"]
            = fr.coderivation_witness ? json(format_word(*fr.coderivation_witness, names)) : json(nullptr);
    }
    if (separation) {
        const SeparationFeasibility s = separation_feasibility(e);
        r.results["separation"] = {{"max_weight", s.max_weight}, {"feasible", s.feasible},
            {"a", s.a ? json(format_u(*s.a, names)) : json(nullptr)}};
    }
}

std::string catalog_list(const std::string& format)
{
    std::vector<std::string> names = catalog::bialgebra_names();
    for (const auto& n : catalog::lie_names())
        names.push_back(n);
    if (format == "text") {
        std::string s;
        for (const auto& n : names)
            s += n + "\n";
        return s;
    }
    return json{{"schema", kReportSchema}, {"version", kToolVersion}, {"catalog", names}}.dump(2) + "\n";
}

std::string catalog_emit(const std::string& name)
{
    const auto& bs = catalog::bialgebra_names();
    if (std::find(bs.begin(), bs.end(), name) != bs.end())
        return io::emit_algebra(catalog::bialgebra(name));
    return io::emit_algebra(catalog::lie_algebra(name));
}

Outcome input_error(const std::string& msg, const std::string& format, const json& command)
{
    Outcome o;
    o.exit_code = kInputError;
    o.err = "error: " + msg + "\n";
    if (format != "text")
        o.out = json{{"schema", kReportSchema}, {"version", kToolVersion}, {"command", command}, {"status", "error"},
                    {"error", msg}}
                    .dump(2)
            + "\n";
    return o;
}

} // namespace

Outcome run(const std::vector<std::string>& args)
{
    CLI::App app{"Twisted derivations of bialgebras: exact verification and cohomology"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string file;
    int degree = -1;
    int max_degree = -1;

    auto* verify = app.add_subcommand("verify", "Run the axiom verifier for an algebra file");
    verify->add_option("file", file, "Algebra file, - for stdin")->required();

    auto* coh = app.add_subcommand("cohomology", "Co-Hochschild cohomology of a bialgebra");
    coh->add_option("file", file)->required();
    coh->add_option("--degree", degree)->required();
    coh->add_option("--max-degree", max_degree);

    bool crossed = false, jacobiator = false, separate_all = false;
    auto* tw = app.add_subcommand("twisted", "Twisted derivations and their crossed module");
    tw->add_option("file", file)->required();
    tw->add_flag("--crossed-module", crossed);
    tw->add_flag("--jacobiator", jacobiator);
    tw->add_flag("--separate-all", separate_all);

    std::string rfile;
    bool tangent = false, stabilizer = false;
    std::string triangle = "consistent", stab_form = "printed";
    auto* rm = app.add_subcommand("rmatrix", "R-matrix checks, tangent space and stabilizer");
    rm->add_option("file", file)->required();
    rm->add_option("--R", rfile, "Element file for R")->required();
    rm->add_flag("--tangent", tangent);
    rm->add_flag("--stabilizer", stabilizer);
    rm->add_option("--triangle", triangle)->check(CLI::IsMember({"consistent", "printed"}));
    rm->add_option("--stabilizer-form", stab_form)->check(CLI::IsMember({"printed", "from-action"}));

    bool outder = false, schouten_flag = false, semidirect = false;
    int ext_n = -1;
    auto* lie = app.add_subcommand("lie", "Lie algebra derivations, exterior invariants, Schouten bracket");
    lie->add_option("file", file)->required();
    auto* lie_ops = lie->add_option_group("operation");
    lie_ops->add_flag("--outder", outder);
    lie_ops->add_option("--exterior-invariants", ext_n);
    lie_ops->add_flag("--schouten", schouten_flag);
    lie_ops->add_flag("--semidirect", semidirect);
    lie_ops->require_option(1);

    int graded_n = -1, trunc = -1;
    bool invariant = false;
    std::string twist;
    auto* ug = app.add_subcommand("ug", "Graded co-Hochschild cohomology of S(g) and twist checks in U(g)");
    ug->add_option("file", file)->required();
    auto* ug_ops = ug->add_option_group("operation");
    ug_ops->add_option("--graded-cohomology", graded_n);
    ug_ops->add_option("--twist-check", twist, "Element file for φ ∈ g⊗g");
    ug_ops->require_option(1);
    ug->add_option("--trunc", trunc);
    ug->add_flag("--invariant", invariant);

    std::string phi_file;
    int weight = kDefaultWeightCap;
    bool e_verify = false, e_separation = false;
    auto* ed = app.add_subcommand("ediff", "Free differential bialgebra E(H) on a polynomial base");
    ed->add_option("base", file, "Abelian lie_algebra file")->required();
    ed->add_option("--phi", phi_file, "Element file for φ")->required();
    ed->add_option("--weight", weight);
    ed->add_flag("--verify", e_verify);
    ed->add_flag("--separation", e_separation);

    std::string cat_action, cat_name;
    auto* cat = app.add_subcommand("catalog", "List or emit built-in algebras");
    cat->add_option("action", cat_action)->required()->check(CLI::IsMember({"list", "emit"}));
    cat->add_option("name", cat_name);

    for (auto* sub : {verify, coh, tw, rm, lie, ug, ed, cat})
        sub->fallthrough();

    json command = json::array();
    for (const auto& a : args)
        command.push_back(a);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {kSuccess, app.help(), ""};
    } catch (const CLI::CallForAllHelp&) {
        return {kSuccess, app.help("", CLI::AppFormatMode::All), ""};
    } catch (const CLI::ParseError& e) {
        return input_error(e.what(), format, command);
    }

    Report r;
    r.command = command;
    try {
        if (*cat) {
            if (cat_action == "list")
                return {kSuccess, catalog_list(format), ""};
            if (cat_name.empty())
                throw FormatError("catalog emit needs a name");
            return {kSuccess, catalog_emit(cat_name), ""};
        }
        if (*verify)
            cmd_verify(r, file);
        else if (*coh)
            cmd_cohomology(r, file, degree, max_degree);
        else if (*tw)
            cmd_twisted(r, file, crossed, jacobiator, separate_all);
        else if (*rm)
            cmd_rmatrix(r, file, rfile, tangent, stabilizer, triangle, stab_form);
        else if (*lie)
            cmd_lie(r, file, outder, ext_n, schouten_flag, semidirect);
        else if (*ug)
            cmd_ug(r, file, graded_n, trunc, invariant, twist);
        else if (*ed)
            cmd_ediff(r, file, phi_file, weight, e_verify, e_separation);
    } catch (const FormatError& e) {
        return input_error(e.what(), format, command);
    } catch (const PreconditionError& e) {
        return input_error(std::string("precondition: ") + e.what(), format, command);
    } catch (const CapExceeded& e) {
        return input_error(std::string("cap exceeded: ") + e.what(), format, command);
    }
    Outcome o;
    o.out = render(r, format);
    o.exit_code = r.checks.passed() ? kSuccess : kVerificationFailed;
    return o;
}

} // namespace twd::cli
