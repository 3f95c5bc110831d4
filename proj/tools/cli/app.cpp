#include "cli/app.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "deltader/catalog.hpp"
#include "deltader/constructions.hpp"
#include "deltader/errors.hpp"
#include "deltader/identities.hpp"
#include "deltader/io.hpp"
#include "deltader/solver.hpp"
#include "deltader/witt.hpp"

namespace deltader::cli {

namespace {

using io::Json;

struct Input {
    std::string digest;
    io::AlgebraFile file;
};

Input read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    return {io::digest(text), io::load_algebra(text)};
}

class Reporter {
public:
    Reporter(const std::vector<std::string>& args, bool json, std::ostream& out) : args_(args), json_(json), out_(out) {}

    std::ostringstream& text() { return text_; }
    Json& results() { return results_; }
    void set_digest(std::string d) { digest_ = std::move(d); }

    int finish(int status) {
        if (json_) {
            Json report;
            report["command"] = args_;
            if (digest_) report["input_digest"] = *digest_;
            report["results"] = results_;
            report["exit_status"] = status;
            out_ << report.dump(2) << '\n';
        } else {
            out_ << text_.str();
        }
        return status;
    }

private:
    const std::vector<std::string>& args_;
    bool json_;
    std::ostream& out_;
    std::ostringstream text_;
    Json results_ = Json::object();
    std::optional<std::string> digest_;
};

void print_matrix(std::ostream& os, const Matrix& m, const std::string& indent) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << indent << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << m(r, c);
        os << " ]\n";
    }
}

std::string format_vector(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i == 0 ? "" : ", ") + v[i].to_string();
    return s + ")";
}

Json vector_json(const Vector& v) {
    Json j = Json::array();
    for (const auto& s : v) j.push_back(s.to_string());
    return j;
}

Product parse_product(const std::string& s) { return s == "primary" ? Product::Primary : Product::Second; }

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
    std::string file;
    std::vector<std::string> identities;
    std::string product = "primary";
};

int cmd_verify(const VerifyOptions& o, Reporter& rep) {
    std::vector<Identity> ids;
    for (const auto& name : o.identities) {
        const auto id = parse_identity(name);
        if (!id) throw ParseError("unknown identity '" + name + "'");
        ids.push_back(*id);
    }
    const Input in = read_input(o.file);
    rep.set_digest(in.digest);
    const Algebra& a = in.file.algebra;
    const auto report = check_identities(a, ids, parse_product(o.product));

    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) {
        Json j{{"identity", std::string(to_string(v.identity))}, {"holds", v.holds}};
        rep.text() << to_string(v.identity) << ": " << (v.holds ? "holds" : "fails");
        if (v.witness) {
            Json w{{"form", v.witness->form}};
            Json basis = Json::array();
            for (std::size_t i : v.witness->basis) basis.push_back(a.names()[i]);
            w["basis"] = basis;
            Json args = Json::array();
            for (const auto& x : v.witness->args) args.push_back(vector_json(x));
            w["args"] = args;
            w["residual"] = vector_json(v.witness->residual);
            j["witness"] = std::move(w);
            rep.text() << " [" << v.witness->form << "] at (";
            if (!v.witness->basis.empty()) {
                for (std::size_t q = 0; q < v.witness->basis.size(); ++q)
                    rep.text() << (q == 0 ? "" : ", ") << a.names()[v.witness->basis[q]];
            } else {
                for (std::size_t q = 0; q < v.witness->args.size(); ++q)
                    rep.text() << (q == 0 ? "" : ", ") << format_vector(v.witness->args[q]);
            }
            rep.text() << "), residual " << format_vector(v.witness->residual);
        }
        rep.text() << '\n';
        verdicts.push_back(std::move(j));
    }
    rep.results()["verdicts"] = std::move(verdicts);
    return report.all_hold() ? kSuccess : kCheckFailed;
}

// ---- solve ----------------------------------------------------------------

struct SolveOptions {
    std::string file;
    std::string kind;
    std::optional<std::string> delta;
    std::vector<std::string> delta_list;
    std::string product = "primary";
};

struct Solved {
    SolutionSpace space;
    std::vector<Classification> classes;
    bool verified = true;
};

Solved solve_one(const Algebra& a, const std::string& kind, const Scalar& delta, Product product) {
    Solved s;
    if (kind == "der")
        s.space = delta_derivations(a, delta, product);
    else if (kind == "superder-even")
        s.space = delta_superderivations(a, delta, MapParity::Even);
    else if (kind == "superder-odd")
        s.space = delta_superderivations(a, delta, MapParity::Odd);
    else if (kind == "centroid")
        s.space = centroid(a);
    else
        s.space = generalized_delta_derivations(a, delta);
    s.classes = classify_all(s.space, a);

    for (const auto& m : s.space.maps) {
        switch (s.space.kind) {
        case SpaceKind::DeltaDerivation: s.verified &= is_delta_derivation(m, a, delta, product).holds; break;
        case SpaceKind::SuperDerivation: s.verified &= is_delta_superderivation(m, a, delta, *s.space.parity).holds; break;
        case SpaceKind::Centroid: s.verified &= is_centroid_member(m, a).holds; break;
        case SpaceKind::GeneralizedPairs: break;
        }
    }
    for (const auto& p : s.space.pairs)
        s.verified &= is_generalized_pair(p, a, delta).holds && chi_phi_check(p, a, delta).holds;
    return s;
}

int cmd_solve(const SolveOptions& o, Reporter& rep) {
    static const std::vector<std::string> kinds = {"der", "superder-even", "superder-odd", "centroid", "generalized"};
    if (std::find(kinds.begin(), kinds.end(), o.kind) == kinds.end()) throw ParseError("unknown kind '" + o.kind + "'");

    const Input in = read_input(o.file);
    rep.set_digest(in.digest);
    const Algebra& a = in.file.algebra;
    if (o.kind.starts_with("superder") && !a.is_graded())
        throw GradingError("--kind " + o.kind + " requires a graded algebra");
    const Product product = parse_product(o.product);
    a.tensor(product);

    std::vector<std::string> delta_texts = o.delta_list;
    if (o.delta) delta_texts.insert(delta_texts.begin(), *o.delta);
    if (delta_texts.empty()) {
        if (o.kind != "centroid") throw ParseError("--delta or --delta-list is required");
        delta_texts.push_back("1");
    }
    std::vector<Scalar> deltas;
    for (const auto& t : delta_texts) deltas.push_back(Scalar::parse(a.field(), t));

    std::vector<std::future<Solved>> jobs;
    for (const auto& d : deltas)
        jobs.push_back(std::async(std::launch::async, solve_one, std::cref(a), std::cref(o.kind), d, product));

    Json spaces = Json::array();
    bool all_verified = true;
    for (auto& job : jobs) {
        const Solved s = job.get();
        all_verified &= s.verified;
        Json j = io::solution_space_to_json(s.space, s.classes);
        j["verified"] = s.verified;
        spaces.push_back(std::move(j));

        auto& t = rep.text();
        t << to_string(s.space.kind);
        if (s.space.parity) t << " (" << to_string(*s.space.parity) << ")";
        if (s.space.kind != SpaceKind::Centroid) t << ", delta = " << s.space.delta;
        t << ": dim " << s.space.dim() << '\n';
        for (std::size_t m = 0; m < s.space.dim(); ++m) {
            t << "  member " << m << " [" << to_string(s.classes[m].verdict) << ", "
              << to_string(s.classes[m].reason) << "]\n";
            if (s.space.kind == SpaceKind::GeneralizedPairs) {
                t << "    chi:\n";
                print_matrix(t, s.space.pairs[m].chi, "      ");
                t << "    phi:\n";
                print_matrix(t, s.space.pairs[m].phi, "      ");
            } else {
                print_matrix(t, s.space.maps[m], "    ");
            }
        }
    }
    rep.results()["field"] = io::field_to_json(a.field());
    rep.results()["dim"] = a.dim();
    rep.results()["spaces"] = std::move(spaces);
    return all_verified ? kSuccess : kCheckFailed;
}

// ---- double ---------------------------------------------------------------

struct DoubleOptions {
    std::string file;
    std::string bracket = "second";
    std::optional<std::string> out;
};

int cmd_double(const DoubleOptions& o, Reporter& rep, std::ostream& out, bool json) {
    const Input in = read_input(o.file);
    rep.set_digest(in.digest);
    const DoubleSpec d = kantor_double(in.file.algebra, parse_product(o.bracket));
    const std::string emitted = io::emit_algebra(io::double_file(d));
    if (!o.out) {
        if (json) {
            rep.results()["double"] = Json::parse(emitted);
            return rep.finish(kSuccess);
        }
        out << emitted;
        return kSuccess;
    }
    std::ofstream file(*o.out, std::ios::binary);
    if (!file) throw ParseError("cannot write '" + *o.out + "'");
    file << emitted;
    rep.results()["output"] = *o.out;
    rep.results()["dim"] = d.double_algebra.dim();
    rep.results()["grading"] = *d.double_algebra.grading();
    rep.text() << "wrote " << *o.out << ": " << d.construction << " of dimension " << d.double_algebra.dim() << '\n';
    return rep.finish(kSuccess);
}

// ---- correspond -------------------------------------------------------------

int cmd_correspond(const std::string& path, const std::string& delta_text, const std::string& bracket, Reporter& rep) {
    const Input in = read_input(path);
    rep.set_digest(in.digest);
    const Algebra& a = in.file.algebra;
    const Scalar delta = Scalar::parse(a.field(), delta_text);
    const auto r = even_correspondence(a, delta, parse_product(bracket));
    rep.results()["delta"] = delta.to_string();
    rep.results()["base_dim"] = r.base_dim();
    rep.results()["double_even_dim"] = r.double_dim();
    rep.results()["extensions_valid"] = r.extensions_valid;
    rep.results()["injective"] = r.injective;
    rep.results()["surjective"] = r.surjective;
    rep.results()["bijective"] = r.bijective();
    rep.text() << "delta = " << delta << "\n"
               << "  dim Delta(A) cap Delta(A,{,}): " << r.base_dim() << '\n'
               << "  dim even delta-superderivations of K(A): " << r.double_dim() << '\n'
               << "  extensions valid: " << (r.extensions_valid ? "yes" : "no") << '\n'
               << "  injective: " << (r.injective ? "yes" : "no") << ", surjective: " << (r.surjective ? "yes" : "no")
               << '\n';
    return r.extensions_valid ? kSuccess : kCheckFailed;
}

// ---- info -------------------------------------------------------------------

int cmd_info(const std::string& path, Reporter& rep) {
    const Input in = read_input(path);
    rep.set_digest(in.digest);
    const Algebra& a = in.file.algebra;
    const auto left = annihilator(a, Side::Left);
    const auto right = annihilator(a, Side::Right);
    const auto both = annihilator(a, Side::TwoSided);
    const auto unit = unit_element(a);
    auto& r = rep.results();
    r["field"] = io::field_to_json(a.field());
    r["dim"] = a.dim();
    r["graded"] = a.is_graded();
    r["has_table2"] = a.has_second();
    r["annihilator_dims"] = {{"left", left.size()}, {"right", right.size()}, {"two_sided", both.size()}};
    r["unit"] = unit ? vector_json(unit->coords()) : Json(nullptr);
    rep.text() << "field " << a.field().to_string() << ", dim " << a.dim() << (a.is_graded() ? ", graded" : "")
               << (a.has_second() ? ", with {,}" : "") << '\n'
               << "annihilator dims: left " << left.size() << ", right " << right.size() << ", two-sided "
               << both.size() << '\n'
               << "unit: " << (unit ? format_vector(unit->coords()) : std::string("none")) << '\n';
    return kSuccess;
}

// ---- catalog ----------------------------------------------------------------

struct CatalogOptions {
    std::vector<std::string> positional;
    std::optional<std::uint64_t> p;
    std::optional<std::size_t> n;
    bool with_bracket = false;
    std::optional<std::string> out;
};

int cmd_catalog(const CatalogOptions& o, std::ostream& out) {
    std::vector<std::string> pos = o.positional;
    if (!pos.empty() && pos.front() == "emit") pos.erase(pos.begin());
    if (pos.size() != 1) throw ParseError("usage: catalog [emit] <name> | catalog list");
    if (pos.front() == "list") {
        for (const auto& name : catalog::names()) out << name << '\n';
        return kSuccess;
    }
    const auto a = catalog::by_name(pos.front(), {o.p, o.n, o.with_bracket});
    if (!a) throw ParseError("unknown catalog algebra '" + pos.front() + "'");
    const std::string emitted = io::emit_algebra(*a);
    if (o.out) {
        std::ofstream file(*o.out, std::ios::binary);
        if (!file) throw ParseError("cannot write '" + *o.out + "'");
        file << emitted;
    } else {
        out << emitted;
    }
    return kSuccess;
}

// ---- witt -------------------------------------------------------------------

struct WittOptions {
    std::vector<long> tuple;
    long window = 8;
    bool search = false;
};

Json window_json(const witt::WindowReport& r) {
    Json j{{"window", r.window},       {"holds", r.holds},           {"failures", r.failures},
           {"is_zero", r.is_zero},     {"is_scalar", r.is_scalar},   {"nontrivial", r.nontrivial()}};
    if (r.scalar) j["scalar"] = r.scalar->to_string();
    if (r.worst)
        j["worst"] = {{"i", r.worst->i}, {"j", r.worst->j}, {"residual", r.worst->residual.to_string()}};
    return j;
}

void window_text(std::ostream& t, const witt::WindowReport& r) {
    t << "1/2-identity on [-1, " << r.window << "]: " << (r.holds ? "holds" : "fails");
    if (!r.holds) t << " (" << r.failures << " failing pairs)";
    t << "; map is " << (r.is_zero ? "zero" : r.is_scalar ? "scalar " + r.scalar->to_string() : "non-scalar") << '\n';
    if (r.worst)
        t << "  worst witness: (e" << r.worst->i << ", e" << r.worst->j << "), residual " << r.worst->residual.to_string()
          << '\n';
}

int cmd_witt(const WittOptions& o, Reporter& rep) {
    if (o.window < 1) throw ParseError("--window must be at least 1");
    if (o.search) {
        const auto results = witt::search_half_derivation_tuples(o.window);
        Json arr = Json::array();
        bool found = false;
        for (const auto& t : results) {
            Json j = window_json(t.report);
            j["tuple"] = t.indices;
            arr.push_back(std::move(j));
            found |= t.report.nontrivial();
            rep.text() << "tuple (e" << t.indices[0] << ", e" << t.indices[1] << ", e" << t.indices[2] << "): ";
            window_text(rep.text(), t.report);
        }
        rep.results()["search"] = std::move(arr);
        rep.results()["found_nontrivial"] = found;
        return found ? kSuccess : kCheckFailed;
    }
    if (o.tuple.size() != 3) throw ParseError("--tuple needs three indices");
    for (long i : o.tuple)
        if (i < -1) throw ParseError("Witt indices start at -1");
    const auto r = witt::standard_lie_poly_map(witt::Element::basis(o.tuple[0]), witt::Element::basis(o.tuple[1]),
                                               witt::Element::basis(o.tuple[2]));
    const auto report = witt::check_half_derivation_window(r, o.window);
    rep.results() = window_json(report);
    rep.results()["tuple"] = o.tuple;
    window_text(rep.text(), report);
    return report.holds ? kSuccess : kCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"deltader: delta-derivations of finite-dimensional (super)algebras", "deltader"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit machine-readable JSON reports");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check identities exhaustively");
    verify_cmd->add_option("file", verify.file, "Algebra file")->required();
    verify_cmd->add_option("--identities,-i", verify.identities, "Comma-separated identities")
        ->required()
        ->delimiter(',');
    verify_cmd->add_option("--product", verify.product)->check(CLI::IsMember({"primary", "second"}));
    verify_cmd->add_flag("--json", json);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve for delta-derivations, superderivations, centroid, pairs");
    solve_cmd->add_option("file", solve.file, "Algebra file")->required();
    solve_cmd->add_option("--kind", solve.kind, "der | superder-even | superder-odd | centroid | generalized")
        ->required();
    solve_cmd->add_option("--delta", solve.delta, "delta as an integer or fraction, e.g. -1 or 1/2");
    solve_cmd->add_option("--delta-list", solve.delta_list, "Several deltas, solved concurrently")->delimiter(',');
    solve_cmd->add_option("--product", solve.product, "Product for --kind der")
        ->check(CLI::IsMember({"primary", "second"}));
    solve_cmd->add_flag("--json", json);

    DoubleOptions dbl;
    auto* double_cmd = app.add_subcommand("double", "Build the Kantor double A + Ax");
    double_cmd->add_option("file", dbl.file, "Algebra file")->required();
    double_cmd->add_option("--bracket", dbl.bracket, "Bracket {,}: the second table or the product itself")
        ->check(CLI::IsMember({"primary", "second"}));
    double_cmd->add_option("--out,-o", dbl.out, "Write the double here and print a report");
    double_cmd->add_flag("--json", json);

    std::string corr_file;
    std::string corr_delta;
    std::string corr_bracket = "second";
    auto* corr_cmd = app.add_subcommand("correspond", "Compare Delta(A) cap Delta(A,{,}) with even maps of K(A)");
    corr_cmd->add_option("file", corr_file)->required();
    corr_cmd->add_option("--delta", corr_delta)->required();
    corr_cmd->add_option("--bracket", corr_bracket)->check(CLI::IsMember({"primary", "second"}));
    corr_cmd->add_flag("--json", json);

    std::string info_file;
    auto* info_cmd = app.add_subcommand("info", "Annihilators and unit");
    info_cmd->add_option("file", info_file)->required();
    info_cmd->add_flag("--json", json);

    CatalogOptions cat;
    auto* catalog_cmd = app.add_subcommand("catalog", "Emit a built-in algebra: catalog [emit] <name>, catalog list");
    catalog_cmd->add_option("name", cat.positional)->required()->expected(1, 2);
    catalog_cmd->add_option("--p", cat.p, "Prime for witt-modular");
    catalog_cmd->add_option("--n", cat.n, "Dimension for abelian");
    catalog_cmd->add_flag("--with-bracket", cat.with_bracket, "Use the product as table2");
    catalog_cmd->add_option("--out,-o", cat.out);

    WittOptions wopt;
    auto* witt_cmd = app.add_subcommand("witt", "Windowed 1/2-derivation check of the standard Lie polynomial map");
    witt_cmd->add_option("--tuple", wopt.tuple, "Indices i j k of x1, x2, x3 = e_i, e_j, e_k")->expected(3);
    witt_cmd->add_option("--window", wopt.window, "Largest basis index N");
    witt_cmd->add_flag("--search", wopt.search, "Scan all tuples -1 <= i < j < k <= 2");
    witt_cmd->add_flag("--json", json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    Reporter rep(args, json, out);
    try {
        if (*verify_cmd) return rep.finish(cmd_verify(verify, rep));
        if (*solve_cmd) return rep.finish(cmd_solve(solve, rep));
        if (*double_cmd) return cmd_double(dbl, rep, out, json);
        if (*corr_cmd) return rep.finish(cmd_correspond(corr_file, corr_delta, corr_bracket, rep));
        if (*info_cmd) return rep.finish(cmd_info(info_file, rep));
        if (*catalog_cmd) return cmd_catalog(cat, out);
        if (*witt_cmd) return rep.finish(cmd_witt(wopt, rep));
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace deltader::cli
