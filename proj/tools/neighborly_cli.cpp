// Command-line front end: generators, predicates and reports over FCT files.
//
// Exit codes: 0 all requested checks hold, 1 a check failed, 2 bad input,
// 3 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "neighborly/analysis.hpp"
#include "neighborly/complex.hpp"
#include "neighborly/dual_graph.hpp"
#include "neighborly/error.hpp"
#include "neighborly/fct.hpp"
#include "neighborly/homology.hpp"
#include "neighborly/isomorphism.hpp"
#include "neighborly/walkup.hpp"

using namespace neighborly;
using json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, InputError = 2, InternalError = 3 };

struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SimplicialComplex load(const std::string& path)
{
    if (path == "-")
        return read_fct(std::cin);
    std::ifstream in(path);
    if (!in)
        throw InputFailure("cannot open " + path);
    return read_fct(in);
}

std::string instance_name(const std::string& path)
{
    return path == "-" ? "stdin" : path;
}

void emit_fct(const SimplicialComplex& x, const std::string& out_path)
{
    if (out_path.empty() || out_path == "-") {
        write_fct(std::cout, x);
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw InputFailure("cannot write " + out_path);
    write_fct(out, x);
}

void summarize(const SimplicialComplex& x)
{
    const FVector fv = f_vector(x);
    std::cerr << "f-vector (";
    for (std::size_t i = 0; i < fv.counts.size(); ++i)
        std::cerr << (i ? "," : "") << fv.counts[i];
    std::cerr << ") euler " << fv.euler << "\n";
}

void write_dot_file(const std::string& path, const SimplicialComplex& x)
{
    if (path.empty())
        return;
    std::ofstream out(path);
    if (!out)
        throw InputFailure("cannot write " + path);
    write_dot(out, dual_graph(x));
}

json witness_json(const std::optional<Witness>& w)
{
    if (!w)
        return nullptr;
    return json{{"kind", w->kind}, {"values", w->values}, {"note", w->note}};
}

json check_entry(const std::string& id, bool holds, json witness = nullptr)
{
    return json{{"id", id}, {"holds", holds}, {"witness", holds ? json(nullptr) : std::move(witness)}};
}

json error_witness(const Error& e)
{
    return json{{"kind", "precondition"}, {"values", json::array()}, {"note", e.what()}};
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

Vertex parse_vertex(const std::string& text)
{
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception&) {
        throw InputFailure("bad vertex label '" + text + "'");
    }
    if (used != text.size() || value > std::numeric_limits<Vertex>::max())
        throw InputFailure("bad vertex label '" + text + "'");
    return static_cast<Vertex>(value);
}

Face parse_face(const std::string& text)
{
    std::vector<Vertex> v;
    for (const auto& item : split(text, ','))
        v.push_back(parse_vertex(item));
    return Face(std::move(v));
}

std::vector<std::pair<Vertex, Vertex>> parse_psi(const std::string& text)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& item : split(text, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw InputFailure("psi entries look like a:b, got '" + item + "'");
        out.emplace_back(parse_vertex(item.substr(0, colon)), parse_vertex(item.substr(colon + 1)));
    }
    return out;
}

// --- check -----------------------------------------------------------------

const std::vector<std::string> all_checks{"pure",         "pm",      "neighborly", "stacked-ball", "stacked-sphere",
                                          "class-k",      "class-kbar", "tight-neighborly"};

json run_check(const std::string& id, const SimplicialComplex& x)
{
    try {
        if (id == "pure")
            return check_entry(id, is_pure(x), json{{"kind", "facets"}, {"values", json::array()}, {"note", "mixed facet dimensions"}});
        if (id == "pm") {
            const bool ok = is_pseudomanifold(x);
            return check_entry(id, ok, json{{"kind", "ridges"}, {"values", json::array()},
                                            {"note", "a ridge lies in more than two facets or the dual graph is disconnected"}});
        }
        if (id == "neighborly")
            return check_entry(id, is_neighborly(x), json{{"kind", "vertices"}, {"values", json::array()},
                                                          {"note", "some pair of vertices spans no edge"}});
        if (id == "stacked-ball")
            return check_entry(id, is_pure(x) && is_stacked_ball(x),
                               json{{"kind", "dual-graph"}, {"values", json::array()},
                                    {"note", "dual graph is not a tree or f0 != f_d + d"}});
        if (id == "stacked-sphere")
            return check_entry(id, is_stacked_sphere(x), json{{"kind", "peeling"}, {"values", json::array()},
                                                              {"note", "no peeling sequence reaches a simplex boundary"}});
        if (id == "class-k" || id == "class-kbar") {
            const auto cls = id == "class-k" ? WalkupClass::K : WalkupClass::KBar;
            const ClassReport r = class_membership(x, x.dim(), cls);
            const bool ok = cls == WalkupClass::K ? r.in_class_K : r.in_class_Kbar;
            json w{{"kind", "vertex"}, {"values", json::array()}, {"note", "vertex link is not stacked"}};
            if (r.failing_vertex)
                w["values"].push_back(*r.failing_vertex);
            return check_entry(id, ok, w);
        }
        if (id == "tight-neighborly") {
            const auto r = tight_neighborly_check(x, x.dim());
            json entry = check_entry(id, r.is_equality,
                                     json{{"kind", "counts"}, {"values", {r.lhs, r.rhs}}, {"note", "lhs, rhs"}});
            entry["detail"] = json{{"beta1", r.beta1},
                                   {"lhs", r.lhs},
                                   {"rhs", r.rhs},
                                   {"satisfies_inequality", r.satisfies_inequality},
                                   {"is_equality", r.is_equality}};
            return entry;
        }
    } catch (const Error& e) {
        return check_entry(id, false, error_witness(e));
    }
    throw InputFailure("unknown check '" + id + "'");
}

int print_report(const json& report)
{
    std::cout << report.dump(2) << "\n";
    for (const auto& c : report["checks"])
        if (c["holds"] != true)
            return CheckFailed;
    return Ok;
}

// --- verify ----------------------------------------------------------------

json run_lemma(const SimplicialComplex& x, Lemma lemma)
{
    try {
        const LemmaReport r = verify_lemma(x, lemma);
        return json{{"id", r.id}, {"holds", r.holds}, {"witness", witness_json(r.witness)}};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisFailure)
            throw;
        return json{{"id", std::string(lemma_id(lemma))},
                    {"holds", nullptr},
                    {"witness", {{"kind", "hypothesis"}, {"values", json::array()}, {"note", e.what()}}}};
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Combinatorial checks for neighborly triangulations and their Walkup classes"};
    app.require_subcommand(1);

    // gen
    std::string gen_kind;
    int gen_d = 0;
    int gen_m = 1;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "write a generated complex as FCT");
    gen->add_option("kind", gen_kind, "kuehnel-solid | kuehnel-torus | stacked-ball")
        ->required()
        ->check(CLI::IsMember({"kuehnel-solid", "kuehnel-torus", "stacked-ball"}));
    gen->add_option("--d", gen_d, "dimension parameter")->required();
    gen->add_option("--m", gen_m, "number of facets (stacked-ball)");
    gen->add_option("--seed", gen_seed, "seed (stacked-ball)");
    gen->add_option("-o,--output", gen_out, "output file (default standard output)");

    // check
    std::string check_in;
    std::string check_list;
    std::string check_dot;
    auto* check = app.add_subcommand("check", "run predicates, JSON report");
    check->add_option("input", check_in, "FCT file or - for standard input")->required();
    check->add_option("--checks", check_list, "comma-separated subset of: pure, pm, neighborly, stacked-ball, "
                                              "stacked-sphere, class-k, class-kbar, tight-neighborly");
    check->add_option("--dot", check_dot, "also write the dual graph in DOT format");

    // betti
    std::string betti_in;
    auto* betti = app.add_subcommand("betti", "Z_2 Betti numbers, JSON");
    betti->add_option("input", betti_in)->required();

    // params
    std::int64_t params_beta1 = 1;
    std::int64_t params_dmax = 3;
    auto* params = app.add_subcommand("params", "integer solutions of the tight-neighborly equation, JSON");
    params->add_option("--beta1", params_beta1)->required();
    params->add_option("--dmax", params_dmax)->required();

    // verify
    std::string verify_in;
    std::string verify_list;
    std::string verify_dot;
    auto* verify = app.add_subcommand("verify", "structural checks on a neighborly solid, JSON");
    verify->add_option("input", verify_in)->required();
    verify->add_option("--lemmas", verify_list, "comma-separated check ids (default: all)");
    verify->add_option("--dot", verify_dot, "also write the dual graph in DOT format");

    // audit
    std::string audit_in;
    std::int64_t audit_beta1 = 1;
    auto* audit = app.add_subcommand("audit", "replay the counting argument on a solid, JSON");
    audit->add_option("input", audit_in)->required();
    audit->add_option("--beta1", audit_beta1)->required();

    // iso
    std::string iso_a;
    std::string iso_b;
    auto* iso = app.add_subcommand("iso", "isomorphism test, JSON");
    iso->add_option("a", iso_a)->required();
    iso->add_option("b", iso_b)->required();

    // bar, boundary
    std::string bar_in;
    std::string bar_out;
    auto* bar = app.add_subcommand("bar", "closure by 3-determined faces, FCT");
    bar->add_option("input", bar_in)->required();
    bar->add_option("-o,--output", bar_out);
    std::string bd_in;
    std::string bd_out;
    auto* bd = app.add_subcommand("boundary", "boundary complex, FCT");
    bd->add_option("input", bd_in)->required();
    bd->add_option("-o,--output", bd_out);

    // handle
    std::string handle_in;
    std::string handle_s1;
    std::string handle_s2;
    std::string handle_psi;
    std::string handle_out;
    auto* handle = app.add_subcommand("handle", "combinatorial handle addition, FCT");
    handle->add_option("input", handle_in)->required();
    handle->add_option("--sigma1", handle_s1, "first facet, comma-separated")->required();
    handle->add_option("--sigma2", handle_s2, "second facet, comma-separated")->required();
    handle->add_option("--psi", handle_psi, "pairs a:b, comma-separated")->required();
    handle->add_option("-o,--output", handle_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : InputError;
    }

    try {
        if (*gen) {
            SimplicialComplex x;
            if (gen_kind == "kuehnel-solid")
                x = kuehnel_solid(gen_d);
            else if (gen_kind == "kuehnel-torus")
                x = kuehnel_torus(gen_d);
            else
                x = random_stacked_ball(gen_d, gen_m, gen_seed);
            emit_fct(x, gen_out);
            summarize(x);
            return Ok;
        }
        if (*check) {
            const SimplicialComplex x = load(check_in);
            write_dot_file(check_dot, x);
            json report{{"instance", instance_name(check_in)}, {"checks", json::array()}};
            for (const auto& id : check_list.empty() ? all_checks : split(check_list, ','))
                report["checks"].push_back(run_check(id, x));
            return print_report(report);
        }
        if (*betti) {
            const SimplicialComplex x = load(betti_in);
            const BettiVector b = betti_z2(x);
            const FVector fv = f_vector(x);
            json out{{"instance", instance_name(betti_in)},
                     {"betti", b.betti},
                     {"euler", b.euler()},
                     {"f_vector", fv.counts}};
            std::cout << out.dump(2) << "\n";
            return Ok;
        }
        if (*params) {
            json out{{"beta1", params_beta1}, {"d_max", params_dmax}, {"solutions", json::array()}};
            for (const auto& t : parameter_solutions(params_beta1, params_dmax))
                out["solutions"].push_back(json{{"beta1", t.beta1}, {"d", t.d}, {"f0", t.f0}});
            std::cout << out.dump(2) << "\n";
            return Ok;
        }
        if (*verify) {
            const SimplicialComplex x = load(verify_in);
            write_dot_file(verify_dot, x);
            json report{{"instance", instance_name(verify_in)}, {"checks", json::array()}};
            std::vector<Lemma> lemmas;
            if (verify_list.empty())
                lemmas = all_lemmas();
            else
                for (const auto& id : split(verify_list, ','))
                    lemmas.push_back(parse_lemma(id));
            for (Lemma l : lemmas)
                report["checks"].push_back(run_lemma(x, l));
            return print_report(report);
        }
        if (*audit) {
            const SimplicialComplex x = load(audit_in);
            const AuditReport r = theorem_argument_audit(x, audit_beta1);
            json report{{"instance", instance_name(audit_in)},
                        {"cycle_case", r.cycle_case},
                        {"contradiction", r.contradiction},
                        {"checks", json::array()}};
            for (const auto& s : r.steps)
                report["checks"].push_back(json{{"id", s.id}, {"holds", s.holds}, {"witness", witness_json(s.witness)}});
            return print_report(report);
        }
        if (*iso) {
            if (iso_a == "-" && iso_b == "-")
                throw InputFailure("only one input may come from standard input");
            const SimplicialComplex a = load(iso_a);
            const SimplicialComplex b = load(iso_b);
            const auto phi = are_isomorphic(a, b);
            json out{{"a", instance_name(iso_a)}, {"b", instance_name(iso_b)}, {"isomorphic", phi.has_value()},
                     {"bijection", nullptr}};
            if (phi) {
                out["bijection"] = json::array();
                for (const auto& [from, to] : phi->pairs())
                    out["bijection"].push_back({from, to});
            }
            std::cout << out.dump(2) << "\n";
            return phi ? Ok : CheckFailed;
        }
        if (*bar) {
            const SimplicialComplex out = bar_construction(load(bar_in));
            emit_fct(out, bar_out);
            summarize(out);
            return Ok;
        }
        if (*bd) {
            const SimplicialComplex out = boundary_complex(load(bd_in));
            if (out.is_empty()) {
                std::cerr << "boundary is empty\n";
                return Ok;
            }
            emit_fct(out, bd_out);
            summarize(out);
            return Ok;
        }
        if (*handle) {
            HandleMap h{parse_face(handle_s1), parse_face(handle_s2), parse_psi(handle_psi)};
            const SimplicialComplex out = handle_addition(load(handle_in), h);
            emit_fct(out, handle_out);
            summarize(out);
            return Ok;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return InputError;
    } catch (const Error& e) {
        std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
        return InputError;
    } catch (const InputFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return InternalError;
    }
    return InternalError;
}
