// schurlab: one entry point over the sum-free colouring toolkit.
// Subcommands: sumfree | colour | layer | link | lp | reproduce.
// Exit codes: 0 success, 1 verification/assertion failure, 2 usage or input error.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurlab/colouring.hpp"
#include "schurlab/families.hpp"
#include "schurlab/intset.hpp"
#include "schurlab/layering.hpp"
#include "schurlab/linkgraph.hpp"
#include "schurlab/loglin.hpp"
#include "schurlab/lp.hpp"
#include "schurlab/reports.hpp"

using json = nlohmann::ordered_json;
using namespace schurlab;
using loglin::LogLin;

namespace {

struct Options {
    std::string emit = "text";
    bool approx = false;
    unsigned jobs = 0;
    int ceiling = 0;  // 0 = library default; env SCHURLAB_CEILING_N can raise it
};

int env_ceiling() {
    const char* v = std::getenv("SCHURLAB_CEILING_N");
    if (!v) return 0;
    int n = std::atoi(v);
    if (n <= 0) throw InputError("SCHURLAB_CEILING_N must be a positive integer");
    return n;
}

int effective_ceiling(const Options& o) { return o.ceiling > 0 ? o.ceiling : env_ceiling(); }

json loglin_json(const LogLin& v, bool approx) {
    json j;
    j["text"] = loglin::to_string(v);
    j["decimal"] = loglin::decimal_str(v, 30);
    if (approx) j["approx"] = loglin::decimal_str(v, 15);
    return j;
}

json set_json(const IntSet& s) {
    json arr = json::array();
    s.for_each([&arr](int v) { arr.push_back(v); });
    return arr;
}

IntSet parse_set_or_name(int n, const std::string& text) {
    if (!text.empty() && (std::isalpha(static_cast<unsigned char>(text[0])))) {
        return construct(construct_kind_from(text), n);
    }
    return IntSet::parse(n, text);
}

std::vector<IntSet> parse_tuple(int n, const std::string& text) {
    std::vector<IntSet> out;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = text.find('|', start);
        std::string part =
            bar == std::string::npos ? text.substr(start) : text.substr(start, bar - start);
        out.push_back(parse_set_or_name(n, part));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return out;
}

void print(const json& j) { std::cout << j.dump() << "\n"; }

// ----------------------------------------------------------------- sumfree
int cmd_sumfree_construct(const Options& o, const std::string& kind, int n, int m1, int m2) {
    IntSet s = construct(construct_kind_from(kind), n, m1, m2);
    if (o.emit == "json") {
        json j;
        j["n"] = n;
        j["kind"] = kind;
        j["set"] = set_json(s);
        j["sum_free"] = is_sum_free(s);
        print(j);
    } else {
        std::cout << s.str() << "\n";
    }
    return 0;
}

int cmd_sumfree_enumerate(const Options& o, int n, bool maximal) {
    for_each_sum_free(
        n, maximal, [](const IntSet& s) { std::cout << s.str() << "\n"; },
        effective_ceiling(o));
    return 0;
}

int cmd_sumfree_triples(const Options& o, int n, const std::string& set_lit) {
    IntSet s = parse_set_or_name(n, set_lit);
    auto triples = schur_triples(s);
    if (o.emit == "json") {
        json j;
        j["n"] = n;
        j["set"] = set_json(s);
        j["count"] = triples.size();
        json arr = json::array();
        for (const auto& t : triples) arr.push_back({t.x, t.y, t.z});
        j["triples"] = arr;
        print(j);
    } else {
        for (const auto& t : triples)
            std::cout << t.x << "+" << t.y << "=" << t.z << "\n";
        std::cout << "count " << triples.size() << "\n";
    }
    return 0;
}

int cmd_sumfree_classify(const Options& o, int n, const std::string& set_lit) {
    IntSet s = parse_set_or_name(n, set_lit);
    auto t = classify_types(s);
    if (o.emit == "json") {
        json j;
        j["n"] = n;
        j["set"] = set_json(s);
        j["small"] = t.small;
        j["all_odd"] = t.all_odd;
        j["min_bounded"] = t.min_bounded;
        j["maximal"] = is_maximal_sum_free(s);
        print(j);
    } else {
        std::cout << "small " << t.small << " all_odd " << t.all_odd << " min_bounded "
                  << t.min_bounded << "\n";
    }
    return 0;
}

int cmd_sumfree_sumset(const Options& o, const std::string& a_lit, const std::string& b_lit) {
    auto parse_ints = [](const std::string& text) {
        std::vector<long long> out;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string tok =
                comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
            if (!tok.empty()) out.push_back(std::stoll(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return out;
    };
    auto s = sumset(parse_ints(a_lit), parse_ints(b_lit));
    if (o.emit == "json") {
        json j;
        j["sumset"] = s;
        j["size"] = s.size();
        print(j);
    } else {
        for (std::size_t i = 0; i < s.size(); ++i)
            std::cout << s[i] << (i + 1 < s.size() ? "," : "\n");
    }
    return 0;
}

// ------------------------------------------------------------------ colour
int cmd_colour_count(const Options& o, int n, const std::string& set_lit, int r) {
    IntSet s = parse_set_or_name(n, set_lit);
    BigInt c = colouring::count_valid_colourings(s, r);
    if (o.emit == "json") {
        json j;
        j["n"] = n;
        j["r"] = r;
        j["set"] = set_json(s);
        j["max"] = c.get_str();
        print(j);
    } else {
        std::cout << c.get_str() << "\n";
    }
    return 0;
}

int cmd_colour_search(const Options& o, int n, int r, bool extremal) {
    auto res = colouring::search_f(n, r, extremal, effective_ceiling(o), o.jobs);
    if (o.emit == "json") {
        json j;
        j["n"] = res.n;
        j["r"] = res.r;
        j["max"] = res.max_count.get_str();
        if (extremal) {
            json arr = json::array();
            for (const auto& s : res.extremal) arr.push_back(set_json(s));
            j["extremal"] = arr;
        }
        print(j);
    } else {
        std::cout << res.max_count.get_str() << "\n";
        for (const auto& s : res.extremal) std::cout << s.str() << "\n";
    }
    return 0;
}

int cmd_colour_bounds(const Options& o, int n, int r) {
    auto b = colouring::construction_lower_bounds(n, r);
    if (o.emit == "json") {
        json j;
        j["n"] = n;
        j["r"] = r;
        j["half_exponent_bound"] = b.half_exponent_bound.get_str();
        j["quarter_exponent_bound"] = b.quarter_exponent_bound.get_str();
        j["dominant"] =
            b.comparison > 0 ? "half" : (b.comparison < 0 ? "quarter" : "equal");
        print(j);
    } else {
        std::cout << b.half_exponent_bound.get_str() << " vs "
                  << b.quarter_exponent_bound.get_str() << " -> "
                  << (b.comparison > 0 ? "half" : (b.comparison < 0 ? "quarter" : "equal"))
                  << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- layer
json d_vector_json(const layering::IntersectionVector& iv) {
    json d = json::array();
    for (const auto& q : iv.d) d.push_back(rational_str(q));
    return d;
}

int cmd_layer_vector(const Options& o, int n, const std::string& sets_lit) {
    auto tuple = parse_tuple(n, sets_lit);
    auto iv = layering::intersection_vector(tuple);
    if (o.emit == "json") {
        json j;
        j["n"] = iv.n;
        j["r"] = iv.r;
        j["d"] = d_vector_json(iv);
        json levels = json::array();
        for (const auto& s : iv.level) levels.push_back(set_json(s));
        j["levels"] = levels;
        print(j);
    } else {
        for (std::size_t i = 0; i < iv.d.size(); ++i)
            std::cout << "d" << i << " = " << rational_str(iv.d[i]) << " {"
                      << iv.level[i].str() << "}\n";
    }
    return 0;
}

int cmd_layer_gvalue(const Options& o, int n, const std::string& sets_lit) {
    auto tuple = parse_tuple(n, sets_lit);
    LogLin g = layering::g_value(tuple);
    auto iv = layering::intersection_vector(tuple);
    if (o.emit == "json") {
        json j;
        j["n"] = n;
        j["r"] = static_cast<int>(tuple.size());
        j["value"] = loglin_json(g, o.approx);
        j["d"] = d_vector_json(iv);
        print(j);
    } else {
        std::cout << loglin::to_string(g) << " = " << loglin::decimal_str(g, 30) << "\n";
    }
    return 0;
}

int cmd_layer_gsearch(const Options& o, int n, int r, const std::string& union_lit) {
    std::optional<IntSet> target;
    if (!union_lit.empty()) target = parse_set_or_name(n, union_lit);
    auto res = layering::g_search(n, r, target, effective_ceiling(o));
    if (o.emit == "json") {
        json j;
        j["n"] = n;
        j["r"] = r;
        j["value"] = loglin_json(res.value, o.approx);
        json arr = json::array();
        for (const auto& tuple : res.argmax) {
            json t = json::array();
            for (const auto& s : tuple) t.push_back(set_json(s));
            arr.push_back(t);
        }
        j["argmax"] = arr;
        if (!res.argmax.empty()) j["d"] = d_vector_json(layering::intersection_vector(res.argmax[0]));
        print(j);
    } else {
        std::cout << "g = " << loglin::to_string(res.value) << " = "
                  << loglin::decimal_str(res.value, 30) << "\n";
        for (const auto& tuple : res.argmax) {
            for (std::size_t i = 0; i < tuple.size(); ++i)
                std::cout << (i ? " | " : "") << tuple[i].str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_layer_check(const Options& o, int n, const std::string& sets_lit,
                    const std::string& mode) {
    if (mode != "assert" && mode != "report") throw InputError("mode must be assert or report");
    auto tuple = parse_tuple(n, sets_lit);
    auto rep = layering::check_structural_lemmas(tuple, mode == "report");
    auto check_json = [](const layering::LemmaCheck& c) {
        json j;
        j["name"] = c.name;
        j["instance"] = c.instance;
        j["lhs"] = rational_str(c.lhs);
        j["relation"] = c.is_upper ? "<=" : ">=";
        j["rhs"] = rational_str(c.rhs);
        j["holds"] = c.holds;
        return j;
    };
    if (o.emit == "json") {
        json j;
        j["n"] = n;
        j["r"] = static_cast<int>(tuple.size());
        j["a"] = rational_str(rep.cls.deficit);
        json labels = json::array();
        for (auto lab : rep.cls.labels)
            labels.push_back(lab == layering::TupleClassification::Label::all_odd
                                 ? "odd"
                                 : (lab == layering::TupleClassification::Label::high_min
                                        ? "high-min"
                                        : "small"));
        j["labels"] = labels;
        json checks = json::array();
        for (const auto& c : rep.verified) checks.push_back(check_json(c));
        j["verified"] = checks;
        if (mode == "report") {
            json info = json::array();
            for (const auto& c : rep.informational) info.push_back(check_json(c));
            j["informational"] = info;
        }
        j["verdict"] = rep.all_verified_hold ? "pass" : "fail";
        print(j);
    } else {
        auto show = [](const layering::LemmaCheck& c) {
            std::cout << (c.holds ? "  ok    " : "  FAIL  ") << c.name << " [" << c.instance
                      << "] " << rational_str(c.lhs) << (c.is_upper ? " <= " : " >= ")
                      << rational_str(c.rhs) << "\n";
        };
        std::cout << "a = " << rational_str(rep.cls.deficit) << "\n";
        for (const auto& c : rep.verified) show(c);
        if (mode == "report") {
            std::cout << "informational rows (eps' capped at the registered range):\n";
            for (const auto& c : rep.informational) show(c);
        }
    }
    return rep.all_verified_hold ? 0 : 1;
}

// -------------------------------------------------------------------- link
int cmd_link_graph(const Options& o, int n, const std::string& s_lit, const std::string& b_lit) {
    auto g = linkgraph::link_graph(parse_set_or_name(n, s_lit), parse_set_or_name(n, b_lit));
    if (o.emit == "dot") {
        std::cout << "graph link {\n";
        g.vertices.for_each([](int v) { std::cout << "  " << v << ";\n"; });
        for (auto [u, v] : g.edges) std::cout << "  " << u << " -- " << v << ";\n";
        std::cout << "}\n";
    } else if (o.emit == "json") {
        json j;
        j["n"] = g.n;
        j["vertices"] = set_json(g.vertices);
        json edges = json::array();
        for (auto [u, v] : g.edges) edges.push_back({u, v});
        j["edges"] = edges;
        j["max_degree"] = g.max_degree();
        print(j);
    } else {
        for (auto [u, v] : g.edges) std::cout << u << " -- " << v << "\n";
    }
    return 0;
}

int cmd_link_matching(const Options& o, int n, const std::string& s_lit,
                      const std::string& b_lit) {
    auto g = linkgraph::link_graph(parse_set_or_name(n, s_lit), parse_set_or_name(n, b_lit));
    auto m = linkgraph::max_matching(g);
    if (o.emit == "json") {
        json j;
        j["size"] = m.size();
        json edges = json::array();
        for (auto [u, v] : m) edges.push_back({u, v});
        j["matching"] = edges;
        j["vizing_bound"] = rational_str(linkgraph::vizing_bound(g));
        print(j);
    } else {
        for (auto [u, v] : m) std::cout << u << " -- " << v << "\n";
        std::cout << "size " << m.size() << "\n";
    }
    return 0;
}

int cmd_link_bound(const Options& o, int n, const std::string& set_lit, int x, int r) {
    IntSet a = parse_set_or_name(n, set_lit);
    BigInt bound = linkgraph::matching_colouring_bound(a, x, r);
    if (o.emit == "json") {
        json j;
        j["n"] = n;
        j["r"] = r;
        j["x"] = x;
        j["bound"] = bound.get_str();
        print(j);
    } else {
        std::cout << bound.get_str() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------- lp
int cmd_lp_solve(const Options& o, const std::string& label, const std::string& eps_lit) {
    Rational eps = parse_rational(eps_lit);
    const auto& f = lp::families::family(label);
    auto prog = f.build(eps);
    auto res = lp::simplex_max(prog);
    if (res.status != lp::SolveStatus::optimal) {
        std::cerr << "LP did not reach optimality\n";
        return 1;
    }
    if (o.emit == "json") {
        json j;
        j["family"] = label;
        j["r"] = f.r;
        j["eps"] = rational_str(eps);
        j["optimum"] = loglin_json(res.optimum, o.approx);
        json arg;
        for (std::size_t i = 0; i < prog.var_names.size(); ++i)
            arg[prog.var_names[i]] = rational_str(res.argmax[i]);
        j["argmax"] = arg;
        j["pivots"] = res.pivots;
        print(j);
    } else {
        std::cout << label << " optimum " << loglin::to_string(res.optimum) << " = "
                  << loglin::decimal_str(res.optimum, 30) << "\n";
        for (std::size_t i = 0; i < prog.var_names.size(); ++i)
            std::cout << "  " << prog.var_names[i] << " = " << rational_str(res.argmax[i])
                      << "\n";
    }
    return 0;
}

int cmd_lp_verify(const Options& o, const std::string& label, const std::string& eps_lit) {
    Rational eps = parse_rational(eps_lit);
    const auto& f = lp::families::family(label);
    if (f.certificates.empty()) throw InputError("no certificate registered for " + label);
    auto prog = f.build(eps);
    bool recorded_ok = true;
    json arr = json::array();
    for (const auto& ce : f.certificates) {
        auto chk = lp::verify_dual(prog, ce.cert);
        LogLin expect = ce.form_const + loglin::scale(ce.form_eps, eps);
        bool form_ok = loglin::sign(chk.objective - expect) == 0;
        if (ce.name == "recorded" && (!chk.feasible || !form_ok)) recorded_ok = false;
        if (o.emit == "json") {
            json j;
            j["family"] = label;
            j["certificate"] = ce.name;
            j["feasible"] = chk.feasible;
            j["objective"] = loglin_json(chk.objective, o.approx);
            j["closed_form"] = loglin_json(expect, o.approx);
            j["form_match"] = form_ok;
            if (!chk.feasible) j["detail"] = chk.detail;
            if (!ce.note.empty()) j["note"] = ce.note;
            arr.push_back(j);
        } else {
            std::cout << label << " [" << ce.name << "] feasible=" << (chk.feasible ? "yes" : "no")
                      << " b.y=" << loglin::to_string(chk.objective)
                      << " form_match=" << (form_ok ? "yes" : "no") << "\n";
            if (!chk.feasible) std::cout << "  " << chk.detail << "\n";
        }
    }
    if (o.emit == "json") print(arr);
    return recorded_ok ? 0 : 1;
}

int cmd_lp_all(const Options& o, const std::string& eps_lit, const std::string& eps_suff_lit) {
    Rational eps = parse_rational(eps_lit);
    Rational eps_suff = eps_suff_lit.empty() ? eps : parse_rational(eps_suff_lit);
    bool all_ok = true;
    json rows = json::array();
    if (o.emit == "csv")
        std::cout << "family,r,optimum,optimum_decimal,certificate,certificate_decimal,verdict\n";
    for (const auto& label : lp::families::core_labels()) {
        const auto& f = lp::families::family(label);
        auto res = lp::families::check_sufficient(label, eps, eps_suff);
        std::string cert_text, cert_dec;
        for (const auto& ce : f.certificates) {
            auto chk = lp::verify_dual(f.build(eps), ce.cert);
            if (chk.feasible) {
                cert_text = loglin::to_string(chk.objective);
                cert_dec = loglin::decimal_str(chk.objective, 30);
                break;
            }
        }
        std::string verdict = res.sufficient ? "sufficient" : "insufficient";
        all_ok = all_ok && res.sufficient;
        if (o.emit == "csv") {
            std::cout << label << "," << f.r << "," << loglin::to_string(res.optimum) << ","
                      << loglin::decimal_str(res.optimum, 30) << "," << cert_text << ","
                      << cert_dec << "," << verdict << "\n";
        } else {
            json j;
            j["family"] = label;
            j["r"] = f.r;
            j["optimum"] = loglin_json(res.optimum, o.approx);
            if (!cert_text.empty()) {
                j["certificate"] = {{"text", cert_text}, {"decimal", cert_dec}};
            }
            j["verdict"] = verdict;
            rows.push_back(j);
        }
    }
    if (o.emit != "csv") print(rows);
    return all_ok ? 0 : 1;
}

// --------------------------------------------------------------- reproduce
int cmd_reproduce(const std::string& id, unsigned jobs) {
    auto results = reports::run_bundle(id, jobs);
    bool ok = true;
    for (const auto& c : results) {
        char secs[32];
        std::snprintf(secs, sizeof(secs), "%.2f", c.seconds);
        std::cout << "[" << (c.pass ? "PASS" : "FAIL") << "] "
                  << (c.id ? "criterion " + std::to_string(c.id) + ": " : "") << c.name << " ("
                  << secs << "s)\n";
        for (const auto& line : c.lines) std::cout << line << "\n";
        ok = ok && c.pass;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sum-free colouring counts, layering searches and LP certificates"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--jobs", opt.jobs, "parallelism degree (0 = hardware)");

    // shared option targets
    int n = 0, r = 2, x = 0, m1 = 0, m2 = 0;
    bool maximal = false, extremal = false;
    std::string kind = "odd", set_lit, a_lit, b_lit, sets_lit, mode = "assert";
    std::string family_label, eps_lit = "0", eps_suff_lit, union_lit, report_id;

    auto add_common = [&opt](CLI::App* cmd, std::initializer_list<std::string> emits) {
        cmd->add_option("--emit", opt.emit, "output format")
            ->check(CLI::IsMember(std::vector<std::string>(emits)));
        cmd->add_flag("--approx", opt.approx, "add 15-digit decimal renderings");
        cmd->add_option("--ceiling", opt.ceiling, "raise the enumeration/search ceiling");
        return cmd;
    };

    auto* sumfree = app.add_subcommand("sumfree", "set arithmetic and enumeration");
    auto* sf_con = add_common(sumfree->add_subcommand("construct", "named constructions"),
                              {"text", "json"});
    sf_con->add_option("--kind", kind)->required();
    sf_con->add_option("--n", n)->required();
    sf_con->add_option("--m1", m1);
    sf_con->add_option("--m2", m2);
    auto* sf_enum = add_common(sumfree->add_subcommand("enumerate", "stream sum-free subsets"),
                               {"text"});
    sf_enum->add_option("--n", n)->required();
    sf_enum->add_flag("--maximal", maximal);
    auto* sf_tri = add_common(sumfree->add_subcommand("triples", "list Schur triples"),
                              {"text", "json"});
    sf_tri->add_option("--n", n)->required();
    sf_tri->add_option("--set", set_lit)->required();
    auto* sf_cls = add_common(sumfree->add_subcommand("classify", "structure classes"),
                              {"text", "json"});
    sf_cls->add_option("--n", n)->required();
    sf_cls->add_option("--set", set_lit)->required();
    auto* sf_sum = add_common(sumfree->add_subcommand("sumset", "A + B over the integers"),
                              {"text", "json"});
    sf_sum->add_option("--a", a_lit)->required();
    sf_sum->add_option("--b", b_lit)->required();

    auto* colour = app.add_subcommand("colour", "valid colouring counts");
    auto* co_count = add_common(colour->add_subcommand("count", "count valid colourings"),
                                {"text", "json"});
    co_count->add_option("--n", n)->required();
    co_count->add_option("--set", set_lit)->required();
    co_count->add_option("--r", r)->required();
    auto* co_search = add_common(colour->add_subcommand("search", "exhaustive maximum"),
                                 {"text", "json"});
    co_search->add_option("--n", n)->required();
    co_search->add_option("--r", r)->required();
    co_search->add_flag("--extremal", extremal);
    auto* co_bounds = add_common(colour->add_subcommand("bounds", "construction lower bounds"),
                                 {"text", "json"});
    co_bounds->add_option("--n", n)->required();
    co_bounds->add_option("--r", r)->required();

    auto* layer = app.add_subcommand("layer", "overlap vectors and g-values");
    auto* la_vec = add_common(layer->add_subcommand("vector", "intersection vector"),
                              {"text", "json"});
    la_vec->add_option("--n", n)->required();
    la_vec->add_option("--sets", sets_lit)->required();
    auto* la_gv = add_common(layer->add_subcommand("gvalue", "g of a tuple"), {"text", "json"});
    la_gv->add_option("--n", n)->required();
    la_gv->add_option("--sets", sets_lit)->required();
    auto* la_gs = add_common(layer->add_subcommand("gsearch", "exhaustive g maximum"),
                             {"text", "json"});
    la_gs->add_option("--n", n)->required();
    la_gs->add_option("--r", r)->required();
    la_gs->add_option("--union", union_lit, "restrict to tuples with this exact union");
    auto* la_chk = add_common(layer->add_subcommand("check", "structural inequality checks"),
                              {"text", "json"});
    la_chk->add_option("--n", n)->required();
    la_chk->add_option("--sets", sets_lit)->required();
    la_chk->add_option("--mode", mode)->check(CLI::IsMember({"assert", "report"}));

    auto* link = app.add_subcommand("link", "link graphs and matchings");
    auto* li_g = add_common(link->add_subcommand("graph", "build a link graph"),
                            {"text", "json", "dot"});
    li_g->add_option("--n", n)->required();
    li_g->add_option("--s", set_lit)->required();
    li_g->add_option("--b", b_lit)->required();
    auto* li_m = add_common(link->add_subcommand("matching", "maximum matching"),
                            {"text", "json"});
    li_m->add_option("--n", n)->required();
    li_m->add_option("--s", set_lit)->required();
    li_m->add_option("--b", b_lit)->required();
    auto* li_b = add_common(link->add_subcommand("bound", "matching colouring bound"),
                            {"text", "json"});
    li_b->add_option("--n", n)->required();
    li_b->add_option("--set", set_lit)->required();
    li_b->add_option("--x", x)->required();
    li_b->add_option("--r", r)->required();

    auto* lp_cmd = app.add_subcommand("lp", "constraint families, simplex, certificates");
    auto* lp_solve = add_common(lp_cmd->add_subcommand("solve", "exact simplex on a family"),
                                {"text", "json"});
    lp_solve->add_option("--family", family_label)->required();
    lp_solve->add_option("--eps", eps_lit, "eps' as an exact rational");
    auto* lp_verify = add_common(lp_cmd->add_subcommand("verify", "check dual certificates"),
                                 {"text", "json"});
    lp_verify->add_option("--family", family_label)->required();
    lp_verify->add_option("--eps", eps_lit);
    auto* lp_all =
        add_common(lp_cmd->add_subcommand("all", "solve and certify the whole suite"),
                   {"text", "json", "csv"});
    lp_all->add_option("--eps", eps_lit);
    lp_all->add_option("--eps-suff", eps_suff_lit,
                       "sufficiency slack eps (defaults to the eps' value)");

    auto* repro = app.add_subcommand("reproduce", "run a verification bundle");
    repro->add_option("id", report_id, "thm2colours | bounds | lemma-suff | lemmas-6x")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sf_con->parsed()) return cmd_sumfree_construct(opt, kind, n, m1, m2);
        if (sf_enum->parsed()) return cmd_sumfree_enumerate(opt, n, maximal);
        if (sf_tri->parsed()) return cmd_sumfree_triples(opt, n, set_lit);
        if (sf_cls->parsed()) return cmd_sumfree_classify(opt, n, set_lit);
        if (sf_sum->parsed()) return cmd_sumfree_sumset(opt, a_lit, b_lit);
        if (co_count->parsed()) return cmd_colour_count(opt, n, set_lit, r);
        if (co_search->parsed()) return cmd_colour_search(opt, n, r, extremal);
        if (co_bounds->parsed()) return cmd_colour_bounds(opt, n, r);
        if (la_vec->parsed()) return cmd_layer_vector(opt, n, sets_lit);
        if (la_gv->parsed()) return cmd_layer_gvalue(opt, n, sets_lit);
        if (la_gs->parsed()) return cmd_layer_gsearch(opt, n, r, union_lit);
        if (la_chk->parsed()) return cmd_layer_check(opt, n, sets_lit, mode);
        if (li_g->parsed()) return cmd_link_graph(opt, n, set_lit, b_lit);
        if (li_m->parsed()) return cmd_link_matching(opt, n, set_lit, b_lit);
        if (li_b->parsed()) return cmd_link_bound(opt, n, set_lit, x, r);
        if (lp_solve->parsed()) return cmd_lp_solve(opt, family_label, eps_lit);
        if (lp_verify->parsed()) return cmd_lp_verify(opt, family_label, eps_lit);
        if (lp_all->parsed()) return cmd_lp_all(opt, eps_lit, eps_suff_lit);
        if (repro->parsed()) return cmd_reproduce(report_id, opt.jobs);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CeilingError& e) {
        std::cerr << "ceiling: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
