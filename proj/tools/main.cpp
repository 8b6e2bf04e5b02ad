// Command line front end: exact reports over partitions, characters,
// subgroups, scrollar invariants, ramification tables and the split local
// model. Exit codes: 0 success, 2 invalid input, 3 internal consistency
// failure (two formulas for the same quantity disagreed).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "scrollar/higher_specht.hpp"
#include "scrollar/ramify.hpp"
#include "scrollar/scrollar.hpp"
#include "scrollar/specht.hpp"

using namespace scrollar;
using report::exact;
using report::json;
using report::Table;

namespace {

struct Options {
    std::string format = "text";  // text | json | md | csv
};

void emit(const Options& opt, const json& payload, const Table& table,
          const std::string& text_body) {
    if (opt.format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else if (opt.format == "md") {
        report::write_markdown(std::cout, table);
    } else if (opt.format == "csv") {
        report::write_csv(std::cout, table);
    } else {
        std::cout << text_body;
    }
}

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stol(item));
        } catch (const std::exception&) {
            throw ValidationError("bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw ValidationError("empty integer list");
    return out;
}

ScrollarProfile make_profile(int d, long g, const std::string& e_text, bool skip_maroni) {
    ProfileOptions opts;
    opts.enforce_maroni = !skip_maroni;
    return ScrollarProfile(d, g, parse_longs(e_text), opts);
}

BranchData parse_branch(int d, const std::string& text) {
    BranchData out;
    std::stringstream ss(text);
    std::string item;
    int index = 0;
    while (std::getline(ss, item, ';')) {
        Partition p = Partition::parse(item);
        if (p.sum() != d)
            throw ValidationError("branch pattern '" + item + "' is not a partition of d");
        out.push_back({"b" + std::to_string(index++), p});
    }
    if (out.empty()) throw ValidationError("empty branch list");
    return out;
}

bool model_override(int e, bool force_flag) {
    if (force_flag) return true;
    if (const char* env = std::getenv("SCROLLAR_E_BOUND")) {
        try {
            return e <= std::stoi(env);
        } catch (const std::exception&) {
            throw ValidationError("SCROLLAR_E_BOUND is not an integer");
        }
    }
    return false;
}

json multiset_json(const ScrollarMultiset& m) {
    json values = json::array();
    for (long v : m.values) values.push_back(v);
    return json{{"label", m.label}, {"values", values}};
}

std::string values_line(const std::vector<long>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

// ---- commands -------------------------------------------------------------

void cmd_partitions(const Options& opt, int d) {
    auto parts = enumerate_partitions(d);
    json payload{{"d", d}};
    Table table{{"partition", "dimension", "p"}, {}};
    std::string text;
    json list = json::array();
    for (const auto& p : parts) {
        list.push_back(json{{"partition", p.to_string()},
                            {"dimension", exact(dimension(p))},
                            {"p", exact(p_invariant(p))}});
        table.rows.push_back({p.to_string(), dimension(p).get_str(), p_invariant(p).get_str()});
        text += p.to_string() + "\n";
    }
    payload["partitions"] = list;
    emit(opt, payload, table, text);
}

void cmd_char(const Options& opt, int d, const std::string& lambda_text,
              const std::string& class_text) {
    Partition lambda = Partition::parse(lambda_text);
    Partition e = Partition::parse(class_text);
    if (lambda.sum() != d || e.sum() != d)
        throw ValidationError("lambda and class must be partitions of d");
    Int chi = character(lambda, e);
    Int p = p_invariant(lambda);
    Int dim = dimension(lambda);
    json payload{{"d", d},           {"lambda", lambda.to_string()}, {"class", e.to_string()},
                 {"chi", exact(chi)}, {"dim", exact(dim)},           {"p", exact(p)}};
    Table table{{"lambda", "class", "chi", "dim", "p"},
                {{lambda.to_string(), e.to_string(), chi.get_str(), dim.get_str(), p.get_str()}}};
    std::string text = chi.get_str() + "\n" + "dim = " + dim.get_str() + ", p(" +
                       lambda.to_string() + ") = " + p.get_str() + "\n";
    emit(opt, payload, table, text);
}

void cmd_chartable(const Options& opt, int d) {
    const auto& table = CharacterTable::of(d);
    json classes = json::array(), sizes = json::array(), rows = json::array();
    Table md{{"lambda \\ class"}, {}};
    for (const auto& e : table.classes()) {
        classes.push_back(e.to_string());
        md.header.push_back(e.to_string());
    }
    for (size_t i = 0; i < table.classes().size(); ++i)
        sizes.push_back(exact(table.size_of_class(static_cast<int>(i))));
    std::string text;
    for (size_t l = 0; l < table.classes().size(); ++l) {
        json row = json::array();
        std::vector<std::string> mdrow{table.classes()[l].to_string()};
        text += table.classes()[l].to_string() + ":";
        for (size_t e = 0; e < table.classes().size(); ++e) {
            const Int& v = table.value(static_cast<int>(l), static_cast<int>(e));
            row.push_back(exact(v));
            mdrow.push_back(v.get_str());
            text += " " + v.get_str();
        }
        text += "\n";
        rows.push_back(json{{"lambda", table.classes()[l].to_string()}, {"values", row}});
        md.rows.push_back(mdrow);
    }
    json payload{{"d", d}, {"classes", classes}, {"class_sizes", sizes}, {"rows", rows}};
    emit(opt, payload, md, text);
}

void cmd_group(const Options& opt, int d, const std::string& name,
               const std::string& galois_name) {
    PermSubgroup h = subgroup_by_name(d, name);
    VirtualCharacter ind = permutation_character(h);
    auto mults = decompose(ind);
    const auto& classes = CharacterTable::of(d).classes();

    json decomposition = json::array();
    std::string text = "order " + std::to_string(h.order()) + ", index " + ind.dim().get_str() +
                       ", p = " + p_invariant(h).get_str() + "\n";
    Table table{{"lambda", "multiplicity"}, {}};
    for (size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] == 0) continue;
        decomposition.push_back(json{{"lambda", classes[i].to_string()}, {"mult", exact(mults[i])}});
        table.rows.push_back({classes[i].to_string(), mults[i].get_str()});
        text += "  " + classes[i].to_string() + " x " + mults[i].get_str() + "\n";
    }
    json payload{{"d", d},
                 {"subgroup", name},
                 {"order", h.order()},
                 {"index", exact(ind.dim())},
                 {"p", exact(p_invariant(h))},
                 {"transitive", h.is_transitive()},
                 {"decomposition", decomposition}};
    if (!galois_name.empty()) {
        PermSubgroup g = subgroup_by_name(d, galois_name);
        bool full = product_is_full(g, h);
        DoubleCosets dc = double_cosets(h, g);
        json comps = json::array();
        std::string comp_text;
        for (long deg : dc.component_degrees) {
            comps.push_back(deg);
            comp_text += (comp_text.empty() ? "" : ",") + std::to_string(deg);
        }
        payload["galois"] =
            json{{"name", galois_name}, {"irreducible", full}, {"component_degrees", comps}};
        text += "with Galois group " + galois_name + ": " +
                (full ? "irreducible" : "reducible") + ", component degrees " + comp_text + "\n";
        table.rows.push_back({"components(" + galois_name + ")", comp_text});
    }
    emit(opt, payload, table, text);
}

void cmd_hooks(const Options& opt, const ScrollarProfile& profile, int i) {
    auto m = hook_scrollars(profile, i);
    json payload{{"d", profile.degree()},
                 {"g", profile.genus()},
                 {"i", i},
                 {"lambda", m.label},
                 {"values", json::array()}};
    for (long v : m.values) payload["values"].push_back(v);
    Table table{{"lambda", "values"}, {{m.label, values_line(m.values)}}};
    emit(opt, payload, table, values_line(m.values) + "\n");
}

void cmd_volume(const Options& opt, const ScrollarProfile& profile,
                const std::string& lambda_text) {
    Partition lambda = Partition::parse(lambda_text);
    Int v = volume(lambda, profile);
    json payload{{"d", profile.degree()},
                 {"g", profile.genus()},
                 {"lambda", lambda.to_string()},
                 {"volume", exact(v)},
                 {"p", exact(p_invariant(lambda))}};
    Table table{{"lambda", "p", "volume"},
                {{lambda.to_string(), p_invariant(lambda).get_str(), v.get_str()}}};
    emit(opt, payload, table, v.get_str() + "\n");
}

void cmd_dual(const Options& opt, int d, long g, const std::string& values_text,
              const std::string& label) {
    ScrollarMultiset m;
    m.values = parse_longs(values_text);
    std::sort(m.values.begin(), m.values.end());
    m.label = label;
    auto dual = dual_scrollars(m, g + d - 1);
    json payload{
        {"d", d}, {"g", g}, {"multiset", multiset_json(m)}, {"dual", multiset_json(dual)}};
    Table table{{"label", "values"},
                {{m.label, values_line(m.values)}, {dual.label, values_line(dual.values)}}};
    emit(opt, payload, table, values_line(dual.values) + "\n");
}

void cmd_resolvent(const Options& opt, const ScrollarProfile& profile, const std::string& name) {
    ResolventSummary s = resolvent_summary(subgroup_by_name(profile.degree(), name), profile, name);
    json mults = json::array();
    for (const auto& [lambda, m] : s.multiplicities)
        mults.push_back(json{{"lambda", lambda.to_string()}, {"mult", exact(m)}});
    json payload{{"d", profile.degree()},
                 {"g", profile.genus()},
                 {"subgroup", name},
                 {"index", s.index},
                 {"multiplicities", mults},
                 {"invariant_count", exact(s.invariant_count)},
                 {"total_volume", exact(s.total_volume)},
                 {"arithmetic_genus", exact(s.arithmetic_genus)},
                 {"maroni_bound", exact(s.maroni_bound)}};
    std::string text = "index " + std::to_string(s.index) + ", invariants " +
                       s.invariant_count.get_str() + ", volume " + s.total_volume.get_str() +
                       ", genus " + s.arithmetic_genus.get_str() + "\n";
    Table table{{"field", "value"},
                {{"index", std::to_string(s.index)},
                 {"invariant_count", s.invariant_count.get_str()},
                 {"total_volume", s.total_volume.get_str()},
                 {"arithmetic_genus", s.arithmetic_genus.get_str()},
                 {"maroni_bound", to_string(s.maroni_bound)}}};
    if (s.full_multiset) {
        payload["multiset"] = multiset_json(*s.full_multiset);
        table.rows.push_back({"multiset", values_line(s.full_multiset->values)});
        text += "multiset: " + values_line(s.full_multiset->values) + "\n";
    } else {
        payload["multiset"] = "undetermined";
        table.rows.push_back({"multiset", "undetermined"});
        text += "multiset: undetermined (a contributing partition is not a hook)\n";
    }
    emit(opt, payload, table, text);
}

void cmd_bounds(const Options& opt, int d, long g, std::optional<int> i,
                const std::string& lambda_text, const std::string& subgroup_name) {
    json payload{{"d", d}, {"g", g}};
    Table table{{"kind", "lower", "upper"}, {}};
    std::string text;
    if (i) {
        SplittingBounds b = splitting_type_bounds(*i, d, g);
        payload["i"] = *i;
        payload["lower"] = exact(b.lower);
        payload["upper"] = exact(b.upper);
        table.rows.push_back(
            {"syzygy " + std::to_string(*i), to_string(b.lower), to_string(b.upper)});
        text += "[" + to_string(b.lower) + ", " + to_string(b.upper) + "]\n";
    }
    if (!lambda_text.empty()) {
        Partition lambda = Partition::parse(lambda_text);
        if (lambda.sum() != d) throw ValidationError("lambda must be a partition of d");
        Rat b = maroni_bound_for_partition(lambda, g);
        payload["lambda"] = lambda.to_string();
        payload["lambda_bound"] = exact(b);
        table.rows.push_back({"partition " + lambda.to_string(), "-", to_string(b)});
        text += lambda.to_string() + " <= " + to_string(b) + "\n";
    }
    if (!subgroup_name.empty()) {
        ResolventBound b = maroni_bound_for_subgroup(subgroup_by_name(d, subgroup_name), g);
        payload["subgroup"] = subgroup_name;
        payload["direct"] = exact(b.direct);
        payload["partitionwise"] = exact(b.partitionwise);
        payload["bound"] = exact(b.bound);
        table.rows.push_back({"subgroup " + subgroup_name, "-", to_string(b.bound)});
        text += subgroup_name + " <= " + to_string(b.bound) + " (direct " + to_string(b.direct) +
                ", partitionwise " + to_string(b.partitionwise) + ")\n";
    }
    if (!i && lambda_text.empty() && subgroup_name.empty())
        throw ValidationError("bounds needs --i, --lambda or --subgroup");
    emit(opt, payload, table, text);
}

json geometry_json(const ResolventGeometry& geo) {
    json comps = json::array();
    for (const auto& c : geo.components) {
        json cj{{"degree", c.degree},
                {"euler", c.euler},
                {"splits_into_lines", c.splits_into_lines}};
        if (c.genus) cj["genus"] = *c.genus;
        comps.push_back(cj);
    }
    json degs = json::array();
    for (long deg : geo.component_degrees) degs.push_back(deg);
    json payload{{"smooth", geo.smooth},
                 {"component_degrees", degs},
                 {"arithmetic_genus", exact(geo.arithmetic_genus)},
                 {"normalization_euler", geo.normalization_euler},
                 {"components", comps}};
    if (geo.irreducible)
        payload["irreducible"] = *geo.irreducible;
    else
        payload["irreducible"] = "needs --galois";
    if (!geo.warnings.empty()) payload["warnings"] = geo.warnings;
    return payload;
}

void cmd_analyze(const Options& opt, int d, long g, const std::string& subgroup_name,
                 const std::string& branch_text, const std::string& galois_name) {
    PermSubgroup h = subgroup_by_name(d, subgroup_name);
    BranchData branch = parse_branch(d, branch_text);
    std::optional<PermSubgroup> galois;
    if (!galois_name.empty()) galois = subgroup_by_name(d, galois_name);
    ResolventGeometry geo = resolvent_geometry(h, branch, galois, g);

    CosetAction cosets(h);
    json locals = json::array();
    Table table{{"e", "disc(base)", "disc(order)", "disc(maximal)", "pattern"}, {}};
    for (const auto& b : branch) {
        LocalAnalysis a = analyze_local(cosets, b.pattern);
        locals.push_back(json{{"label", b.label},
                              {"e", a.e.to_string()},
                              {"tame", a.tame},
                              {"order_exponent", exact(a.order_exponent)},
                              {"maximal_exponent", exact(a.maximal_exponent)},
                              {"pattern", a.local_pattern.to_string()}});
        table.rows.push_back({a.e.to_string(), report::t_power(a.tame),
                              report::t_power(a.order_exponent),
                              report::t_power(a.maximal_exponent), a.local_pattern.to_string()});
    }
    json payload = geometry_json(geo);
    payload["d"] = d;
    payload["g"] = g;
    payload["subgroup"] = subgroup_name;
    payload["local"] = locals;

    std::string text = std::string("smooth: ") + (geo.smooth ? "yes" : "no") + "\n";
    if (geo.irreducible)
        text += std::string("irreducible: ") + (*geo.irreducible ? "yes" : "no") + "\n";
    else
        text += "irreducible: needs --galois\n";
    text += "arithmetic genus: " + geo.arithmetic_genus.get_str() + "\n";
    text += "component degrees:";
    for (long deg : geo.component_degrees) text += " " + std::to_string(deg);
    text += "\nnormalization euler characteristic: " + std::to_string(geo.normalization_euler) +
            "\n";
    for (const auto& c : geo.components)
        if (c.genus)
            text += "component of degree " + std::to_string(c.degree) + ": genus " +
                    std::to_string(*c.genus) + "\n";
    for (const auto& w : geo.warnings) text += "warning: " + w + "\n";
    emit(opt, payload, table, text);
}

void cmd_addendum(const Options& opt, int d, const std::string& subgroup_name) {
    PermSubgroup h = subgroup_by_name(d, subgroup_name);
    auto rows = addendum_table(h);
    auto reference = reference_addendum(d, subgroup_name);

    json jrows = json::array(), discrepancies = json::array();
    Table table{{"e", "disc(base)", "disc(order)", "disc(maximal)", "pattern"}, {}};
    std::string text;
    for (const auto& r : rows) {
        jrows.push_back(json{{"e", r.e.to_string()},
                             {"base_exponent", r.base_exponent},
                             {"order_exponent", exact(r.order_exponent)},
                             {"maximal_exponent", exact(r.maximal_exponent)},
                             {"pattern", r.local_pattern.to_string()}});
        table.rows.push_back({r.e.to_string(), report::t_power(r.base_exponent),
                              report::t_power(r.order_exponent),
                              report::t_power(r.maximal_exponent), r.local_pattern.to_string()});
        text += r.e.to_string() + ": " + report::t_power(r.base_exponent) + " " +
                report::t_power(r.order_exponent) + " " + report::t_power(r.maximal_exponent) +
                " " + r.local_pattern.to_string() + "\n";
        if (reference) {
            for (const auto& ref : *reference) {
                if (ref.e != r.e.to_string()) continue;
                if (Int(ref.order_exponent) != r.order_exponent)
                    discrepancies.push_back(json{
                        {"row", ref.e},
                        {"column", "disc(order)"},
                        {"reference", report::t_power(ref.order_exponent)},
                        {"computed", report::t_power(r.order_exponent)},
                        {"note", "computed value equals p(H) x tame defect; the reference cell "
                                 "fails that identity"}});
                if (ref.local_pattern != r.local_pattern.to_string())
                    discrepancies.push_back(json{
                        {"row", ref.e},
                        {"column", "pattern"},
                        {"reference", ref.local_pattern},
                        {"computed", r.local_pattern.to_string()},
                        {"note", "computed pattern satisfies the tame defect identity "
                                 "sum(e'-1) = maximal exponent; the reference cell does not"}});
            }
        }
    }
    json payload{{"d", d}, {"subgroup", subgroup_name}, {"rows", jrows}};
    if (reference) payload["discrepancies"] = discrepancies;
    if (!discrepancies.empty()) {
        text += "discrepancies vs the published reference:\n";
        for (const auto& disc : discrepancies)
            text += "  row " + disc["row"].get<std::string>() + " " +
                    disc["column"].get<std::string>() + ": computed " +
                    disc["computed"].get<std::string>() + ", reference " +
                    disc["reference"].get<std::string>() + "\n";
        for (const auto& disc : discrepancies)
            table.rows.push_back({"discrepancy " + disc["row"].get<std::string>(),
                                  disc["column"].get<std::string>(),
                                  disc["computed"].get<std::string>(),
                                  disc["reference"].get<std::string>(), ""});
    }
    emit(opt, payload, table, text);
}

void cmd_model_disc(const Options& opt, int e, const std::string& lambda_text, bool force) {
    SplitModel model(e, model_override(e, force));
    json payload{{"e", e}};
    Table table{{"lambda", "disc_exponent"}, {}};
    std::string text;
    long full = model.full_gram_valuation();
    payload["full_exponent"] = full;
    if (!lambda_text.empty()) {
        Partition lambda = Partition::parse(lambda_text);
        if (lambda.sum() != e) throw ValidationError("lambda must be a partition of e");
        auto lattice = model.isotypic_lattice(lambda);
        long v = model.gram_valuation(lattice.elements);
        payload["lambda"] = lambda.to_string();
        payload["exponent"] = v;
        payload["rank"] = lattice.elements.size();
        table.rows.push_back({lambda.to_string(), std::to_string(v)});
        text += lambda.to_string() + ": t^" + std::to_string(v) + "\n";
    }
    table.rows.push_back({"(full)", std::to_string(full)});
    text += "full: t^" + std::to_string(full) + "\n";
    emit(opt, payload, table, text);
}

void cmd_model_specht(const Options& opt, const std::string& shape_text, int s_index, int t_index,
                      bool check, bool force) {
    Partition shape = Partition::parse(shape_text);
    auto tabs = standard_tableaux(shape);
    if (s_index < 0 || t_index < 0 || s_index >= static_cast<int>(tabs.size()) ||
        t_index >= static_cast<int>(tabs.size()))
        throw ValidationError("tableau index out of range; shape has " +
                              std::to_string(tabs.size()) + " standard tableaux");
    const StandardTableau& s = tabs[static_cast<size_t>(s_index)];
    const StandardTableau& t = tabs[static_cast<size_t>(t_index)];
    SymPoly poly = higher_specht_polynomial(t, s);
    ChargeData cd = charge_data(s);

    json payload{{"shape", shape.to_string()},
                 {"S", s_index},
                 {"T", t_index},
                 {"S_rows", s.rows()},
                 {"T_rows", t.rows()},
                 {"polynomial", sympoly_to_string(poly)},
                 {"charge", cd.charge},
                 {"max_subscript", cd.max_subscript}};
    Table table{{"field", "value"},
                {{"polynomial", sympoly_to_string(poly)},
                 {"charge", std::to_string(cd.charge)},
                 {"max_subscript", std::to_string(cd.max_subscript)}}};
    std::string text = sympoly_to_string(poly) + "\n";

    if (check) {
        SplitModel model(shape.sum(), model_override(shape.sum(), force));
        SpechtEvaluation ev = evaluate_specht(model, t, s);
        bool pass = ev.in_zero_lattice && ev.isotypic_pure && ev.infinity_after_shift;
        payload["checks"] = json{{"in_zero_lattice", ev.in_zero_lattice},
                                 {"isotypic_pure", ev.isotypic_pure},
                                 {"infinity_after_shift", ev.infinity_after_shift},
                                 {"shift", ev.shift},
                                 {"pass", pass}};
        table.rows.push_back({"checks", pass ? "pass" : "FAIL"});
        text += std::string("lattice membership: ") + (ev.in_zero_lattice ? "pass" : "FAIL") +
                ", isotypic purity: " + (ev.isotypic_pure ? "pass" : "FAIL") +
                ", infinity shift t^-" + std::to_string(ev.shift) + ": " +
                (ev.infinity_after_shift ? "pass" : "FAIL") + "\n";
        if (!pass) throw ConsistencyError("higher Specht checks failed");
    }
    emit(opt, payload, table, text);
}

void cmd_model_trace(const Options& opt, int e, const std::string& monomial_text, bool force) {
    SplitModel model(e, model_override(e, force));
    auto exps_long = parse_longs(monomial_text);
    if (static_cast<int>(exps_long.size()) != e)
        throw ValidationError("monomial needs exactly e exponents");
    std::vector<int> exps(exps_long.begin(), exps_long.end());
    QPoly tr = model.trace_poly(model.monomial(exps));
    json payload{{"e", e}, {"monomial", monomial_text}, {"trace", tr.to_string()}};
    Table table{{"monomial", "trace"}, {{monomial_text, tr.to_string()}}};
    emit(opt, payload, table, tr.to_string() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact scrollar-invariant and resolvent calculator for covers of the line"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format: text|json|md|csv")
        ->check(CLI::IsMember({"text", "json", "md", "csv"}));

    int d = 0, i_index = 0, e_order = 0, s_index = 0, t_index = 0;
    long g = 0;
    std::string lambda_text, class_text, subgroup, galois, e_text, values_text, branch_text,
        monomial_text, label = "multiset";
    bool skip_maroni = false, force_e = false, do_check = false;
    std::optional<int> bounds_i;

    auto* partitions_cmd = app.add_subcommand("partitions", "list the partitions of d");
    partitions_cmd->fallthrough();
    partitions_cmd->add_option("--d", d, "degree")->required();

    auto* char_cmd = app.add_subcommand("char", "one exact character value");
    char_cmd->fallthrough();
    char_cmd->add_option("--d", d, "degree")->required();
    char_cmd->add_option("--lambda", lambda_text, "irreducible label")->required();
    char_cmd->add_option("--class", class_text, "cycle type")->required();

    auto* chartable_cmd = app.add_subcommand("chartable", "full character table of S_d");
    chartable_cmd->fallthrough();
    chartable_cmd->add_option("--d", d, "degree")->required();

    auto* group_cmd = app.add_subcommand("group", "subgroup facts and coset character");
    group_cmd->fallthrough();
    group_cmd->add_option("--d", d, "degree")->required();
    group_cmd->add_option("--subgroup", subgroup, "registry name")->required();
    group_cmd->add_option("--galois", galois, "Galois group registry name");

    auto* scrollar_cmd = app.add_subcommand("scrollar", "scrollar invariant computations");
    scrollar_cmd->fallthrough();
    scrollar_cmd->require_subcommand(1);
    auto* hooks_cmd = scrollar_cmd->add_subcommand("hooks", "hook partition multisets");
    hooks_cmd->fallthrough();
    hooks_cmd->add_option("--d", d)->required();
    hooks_cmd->add_option("--g", g)->required();
    hooks_cmd->add_option("--e", e_text, "twists e_1,...,e_{d-1}")->required();
    hooks_cmd->add_option("--i", i_index, "hook index")->required();
    hooks_cmd->add_flag("--skip-maroni-validation", skip_maroni);

    auto* volume_cmd = scrollar_cmd->add_subcommand("volume", "volume of a partition");
    volume_cmd->fallthrough();
    volume_cmd->add_option("--d", d)->required();
    volume_cmd->add_option("--g", g)->required();
    volume_cmd->add_option("--e", e_text)->required();
    volume_cmd->add_option("--lambda", lambda_text)->required();
    volume_cmd->add_flag("--skip-maroni-validation", skip_maroni);

    auto* dual_cmd = scrollar_cmd->add_subcommand("dual", "dual multiset");
    dual_cmd->fallthrough();
    dual_cmd->add_option("--d", d)->required();
    dual_cmd->add_option("--g", g)->required();
    dual_cmd->add_option("--values", values_text, "multiset values")->required();
    dual_cmd->add_option("--label", label, "label for the multiset");

    auto* resolvent_cmd = scrollar_cmd->add_subcommand("resolvent", "resolvent summary");
    resolvent_cmd->fallthrough();
    resolvent_cmd->add_option("--d", d)->required();
    resolvent_cmd->add_option("--g", g)->required();
    resolvent_cmd->add_option("--e", e_text)->required();
    resolvent_cmd->add_option("--subgroup", subgroup)->required();
    resolvent_cmd->add_flag("--skip-maroni-validation", skip_maroni);

    auto* bounds_cmd = scrollar_cmd->add_subcommand("bounds", "Maroni-type bounds");
    bounds_cmd->fallthrough();
    bounds_cmd->add_option("--d", d)->required();
    bounds_cmd->add_option("--g", g)->required();
    bounds_cmd->add_option("--i", i_index, "syzygy index");
    bounds_cmd->add_option("--lambda", lambda_text);
    bounds_cmd->add_option("--subgroup", subgroup);

    auto* ramify_cmd = app.add_subcommand("ramify", "ramification analysis");
    ramify_cmd->fallthrough();
    ramify_cmd->require_subcommand(1);
    auto* analyze_cmd = ramify_cmd->add_subcommand("analyze", "resolvent geometry for branch data");
    analyze_cmd->fallthrough();
    analyze_cmd->add_option("--d", d)->required();
    analyze_cmd->add_option("--g", g)->required();
    analyze_cmd->add_option("--subgroup", subgroup)->required();
    analyze_cmd->add_option("--branch", branch_text, "patterns like \"2,2;4;3,1\"")->required();
    analyze_cmd->add_option("--galois", galois);

    auto* addendum_cmd = ramify_cmd->add_subcommand("addendum", "full local table for a subgroup");
    addendum_cmd->fallthrough();
    addendum_cmd->add_option("--d", d)->required();
    addendum_cmd->add_option("--subgroup", subgroup)->required();
    auto* addendum_alias = app.add_subcommand("addendum", "alias for ramify addendum");
    addendum_alias->fallthrough();
    addendum_alias->add_option("--d", d)->required();
    addendum_alias->add_option("--subgroup", subgroup)->required();

    auto* model_cmd = app.add_subcommand("localmodel", "split local model computations");
    model_cmd->fallthrough();
    model_cmd->require_subcommand(1);
    auto* disc_cmd = model_cmd->add_subcommand("disc", "isotypic discriminant exponents");
    disc_cmd->fallthrough();
    disc_cmd->add_option("--e", e_order, "ramification order")->required();
    disc_cmd->add_option("--lambda", lambda_text);
    disc_cmd->add_flag("--force", force_e, "override the e <= 5 cap");

    auto* specht_cmd = model_cmd->add_subcommand("specht", "higher Specht polynomial report");
    specht_cmd->fallthrough();
    specht_cmd->add_option("--shape", lambda_text)->required();
    specht_cmd->add_option("--S", s_index)->required();
    specht_cmd->add_option("--T", t_index)->required();
    specht_cmd->add_flag("--check", do_check, "evaluate in the model and run the lattice checks");
    specht_cmd->add_flag("--force", force_e);

    auto* trace_cmd = model_cmd->add_subcommand("trace", "trace of a generator monomial");
    trace_cmd->fallthrough();
    trace_cmd->add_option("--e", e_order)->required();
    trace_cmd->add_option("--monomial", monomial_text, "exponents l_1,...,l_e")->required();
    trace_cmd->add_flag("--force", force_e);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*partitions_cmd) cmd_partitions(opt, d);
        if (*char_cmd) cmd_char(opt, d, lambda_text, class_text);
        if (*chartable_cmd) cmd_chartable(opt, d);
        if (*group_cmd) cmd_group(opt, d, subgroup, galois);
        if (*hooks_cmd) cmd_hooks(opt, make_profile(d, g, e_text, skip_maroni), i_index);
        if (*volume_cmd) cmd_volume(opt, make_profile(d, g, e_text, skip_maroni), lambda_text);
        if (*dual_cmd) cmd_dual(opt, d, g, values_text, label);
        if (*resolvent_cmd) cmd_resolvent(opt, make_profile(d, g, e_text, skip_maroni), subgroup);
        if (*bounds_cmd) {
            if (bounds_cmd->count("--i")) bounds_i = i_index;
            cmd_bounds(opt, d, g, bounds_i, lambda_text, subgroup);
        }
        if (*analyze_cmd) cmd_analyze(opt, d, g, subgroup, branch_text, galois);
        if (*addendum_cmd || *addendum_alias) cmd_addendum(opt, d, subgroup);
        if (*disc_cmd) cmd_model_disc(opt, e_order, lambda_text, force_e);
        if (*specht_cmd) cmd_model_specht(opt, lambda_text, s_index, t_index, do_check, force_e);
        if (*trace_cmd) cmd_model_trace(opt, e_order, monomial_text, force_e);
    } catch (const ConsistencyError& err) {
        std::cerr << "internal consistency error: " << err.what() << "\n";
        return 3;
    } catch (const ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const ResourceError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
