#include "indep/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "indep/acceptance.hpp"
#include "indep/formulas.hpp"
#include "indep/io.hpp"
#include "indep/posetcode.hpp"
#include "indep/prooftree.hpp"
#include "indep/rules.hpp"
#include "indep/witness.hpp"

namespace indep::cli {

namespace {

struct Options {
    std::string set_file, family_file, tree_file, triple, rule, conclusion, attrs_list,
        subsets_list;
    std::string format = "text";
    std::string mode = "multisets";
    int n = 3, i = 1, k = 8;
    int max_attrs = 4, max_members = 4, max_nodes = 4, max_atoms = 6, workers = 1;
    int scan_bound = 12;
    int antichain = 0, chain = 0;
    std::uint64_t budget = 100000, start = 0, seed = kDefaultSeed;
    bool include_trivial = false, prob = false, extension = false;
};

bool records(const Options& o) { return o.format == "records"; }

AttributeSet attrs_from_list(const std::string& list) {
    std::vector<std::string> names;
    std::string cur;
    for (char ch : list + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    return AttributeSet(names);
}

int cmd_eval(const Options& o, std::ostream& out) {
    FunctionSet fs = io::parse_function_set(io::read_file(o.set_file));
    Triple t = io::parse_triple(fs.attrs(), o.triple);
    bool holds = o.prob ? prob_indep(uniform_measure(fs), t) : set_indep(fs, t);
    if (records(o))
        out << "instance=" << format_triple(fs.attrs(), t)
            << " verdict=" << (holds ? "HOLDS" : "FAILS") << "\n";
    else
        out << (holds ? "HOLDS" : "FAILS") << "\n";
    return 0;
}

int cmd_scan(const Options& o, std::ostream& out) {
    FunctionSet fs = io::parse_function_set(io::read_file(o.set_file));
    auto triples = rules::scan_triples_list(fs, o.include_trivial, o.scan_bound);
    for (const Triple& t : triples) {
        if (records(o))
            out << "instance=" << format_triple(fs.attrs(), t) << " verdict=HOLDS\n";
        else
            out << "<" << format_triple(fs.attrs(), t) << ">\n";
    }
    if (!records(o)) out << triples.size() << " triples hold\n";
    return 0;
}

int report_violations(const Options& o, const AttributeSet& attrs,
                      const std::vector<rules::Violation>& viols, std::ostream& out) {
    if (viols.empty()) {
        out << (records(o) ? "verdict=PASS\n" : "no violations\n");
        return 0;
    }
    for (const auto& v : viols) {
        if (records(o)) {
            out << "rule=" << v.rule << " instance=";
            for (size_t i = 0; i < v.premises.size(); ++i)
                out << (i ? "; " : "") << format_triple(attrs, v.premises[i]);
            out << " => " << format_triple(attrs, v.conclusion) << " verdict=FAIL\n";
        } else
            out << format_violation(attrs, v) << "\n";
    }
    if (!records(o)) out << viols.size() << " violations\n";
    return 1;
}

int cmd_rules_check(const Options& o, std::ostream& out) {
    rules::RuleSchema rule = rules::rule_by_name(o.rule);
    if (!o.set_file.empty()) {
        FunctionSet fs = io::parse_function_set(io::read_file(o.set_file));
        if (o.prob)
            return report_violations(o, fs.attrs(),
                                     rules::check_rule_prob(rule, uniform_measure(fs)), out);
        return report_violations(o, fs.attrs(), rules::check_rule_semantic(rule, fs), out);
    }
    if (o.family_file.empty() || o.attrs_list.empty())
        throw precondition_error("rules check needs --set, or --family with --attrs");
    AttributeSet attrs = attrs_from_list(o.attrs_list);
    TripleSet ts(attrs.size());
    for (const Triple& t : io::parse_triple_family(attrs, io::read_file(o.family_file)))
        ts.insert(t);
    return report_violations(o, attrs, rules::check_closure(ts, {rule}), out);
}

int cmd_rules_search(const Options& o, std::ostream& out) {
    rules::RuleSchema rule = rules::rule_by_name(o.rule);
    auto res = rules::search_counterexample(rule, o.max_attrs, o.max_members, o.budget, o.start);
    if (records(o)) {
        out << "rule=" << rule.name << " examined=" << res.examined << " cursor=" << res.cursor
            << " verdict=" << (res.witness ? "FOUND" : res.exhausted ? "EXHAUSTED" : "BUDGET")
            << "\n";
        if (res.witness) out << "witness=" << io::render_function_set(*res.witness);
    } else if (res.witness) {
        out << "violating set after " << res.examined << " candidates:\n"
            << io::render_function_set(*res.witness);
    } else {
        out << (res.exhausted ? "no counterexample in the whole space\n"
                              : "no counterexample within budget\n");
    }
    return 0;
}

int cmd_witness_build(const Options& o, std::ostream& out) {
    witness::DestructionPlan plan = witness::build_witness({o.n, o.i});
    out << (records(o) ? "" : "preserved family:\n");
    for (const Triple& t : plan.preserved.members()) {
        if (records(o))
            out << "preserved=" << format_triple(plan.attrs, t) << "\n";
        else
            out << "  <" << format_triple(plan.attrs, t) << ">\n";
    }
    if (!records(o)) out << "layers (" << plan.layers.size() << "):\n";
    for (const auto& l : plan.layers) {
        if (records(o))
            out << "layer=" << witness::describe_layer(plan, l) << " members=" << l.fs.size()
                << "\n";
        else
            out << "  " << witness::describe_layer(plan, l) << ", " << l.fs.size()
                << " functions\n";
    }
    return 0;
}

int cmd_witness_verify(const Options& o, std::ostream& out) {
    witness::DestructionPlan plan = witness::build_witness({o.n, o.i});
    witness::WitnessReport rep = witness::verify_witness(plan, o.workers);
    if (records(o)) {
        for (const Triple& t : rep.spurious)
            out << "witness=spurious instance=" << format_triple(plan.attrs, t)
                << " verdict=FAIL\n";
        for (const Triple& t : rep.missing)
            out << "witness=missing instance=" << format_triple(plan.attrs, t)
                << " verdict=FAIL\n";
        out << "spurious=" << rep.spurious.size() << " missing=" << rep.missing.size()
            << " verdict=" << (rep.clean() ? "PASS" : "FAIL") << "\n";
    } else {
        out << "spurious: " << rep.spurious.size() << ", missing: " << rep.missing.size() << "\n";
        for (const Triple& t : rep.spurious)
            out << "  spurious <" << format_triple(plan.attrs, t) << ">\n";
        for (const Triple& t : rep.missing)
            out << "  missing <" << format_triple(plan.attrs, t) << ">\n";
    }
    return rep.clean() ? 0 : 1;
}

std::vector<prooftree::DerivationStep> parse_tree(const AttributeSet& attrs,
                                                  const std::string& text) {
    std::vector<prooftree::DerivationStep> steps;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw parse_error(lineno, "expected 'left right : triple'");
        std::istringstream head(line.substr(0, colon));
        std::string l, r;
        if (!(head >> l >> r)) throw parse_error(lineno, "expected two node references");
        auto ref = [&](const std::string& s) {
            if (s == "sigma") return prooftree::kSigmaLeaf;
            if (s == "tau") return prooftree::kTauLeaf;
            int idx = std::stoi(s) - 1;
            if (idx < 0 || idx >= static_cast<int>(steps.size()))
                throw parse_error(lineno, "bad node reference " + s);
            return idx;
        };
        steps.push_back({ref(l), ref(r), io::parse_triple(attrs, line.substr(colon + 1))});
    }
    return steps;
}

int cmd_prooftree_check(const Options& o, std::ostream& out) {
    AttributeSet attrs = attrs_from_list(o.attrs_list);
    auto premises = io::parse_triple_family(attrs, io::read_file(o.family_file));
    Triple conclusion = io::parse_triple(attrs, o.conclusion);
    auto tree = parse_tree(attrs, io::read_file(o.tree_file));
    auto res = prooftree::check_derivation(attrs, premises, conclusion, tree);
    if (records(o))
        out << "instance=" << format_triple(attrs, conclusion)
            << " verdict=" << (res.ok ? "DERIVED" : "REJECTED")
            << (res.reason.empty() ? "" : " witness=" + res.reason) << "\n";
    else
        out << (res.ok ? "derivation checks" : "derivation rejected: " + res.reason) << "\n";
    return res.ok ? 0 : 1;
}

int cmd_prooftree_search(const Options& o, std::ostream& out) {
    AttributeSet attrs = attrs_from_list(o.attrs_list);
    auto premises = io::parse_triple_family(attrs, io::read_file(o.family_file));
    auto found = prooftree::search_derivations(attrs, premises, o.max_nodes, o.budget);
    for (const Triple& t : found) {
        if (records(o))
            out << "instance=" << format_triple(attrs, t) << " verdict=DERIVED\n";
        else
            out << "<" << format_triple(attrs, t) << ">\n";
    }
    if (!records(o)) out << found.size() << " conclusions\n";
    return 0;
}

int cmd_poset_antichain(const Options& o, std::ostream& out) {
    auto labels = poset::encode_antichain(o.n);
    long long bad = 0;
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (poset::label_leq(labels[i], labels[j]) || poset::label_leq(labels[j], labels[i]))
                ++bad;
    for (const auto& l : labels) {
        if (records(o))
            out << "instance=" << poset::format_label(l) << " verdict=OK\n";
        else
            out << poset::format_label(l) << "\n";
    }
    if (records(o))
        out << "pairs=" << labels.size() * (labels.size() - 1) / 2 << " comparable=" << bad
            << " verdict=" << (bad ? "FAIL" : "PASS") << "\n";
    else
        out << (bad ? "comparable pairs found!" : "all pairs incomparable") << "\n";
    return bad ? 1 : 0;
}

int cmd_poset_pyramid(const Options& o, std::ostream& out) {
    poset::Pyramid p = poset::build_pyramid(o.n);
    bool exact = poset::induced_order(p.labels) == p.intended();
    for (int level = 0; level < static_cast<int>(p.level_start.size()); ++level) {
        if (!records(o)) out << "level " << level << ":";
        for (int i = 0; i < p.level_size(level); ++i) {
            if (records(o))
                out << "level=" << level << " instance=" << poset::format_label(
                           p.labels[p.node_id(level, i)]) << "\n";
            else
                out << "  " << poset::format_label(p.labels[p.node_id(level, i)]);
        }
        if (!records(o)) out << "\n";
    }
    int status = exact ? 0 : 1;
    if (records(o)) out << "exact=" << (exact ? "yes" : "no") << "\n";
    else out << (exact ? "induced order matches" : "induced order differs!") << "\n";
    if (o.extension) {
        auto rep = poset::check_extension_failure(o.n);
        if (records(o)) {
            out << "first=" << poset::format_label(rep.first_label)
                << " verdict=" << (rep.first_consistent ? "CONSISTENT" : "INCONSISTENT") << "\n";
            out << "second=" << poset::format_label(rep.second_label) << " spurious="
                << rep.spurious_below.size()
                << " any_label_works=" << (rep.second_possible ? "yes" : "no") << "\n";
        } else {
            out << "adding " << poset::format_label(rep.first_label) << ": "
                << (rep.first_consistent ? "consistent" : "inconsistent") << "\n";
            out << "adding " << poset::format_label(rep.second_label) << ": ";
            if (rep.spurious_below.empty())
                out << "consistent";
            else {
                out << "spurious nodes below:";
                for (const std::string& s : rep.spurious_names) out << " " << s;
            }
            out << "\n";
            out << "exhaustive label search: "
                << (rep.second_possible ? "a label works" : "no label works") << "\n";
        }
    }
    return status;
}

int cmd_poset_minlabel(const Options& o, std::ostream& out) {
    poset::LabelMode mode =
        o.mode == "sets" ? poset::LabelMode::sets : poset::LabelMode::multisets;
    std::optional<poset::IntendedOrder> order;
    if (o.antichain > 0) order = poset::antichain_order(o.antichain);
    else if (o.chain > 0) order = poset::chain_order(o.chain);
    else if (!o.subsets_list.empty()) {
        std::vector<Mask> family;
        std::istringstream in(o.subsets_list);
        std::string word;
        while (std::getline(in, word, ',')) {
            Mask m = 0;
            for (char ch : word) {
                if (ch == ' ') continue;
                if (ch < 'a' || ch > 'z') throw precondition_error("subset atoms are a..z");
                m |= Mask(1) << (ch - 'a');
            }
            family.push_back(m);
        }
        order = poset::subset_code_order(family);
    } else
        throw precondition_error("minlabel needs --antichain, --chain or --subsets");
    auto res = poset::min_label_bruteforce(*order, mode, o.max_atoms);
    if (records(o))
        out << "mode=" << o.mode << " nodes=" << order->size()
            << " verdict=" << (res ? std::to_string(*res) : std::string("NONE")) << "\n";
    else if (res)
        out << "minimal alphabet: " << *res << " atoms\n";
    else
        out << "no labeling within " << o.max_atoms << " atoms\n";
    return 0;
}

int cmd_formulas_family(const Options& o, std::ostream& out) {
    auto fam = formulas::phi_family(o.k);
    long long bad = 0;
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j)
            if (!formulas::conj_disjoint(fam[i], fam[j])) ++bad;
    for (const auto& c : fam) {
        if (records(o))
            out << "instance=" << formulas::format_conjunction(c) << " verdict=OK\n";
        else
            out << formulas::format_conjunction(c) << "\n";
    }
    if (records(o))
        out << "pairs_not_disjoint=" << bad << " verdict=" << (bad ? "FAIL" : "PASS") << "\n";
    else
        out << (bad ? "non-disjoint pairs found!" : "pairwise disjoint") << "\n";
    return bad ? 1 : 0;
}

int cmd_suite_run(const Options& o, std::ostream& out) {
    auto results = acceptance::run_all(out, o.seed);
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"verification tool for ternary independence over finite function sets"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "records"}));
    };

    auto* eval = app.add_subcommand("eval", "evaluate one triple on a function set");
    eval->add_option("--set", o.set_file)->required();
    eval->add_option("--triple", o.triple)->required();
    eval->add_flag("--prob", o.prob, "use the probabilistic predicate under P_A");
    add_common(eval);

    auto* scan = app.add_subcommand("scan", "list all holding triples");
    scan->add_option("--set", o.set_file)->required();
    scan->add_flag("--include-trivial", o.include_trivial);
    scan->add_option("--max-attrs", o.scan_bound);
    add_common(scan);

    auto* rules_cmd = app.add_subcommand("rules", "rule checking and search");
    auto* rcheck = rules_cmd->add_subcommand("check", "check a rule on a set or family");
    rcheck->add_option("--rule", o.rule)->required();
    rcheck->add_option("--set", o.set_file);
    rcheck->add_option("--family", o.family_file);
    rcheck->add_option("--attrs", o.attrs_list);
    rcheck->add_flag("--prob", o.prob);
    add_common(rcheck);
    auto* rsearch = rules_cmd->add_subcommand("search", "search for a violating set");
    rsearch->add_option("--rule", o.rule)->required();
    rsearch->add_option("--max-attrs", o.max_attrs);
    rsearch->add_option("--max-members", o.max_members);
    rsearch->add_option("--budget", o.budget);
    rsearch->add_option("--start", o.start);
    add_common(rsearch);

    auto* wit = app.add_subcommand("witness", "broken-loop witness construction");
    auto* wbuild = wit->add_subcommand("build", "print the layer plan");
    wbuild->add_option("--n", o.n)->required();
    wbuild->add_option("--i", o.i)->required();
    add_common(wbuild);
    auto* wverify = wit->add_subcommand("verify", "exhaustively verify the plan");
    wverify->add_option("--n", o.n)->required();
    wverify->add_option("--i", o.i)->required();
    wverify->add_option("--workers", o.workers);
    add_common(wverify);

    auto* pt = app.add_subcommand("prooftree", "universal proof trees");
    auto* pcheck = pt->add_subcommand("check", "check a derivation script");
    pcheck->add_option("--attrs", o.attrs_list)->required();
    pcheck->add_option("--premises", o.family_file)->required();
    pcheck->add_option("--conclusion", o.conclusion)->required();
    pcheck->add_option("--tree", o.tree_file)->required();
    add_common(pcheck);
    auto* psearch = pt->add_subcommand("search", "bounded derivation search");
    psearch->add_option("--attrs", o.attrs_list)->required();
    psearch->add_option("--premises", o.family_file)->required();
    psearch->add_option("--max-nodes", o.max_nodes);
    psearch->add_option("--budget", o.budget);
    add_common(psearch);

    auto* pos = app.add_subcommand("poset", "multiset poset coding");
    auto* pant = pos->add_subcommand("antichain", "antichain encoding");
    pant->add_option("--n", o.n)->required();
    add_common(pant);
    auto* ppyr = pos->add_subcommand("pyramid", "pyramid construction");
    ppyr->add_option("--n", o.n)->required();
    ppyr->add_flag("--extension", o.extension, "check the two-node extension failure");
    add_common(ppyr);
    auto* pmin = pos->add_subcommand("minlabel", "minimal alphabet search");
    pmin->add_option("--mode", o.mode)->check(CLI::IsMember({"sets", "multisets"}));
    pmin->add_option("--max-atoms", o.max_atoms);
    pmin->add_option("--antichain", o.antichain);
    pmin->add_option("--chain", o.chain);
    pmin->add_option("--subsets", o.subsets_list);
    add_common(pmin);

    auto* form = app.add_subcommand("formulas", "disjoint formula families");
    auto* ffam = form->add_subcommand("family", "the phi family");
    ffam->add_option("--k", o.k);
    add_common(ffam);

    auto* suite = app.add_subcommand("suite", "verification batteries");
    auto* srun = suite->add_subcommand("run", "run the full acceptance battery");
    srun->add_option("--seed", o.seed);
    add_common(srun);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(o, out);
        if (scan->parsed()) return cmd_scan(o, out);
        if (rcheck->parsed()) return cmd_rules_check(o, out);
        if (rsearch->parsed()) return cmd_rules_search(o, out);
        if (wbuild->parsed()) return cmd_witness_build(o, out);
        if (wverify->parsed()) return cmd_witness_verify(o, out);
        if (pcheck->parsed()) return cmd_prooftree_check(o, out);
        if (psearch->parsed()) return cmd_prooftree_search(o, out);
        if (pant->parsed()) return cmd_poset_antichain(o, out);
        if (ppyr->parsed()) return cmd_poset_pyramid(o, out);
        if (pmin->parsed()) return cmd_poset_minlabel(o, out);
        if (ffam->parsed()) return cmd_formulas_family(o, out);
        if (srun->parsed()) return cmd_suite_run(o, out);
        err << "error: unknown command\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace indep::cli
