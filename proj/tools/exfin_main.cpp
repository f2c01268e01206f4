// exfin — a workbench for the exact completion of finite sets.
//
// Reads an instance document (finite sets, maps, relations, pairs), runs one
// subcommand against it, prints a text or JSON report, and exits 0 when every
// check passed or was skipped, 1 when any check failed, 2 on usage or parse
// errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exfin/catalog.hpp"
#include "exfin/cetcs.hpp"
#include "exfin/depprod.hpp"
#include "exfin/instance.hpp"
#include "exfin/report.hpp"

namespace {

using namespace exfin;

struct GlobalFlags {
    std::string instance_path;
    std::string strategy = "minimal";
    std::uint64_t seed = 0;
    int max_size = 3;
    std::string report = "text";
};

struct UsageError {
    std::string message;
};

InstanceDocument load_document(const GlobalFlags& flags) {
    if (flags.instance_path.empty())
        throw UsageError{"this subcommand needs --instance <file>"};
    std::ifstream in(flags.instance_path);
    if (!in) throw UsageError{"cannot open instance file \"" + flags.instance_path + "\""};
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_instance(buf.str());
    } catch (const parse_error& e) {
        throw UsageError{flags.instance_path + ":" + e.what()};
    }
}

std::string join_counts(const std::vector<long long>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

void note_document(ReportBuilder& rb, const InstanceDocument& doc) {
    nlohmann::ordered_json d;
    d["sets"] = doc.sets.size();
    d["maps"] = doc.maps.size();
    d["relations"] = doc.relations.size();
    d["pairs"] = doc.pairs.size();
    rb.note("document", d);
}

const InstanceDocument::MapEntry& need_map(const InstanceDocument& doc, const std::string& name) {
    auto it = doc.maps.find(name);
    if (it == doc.maps.end()) throw UsageError{"the document has no map named \"" + name + "\""};
    return it->second;
}

// ---------------------------------------------------------------------------

ReportBuilder run_check_base(const GlobalFlags& flags, const WeakLimitStrategy& st,
                             const InstanceDocument* doc) {
    ReportBuilder rb("check-base", st.describe(), flags.seed, flags.max_size);
    if (doc) {
        note_document(rb, *doc);
        bool all_choice = true;
        std::string offender;
        for (const auto& [name, s] : doc->sets)
            if (!is_choice_object(s)) {
                all_choice = false;
                offender = name;
            }
        rb.add("choice-objects", all_choice ? "pass" : "fail",
               all_choice ? "every named set splits the surjections onto it"
                          : "surjections onto set \"" + offender + "\" do not all split");
    }

    int n = std::min(flags.max_size, 3);
    ElementalLogicReport el = check_elemental_logic(n);
    nlohmann::ordered_json counts;
    counts["surjections"] = el.surjections_checked;
    counts["ordering_pairs"] = el.leq_pairs_checked;
    counts["total_relations"] = el.total_relations_checked;
    rb.add("elemental-logic", el.ok() ? "pass" : "fail",
           el.ok() ? "sections, orderings, and choice maps agree on carriers up to size " +
                         std::to_string(n)
                   : el.first_failure,
           counts);

    LextensiveReport lex = check_weakly_lextensive(st, n);
    rb.add("weakly-lextensive", lex.ok() ? "pass" : "fail",
           lex.ok() ? "sums are disjoint and strict, products distribute, weak equalizers sum (" +
                          std::to_string(lex.checks) + " checks)"
                    : lex.failures.front());
    return rb;
}

ReportBuilder run_complete(const GlobalFlags& flags, const WeakLimitStrategy& st,
                           const InstanceDocument& doc) {
    ReportBuilder rb("complete", st.describe(), flags.seed, flags.max_size);
    note_document(rb, doc);
    for (const auto& [name, s] : doc.sets) {
        ExObjPtr d = ex_discrete(s, st);
        rb.add("set:" + name, "pass",
               "discrete object with " + std::to_string(d->num_classes) + " classes");
    }
    for (const auto& [name, r] : doc.relations) {
        if (r.feet.size() != 2 || r.feet[0] != r.feet[1]) {
            rb.add("relation:" + name, "skip",
                   "not a binary relation on a single set; nothing to complete");
            continue;
        }
        const FiniteSet& carrier = doc.sets.at(r.feet[0]);
        const FiniteMap& rep = r.rel.psub.rep;
        TupleProduct tp = tuple_product({carrier, carrier});
        std::vector<int> lt, rt;
        for (int w = 0; w < rep.dom().size(); ++w) {
            std::vector<int> coords = tp.decode(rep(w));
            lt.push_back(coords[0]);
            rt.push_back(coords[1]);
        }
        Span span(FiniteMap(rep.dom(), carrier, std::move(lt)),
                  FiniteMap(rep.dom(), carrier, std::move(rt)));
        try {
            ExObjPtr obj = ex_obj_from_span(carrier, span, st);
            nlohmann::ordered_json extra;
            extra["classes"] = obj->num_classes;
            extra["span_rows"] = obj->rel.apex().size();
            extra["witness_pack"] = obj->pack_skipped ? "skipped" : "built";
            rb.add("relation:" + name, "pass",
                   "pseudo-equivalence with " + std::to_string(obj->num_classes) +
                       " classes over " + std::to_string(carrier.size()) + " elements",
                   extra);
        } catch (const error& e) {
            rb.add("relation:" + name, "fail", e.what());
        }
    }
    return rb;
}

ReportBuilder run_bhk(const GlobalFlags& flags, const WeakLimitStrategy& st,
                      const InstanceDocument& doc, const std::string& formula_src,
                      const std::string& context_src) {
    ReportBuilder rb("bhk", st.describe(), flags.seed, flags.max_size);
    note_document(rb, doc);
    SymbolTable syms = doc.symbols();
    FormulaPtr f;
    Context ctx;
    try {
        f = parse_formula(formula_src, syms);
        ctx = parse_context(context_src, syms);
    } catch (const parse_error& e) {
        throw UsageError{std::string("in the formula or context: ") + e.what()};
    }
    rb.note("formula", f->describe());

    Presubobject p = interpret(f, ctx, st);
    TupleProduct cobj = context_object(ctx);
    nlohmann::ordered_json extra;
    extra["evidence_rows"] = p.apex_size();
    extra["context_tuples"] = cobj.object.size();
    rb.add("interpretation", "pass",
           "evidence object has " + std::to_string(p.apex_size()) + " rows over " +
               std::to_string(cobj.object.size()) + " context tuples",
           extra);

    std::vector<char> bhk = element_image(p);
    std::vector<char> classical = classical_image(f, ctx);
    long long disagreements = 0;
    for (std::size_t i = 0; i < bhk.size(); ++i)
        if ((bhk[i] != 0) != (classical[i] != 0)) ++disagreements;
    rb.add("classical-agreement", disagreements == 0 ? "pass" : "fail",
           disagreements == 0
               ? "evidence exists exactly where the formula holds classically"
               : std::to_string(disagreements) + " context tuples disagree with classical truth");
    return rb;
}

ReportBuilder run_fullness(const GlobalFlags& flags, const WeakLimitStrategy& st,
                           const InstanceDocument& doc, const std::string& fname,
                           const std::string& gname) {
    ReportBuilder rb("fullness", st.describe(), flags.seed, flags.max_size);
    note_document(rb, doc);
    const auto& f = need_map(doc, fname);
    const auto& g = need_map(doc, gname);
    if (g.cod != f.dom)
        throw UsageError{"map \"" + gname + "\" lands in \"" + g.cod +
                         "\" but must land in the domain \"" + f.dom + "\" of \"" + fname + "\""};
    try {
        FullFamily fam = build_full_family(f.map, g.map, st);
        std::vector<int> fibers;
        for (const auto& fo : fam.f_fibers) fibers.push_back(fo.carrier.size());
        nlohmann::ordered_json extra;
        extra["codes"] = fam.F.size();
        extra["fiber_sizes"] = fibers;
        rb.add("family", "pass",
               "family of " + std::to_string(fam.F.size()) + " codes over index set \"" + f.cod +
                   "\"",
               extra);

        FullnessReport fr = check_fullness(fam, false);
        nlohmann::ordered_json fx;
        fx["relations_checked"] = fr.relations_checked;
        fx["misses"] = fr.misses;
        rb.add("covering-codes", fr.ok() ? "pass" : "fail",
               fr.ok() ? "every total pseudo-relation over the pair admits a covering code"
                       : std::to_string(fr.misses) + " total pseudo-relations have no covering code",
               fx);
    } catch (const cap_error& e) {
        rb.add("family", "skip", std::string("construction exceeds the family cap: ") + e.what());
    }
    return rb;
}

ReportBuilder run_depprod(const GlobalFlags& flags, const WeakLimitStrategy& st,
                          const InstanceDocument& doc, const std::string& fname,
                          const std::string& gname, bool with_oracle) {
    ReportBuilder rb("depprod", st.describe(), flags.seed, flags.max_size);
    note_document(rb, doc);
    const auto& f = need_map(doc, fname);
    const auto& g = need_map(doc, gname);
    if (g.cod != f.dom)
        throw UsageError{"map \"" + gname + "\" lands in \"" + g.cod +
                         "\" but must land in the domain \"" + f.dom + "\" of \"" + fname + "\""};

    ExObjPtr I = ex_discrete(f.map.cod(), st);
    ExObjPtr X = ex_discrete(f.map.dom(), st);
    ExObjPtr Y = ex_discrete(g.map.dom(), st);
    ExArrow fd = ex_arrow(X, I, f.map);
    ExArrow gd = ex_arrow(Y, X, g.map);

    try {
        DepProd dp = build_dependent_product(fd, gd);
        nlohmann::ordered_json extra;
        extra["codes"] = dp.fam.F.size();
        extra["functional_codes"] = dp.G0.size();
        extra["classes"] = dp.G->num_classes;
        rb.add("construction", "pass",
               "dependent product has " + std::to_string(dp.G->num_classes) +
                   " classes from " + std::to_string(dp.G0.size()) + " functional codes",
               extra);

        UPReport up = verify_universal_property(dp);
        nlohmann::ordered_json ux;
        ux["sections_checked"] = up.sections_checked;
        ux["existence_failures"] = up.existence_failures;
        ux["uniqueness_failures"] = up.uniqueness_failures;
        ux["signature_mismatches"] = up.signature_mismatches;
        ux["invalid_codes"] = up.invalid_codes;
        rb.add("universal-property", up.ok() ? "pass" : "fail",
               up.ok() ? "each class-level section is realized by exactly one class (" +
                             std::to_string(up.sections_checked) + " sections)"
                       : "existence or uniqueness violated",
               ux);

        if (with_oracle) {
            DepProdOracle oc = oracle_dependent_product(fd, gd);
            try {
                DepProdIso iso = match_to_oracle(dp, oc);
                (void)iso;
                rb.add("oracle", "pass",
                       "iso: yes, classes per index: " + join_counts(oc.sections_per_class));
            } catch (const error& e) {
                rb.add("oracle", "fail", std::string("iso: no — ") + e.what());
            }
        }
    } catch (const cap_error& e) {
        rb.add("construction", "skip",
               std::string("construction exceeds the family cap: ") + e.what());
    }
    return rb;
}

ReportBuilder run_cetcs(const GlobalFlags& flags, const WeakLimitStrategy& st,
                        const InstanceDocument* doc) {
    ReportBuilder rb("cetcs", st.describe(), flags.seed, flags.max_size);
    std::vector<ExObjPtr> objects = all_exobjs(std::min(flags.max_size, 3), st);
    std::size_t canonical = objects.size();
    if (doc) {
        note_document(rb, *doc);
        for (const auto& [name, s] : doc->sets) objects.push_back(ex_discrete(s, st));
        for (const auto& [name, r] : doc->relations) {
            if (r.feet.size() != 2 || r.feet[0] != r.feet[1]) continue;
            const FiniteSet& carrier = doc->sets.at(r.feet[0]);
            const FiniteMap& rep = r.rel.psub.rep;
            TupleProduct tp = tuple_product({carrier, carrier});
            std::vector<int> lt, rt;
            for (int w = 0; w < rep.dom().size(); ++w) {
                std::vector<int> coords = tp.decode(rep(w));
                lt.push_back(coords[0]);
                rt.push_back(coords[1]);
            }
            try {
                objects.push_back(ex_obj_from_span(
                    carrier,
                    Span(FiniteMap(rep.dom(), carrier, std::move(lt)),
                         FiniteMap(rep.dom(), carrier, std::move(rt))),
                    st));
            } catch (const error&) {
                rb.add("relation:" + name, "skip",
                       "not a pseudo-equivalence; it does not join the audited inventory");
            }
        }
    }
    nlohmann::ordered_json inv;
    inv["canonical"] = canonical;
    inv["from_instance"] = objects.size() - canonical;
    rb.note("inventory", inv);

    AuditReport rep = audit(objects, st, flags.seed);
    rb.note("skipped_caps", rep.skipped_caps);
    for (const AxiomVerdict& a : rep.axioms) {
        std::string status =
            a.verdict == "pass" ? "pass" : a.verdict == "skipped" ? "skip" : "fail";
        nlohmann::ordered_json extra;
        extra["evidence"] = a.detail;
        extra["checks"] = a.checks;
        rb.add(a.axiom, status, a.statement, extra);
    }

    LextensiveReport lex = check_weakly_lextensive(st);
    rb.add("weakly-lextensive", lex.ok() ? "pass" : "fail",
           lex.ok() ? "base sums, strict initial, distributivity, weak equalizer sums (" +
                          std::to_string(lex.checks) + " checks)"
                    : lex.failures.front());
    WellpointedReport wp = check_wellpointed(st);
    rb.add("wellpointed", wp.ok() ? "pass" : "fail",
           wp.ok() ? "the terminal object separates, generates, and lifts across covers (" +
                         std::to_string(wp.checks) + " checks)"
                   : wp.failures.front());
    return rb;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for the exact completion of finite sets"};
    app.set_help_all_flag("--help-all", "expanded help for every subcommand");

    GlobalFlags flags;
    app.add_option("--instance", flags.instance_path, "instance document (JSON)");
    app.add_option("--strategy", flags.strategy, "weak-limit strategy: minimal or padded:<k>");
    app.add_option("--seed", flags.seed, "seed for the randomized sweeps");
    app.add_option("--max-size", flags.max_size, "carrier bound for enumeration sweeps")
        ->check(CLI::Range(0, 6));
    app.add_option("--report", flags.report, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    app.require_subcommand(1);

    CLI::App* sc_base = app.add_subcommand("check-base", "verify the ambient category of finite "
                                                         "sets and the document's inventory");
    CLI::App* sc_complete =
        app.add_subcommand("complete", "build completion objects from the document's relations");

    std::string formula_src, context_src;
    CLI::App* sc_bhk = app.add_subcommand("bhk", "interpret a formula as evidence");
    sc_bhk->add_option("--formula", formula_src, "formula to interpret")->required();
    sc_bhk->add_option("--context", context_src, "typed context, e.g. \"x:X, y:Y\"");

    std::string f_name, g_name;
    CLI::App* sc_fullness =
        app.add_subcommand("fullness", "build the full family of pseudo-relations over (f, g)");
    sc_fullness->add_option("--f", f_name, "index map name")->required();
    sc_fullness->add_option("--g", g_name, "fiber map name")->required();

    bool with_oracle = false;
    CLI::App* sc_depprod =
        app.add_subcommand("depprod", "build the dependent product of g along f");
    sc_depprod->add_option("--f", f_name, "index map name")->required();
    sc_depprod->add_option("--g", g_name, "fiber map name")->required();
    sc_depprod->add_flag("--oracle", with_oracle,
                         "match the construction against the brute-force section oracle");

    CLI::App* sc_cetcs = app.add_subcommand("cetcs", "audit the ten constructive axioms");

    // Accept the shared flags on either side of the subcommand name.
    for (CLI::App* sc : {sc_base, sc_complete, sc_bhk, sc_fullness, sc_depprod, sc_cetcs})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        WeakLimitStrategy st = parse_strategy(flags.strategy);

        InstanceDocument doc;
        bool have_doc = !flags.instance_path.empty();
        if (have_doc) doc = load_document(flags);

        ReportBuilder rb = [&]() -> ReportBuilder {
            if (sc_base->parsed()) return run_check_base(flags, st, have_doc ? &doc : nullptr);
            if (sc_complete->parsed()) {
                if (!have_doc) throw UsageError{"this subcommand needs --instance <file>"};
                return run_complete(flags, st, doc);
            }
            if (sc_bhk->parsed()) {
                if (!have_doc) throw UsageError{"this subcommand needs --instance <file>"};
                return run_bhk(flags, st, doc, formula_src, context_src);
            }
            if (sc_fullness->parsed()) {
                if (!have_doc) throw UsageError{"this subcommand needs --instance <file>"};
                return run_fullness(flags, st, doc, f_name, g_name);
            }
            if (sc_depprod->parsed()) {
                if (!have_doc) throw UsageError{"this subcommand needs --instance <file>"};
                return run_depprod(flags, st, doc, f_name, g_name, with_oracle);
            }
            (void)sc_cetcs;
            return run_cetcs(flags, st, have_doc ? &doc : nullptr);
        }();

        nlohmann::ordered_json rep = rb.finish();
        std::cout << (flags.report == "json" ? render_json(rep) : render_text(rep));
        return rb.exit_code();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
