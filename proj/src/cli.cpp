#include "syllogist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "syllogist/compat.hpp"
#include "syllogist/dsl.hpp"
#include "syllogist/dubois.hpp"
#include "syllogist/errors.hpp"
#include "syllogist/oracle.hpp"
#include "syllogist/zadeh.hpp"

namespace syllogist::cli {

namespace {

using nlohmann::json;

int exit_code_for(errc code) {
    switch (code) {
    case errc::syntax_error:
    case errc::malformed_interval:
    case errc::unknown_quantifier:
    case errc::bad_lexicon:
    case errc::io_error:
        return 1;
    default:
        return 2;
    }
}

json interval_json(const Interval& iv) {
    return json{{"lower", iv.lower},
                {"upper", iv.upper},
                {"lower_open", iv.lower_open},
                {"upper_open", iv.upper_open}};
}

json range_json(const RationalRange& r) {
    return json{{"lower", r.lower.to_string()},
                {"upper", r.upper.to_string()},
                {"lower_double", r.lower.to_double()},
                {"upper_double", r.upper.to_double()}};
}

struct CommonOpts {
    std::string lexicon_path;
    std::string format = "text";
    bool ascii = false;
};

Lexicon lexicon_or_empty(const std::string& path) {
    if (path.empty()) return Lexicon{};
    return load_lexicon(path);
}

void emit(std::ostream& out, const CommonOpts& opts, const json& doc,
          const std::string& text) {
    if (opts.format == "json")
        out << doc.dump(2) << "\n";
    else
        out << text;
}

// ---- infer ---------------------------------------------------------------

struct InferOpts {
    CommonOpts common;
    std::string pattern;
    std::string version = "particular";
    std::string file;
    int oracle_max = 60;
    double step = 0.01;
    int alpha_levels = kDefaultAlphaLevels;
    std::optional<double> mix;
    bool assume_inclusion = false;
    bool want_point = false;
};

void check_arity(const SyllogismFile& f, size_t expected, const std::string& pattern) {
    if (f.premises.size() != expected)
        raise(errc::syntax_error, "pattern " + pattern + " expects " +
                                      std::to_string(expected) + " premises, file has " +
                                      std::to_string(f.premises.size()));
}

void check_link(const Statement& s, const std::string& subj, const std::string& pred,
                const char* which) {
    if (s.subject != subj || s.predicate != pred)
        raise(errc::syntax_error, std::string("premise ") + which + " should read '... " +
                                      subj + " are " + pred + "', got '" + s.subject +
                                      " are " + s.predicate + "'");
}

AlphaCutNumber to_cuts(const QuantifierKind& q, int levels) {
    if (q.absolute)
        raise(errc::absolute_quantifier, "inference patterns need proportional quantifiers");
    if (q.is_fuzzy())
        return AlphaCutNumber::from_trapezoid(q.as_trapezoid(), levels);
    return AlphaCutNumber::from_interval(q.as_interval(), levels);
}

std::string quantifier_label(const Statement& s) {
    return s.quantifier_name.empty() ? render_quantifier_text(s) : s.quantifier_name;
}

json bounded_json(const BoundedQuantifier& q) {
    auto [sup, ker] = defuzz_bounds(q);
    return json{{"support", {sup.lower, sup.upper}},
                {"kernel", {ker.lower, ker.upper}},
                {"at_least", q.mode == BoundedQuantifier::Mode::AtLeast}};
}

int cmd_infer(const InferOpts& o, std::ostream& out) {
    Lexicon lex = lexicon_or_empty(o.common.lexicon_path);
    SyllogismFile file = parse_file(o.file, lex);
    if (!file.pattern_hint.empty() && file.pattern_hint != o.pattern)
        raise(errc::syntax_error, "file declares pattern " + file.pattern_hint +
                                      " but --pattern is " + o.pattern);
    std::string version = o.version;
    if (!file.version_hint.empty()) version = file.version_hint;

    RenderOptions ropt{o.common.ascii};
    json doc{{"pattern", o.pattern}};
    {
        json prem = json::array();
        for (const auto& p : file.premises) prem.push_back(render_statement(p, ropt));
        doc["premises"] = prem;
    }
    std::string text;

    auto finish_statement = [&](const Statement& concl) {
        doc["conclusion"]["text"] = render_statement(concl, ropt);
        text += render_statement(concl, ropt) + "\n";
        if (file.expected_conclusion)
            doc["expected"] = render_statement(*file.expected_conclusion, ropt);
    };

    if (o.pattern == "dubois1") {
        check_arity(file, 4, o.pattern);
        const auto& p = file.premises;
        std::string a = p[0].subject, b = p[0].predicate;
        check_link(p[1], b, a, "2 (converse of premise 1)");
        std::string c = p[2].predicate;
        check_link(p[2], b, c, "3");
        check_link(p[3], c, b, "4 (converse of premise 3)");

        PatternIInput in{p[0].quantifier, p[1].quantifier, p[2].quantifier, p[3].quantifier};
        PatternIInput conv{p[3].quantifier, p[2].quantifier, p[1].quantifier, p[0].quantifier};
        Pattern1Options popt;
        popt.grid_step = o.step;

        bool any_fuzzy = std::any_of(p.begin(), p.end(),
                                     [](const Statement& s) { return s.quantifier.is_fuzzy(); });
        Statement concl;
        concl.subject = a;
        concl.predicate = c;
        if (any_fuzzy) {
            TrapezoidalQuantifier t = pattern1_fuzzy(in, popt);
            concl.quantifier = QuantifierKind::fuzzy(t);
            doc["conclusion"] = {{"support", {t.support_low, t.support_high}},
                                 {"kernel", {t.kernel_low, t.kernel_high}}};
            TrapezoidalQuantifier tc = pattern1_fuzzy(conv, popt);
            doc["converse_conclusion"] = {{"support", {tc.support_low, tc.support_high}},
                                          {"kernel", {tc.kernel_low, tc.kernel_high}}};
        } else {
            Pattern1Bounds bounds = pattern1_imprecise(in, popt);
            concl.quantifier = QuantifierKind::imprecise(bounds.conclusion);
            doc["conclusion"] = {{"interval", interval_json(bounds.conclusion)}};
            doc["diagnostics"] = {{"vertex_lower", bounds.vertex_lower},
                                  {"sweep_lower", bounds.sweep_lower},
                                  {"vertex_upper", bounds.vertex_upper},
                                  {"sweep_upper", bounds.sweep_upper}};
            Pattern1Bounds cb = pattern1_imprecise(conv, popt);
            doc["converse_conclusion"] = {{"interval", interval_json(cb.conclusion)}};
            Statement conv_stmt;
            conv_stmt.subject = c;
            conv_stmt.predicate = a;
            conv_stmt.quantifier = QuantifierKind::imprecise(cb.conclusion);
            text += render_statement(conv_stmt, ropt) + "  (converse)\n";
        }
        finish_statement(concl);
        emit(out, o.common, doc, text);
        return 0;
    }

    if (o.pattern == "dubois2" || o.pattern == "dubois3") {
        Pattern23Input in;
        in.pattern = o.pattern == "dubois2" ? 2 : 3;
        in.general = version == "general";
        const auto& p = file.premises;
        auto iv = [](const Statement& s) {
            if (s.quantifier.is_fuzzy())
                raise(errc::domain_error,
                      "conjunction patterns take precise/imprecise quantifiers only");
            if (s.quantifier.absolute)
                raise(errc::absolute_quantifier, "proportional quantifiers required");
            return s.quantifier.as_interval();
        };
        std::string a, b, c;
        if (in.general) {
            check_arity(file, 6, o.pattern);
            a = p[0].subject; b = p[0].predicate; c = p[2].predicate;
            check_link(p[1], b, a, "2");
            check_link(p[2], b, c, "3");
            check_link(p[3], c, b, "4");
            check_link(p[4], a, c, "5");
            check_link(p[5], c, a, "6");
            in.q1 = iv(p[0]); in.q1_conv = iv(p[1]);
            in.q2 = iv(p[2]); in.q2_conv = iv(p[3]);
            in.q3 = iv(p[4]); in.q3_conv = iv(p[5]);
        } else if (in.pattern == 2) {
            check_arity(file, 4, o.pattern);
            a = p[0].subject; b = p[0].predicate; c = p[2].predicate;
            check_link(p[1], b, a, "2");
            check_link(p[2], b, c, "3");
            check_link(p[3], a, c, "4");
            in.q1 = iv(p[0]); in.q1_conv = iv(p[1]); in.q2 = iv(p[2]); in.q3 = iv(p[3]);
        } else {
            check_arity(file, 2, o.pattern);
            c = p[0].subject; b = p[0].predicate; a = p[1].predicate;
            if (p[1].subject != c)
                raise(errc::syntax_error, "both premises must share the subject term");
            if (a == b)
                raise(errc::syntax_error, "premise predicates must differ");
            in.q2_conv = iv(p[0]); in.q3_conv = iv(p[1]);
        }

        RationalRange r = pattern23_bounds(in, o.oracle_max);
        Statement concl;
        concl.quantifier = QuantifierKind::imprecise(r.to_interval());
        if (in.pattern == 2) {
            concl.subject = a + " and " + b;
            concl.predicate = c;
        } else {
            concl.subject = c;
            concl.predicate = a + " and " + b;
        }
        doc["version"] = version;
        doc["conclusion"] = {{"interval", interval_json(r.to_interval())},
                             {"exact", range_json(r)}};
        doc["oracle_max"] = o.oracle_max;
        finish_statement(concl);
        emit(out, o.common, doc, text);
        return 0;
    }

    // Zadeh patterns: two premises.
    check_arity(file, 2, o.pattern);
    const Statement& p1 = file.premises[0];
    const Statement& p2 = file.premises[1];
    AlphaCutNumber q1 = to_cuts(p1.quantifier, o.alpha_levels);
    AlphaCutNumber q2 = to_cuts(p2.quantifier, o.alpha_levels);
    std::string l1 = quantifier_label(p1), l2 = quantifier_label(p2);

    Statement concl;
    if (o.pattern == "mc" || o.pattern == "mpr") {
        BoundedQuantifier result = BoundedQuantifier::exact(q1);
        if (o.pattern == "mc") {
            if (p1.predicate != p2.subject)
                raise(errc::syntax_error,
                      "chaining premises must share the middle term "
                      "(predicate of premise 1 = subject of premise 2)");
            result = mc_conclude(q1, q2, o.assume_inclusion);
            concl.subject = p1.subject;
            concl.quantifier_name = l1 + "\xE2\x8A\x97" + l2;  // tensor sign
        } else {
            if (p1.subject != p2.subject)
                raise(errc::syntax_error,
                      "reversed-premise chaining needs both premises on the middle subject");
            result = mpr_conclude(q1, q2);
            concl.subject = p1.predicate;
            concl.quantifier_name = l1 == l2 ? "0 \xE2\x88\xA8 (2 " + l1 + " \xE2\x8A\x96 1)"
                                             : "0 \xE2\x88\xA8 (" + l1 + " \xE2\x8A\x95 " + l2 +
                                                   " \xE2\x8A\x96 1)";
        }
        concl.predicate = p2.predicate;
        concl.at_least = true;
        auto [sup, ker] = defuzz_bounds(result);
        concl.quantifier = QuantifierKind::fuzzy(TrapezoidalQuantifier::make(
            sup.lower, ker.lower, ker.upper, sup.upper));
        doc["conclusion"] = bounded_json(result);
        finish_statement(concl);
        emit(out, o.common, doc, text);
        return 0;
    }

    ZadehPattern zp;
    if (o.pattern == "intersection") zp = ZadehPattern::IntersectionProduct;
    else if (o.pattern == "antecedent-and") zp = ZadehPattern::AntecedentAnd;
    else if (o.pattern == "antecedent-or") zp = ZadehPattern::AntecedentOr;
    else if (o.pattern == "consequent-and") zp = ZadehPattern::ConsequentAnd;
    else if (o.pattern == "consequent-or") zp = ZadehPattern::ConsequentOr;
    else raise(errc::syntax_error, "unknown pattern: " + o.pattern);

    if (zp == ZadehPattern::AntecedentAnd || zp == ZadehPattern::AntecedentOr) {
        if (p1.predicate != p2.predicate)
            raise(errc::syntax_error, "antecedent patterns share the predicate term");
        concl.subject = p1.subject +
                        (zp == ZadehPattern::AntecedentAnd ? " and " : " or ") + p2.subject;
        concl.predicate = p1.predicate;
    } else if (zp == ZadehPattern::ConsequentAnd || zp == ZadehPattern::ConsequentOr) {
        if (p1.subject != p2.subject)
            raise(errc::syntax_error, "consequent patterns share the subject term");
        concl.subject = p1.subject;
        concl.predicate = p1.predicate +
                          (zp == ZadehPattern::ConsequentAnd ? " and " : " or ") + p2.predicate;
    } else {  // intersection/product
        concl.subject = p1.subject;
        concl.predicate = p1.predicate + " and " + p2.predicate;
    }

    CombineResult r = combine(zp, q1, q2, o.mix, o.want_point);
    if (!r.note.empty()) doc["note"] = r.note;
    if (r.is_interval()) {
        concl.quantifier = QuantifierKind::imprecise(r.interval());
        doc["conclusion"] = {{"interval", interval_json(r.interval())}};
    } else {
        const BoundedQuantifier& bq = r.bounded();
        auto [sup, ker] = defuzz_bounds(bq);
        concl.at_least = bq.mode == BoundedQuantifier::Mode::AtLeast;
        if (zp == ZadehPattern::IntersectionProduct)
            concl.quantifier_name = l1 + "\xE2\x8A\x97" + l2;
        concl.quantifier = QuantifierKind::fuzzy(TrapezoidalQuantifier::make(
            sup.lower, ker.lower, ker.upper, sup.upper));
        doc["conclusion"] = bounded_json(bq);
    }
    finish_statement(concl);
    if (!r.note.empty()) text += "note: " + r.note + "\n";
    emit(out, o.common, doc, text);
    return 0;
}

// ---- check-mood ----------------------------------------------------------

int cmd_check_mood(const std::string& name, int max, const CommonOpts& opts,
                   std::ostream& out) {
    Mood mood = mood_from_name(name);
    MoodCheck check = mood_valid(mood, max);
    json doc{{"mood", mood.name()}, {"valid", check.valid}, {"max", max}};
    std::string text = mood.name() + ": " +
                       (check.valid ? "valid (no countermodel with total <= " +
                                          std::to_string(max) + ")"
                                    : "invalid");
    if (check.counterexample) {
        json atoms = json::array();
        for (int v : check.counterexample->atoms) atoms.push_back(v);
        doc["counterexample"] = {{"atoms", atoms},
                                 {"pretty", check.counterexample->to_string()}};
        text += "; counterexample " + check.counterexample->to_string();
    }
    text += "\n";
    emit(out, opts, doc, text);
    return 0;
}

// ---- compat ---------------------------------------------------------------

int cmd_compat(const CompatOptions& copt, const CommonOpts& opts, std::ostream& out) {
    std::vector<CompatReport> reports = reproduce_tables(copt);

    json doc;
    doc["patterns"] = json::array();
    std::ostringstream text;

    static const char* fig1[6] = {"AAA", "EAE", "AII", "EIO", "AAI", "EAO"};
    text << "Figure I moods      ";
    for (const char* m : fig1) text << "  " << m;
    text << "\n";
    for (const auto& r : reports) {
        json pj{{"pattern", pattern_id_name(r.pattern)}, {"entries", json::array()}};
        text << pattern_id_name(r.pattern);
        for (size_t pad = std::string(pattern_id_name(r.pattern)).size(); pad < 20; ++pad)
            text << ' ';
        for (const auto& e : r.entries) {
            json ej{{"mood", e.mood.name()},
                    {"verdict", verdict_name(e.verdict)},
                    {"compatible", e.compatible()}};
            if (e.computed) ej["computed"] = interval_json(*e.computed);
            if (!e.note.empty()) ej["note"] = e.note;
            pj["entries"].push_back(ej);
            if (e.mood.figure == Figure::I)
                text << (e.compatible() ? "  Yes" : "  No ");
        }
        text << "\n";
        doc["patterns"].push_back(pj);
    }

    text << "\nDetails (Figure I):\n";
    for (const auto& r : reports)
        for (const auto& e : r.entries) {
            if (e.mood.figure != Figure::I) continue;
            text << "  " << pattern_id_name(r.pattern) << " " << e.mood.name() << ": "
                 << verdict_name(e.verdict);
            if (e.computed) text << " computed=" << to_string(*e.computed);
            if (!e.note.empty()) text << " -- " << e.note;
            text << "\n";
        }
    text << "Figures II-IV: FigureMismatch for every mood and pattern.\n";
    text << "Structurally excluded (no per-mood check):";
    json excl = json::array();
    for (PatternId p : structurally_excluded_patterns()) {
        excl.push_back(pattern_id_name(p));
        text << " " << pattern_id_name(p);
    }
    doc["structurally_excluded"] = excl;
    text << "\n";

    emit(out, opts, doc, text.str());
    return 0;
}

// ---- eval ------------------------------------------------------------------

int cmd_eval(const std::string& data_path, const std::string& statements_path,
             const std::string& tnorm_name, const CommonOpts& opts, std::ostream& out) {
    std::ifstream in(data_path);
    if (!in) raise(errc::io_error, "cannot open data file: " + data_path);
    json data = json::parse(in, nullptr, false);
    if (data.is_discarded() || !data.contains("universe") || !data.contains("sets"))
        raise(errc::io_error, "data file needs {\"universe\": [...], \"sets\": {...}}");

    std::vector<std::string> universe = data["universe"].get<std::vector<std::string>>();
    std::map<std::string, FuzzySet> sets;
    for (auto it = data["sets"].begin(); it != data["sets"].end(); ++it) {
        std::vector<double> mu = it.value().get<std::vector<double>>();
        if (mu.size() != universe.size())
            raise(errc::io_error, "set '" + it.key() + "' length differs from the universe");
        sets.emplace(it.key(), FuzzySet::make(universe, std::move(mu)));
    }
    auto set_for = [&](const std::string& name) -> const FuzzySet& {
        auto it = sets.find(name);
        if (it == sets.end())
            raise(errc::domain_error, "statement names unknown set '" + name + "'");
        return it->second;
    };

    TNorm tnorm = tnorm_name == "product" ? TNorm::Product : TNorm::Min;
    Lexicon lex = lexicon_or_empty(opts.lexicon_path);

    std::ifstream sf(statements_path);
    if (!sf) raise(errc::io_error, "cannot open statements file: " + statements_path);

    json results = json::array();
    std::string text;
    std::string line;
    int line_no = 0;
    while (std::getline(sf, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Statement s = parse_statement(line, lex);
        double truth = statement_truth(s.quantifier, set_for(s.subject),
                                       set_for(s.predicate), tnorm);
        results.push_back({{"statement", render_statement(s)}, {"truth", truth}});
        text += format_proportion(truth) + "\t" + render_statement(s) + "\n";
    }
    emit(out, opts, json{{"results", results}}, text);
    return 0;
}

// ---- oracle-range ----------------------------------------------------------

int cmd_oracle_range(const std::string& path, int max_override, const CommonOpts& opts,
                     std::ostream& out) {
    std::ifstream in(path);
    if (!in) raise(errc::io_error, "cannot open constraints file: " + path);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.contains("target"))
        raise(errc::io_error, "constraints file needs {\"constraints\": [...], \"target\": {...}}");

    auto bounds_from = [&](const json& j) -> Interval {
        if (j.is_string()) return parse_interval_text(j.get<std::string>());
        if (j.is_array() && j.size() == 2)
            return Interval::closed(j[0].get<double>(), j[1].get<double>());
        raise(errc::io_error, "bounds must be \"[l, u]\" text or a [l, u] array");
    };

    std::vector<ProportionConstraint> cs;
    if (doc.contains("constraints"))
        for (const auto& c : doc["constraints"])
            cs.push_back(ProportionConstraint::from_interval(
                parse_set_expr(c.at("num").get<std::string>()),
                parse_set_expr(c.at("den").get<std::string>()), bounds_from(c.at("bounds"))));

    ProportionTarget target{parse_set_expr(doc["target"].at("num").get<std::string>()),
                            parse_set_expr(doc["target"].at("den").get<std::string>())};
    int max = max_override > 0 ? max_override : doc.value("max", 60);

    RationalRange r = attained_range(cs, target, max);
    json outdoc{{"range", range_json(r)}, {"max", max}};
    std::string text = "[" + r.lower.to_string() + ", " + r.upper.to_string() +
                       "]  (as decimals: " + to_string(r.to_interval()) + ", total <= " +
                       std::to_string(max) + ")\n";
    emit(out, opts, outdoc, text);
    return 0;
}

// ---- lexicon-validate -------------------------------------------------------

int cmd_lexicon_validate(const std::string& path, const CommonOpts& opts, std::ostream& out) {
    Lexicon lex = load_lexicon(path);
    json doc{{"entries", lex.size()}, {"names", lex.names()}};
    std::string text = "ok: " + std::to_string(lex.size()) + " entries\n";
    for (const auto& n : lex.names()) text += "  " + n + "\n";
    emit(out, opts, doc, text);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantified syllogistic reasoning engine", "syllogist"};
    app.require_subcommand(1);

    InferOpts infer;
    auto* sc_infer = app.add_subcommand("infer", "run an inference pattern on a syllogism file");
    sc_infer->add_option("--pattern", infer.pattern,
                         "dubois1|dubois2|dubois3|mc|mpr|intersection|antecedent-and|"
                         "antecedent-or|consequent-and|consequent-or")
        ->required();
    sc_infer->add_option("--version", infer.version, "general|particular (patterns 2/3)");
    sc_infer->add_option("--lexicon", infer.common.lexicon_path)->envname("SYLLOGIST_LEXICON");
    sc_infer->add_option("--format", infer.common.format, "text|json");
    sc_infer->add_option("--max", infer.oracle_max, "oracle universe budget");
    sc_infer->add_option("--step", infer.step, "imprecise sweep grid step");
    sc_infer->add_option("--alpha-levels", infer.alpha_levels);
    double mix_value = -1.0;
    auto* mix_opt = sc_infer->add_option("--mix", mix_value, "antecedent subject mix ratio");
    sc_infer->add_flag("--point", infer.want_point, "request a point antecedent result");
    sc_infer->add_flag("--assume-inclusion", infer.assume_inclusion,
                       "declare the chaining inclusion constraint");
    sc_infer->add_flag("--ascii", infer.common.ascii);
    sc_infer->add_option("file", infer.file, "syllogism file")->required();

    std::string mood_name;
    int mood_max = 8;
    CommonOpts mood_opts;
    auto* sc_mood = app.add_subcommand("check-mood", "validate a mood against all finite models");
    sc_mood->add_option("mood", mood_name, "e.g. AAA-1")->required();
    sc_mood->add_option("--max", mood_max, "universe budget (>= 8 is conclusive)");
    sc_mood->add_option("--format", mood_opts.format);

    CompatOptions copt;
    CommonOpts compat_opts;
    bool tables = false;
    auto* sc_compat = app.add_subcommand("compat", "pattern-vs-mood compatibility tables");
    sc_compat->add_flag("--tables", tables, "print the full tables (default)");
    sc_compat->add_option("--step", copt.sweep_step, "converse sweep grid step");
    sc_compat->add_option("--format", compat_opts.format);

    std::string eval_data, eval_statements, eval_tnorm = "min";
    CommonOpts eval_opts;
    auto* sc_eval = app.add_subcommand("eval", "evaluate statement truth over fuzzy-set data");
    sc_eval->add_option("--data", eval_data, "JSON universe + sets")->required();
    sc_eval->add_option("--lexicon", eval_opts.lexicon_path)->envname("SYLLOGIST_LEXICON");
    sc_eval->add_option("--tnorm", eval_tnorm, "min|product");
    sc_eval->add_option("--format", eval_opts.format);
    sc_eval->add_option("statements", eval_statements, "statements file")->required();

    std::string range_file;
    int range_max = 0;
    CommonOpts range_opts;
    auto* sc_range = app.add_subcommand("oracle-range", "attained proportion range");
    sc_range->add_option("constraints", range_file, "constraints JSON")->required();
    sc_range->add_option("--max", range_max, "universe budget");
    sc_range->add_option("--format", range_opts.format);

    std::string lex_file;
    CommonOpts lex_opts;
    auto* sc_lex = app.add_subcommand("lexicon-validate", "check a quantifier lexicon");
    sc_lex->add_option("lexicon", lex_file)->required();
    sc_lex->add_option("--format", lex_opts.format);

    // CLI11 wants argv-style reversed args after the program name.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*sc_infer) {
            if (mix_opt->count() > 0) infer.mix = mix_value;
            return cmd_infer(infer, out);
        }
        if (*sc_mood) return cmd_check_mood(mood_name, mood_max, mood_opts, out);
        if (*sc_compat) { (void)tables; return cmd_compat(copt, compat_opts, out); }
        if (*sc_eval)
            return cmd_eval(eval_data, eval_statements, eval_tnorm, eval_opts, out);
        if (*sc_range) return cmd_oracle_range(range_file, range_max, range_opts, out);
        if (*sc_lex) return cmd_lexicon_validate(lex_file, lex_opts, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 1;
}

} // namespace syllogist::cli
