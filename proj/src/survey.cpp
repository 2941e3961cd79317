#include "wordgap/survey.hpp"

#include "wordgap/errors.hpp"
#include "wordgap/solvable.hpp"

#include <cstdio>

namespace wordgap {
namespace {

std::string render_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string action_label(const FiniteGroup& G, const Word& w, bool solvable, bool identity) {
    if (identity) return "identity";
    if (!solvable) return "-";
    if (!(w == Word::parse("engel2")) && !(w == Word::parse("metab"))) return "-";
    VerbalContext ctx = reduce_to_minimal_verbal(G, w);
    if (w == Word::parse("metab")) {
        // The split the analysis cares about is the action of G' on V.
        const Subgroup C = centralizer(ctx.group, ctx.verbal);
        return subgroup_leq(derived_subgroup(ctx.group), C) ? "trivial-action"
                                                            : "nontrivial-action";
    }
    return ctx.trivial_action ? "trivial-action" : "nontrivial-action";
}

}  // namespace

std::vector<SurveyRow> survey(const std::vector<CorpusEntry>& entries, const Word& w,
                              const std::string& word_name, const SurveyOptions& opts,
                              std::vector<std::string>* errors) {
    std::vector<SurveyRow> rows;
    for (const CorpusEntry& e : entries) {
        if (e.group.order() > opts.max_order) continue;
        try {
            SurveyRow row;
            row.group = e.group.name();
            row.order = e.group.order();
            row.word = word_name;
            ExactProbability p = word_probability(e.group, w, 0, opts.enum_opts);
            row.hits = p.hits;
            row.total = p.total;
            auto [num, den] = p.reduced();
            row.red_num = num;
            row.red_den = den;
            row.value = p.to_double();
            row.is_identity = p.hits == p.total;
            const bool solvable = is_solvable(e.group);
            row.solvable_label = solvable ? "solvable" : "nonsolvable";
            row.action_label = action_label(e.group, w, solvable, row.is_identity);
            rows.push_back(std::move(row));
        } catch (const std::exception& ex) {
            if (errors) errors->push_back(e.file + ": " + ex.what());
        }
    }
    return rows;
}

SurveySummary summarize(const std::vector<SurveyRow>& rows) {
    SurveySummary s;
    for (const SurveyRow& row : rows) {
        if (row.is_identity) continue;
        if (!s.any_non_identity || row.hits * s.max_den > s.max_num * row.total) {
            s.any_non_identity = true;
            s.max_num = row.hits;
            s.max_den = row.total;
            s.argmax_group = row.group;
        }
    }
    return s;
}

std::string to_csv(const std::vector<SurveyRow>& rows) {
    std::string out =
        "group,order,word,hits,total,reduced_num,reduced_den,float,is_identity,solvable,action\n";
    for (const SurveyRow& r : rows) {
        out += r.group + ',' + std::to_string(r.order) + ',' + r.word + ',' + r.hits.str() + ',' +
               r.total.str() + ',' + r.red_num.str() + ',' + r.red_den.str() + ',' +
               render_double(r.value) + ',' + (r.is_identity ? "1" : "0") + ',' +
               r.solvable_label + ',' + r.action_label + '\n';
    }
    return out;
}

}  // namespace wordgap
