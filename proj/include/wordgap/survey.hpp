#pragma once

#include "wordgap/corpus.hpp"
#include "wordgap/prob.hpp"
#include "wordgap/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wordgap {

struct SurveyRow {
    std::string group;
    int order = 0;
    std::string word;
    BigInt hits = 0, total = 1;
    BigInt red_num = 0, red_den = 1;
    double value = 0.0;
    bool is_identity = false;
    std::string solvable_label;  // solvable | nonsolvable
    std::string action_label;    // identity | trivial-action | nontrivial-action | -
};

struct SurveySummary {
    bool any_non_identity = false;
    BigInt max_num = 0, max_den = 1;  // max probability over non-identity rows
    std::string argmax_group;
};

struct SurveyOptions {
    EnumOptions enum_opts;
    int max_order = 100;
};

// One row per group with order <= max_order; per-group failures are isolated
// into `errors` ("file: message") and do not abort the survey.
std::vector<SurveyRow> survey(const std::vector<CorpusEntry>& entries, const Word& w,
                              const std::string& word_name, const SurveyOptions& opts,
                              std::vector<std::string>* errors = nullptr);

SurveySummary summarize(const std::vector<SurveyRow>& rows);

// Byte-stable CSV: fixed column order, '\n' line ends, rationals as
// numerator/denominator columns, floats with %.17g.
std::string to_csv(const std::vector<SurveyRow>& rows);

}  // namespace wordgap
