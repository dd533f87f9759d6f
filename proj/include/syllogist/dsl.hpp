#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syllogist/quantifier.hpp"

namespace syllogist {

/// Named quantifiers available to the parser.  Names are matched
/// case-insensitively and may span several words ("almost all"); the longest
/// phrase wins, and lexicon entries shadow the built-in classical words.
class Lexicon {
public:
    void add(const std::string& name, const QuantifierKind& q);
    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }
    std::vector<std::string> names() const;
    std::optional<QuantifierKind> find(const std::string& normalized_name) const;

    /// Longest match of entry phrases against `words[from..]`; returns the
    /// number of words consumed (0 = no match).
    size_t match(const std::vector<std::string>& words, size_t from,
                 QuantifierKind& out, std::string& name_out) const;

private:
    std::map<std::string, QuantifierKind> entries_;
    size_t max_words_ = 0;
};

Lexicon lexicon_from_json(const std::string& json_text);
Lexicon load_lexicon(const std::string& path);

/// "(0.35, 1]", "[0.25, 0.35]" -> Interval (proportions only).
Interval parse_interval_text(const std::string& text);

Statement parse_statement(const std::string& text, const Lexicon& lexicon = {});

struct RenderOptions {
    bool ascii = false;  // ">=" instead of the UTF-8 sign
};
std::string render_statement(const Statement& s, const RenderOptions& opt = {});

/// Just the quantifier part of a statement (lexicon name when known).
std::string render_quantifier_text(const Statement& s);

struct SyllogismFile {
    std::string pattern_hint;   // empty when absent
    std::string version_hint;   // "general" / "particular" / empty
    std::vector<Statement> premises;
    std::optional<Statement> expected_conclusion;
};

SyllogismFile parse_syllogism_text(const std::string& text, const Lexicon& lexicon = {});
SyllogismFile parse_file(const std::string& path, const Lexicon& lexicon = {});

} // namespace syllogist
