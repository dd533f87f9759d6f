#include "syllogist/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "syllogist/errors.hpp"

namespace syllogist {

namespace {

std::string to_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string normalize_phrase(const std::string& s) {
    std::istringstream in(s);
    std::string word, out;
    while (in >> word) {
        if (!out.empty()) out += ' ';
        out += to_lower(word);
    }
    return out;
}

// ---- tokenizer ----------------------------------------------------------

struct Token {
    enum Kind { Word, Number, Quoted, LBracket, LParen, RBracket, RParen, Comma,
                Percent, AtLeastSign } kind;
    std::string text;   // original spelling (quotes stripped for Quoted)
    double number = 0;  // for Number
    size_t pos = 0;
};

bool is_word_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'' || c == '-' ||
           c >= 0x80;  // keep non-ASCII bytes inside words
}

std::vector<Token> scan(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) { ++i; continue; }
        size_t start = i;
        switch (c) {
        case '[': out.push_back({Token::LBracket, "[", 0, i++}); continue;
        case ']': out.push_back({Token::RBracket, "]", 0, i++}); continue;
        case '(': out.push_back({Token::LParen, "(", 0, i++}); continue;
        case ')': out.push_back({Token::RParen, ")", 0, i++}); continue;
        case ',': out.push_back({Token::Comma, ",", 0, i++}); continue;
        case '%': out.push_back({Token::Percent, "%", 0, i++}); continue;
        case '"': {
            size_t end = text.find('"', i + 1);
            if (end == std::string::npos)
                raise(errc::syntax_error, "unterminated quote at position " + std::to_string(i));
            out.push_back({Token::Quoted, text.substr(i + 1, end - i - 1), 0, i});
            i = end + 1;
            continue;
        }
        default: break;
        }
        if (c == '>' && i + 1 < n && text[i + 1] == '=') {
            out.push_back({Token::AtLeastSign, ">=", 0, i});
            i += 2;
            continue;
        }
        if (text.compare(i, 3, "\xE2\x89\xA5") == 0) {  // the >= sign
            out.push_back({Token::AtLeastSign, ">=", 0, i});
            i += 3;
            continue;
        }
        if (std::isdigit(c) || (c == '.' && i + 1 < n &&
                                std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            size_t j = i;
            while (j < n && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.'))
                ++j;
            std::string num = text.substr(i, j - i);
            double v = 0;
            auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
            if (ec != std::errc{} || p != num.data() + num.size())
                raise(errc::syntax_error,
                      "bad number '" + num + "' at position " + std::to_string(i));
            out.push_back({Token::Number, num, v, i});
            i = j;
            continue;
        }
        if (is_word_char(c)) {
            size_t j = i;
            while (j < n && is_word_char(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Word, text.substr(i, j - i), 0, i});
            i = j;
            continue;
        }
        raise(errc::syntax_error,
              "unexpected character '" + std::string(1, text[i]) + "' at position " +
                  std::to_string(start));
    }
    return out;
}

// ---- parser -------------------------------------------------------------

struct Parser {
    std::vector<Token> toks;
    size_t at = 0;
    const Lexicon& lexicon;

    const Token* peek(size_t ahead = 0) const {
        return at + ahead < toks.size() ? &toks[at + ahead] : nullptr;
    }
    const Token& need(const char* what) {
        if (at >= toks.size())
            raise(errc::syntax_error, std::string("expected ") + what + " at end of statement");
        return toks[at];
    }
    bool word_is(size_t ahead, const char* w) const {
        const Token* t = peek(ahead);
        return t && t->kind == Token::Word && to_lower(t->text) == w;
    }

    double proportion_value(const char* slot) {
        const Token& t = need("a number");
        if (t.kind != Token::Number)
            raise(errc::syntax_error, std::string("expected a number for ") + slot +
                                          " at position " + std::to_string(t.pos));
        ++at;
        double v = t.number;
        if (peek() && peek()->kind == Token::Percent) {
            ++at;
            v /= 100.0;
        }
        if (!(v >= 0.0 && v <= 1.0))
            raise(errc::malformed_interval,
                  std::string(slot) + " must be a proportion in [0,1] (got " + t.text + ")");
        return v;
    }

    void eat_optional_of() {
        if (word_is(0, "of")) ++at;
    }

    Interval bracket_interval() {
        bool lo_open = need("'[' or '('").kind == Token::LParen;
        ++at;
        double lo = proportion_value("interval lower bound");
        if (need("','").kind != Token::Comma)
            raise(errc::syntax_error, "expected ',' in interval");
        ++at;
        double hi = proportion_value("interval upper bound");
        const Token& close = need("']' or ')'");
        if (close.kind != Token::RBracket && close.kind != Token::RParen)
            raise(errc::syntax_error, "expected ']' or ')' to close interval");
        bool hi_open = close.kind == Token::RParen;
        ++at;
        if (lo > hi)
            raise(errc::malformed_interval, "interval lower bound exceeds upper bound");
        if (lo == hi && (lo_open || hi_open))
            raise(errc::malformed_interval, "open endpoints on a point interval");
        return Interval::make(lo, hi, lo_open, hi_open);
    }

    // percentage and comparative wordings
    std::optional<QuantifierKind> percent_quantifier() {
        if (word_is(0, "between")) {
            ++at;
            double lo = proportion_value("lower percentage");
            if (!word_is(0, "and"))
                raise(errc::syntax_error, "expected 'and' in 'between ... and ...'");
            ++at;
            double hi = proportion_value("upper percentage");
            eat_optional_of();
            if (lo > hi)
                raise(errc::malformed_interval, "'between' bounds out of order");
            return QuantifierKind::imprecise(Interval::closed(lo, hi));
        }
        if (word_is(0, "at") && word_is(1, "least")) {
            at += 2;
            double v = proportion_value("percentage");
            eat_optional_of();
            return QuantifierKind::imprecise(Interval::closed(v, 1.0));
        }
        if (word_is(0, "at") && word_is(1, "most")) {
            at += 2;
            double v = proportion_value("percentage");
            eat_optional_of();
            return QuantifierKind::imprecise(Interval::closed(0.0, v));
        }
        if (word_is(0, "more") && word_is(1, "than")) {
            at += 2;
            double v = proportion_value("percentage");
            eat_optional_of();
            if (v >= 1.0)
                raise(errc::malformed_interval, "'more than 100%' is empty");
            return QuantifierKind::imprecise(Interval::make(v, 1.0, true, false));
        }
        if (word_is(0, "less") && word_is(1, "than")) {
            at += 2;
            double v = proportion_value("percentage");
            eat_optional_of();
            if (v <= 0.0)
                raise(errc::malformed_interval, "'less than 0%' is empty");
            return QuantifierKind::imprecise(Interval::make(0.0, v, false, true));
        }
        if (peek() && peek()->kind == Token::Number) {
            double v = proportion_value("proportion");
            eat_optional_of();
            return QuantifierKind::precise(v);
        }
        return std::nullopt;
    }

    std::pair<QuantifierKind, std::string> quantifier() {
        const Token& first = need("a quantifier");
        if (first.kind == Token::LBracket || first.kind == Token::LParen)
            return {QuantifierKind::imprecise(bracket_interval()), ""};
        if (auto q = percent_quantifier())
            return {*q, ""};

        // unified longest-phrase match: lexicon entries shadow built-ins
        std::vector<std::string> words;
        for (size_t k = at; k < toks.size() && toks[k].kind == Token::Word && words.size() < 5; ++k)
            words.push_back(to_lower(toks[k].text));
        if (!words.empty()) {
            QuantifierKind q;
            std::string name;
            size_t used = lexicon.match(words, 0, q, name);
            static const std::vector<std::pair<std::vector<std::string>, Letter>> builtins = {
                {{"not", "all"}, Letter::O},
                {{"all"}, Letter::A},
                {{"no"}, Letter::E},
                {{"none"}, Letter::E},
                {{"some"}, Letter::I},
            };
            for (const auto& [phrase, letter] : builtins) {
                if (phrase.size() <= used) continue;  // longest match wins
                if (phrase.size() > words.size()) continue;
                if (std::equal(phrase.begin(), phrase.end(), words.begin())) {
                    q = QuantifierKind::classical(letter);
                    name = "";
                    used = phrase.size();
                }
            }
            if (used > 0) {
                at += used;
                return {q, name};
            }
        }
        raise(errc::unknown_quantifier,
              "no quantifier reading for '" + first.text + "' at position " +
                  std::to_string(first.pos));
    }

    std::string term() {
        const Token& t = need("a term");
        if (t.kind == Token::Quoted) {
            ++at;
            if (t.text.empty())
                raise(errc::syntax_error, "empty quoted term");
            return t.text;
        }
        if (t.kind == Token::Word) {
            if (to_lower(t.text) == "are")
                raise(errc::syntax_error, "missing term before 'are'");
            ++at;
            return t.text;
        }
        raise(errc::syntax_error,
              "expected a term at position " + std::to_string(t.pos));
    }

    Statement statement() {
        Statement s;
        if (peek() && peek()->kind == Token::AtLeastSign) {
            s.at_least = true;
            ++at;
        }
        auto [q, name] = quantifier();
        s.quantifier = q;
        s.quantifier_name = name;
        s.subject = term();
        if (!word_is(0, "are"))
            raise(errc::syntax_error, "expected 'are' after the subject term");
        ++at;
        s.predicate = term();
        if (at != toks.size())
            raise(errc::syntax_error, "trailing tokens after statement (position " +
                                          std::to_string(toks[at].pos) + ")");
        if (s.subject == s.predicate)
            raise(errc::syntax_error, "subject and predicate must differ");
        return s;
    }
};

} // namespace

// ---- lexicon ------------------------------------------------------------

void Lexicon::add(const std::string& name, const QuantifierKind& q) {
    std::string key = normalize_phrase(name);
    if (key.empty())
        raise(errc::bad_lexicon, "empty quantifier name");
    entries_[key] = q;
    size_t words = static_cast<size_t>(std::count(key.begin(), key.end(), ' ')) + 1;
    max_words_ = std::max(max_words_, words);
}

std::vector<std::string> Lexicon::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

std::optional<QuantifierKind> Lexicon::find(const std::string& name) const {
    auto it = entries_.find(normalize_phrase(name));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

size_t Lexicon::match(const std::vector<std::string>& words, size_t from,
                      QuantifierKind& out, std::string& name_out) const {
    size_t limit = std::min(max_words_, words.size() - from);
    for (size_t len = limit; len >= 1; --len) {
        std::string phrase;
        for (size_t k = 0; k < len; ++k) {
            if (k) phrase += ' ';
            phrase += words[from + k];
        }
        auto it = entries_.find(phrase);
        if (it != entries_.end()) {
            out = it->second;
            name_out = phrase;
            return len;
        }
    }
    return 0;
}

Lexicon lexicon_from_json(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        raise(errc::bad_lexicon, "lexicon must be a JSON object of quantifier entries");

    Lexicon lex;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& name = it.key();
        const nlohmann::json& e = it.value();
        if (!e.is_object())
            raise(errc::bad_lexicon, "entry '" + name + "' must be an object");

        bool absolute = e.value("kind", std::string("proportional")) == "absolute";
        QuantifierKind q;
        if (e.contains("trapezoid")) {
            auto arr = e["trapezoid"];
            if (!arr.is_array() || arr.size() != 4)
                raise(errc::bad_lexicon, "entry '" + name + "': trapezoid needs 4 numbers");
            double a = arr[0], b = arr[1], c = arr[2], d = arr[3];
            if (!(a <= b && b <= c && c <= d))
                raise(errc::bad_lexicon, "entry '" + name + "': trapezoid points out of order");
            if (!absolute && (a < 0.0 || d > 1.0))
                raise(errc::bad_lexicon,
                      "entry '" + name + "': proportional trapezoid must stay in [0,1]");
            if (absolute && a < 0.0)
                raise(errc::bad_lexicon, "entry '" + name + "': negative count");
            q = QuantifierKind::fuzzy(TrapezoidalQuantifier::make(a, b, c, d));
        } else if (e.contains("interval")) {
            auto arr = e["interval"];
            if (!arr.is_array() || arr.size() != 2)
                raise(errc::bad_lexicon, "entry '" + name + "': interval needs 2 numbers");
            double lo = arr[0], hi = arr[1];
            bool lo_open = false, hi_open = false;
            if (e.contains("open")) {
                auto op = e["open"];
                if (!op.is_array() || op.size() != 2)
                    raise(errc::bad_lexicon, "entry '" + name + "': open needs 2 booleans");
                lo_open = op[0];
                hi_open = op[1];
            }
            if (!(lo <= hi) || (!absolute && (lo < 0.0 || hi > 1.0)))
                raise(errc::bad_lexicon, "entry '" + name + "': bad interval bounds");
            q = QuantifierKind::imprecise(Interval::make(lo, hi, lo_open, hi_open));
        } else if (e.contains("classical")) {
            std::string letter = e["classical"];
            if (letter.size() != 1)
                raise(errc::bad_lexicon, "entry '" + name + "': classical needs one letter");
            q = QuantifierKind::classical(letter_from_char(letter[0]));
        } else {
            raise(errc::bad_lexicon,
                  "entry '" + name + "' needs trapezoid, interval or classical");
        }
        q.absolute = absolute;
        if (e.value("symmetric", false)) q.symmetric = true;
        lex.add(name, q);
    }
    return lex;
}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(errc::io_error, "cannot open lexicon file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return lexicon_from_json(buf.str());
}

// ---- entry points -------------------------------------------------------

Interval parse_interval_text(const std::string& text) {
    Parser p{scan(text), 0, {}};
    Interval iv = p.bracket_interval();
    if (p.at != p.toks.size())
        raise(errc::syntax_error, "trailing characters after interval");
    return iv;
}

Statement parse_statement(const std::string& text, const Lexicon& lexicon) {
    Parser p{scan(text), 0, lexicon};
    if (p.toks.empty())
        raise(errc::syntax_error, "empty statement");
    return p.statement();
}

namespace {

bool needs_quotes(const std::string& term) {
    if (term.empty()) return true;
    for (unsigned char c : term)
        if (!is_word_char(c)) return true;
    return false;
}

std::string render_term(const std::string& term) {
    if (needs_quotes(term)) return "\"" + term + "\"";
    return term;
}

std::string render_quantifier(const Statement& s) {
    if (!s.quantifier_name.empty()) return s.quantifier_name;
    if (const auto* c = std::get_if<ClassicalQ>(&s.quantifier.value)) {
        switch (c->letter) {
        case Letter::A: return "all";
        case Letter::E: return "no";
        case Letter::I: return "some";
        case Letter::O: return "not all";
        }
    }
    if (const auto* p = std::get_if<PreciseQ>(&s.quantifier.value))
        return to_string(Interval::point(p->value));
    if (const auto* i = std::get_if<ImpreciseQ>(&s.quantifier.value))
        return to_string(i->interval);
    const auto& t = std::get<FuzzyQ>(s.quantifier.value).trapezoid;
    return "{" + format_proportion(t.support_low) + ", " + format_proportion(t.kernel_low) +
           ", " + format_proportion(t.kernel_high) + ", " + format_proportion(t.support_high) +
           "}";
}

} // namespace

std::string render_quantifier_text(const Statement& s) {
    return render_quantifier(s);
}

std::string render_statement(const Statement& s, const RenderOptions& opt) {
    std::string out;
    if (s.at_least) out += opt.ascii ? ">= " : "\xE2\x89\xA5 ";
    out += render_quantifier(s);
    out += ' ';
    out += render_term(s.subject);
    out += " are ";
    out += render_term(s.predicate);
    return out;
}

SyllogismFile parse_syllogism_text(const std::string& text, const Lexicon& lexicon) {
    SyllogismFile file;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool in_conclusion = false;
    bool any_content = false;

    while (std::getline(in, line)) {
        ++line_no;
        // strip comments ('#' outside quotes)
        bool quoted = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            else if (line[i] == '#' && !quoted) { line.erase(i); break; }
        }
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        std::string body = line.substr(a, b - a + 1);

        if (body.rfind("---", 0) == 0) {
            in_conclusion = true;
            continue;
        }
        if (body.rfind("pattern:", 0) == 0) {
            std::istringstream hint(body.substr(8));
            hint >> file.pattern_hint >> file.version_hint;
            any_content = true;
            continue;
        }
        try {
            Statement s = parse_statement(body, lexicon);
            if (in_conclusion) {
                if (file.expected_conclusion)
                    raise(errc::syntax_error, "more than one expected conclusion");
                file.expected_conclusion = s;
            } else {
                file.premises.push_back(s);
            }
            any_content = true;
        } catch (const Error& e) {
            if (e.code() == errc::syntax_error || e.code() == errc::unknown_quantifier ||
                e.code() == errc::malformed_interval)
                raise(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
            throw;
        }
    }
    if (!any_content || file.premises.empty())
        raise(errc::syntax_error, "no statements in syllogism input");
    return file;
}

SyllogismFile parse_file(const std::string& path, const Lexicon& lexicon) {
    std::ifstream in(path);
    if (!in)
        raise(errc::io_error, "cannot open syllogism file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_syllogism_text(buf.str(), lexicon);
}

} // namespace syllogist
