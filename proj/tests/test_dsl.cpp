#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "support/gen.hpp"
#include "syllogist/dsl.hpp"
#include "syllogist/errors.hpp"

using namespace syllogist;

namespace {

Lexicon fixture_lexicon() {
    return lexicon_from_json(R"({
        "most": {"trapezoid": [0.7, 0.8, 0.9, 1.0]},
        "almost all": {"trapezoid": [0.85, 0.95, 1.0, 1.0]},
        "around ten": {"kind": "absolute", "trapezoid": [8, 9, 11, 12]},
        "about half": {"trapezoid": [0.4, 0.45, 0.55, 0.6], "symmetric": true}
    })");
}

bool same_quantifier(const QuantifierKind& a, const QuantifierKind& b) {
    if (a.is_fuzzy() != b.is_fuzzy()) return false;
    if (a.is_fuzzy()) return a.as_trapezoid() == b.as_trapezoid();
    return a.as_interval() == b.as_interval();
}

} // namespace

TEST_CASE("statement parsing: intervals, classical words, lexicon names") {
    Statement s1 = parse_statement("[0.85, 0.95] students are young");
    CHECK(s1.quantifier.as_interval() == Interval::closed(0.85, 0.95));
    CHECK(s1.subject == "students");
    CHECK(s1.predicate == "young");

    Statement s2 = parse_statement("all Greeks are mortal");
    CHECK(std::get<ClassicalQ>(s2.quantifier.value).letter == Letter::A);
    CHECK(s2.subject == "Greeks");

    Statement s3 = parse_statement("most students are young", fixture_lexicon());
    CHECK(s3.quantifier.is_fuzzy());
    CHECK(s3.quantifier_name == "most");
    CHECK(s3.quantifier.as_trapezoid() == TrapezoidalQuantifier::make(0.7, 0.8, 0.9, 1.0));

    Statement s4 = parse_statement("not all birds are \"flying animals\"");
    CHECK(std::get<ClassicalQ>(s4.quantifier.value).letter == Letter::O);
    CHECK(s4.predicate == "flying animals");

    Statement s5 = parse_statement("almost all students are single", fixture_lexicon());
    CHECK(s5.quantifier_name == "almost all");

    Statement s6 = parse_statement("(0, 1] students are young");
    CHECK(s6.quantifier.as_interval() == Interval::make(0.0, 1.0, true, false));
}

TEST_CASE("percentage and comparative wordings") {
    CHECK(parse_statement("between 70% and 80% of students are women").quantifier.as_interval() ==
          Interval::closed(0.70, 0.80));
    CHECK(parse_statement("at least 70% of women are young").quantifier.as_interval() ==
          Interval::closed(0.70, 1.0));
    CHECK(parse_statement("more than 35% of women are students").quantifier.as_interval() ==
          Interval::make(0.35, 1.0, true, false));
    CHECK(parse_statement("less than 5% of people are young").quantifier.as_interval() ==
          Interval::make(0.0, 0.05, false, true));
    CHECK(parse_statement("at most 40% of people are young").quantifier.as_interval() ==
          Interval::closed(0.0, 0.40));
    Statement precise = parse_statement("10% of animals are mammals");
    CHECK(precise.quantifier.as_interval() == Interval::point(0.10));
}

TEST_CASE("parse errors carry their kind") {
    auto code_of = [](const char* text) {
        try {
            parse_statement(text, fixture_lexicon());
            return errc::domain_error;  // not expected
        } catch (const Error& e) {
            return e.code();
        }
    };
    CHECK(code_of("zorblax students are young") == errc::unknown_quantifier);
    CHECK(code_of("[0.9, 0.2] students are young") == errc::malformed_interval);
    CHECK(code_of("[0.2, 1.5] students are young") == errc::malformed_interval);
    CHECK(code_of("all students students are young") == errc::syntax_error);
    CHECK(code_of("all students are students") == errc::syntax_error);
    CHECK(code_of("all students are") == errc::syntax_error);
    CHECK(code_of("") == errc::syntax_error);
    CHECK(code_of("between 30% and 20% of students are young") == errc::malformed_interval);
}

TEST_CASE("rendering round-trips canonical forms") {
    Lexicon lex = fixture_lexicon();
    Statement s = parse_statement("[0.51, 1] students are single");
    CHECK(render_statement(s) == "[0.51, 1] students are single");

    Statement at_least = parse_statement(">= most students are young", lex);
    CHECK(at_least.at_least);
    CHECK(render_statement(at_least) == "\xE2\x89\xA5 most students are young");
    CHECK(render_statement(at_least, {.ascii = true}) == ">= most students are young");
    // UTF-8 sign parses too
    Statement again = parse_statement(render_statement(at_least), lex);
    CHECK(again.at_least);

    Statement quoted = parse_statement("[0, 0.1] \"people who have children\" are single");
    CHECK(render_statement(quoted) == "[0, 0.1] \"people who have children\" are single");
}

TEST_CASE("syllogism files: comments, separator, pattern hint") {
    const char* text =
        "# four premises\n"
        "pattern: dubois1\n"
        "[0.85, 0.95] students are young   # inline note\n"
        "[0.25, 0.35] young are students\n"
        "[0.90, 1] young are single\n"
        "[0.60, 0.80] single are young\n"
        "---\n"
        "[0.51, 1] students are single\n";
    SyllogismFile f = parse_syllogism_text(text);
    CHECK(f.pattern_hint == "dubois1");
    CHECK(f.premises.size() == 4);
    REQUIRE(f.expected_conclusion.has_value());
    CHECK(f.expected_conclusion->subject == "students");

    CHECK_THROWS_AS(parse_syllogism_text("# nothing here\n"), Error);
    try {
        parse_syllogism_text("all birds are animals\nbroken ] line\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("lexicon loading and validation") {
    Lexicon lex = fixture_lexicon();
    CHECK(lex.size() == 4);
    CHECK(lex.find("most").has_value());
    CHECK(lex.find("MOST").has_value());
    CHECK(lex.find("about half")->symmetric);
    CHECK(lex.find("around ten")->absolute);
    CHECK_FALSE(lex.find("few").has_value());

    CHECK_THROWS_AS(lexicon_from_json("[1,2]"), Error);
    CHECK_THROWS_AS(lexicon_from_json(R"({"bad": {"trapezoid": [0.9, 0.8, 1, 1]}})"), Error);
    CHECK_THROWS_AS(lexicon_from_json(R"({"bad": {"trapezoid": [0.1, 0.2, 0.3, 1.5]}})"), Error);
    CHECK_THROWS_AS(lexicon_from_json(R"({"bad": {"interval": [0.5]}})"), Error);
    CHECK_THROWS_AS(lexicon_from_json(R"({"bad": {}})"), Error);

    // a lexicon entry may shadow a built-in word
    Lexicon shadow = lexicon_from_json(R"({"all": {"interval": [0.95, 1.0]}})");
    Statement s = parse_statement("all students are young", shadow);
    CHECK(s.quantifier.as_interval() == Interval::closed(0.95, 1.0));
}

TEST_CASE("round-trip property over random statements") {
    Lexicon lex = fixture_lexicon();
    gen::Rng rng(1337);
    for (int i = 0; i < 300; ++i) {
        Statement s = gen::statement(rng, lex);
        RenderOptions opt{rng() % 2 == 0};
        std::string text = render_statement(s, opt);
        Statement back = parse_statement(text, lex);
        CHECK(same_quantifier(s.quantifier, back.quantifier));
        CHECK(s.subject == back.subject);
        CHECK(s.predicate == back.predicate);
        CHECK(s.at_least == back.at_least);
        // canonical: rendering the reparse is a fixed point
        CHECK(render_statement(back, opt) == text);
    }
}

TEST_CASE("parser survives arbitrary bytes and token soup") {
    Lexicon lex = fixture_lexicon();
    gen::Rng rng(0xFEED);
    int parsed = 0;
    for (int i = 0; i < 2000; ++i) {
        std::string junk = i % 2 == 0 ? gen::random_bytes(rng) : gen::random_statement_soup(rng);
        try {
            parse_statement(junk, lex);
            ++parsed;
        } catch (const Error&) {
            // structured failure is the contract
        }
    }
    CHECK(parsed >= 0);
}
