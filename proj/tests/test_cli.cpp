#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "syllogist/cli.hpp"

using nlohmann::json;

namespace {

std::string data_dir() {
    const char* env = std::getenv("SYLLOGIST_DATA");
    return env ? env : "../data";
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = syllogist::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("infer dubois1 reproduces the students/single conclusion") {
    RunResult r = run({"infer", "--pattern", "dubois1", data_dir() + "/table5.syl"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("[0.51, 1] students are single") != std::string::npos);

    RunResult j = run({"infer", "--pattern", "dubois1", "--format", "json",
                       data_dir() + "/table5.syl"});
    REQUIRE(j.code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["conclusion"]["interval"]["lower"].get<double>() == doctest::Approx(0.51));
    CHECK(doc["conclusion"]["interval"]["upper"].get<double>() == doctest::Approx(1.0));
    CHECK(doc["conclusion"]["text"] == "[0.51, 1] students are single");
    CHECK(doc["expected"] == "[0.51, 1] students are single");
}

TEST_CASE("infer dubois3 reproduces the children/young/single conclusion") {
    RunResult j = run({"infer", "--pattern", "dubois3", "--version", "particular",
                       "--max", "40", "--format", "json", data_dir() + "/table4.syl"});
    REQUIRE(j.code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["conclusion"]["exact"]["lower"] == "0");
    CHECK(doc["conclusion"]["exact"]["upper"] == "1/10");
    CHECK(doc["conclusion"]["text"].get<std::string>().find("[0, 0.1]") == 0);
}

TEST_CASE("infer mc needs the inclusion declaration") {
    std::string lex = data_dir() + "/lexicon.json";
    RunResult refused = run({"infer", "--pattern", "mc", "--lexicon", lex,
                             data_dir() + "/table12.syl"});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("ConstraintViolated") != std::string::npos);

    RunResult ok = run({"infer", "--pattern", "mc", "--lexicon", lex, "--assume-inclusion",
                        "--ascii", data_dir() + "/table12.syl"});
    REQUIRE(ok.code == 0);
    CHECK(ok.out.find(">= most\xE2\x8A\x97most \"American cars\" are expensive") !=
          std::string::npos);
}

TEST_CASE("infer mpr renders the shifted-sum bound") {
    std::string lex = data_dir() + "/lexicon.json";
    RunResult ok = run({"infer", "--pattern", "mpr", "--lexicon", lex, "--format", "json",
                        data_dir() + "/table13.syl"});
    REQUIRE(ok.code == 0);
    json doc = json::parse(ok.out);
    std::string text = doc["conclusion"]["text"];
    CHECK(text.find("0 \xE2\x88\xA8 (2 most \xE2\x8A\x96 1)") != std::string::npos);
    CHECK(text.find("\"American cars\" are expensive") != std::string::npos);
    CHECK(doc["conclusion"]["support"][0].get<double>() == doctest::Approx(0.4));
    CHECK(doc["conclusion"]["kernel"][1].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("infer dubois2 particular runs the students/women/young example") {
    RunResult j = run({"infer", "--pattern", "dubois2", "--version", "particular",
                       "--max", "30", "--format", "json", data_dir() + "/pattern2p.syl"});
    REQUIRE(j.code == 0);
    json doc = json::parse(j.out);
    double lo = doc["conclusion"]["interval"]["lower"].get<double>();
    double hi = doc["conclusion"]["interval"]["upper"].get<double>();
    CHECK(lo >= 0.0);
    CHECK(lo <= hi);
    CHECK(hi <= 1.0);
    CHECK(doc["conclusion"]["text"].get<std::string>().find("\"students and women\" are young") !=
          std::string::npos);
}

TEST_CASE("check-mood verdicts and counterexamples") {
    RunResult valid = run({"check-mood", "AAA-1", "--max", "8"});
    CHECK(valid.code == 0);
    CHECK(valid.out.find("valid") != std::string::npos);

    RunResult eao3 = run({"check-mood", "EAO-3"});
    CHECK(eao3.out.find("valid") != std::string::npos);

    RunResult invalid = run({"check-mood", "IEO-1", "--format", "json"});
    CHECK(invalid.code == 0);
    json doc = json::parse(invalid.out);
    CHECK_FALSE(doc["valid"].get<bool>());
    CHECK(doc.contains("counterexample"));

    RunResult bad = run({"check-mood", "ZZZ-9"});
    CHECK(bad.code == 1);
}

TEST_CASE("compat tables agree between text and json") {
    RunResult text = run({"compat", "--tables"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("dubois1") != std::string::npos);
    CHECK(text.out.find("Yes  Yes  Yes  Yes  Yes  Yes") != std::string::npos);

    RunResult j = run({"compat", "--format", "json"});
    REQUIRE(j.code == 0);
    json doc = json::parse(j.out);
    REQUIRE(doc["patterns"].size() == 3);
    int yes = 0;
    for (const auto& e : doc["patterns"][0]["entries"])
        if (e["compatible"].get<bool>()) ++yes;
    CHECK(yes == 6);  // the first-figure moods
    // mpr row: only AII-1
    int mpr_yes = 0;
    std::string mpr_yes_mood;
    for (const auto& e : doc["patterns"][2]["entries"])
        if (e["compatible"].get<bool>()) {
            ++mpr_yes;
            mpr_yes_mood = e["mood"];
        }
    CHECK(mpr_yes == 1);
    CHECK(mpr_yes_mood == "AII-1");
}

TEST_CASE("eval prints truth degrees") {
    RunResult r = run({"eval", "--data", data_dir() + "/sets.json", "--lexicon",
                       data_dir() + "/lexicon.json", "--format", "json",
                       data_dir() + "/statements.txt"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["results"].size() == 4);
    // proportion young within students = 2.5/4 = 0.625: below most's support
    CHECK(doc["results"][0]["truth"].get<double>() == doctest::Approx(0.0));
    // some students are young: true
    CHECK(doc["results"][1]["truth"].get<double>() == doctest::Approx(1.0));
    // all students are young: false
    CHECK(doc["results"][2]["truth"].get<double>() == doctest::Approx(0.0));
    // [0.5, 0.7] students are single: proportion 2.6/4 = 0.65 inside
    CHECK(doc["results"][3]["truth"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("oracle-range reads constraint files") {
    RunResult r = run({"oracle-range", data_dir() + "/range_example.json", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["range"]["lower"] == "0");
    CHECK(doc["range"]["upper"] == "1/10");
    CHECK(doc["max"] == 60);
}

TEST_CASE("lexicon validation") {
    RunResult ok = run({"lexicon-validate", data_dir() + "/lexicon.json"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("5 entries") != std::string::npos);

    RunResult missing = run({"lexicon-validate", data_dir() + "/no_such.json"});
    CHECK(missing.code == 1);
}

TEST_CASE("exit codes distinguish usage from semantic failures") {
    RunResult no_file = run({"infer", "--pattern", "dubois1", data_dir() + "/absent.syl"});
    CHECK(no_file.code == 1);

    RunResult bad_pattern = run({"infer", "--pattern", "nonsense", data_dir() + "/table5.syl"});
    CHECK(bad_pattern.code == 1);

    RunResult wrong_arity =
        run({"infer", "--pattern", "dubois1", data_dir() + "/table12.syl"});
    CHECK(wrong_arity.code == 1);

    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("infer") != std::string::npos);
}
