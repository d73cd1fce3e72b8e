/**
 * Tests for corpus ingestion, graph records and report serialization.
 */

#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "gorenstein/survey.hpp"
#include "corpus.hpp"

using namespace gorenstein;

namespace {

Corpus corpus_of(const std::string& text)
{
    std::istringstream in(text);
    return read_corpus(in);
}

std::string graph6_of(const Graph& g) { return to_graph6(g); }

}   // namespace

TEST_CASE("classify C5", "[survey]")
{
    auto r = classify(generate(Family::Cycle, 5), 3, {FieldSpec::rationals()});
    REQUIRE(r.index == 3);
    REQUIRE(r.graph6 == "Dhc");
    REQUIRE(r.n == 5);
    REQUIRE(r.edge_count == 5);
    REQUIRE(r.girth.length() == 5);
    REQUIRE(r.connected);
    REQUIRE(r.no_isolated);
    REQUIRE(r.alpha == 2);
    REQUIRE(r.well_covered);
    REQUIRE(r.w2);
    REQUIRE(r.alpha_critical);
    REQUIRE(r.euler_char == -1);
    REQUIRE(r.gorenstein.at("q"));
    REQUIRE(r.second_power_cm.at("q"));
    REQUIRE(r.in_hypothesis);
    REQUIRE(r.consistent);
    REQUIRE_FALSE(r.field_disagreement());
}

TEST_CASE("survey of single graphs", "[survey]")
{
    SurveyOptions opts;
    auto c5 = survey(corpus_of(graph6_of(generate(Family::Cycle, 5)) + "\n"), opts);
    REQUIRE(c5.records.size() == 1);
    REQUIRE(c5.records[0].consistent);
    REQUIRE(c5.summary.counterexamples == 0);
    REQUIRE(c5.counterexamples.empty());

    auto k3 = survey(corpus_of(graph6_of(generate(Family::Complete, 3)) + "\n"), opts);
    REQUIRE(k3.records.size() == 1);
    const auto& r = k3.records[0];
    REQUIRE_FALSE(r.in_hypothesis);
    REQUIRE(r.w2);
    REQUIRE_FALSE(r.gorenstein.at("q"));
    REQUIRE(r.consistent);
}

TEST_CASE("corpus reading", "[survey]")
{
    auto c = corpus_of(">>graph6<<\nA_\n\nBw\r\n");
    REQUIRE(c.lines.size() == 2);
    REQUIRE(c.lines[0].line_number == 2);
    REQUIRE(c.lines[1].text == "Bw");
    REQUIRE(c.lines[1].line_number == 4);
    REQUIRE(c.digest.size() == 16);
    REQUIRE(corpus_of("A_\n").digest != corpus_of("A_\n\n").digest);
    // FNV-1a 64 of the empty string is the offset basis.
    REQUIRE(fnv1a64_hex("") == "cbf29ce484222325");
    REQUIRE(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("malformed lines", "[survey]")
{
    const std::string text = "A_\n!!\nBw\n";
    SurveyOptions opts;
    auto report = survey(corpus_of(text), opts);
    REQUIRE(report.records.size() == 2);
    REQUIRE(report.malformed.size() == 1);
    REQUIRE(report.malformed[0].line_number == 2);
    REQUIRE(report.summary.malformed == 1);
    REQUIRE(report.summary.total == 3);
    // Indices are corpus positions, so the malformed line leaves a gap.
    REQUIRE(report.records[0].index == 0);
    REQUIRE(report.records[1].index == 2);

    opts.strict = true;
    try
    {
        survey(corpus_of(text), opts);
        FAIL("strict survey accepted a malformed line");
    }
    catch (const CorpusError& e)
    {
        REQUIRE(e.line() == 2);
    }
}

TEST_CASE("filters", "[survey]")
{
    SurveyFilters f;
    f.add("triangle-free,connected");
    REQUIRE(f.triangle_free);
    REQUIRE(f.connected);
    REQUIRE_FALSE(f.no_isolated);
    REQUIRE_THROWS_AS(f.add("planar"), std::invalid_argument);

    REQUIRE(f.admits(generate(Family::Cycle, 4)));
    REQUIRE_FALSE(f.admits(generate(Family::Complete, 3)));
    REQUIRE_FALSE(f.admits(Graph(2)));

    SurveyFilters g;
    g.add("girth-ge-5");
    REQUIRE_FALSE(g.admits(generate(Family::Cycle, 4)));
    REQUIRE(g.admits(generate(Family::Cycle, 5)));
    REQUIRE(g.admits(generate(Family::Path, 4)));

    SurveyFilters h;
    h.add("no-isolated");
    h.max_n = 4;
    REQUIRE_FALSE(h.admits(Graph(1)));
    REQUIRE_FALSE(h.admits(generate(Family::Cycle, 5)));
    REQUIRE(h.admits(Graph(0)));
    REQUIRE(h.names() == std::vector<std::string>{"no-isolated", "max-n=4"});
}

TEST_CASE("reports are deterministic and self-consistent", "[survey][property]")
{
    std::string text = fixtures::text("connected_triangle_free_le10.g6");
    auto corpus = corpus_of(text);
    SurveyOptions opts;
    opts.filters.max_n = 7;
    opts.fields = {FieldSpec::rationals(), FieldSpec::prime(2)};
    auto serial = survey(corpus, opts);
    REQUIRE(serial.records.size() == 1 + 1 + 1 + 3 + 6 + 19 + 59);
    REQUIRE(serial.summary == serial.recount(corpus.lines.size()));
    REQUIRE(serial.summary.counterexamples == 0);
    REQUIRE(serial.summary.field_disagreements == 0);
    for (std::size_t i = 1; i < serial.records.size(); ++i)
        REQUIRE(serial.records[i - 1].index < serial.records[i].index);

    const std::string json = to_json(serial).dump(2);
    const std::string csv = to_csv(serial);
    for (unsigned jobs : {2u, 4u, 7u})
    {
        opts.jobs = jobs;
        auto parallel = survey(corpus, opts);
        REQUIRE(to_json(parallel).dump(2) == json);
        REQUIRE(to_csv(parallel) == csv);
    }
}

TEST_CASE("JSON layout", "[survey][io]")
{
    SurveyOptions opts;
    opts.fields = {FieldSpec::rationals(), FieldSpec::prime(3)};
    opts.filters.add("triangle-free");
    auto report = survey(corpus_of("Dhc\nBw\nBW\n"), opts);
    auto j = to_json(report);

    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    REQUIRE(keys == std::vector<std::string>{"version", "corpus_digest", "filters", "fields",
                                             "summary", "counterexamples", "malformed",
                                             "records"});
    REQUIRE(j["version"] == kToolVersion);
    REQUIRE(j["fields"] == Json::array({"q", "f3"}));
    REQUIRE(j["filters"] == Json::array({"triangle-free"}));
    REQUIRE(j["summary"]["total"] == 3);
    REQUIRE(j["summary"]["admitted"] == 2);
    REQUIRE(j["summary"]["consistent"] == 2);
    REQUIRE(j["summary"]["counterexamples"] == 0);

    const auto& rec = j["records"][0];
    std::vector<std::string> fields;
    for (auto it = rec.begin(); it != rec.end(); ++it)
        fields.push_back(it.key());
    REQUIRE(fields == std::vector<std::string>{"index", "graph6", "n", "edge_count", "girth",
                                               "connected", "no_isolated", "alpha",
                                               "well_covered", "w2", "alpha_critical",
                                               "euler_char", "gorenstein", "second_power_cm",
                                               "in_hypothesis", "consistent"});
    REQUIRE(rec["girth"] == 5);
    REQUIRE(rec["gorenstein"]["q"] == true);
    REQUIRE(rec["gorenstein"]["f3"] == true);
    // The path on three vertices is a tree.
    REQUIRE(j["records"][1]["girth"].is_null());
    REQUIRE(j["records"][1]["index"] == 2);
}

TEST_CASE("CSV layout", "[survey][io]")
{
    SurveyOptions opts;
    opts.fields = {FieldSpec::rationals(), FieldSpec::prime(2)};
    auto report = survey(corpus_of("Dhc\nBW\n"), opts);
    std::istringstream csv(to_csv(report));
    std::string header, first, second, extra;
    std::getline(csv, header);
    std::getline(csv, first);
    std::getline(csv, second);
    REQUIRE_FALSE(std::getline(csv, extra));
    REQUIRE(header
            == "index,graph6,n,edge_count,girth,connected,no_isolated,alpha,well_covered,w2,"
               "alpha_critical,euler_char,gorenstein_q,gorenstein_f2,second_power_cm_q,"
               "second_power_cm_f2,in_hypothesis,consistent");
    REQUIRE(first == "0,Dhc,5,5,5,1,1,2,1,1,1,-1,1,1,1,1,1,1");
    REQUIRE(second.rfind("1,BW,3,2,inf,1,1,2,", 0) == 0);
}
