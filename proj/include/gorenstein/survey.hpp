/**
 * Corpus surveys: classify every graph of a graph6 stream and collect the
 * results into a deterministic report.
 */

#ifndef GORENSTEIN_SURVEY_HPP
#define GORENSTEIN_SURVEY_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "criteria.hpp"

namespace gorenstein {

inline constexpr const char* kToolVersion = "0.1.0";

struct GraphRecord
{
    std::size_t index = 0;
    std::string graph6;
    int n = 0;
    std::size_t edge_count = 0;
    ExtendedGirth girth = ExtendedGirth::infinite();
    bool connected = false;
    bool no_isolated = false;
    int alpha = 0;
    bool well_covered = false;
    bool w2 = false;
    bool alpha_critical = false;
    long long euler_char = 0;
    std::map<std::string, bool> gorenstein;
    std::map<std::string, bool> second_power_cm;
    bool in_hypothesis = false;
    bool consistent = false;

    /// Gorenstein or second-power verdicts differ between fields.
    bool field_disagreement() const
    {
        auto differs = [](const std::map<std::string, bool>& m) {
            return std::adjacent_find(m.begin(), m.end(), [](const auto& a, const auto& b) {
                       return a.second != b.second;
                   }) != m.end();
        };
        return differs(gorenstein) || differs(second_power_cm);
    }
};

inline GraphRecord classify(const Graph& g, std::size_t index,
                            const std::vector<FieldSpec>& fields)
{
    GraphRecord r;
    r.index = index;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.edge_count = g.edge_count();
    r.girth = girth(g);
    r.connected = is_connected(g);
    r.no_isolated = !has_isolated_vertices(g);
    r.alpha = independence_number(g);
    r.well_covered = is_well_covered(g);
    r.w2 = is_in_w2(g);
    r.alpha_critical = is_alpha_critical(g);
    r.euler_char = reduced_euler_characteristic(independence_complex(g));
    const bool triangle_free = r.girth.at_least(4);
    r.in_hypothesis = triangle_free && r.no_isolated;
    r.consistent = true;
    for (const auto& field : fields)
    {
        const bool gor = is_gorenstein_graph(g, field);
        const bool sq = is_second_power_cm(g, field);
        r.gorenstein[field.name()] = gor;
        r.second_power_cm[field.name()] = sq;
        r.consistent = r.consistent
                       && TheoremVerdict::consistency(triangle_free, r.no_isolated, r.w2, gor, sq);
    }
    return r;
}

// ------------------------------------------------------------------------
//                               Filters
// ------------------------------------------------------------------------

struct SurveyFilters
{
    bool triangle_free = false;
    bool connected = false;
    bool no_isolated = false;
    bool girth_ge_5 = false;
    std::optional<int> max_n;

    /// Comma-separated list of filter names; throws on an unknown one.
    void add(const std::string& list)
    {
        std::stringstream ss(list);
        std::string name;
        while (std::getline(ss, name, ','))
        {
            if (name == "triangle-free")
                triangle_free = true;
            else if (name == "connected")
                connected = true;
            else if (name == "no-isolated")
                no_isolated = true;
            else if (name == "girth-ge-5")
                girth_ge_5 = true;
            else if (!name.empty())
                throw std::invalid_argument("unknown filter '" + name + "'");
        }
    }

    bool admits(const Graph& g) const
    {
        if (max_n && g.order() > *max_n)
            return false;
        if (connected && !is_connected(g))
            return false;
        if (no_isolated && has_isolated_vertices(g))
            return false;
        if (triangle_free || girth_ge_5)
        {
            ExtendedGirth gi = girth(g);
            if (triangle_free && !gi.at_least(4))
                return false;
            if (girth_ge_5 && !gi.at_least(5))
                return false;
        }
        return true;
    }

    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        if (triangle_free)
            out.emplace_back("triangle-free");
        if (connected)
            out.emplace_back("connected");
        if (no_isolated)
            out.emplace_back("no-isolated");
        if (girth_ge_5)
            out.emplace_back("girth-ge-5");
        if (max_n)
            out.push_back("max-n=" + std::to_string(*max_n));
        return out;
    }
};

// ------------------------------------------------------------------------
//                                Corpus
// ------------------------------------------------------------------------

struct CorpusLine
{
    std::size_t line_number;
    std::string text;
};

struct MalformedLine
{
    std::size_t line_number;
    std::string message;
};

struct Corpus
{
    std::vector<CorpusLine> lines;
    /// FNV-1a 64 of the raw stream, as 16 hex digits.
    std::string digest;
};

inline std::string fnv1a64_hex(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes)
    {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Reads graph6 lines; blank lines and a bare ">>graph6<<" header are skipped.
inline Corpus read_corpus(std::istream& in)
{
    std::ostringstream raw;
    raw << in.rdbuf();
    Corpus corpus;
    const std::string bytes = raw.str();
    corpus.digest = fnv1a64_hex(bytes);
    std::istringstream lines(bytes);
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line))
    {
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line == ">>graph6<<")
            continue;
        corpus.lines.push_back({number, line});
    }
    return corpus;
}

// ------------------------------------------------------------------------
//                                Report
// ------------------------------------------------------------------------

struct SurveySummary
{
    std::size_t total = 0;
    std::size_t admitted = 0;
    std::size_t consistent = 0;
    std::size_t counterexamples = 0;
    std::size_t field_disagreements = 0;
    std::size_t malformed = 0;

    friend bool operator==(const SurveySummary&, const SurveySummary&) = default;
};

struct SurveyReport
{
    std::string version = kToolVersion;
    std::string corpus_digest;
    std::vector<std::string> filters;
    std::vector<std::string> fields;
    SurveySummary summary;
    std::vector<GraphRecord> records;
    /// Corpus indices of records with consistent == false.
    std::vector<std::size_t> counterexamples;
    std::vector<MalformedLine> malformed;

    /// Recount the summary from the records.
    SurveySummary recount(std::size_t total) const
    {
        SurveySummary s;
        s.total = total;
        s.admitted = records.size();
        s.malformed = malformed.size();
        for (const auto& r : records)
        {
            if (r.consistent)
                ++s.consistent;
            else
                ++s.counterexamples;
            if (r.field_disagreement())
                ++s.field_disagreements;
        }
        return s;
    }
};

struct SurveyOptions
{
    SurveyFilters filters;
    std::vector<FieldSpec> fields{FieldSpec::rationals()};
    unsigned jobs = 1;
    /// Abort on the first malformed line instead of skipping it.
    bool strict = false;
};

class CorpusError : public std::runtime_error
{
    public:
        CorpusError(std::size_t line, const std::string& message)
            : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
        {
        }

        std::size_t line() const { return line_; }

    private:
        std::size_t line_;
};

/**
 * Classify every admitted corpus graph over every requested field.  The
 * index of a record is its position among the corpus lines (0-based, blank
 * lines excluded).  Record order follows the corpus regardless of `jobs`.
 */
inline SurveyReport survey(const Corpus& corpus, const SurveyOptions& options)
{
    SurveyReport report;
    report.corpus_digest = corpus.digest;
    report.filters = options.filters.names();
    for (const auto& f : options.fields)
        report.fields.push_back(f.name());

    // Parse and filter sequentially so malformed-line handling is ordered.
    struct Task
    {
        std::size_t index;
        Graph graph;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < corpus.lines.size(); ++i)
    {
        const auto& line = corpus.lines[i];
        Graph g;
        try
        {
            g = parse_graph6(line.text);
        }
        catch (const GraphError& e)
        {
            if (options.strict)
                throw CorpusError(line.line_number, e.what());
            report.malformed.push_back({line.line_number, e.what()});
            continue;
        }
        if (options.filters.admits(g))
            tasks.push_back({i, std::move(g)});
    }

    report.records.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++)
            report.records[t] = classify(tasks[t].graph, tasks[t].index, options.fields);
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    for (const auto& r : report.records)
        if (!r.consistent)
            report.counterexamples.push_back(r.index);
    report.summary = report.recount(corpus.lines.size());
    return report;
}

// ------------------------------------------------------------------------
//                            Serialization
// ------------------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline Json to_json(const GraphRecord& r)
{
    Json j;
    j["index"] = r.index;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["edge_count"] = r.edge_count;
    j["girth"] = r.girth.is_infinite() ? Json(nullptr) : Json(r.girth.length());
    j["connected"] = r.connected;
    j["no_isolated"] = r.no_isolated;
    j["alpha"] = r.alpha;
    j["well_covered"] = r.well_covered;
    j["w2"] = r.w2;
    j["alpha_critical"] = r.alpha_critical;
    j["euler_char"] = r.euler_char;
    j["gorenstein"] = Json::object();
    for (const auto& [k, v] : r.gorenstein)
        j["gorenstein"][k] = v;
    j["second_power_cm"] = Json::object();
    for (const auto& [k, v] : r.second_power_cm)
        j["second_power_cm"][k] = v;
    j["in_hypothesis"] = r.in_hypothesis;
    j["consistent"] = r.consistent;
    return j;
}

inline Json to_json(const SurveyReport& report)
{
    Json j;
    j["version"] = report.version;
    j["corpus_digest"] = report.corpus_digest;
    j["filters"] = report.filters;
    j["fields"] = report.fields;
    const auto& s = report.summary;
    j["summary"] = {{"total", s.total},
                    {"admitted", s.admitted},
                    {"consistent", s.consistent},
                    {"counterexamples", s.counterexamples},
                    {"field_disagreements", s.field_disagreements},
                    {"malformed", s.malformed}};
    j["counterexamples"] = report.counterexamples;
    j["malformed"] = Json::array();
    for (const auto& m : report.malformed)
        j["malformed"].push_back({{"line", m.line_number}, {"message", m.message}});
    j["records"] = Json::array();
    for (const auto& r : report.records)
        j["records"].push_back(to_json(r));
    return j;
}

/// CSV projection of the records: booleans as 0/1, one column per field map entry.
inline std::string to_csv(const SurveyReport& report)
{
    std::ostringstream out;
    out << "index,graph6,n,edge_count,girth,connected,no_isolated,alpha,well_covered,w2,"
           "alpha_critical,euler_char";
    for (const auto& f : report.fields)
        out << ",gorenstein_" << f;
    for (const auto& f : report.fields)
        out << ",second_power_cm_" << f;
    out << ",in_hypothesis,consistent\n";
    for (const auto& r : report.records)
    {
        out << r.index << ',' << r.graph6 << ',' << r.n << ',' << r.edge_count << ','
            << (r.girth.is_infinite() ? std::string("inf") : std::to_string(r.girth.length()))
            << ',' << r.connected << ',' << r.no_isolated << ',' << r.alpha << ','
            << r.well_covered << ',' << r.w2 << ',' << r.alpha_critical << ',' << r.euler_char;
        for (const auto& f : report.fields)
            out << ',' << r.gorenstein.at(f);
        for (const auto& f : report.fields)
            out << ',' << r.second_power_cm.at(f);
        out << ',' << r.in_hypothesis << ',' << r.consistent << '\n';
    }
    return out.str();
}

}   // namespace gorenstein

#endif
