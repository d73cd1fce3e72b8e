/**
 * gorcheck: command-line front end.
 *
 *   gorcheck check    [GRAPH6] [--edges PATH] [--field F]...
 *   gorcheck survey   --corpus PATH [--filter LIST]... [--max-n N] [--jobs N]
 *                     [--field F]... [--out PATH] [--format json|csv] [--strict]
 *   gorcheck family   NAME --n N [--format graph6|edges]
 *   gorcheck homology (--facets PATH | --graph6 STR | --edges PATH) [--field F]...
 *
 * Exit status: 0 = no counterexample, 1 = counterexample found,
 * 2 = usage or parse error.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gorenstein/gorenstein.hpp"

namespace gor = gorenstein;

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<gor::FieldSpec> parse_fields(const std::vector<std::string>& names)
{
    std::vector<gor::FieldSpec> fields;
    for (const auto& name : names)
    {
        auto f = gor::FieldSpec::parse(name);
        if (std::find(fields.begin(), fields.end(), f) == fields.end())
            fields.push_back(f);
    }
    if (fields.empty())
        fields.push_back(gor::FieldSpec::rationals());
    return fields;
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-")
    {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Gorenstein / W2 / second-power Cohen-Macaulay checker for graphs"};
    app.require_subcommand(1);

    std::vector<std::string> field_names;
    auto add_fields = [&](CLI::App* sub) {
        sub->add_option("--field", field_names, "coefficient field: q, f2, f3, f5 (repeatable)")
            ->take_all();
    };

    // check
    auto* check = app.add_subcommand("check", "classify one graph and print its JSON record");
    std::string check_g6, check_edges;
    check->add_option("graph6", check_g6, "graph6 string");
    check->add_option("--edges", check_edges, "edge-list file");
    add_fields(check);

    // survey
    auto* sv = app.add_subcommand("survey", "classify every graph of a graph6 corpus");
    std::string corpus_path, out_path, format = "json";
    std::vector<std::string> filter_lists;
    int max_n = -1;
    unsigned jobs = 1;
    bool strict = false;
    sv->add_option("--corpus", corpus_path, "graph6 corpus file ('-' for stdin)")->required();
    sv->add_option("--filter", filter_lists,
                   "comma list of triangle-free,connected,no-isolated,girth-ge-5");
    sv->add_option("--max-n", max_n, "skip graphs with more vertices");
    sv->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sv->add_option("--out", out_path, "report path (default stdout)");
    sv->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sv->add_flag("--strict", strict, "abort on the first malformed line");
    add_fields(sv);

    // family
    auto* fam = app.add_subcommand("family", "emit a member of a graph family");
    std::string family_name, family_format = "edges";
    int family_n = 0;
    fam->add_option("name", family_name, "paper-gn, path, cycle or complete")->required();
    fam->add_option("--n", family_n, "family parameter")->required();
    fam->add_option("--format", family_format, "graph6 or edges")
        ->check(CLI::IsMember({"graph6", "edges"}));

    // homology
    auto* hom = app.add_subcommand("homology", "print reduced Betti numbers and chi~");
    std::string hom_facets, hom_g6, hom_edges;
    auto* o1 = hom->add_option("--facets", hom_facets, "facet-list file");
    auto* o2 = hom->add_option("--graph6", hom_g6, "graph6 string (independence complex)");
    auto* o3 = hom->add_option("--edges", hom_edges, "edge-list file (independence complex)");
    o1->excludes(o2)->excludes(o3);
    o2->excludes(o3);
    add_fields(hom);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try
    {
        const auto fields = parse_fields(field_names);

        if (*check)
        {
            gor::Graph g;
            try
            {
                if (!check_edges.empty())
                    g = gor::parse_edge_list(slurp(check_edges));
                else if (!check_g6.empty())
                    g = gor::parse_graph6(check_g6);
                else
                {
                    std::cerr << "check: give a graph6 string or --edges PATH\n";
                    return kUsage;
                }
            }
            catch (const std::exception& e)
            {
                std::cerr << "check: " << e.what() << '\n';
                return kUsage;
            }
            auto record = gor::classify(g, 0, fields);
            std::cout << gor::to_json(record).dump(2) << '\n';
            return record.consistent ? kOk : kCounterexample;
        }

        if (*sv)
        {
            gor::SurveyOptions options;
            for (const auto& list : filter_lists)
                options.filters.add(list);
            if (max_n >= 0)
                options.filters.max_n = max_n;
            options.fields = fields;
            options.jobs = jobs;
            options.strict = strict;

            gor::Corpus corpus;
            if (corpus_path == "-")
                corpus = gor::read_corpus(std::cin);
            else
            {
                std::ifstream in(corpus_path);
                if (!in)
                {
                    std::cerr << "survey: cannot open " << corpus_path << '\n';
                    return kUsage;
                }
                corpus = gor::read_corpus(in);
            }

            gor::SurveyReport report;
            try
            {
                report = gor::survey(corpus, options);
            }
            catch (const gor::CorpusError& e)
            {
                std::cerr << "survey: " << e.what() << '\n';
                return kUsage;
            }
            for (const auto& m : report.malformed)
                std::cerr << "survey: skipping line " << m.line_number << ": " << m.message << '\n';

            write_output(format == "csv" ? gor::to_csv(report) : gor::to_json(report).dump(2) + "\n",
                         out_path);
            const auto& s = report.summary;
            std::cerr << "survey: " << s.admitted << "/" << s.total << " admitted, "
                      << s.counterexamples << " counterexamples, " << s.field_disagreements
                      << " field disagreements\n";
            return s.counterexamples == 0 ? kOk : kCounterexample;
        }

        if (*fam)
        {
            auto family = gor::parse_family(family_name);
            if (!family)
            {
                std::cerr << "family: unknown family '" << family_name << "'\n";
                return kUsage;
            }
            gor::Graph g;
            try
            {
                g = gor::generate(*family, family_n);
            }
            catch (const gor::GraphError& e)
            {
                std::cerr << "family: " << e.what() << '\n';
                return kUsage;
            }
            std::cout << (family_format == "graph6" ? gor::to_graph6(g) + "\n" : gor::to_edge_list(g));
            return kOk;
        }

        if (*hom)
        {
            gor::SimplicialComplex c;
            try
            {
                if (!hom_facets.empty())
                    c = gor::parse_facets(slurp(hom_facets));
                else if (!hom_g6.empty())
                    c = gor::independence_complex(gor::parse_graph6(hom_g6));
                else if (!hom_edges.empty())
                    c = gor::independence_complex(gor::parse_edge_list(slurp(hom_edges)));
                else
                {
                    std::cerr << "homology: give --facets, --graph6 or --edges\n";
                    return kUsage;
                }
            }
            catch (const std::exception& e)
            {
                std::cerr << "homology: " << e.what() << '\n';
                return kUsage;
            }
            for (const auto& field : fields)
            {
                if (fields.size() > 1)
                    std::cout << "[" << field.name() << "]\n";
                auto betti = gor::reduced_betti(c, field);
                for (int i = -1; i <= betti.max_degree(); ++i)
                    std::cout << "H~_" << i << " = " << betti.at(i) << '\n';
                std::cout << "chi~ = " << gor::reduced_euler_characteristic(c) << '\n';
            }
            return kOk;
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
