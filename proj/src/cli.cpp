#include "skossim/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skossim/analysis.hpp"
#include "skossim/bench.hpp"
#include "skossim/closure.hpp"
#include "skossim/context.hpp"
#include "skossim/error.hpp"
#include "skossim/export.hpp"
#include "skossim/ntriples.hpp"
#include "skossim/similarity.hpp"
#include "skossim/vocab.hpp"

namespace skossim {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& data, std::ostream& out) {
    if (path.empty()) {
        out << data;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << data)) {
        throw Error("cannot write " + path);
    }
}

TripleStore load_store(const std::vector<std::string>& paths) {
    TripleStore store;
    for (const auto& path : paths) {
        try {
            load_ntriples(read_file(path), store);
        } catch (const ParseError& e) {
            throw Error(path + ": " + e.what());
        }
    }
    return store;
}

struct MatrixOptions {
    std::vector<std::string> data;
    std::string context;
    std::string population;
    std::string empty_policy = "one";
    unsigned threads = 1;
    std::string out;
};

void add_matrix_options(CLI::App* cmd, MatrixOptions& opts) {
    cmd->add_option("--data", opts.data, "N-Triples input (repeatable, merged)")->required();
    cmd->add_option("--context", opts.context, "context file (.ctx)")->required();
    cmd->add_option("--population", opts.population, "population file, one IRI per line")->required();
    cmd->add_option("--empty-policy", opts.empty_policy, "SIM value for an empty first argument")
        ->check(CLI::IsMember({"one", "zero"}));
    cmd->add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", opts.out, "output file (default: stdout)");
}

struct MatrixInputs {
    ContextSpec spec;
    SimilarityMatrix matrix;
};

MatrixInputs compute_matrix(const MatrixOptions& opts) {
    TripleStore store = load_store(opts.data);
    ContextSpec spec = load_context(read_file(opts.context));
    Population population = parse_population(read_file(opts.population));
    SimilarityMatrix matrix =
        similarity_matrix(store, spec, population, parse_empty_policy(opts.empty_policy), opts.threads);
    return {std::move(spec), std::move(matrix)};
}

std::string resolve_query(const std::string& query, const ContextSpec& spec, const SimilarityMatrix& matrix) {
    if (matrix.index_of(query)) {
        return query;
    }
    try {
        return resolve_curie(spec.prefixes(), query);
    } catch (const ValidationError&) {
        return query;
    }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Context-dependent asymmetric similarity over SKOS graphs", "skossim"};
    app.require_subcommand(1);

    std::vector<std::string> ingest_data;
    std::string ingest_out;
    auto* ingest = app.add_subcommand("ingest", "Parse N-Triples and write the canonical serialization");
    ingest->add_option("--data", ingest_data, "N-Triples input (repeatable)")->required();
    ingest->add_option("--out", ingest_out, "output file (default: stdout)");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate-context", "Parse and validate a context file");
    validate->add_option("--context", validate_path, "context file (.ctx)")->required();

    std::vector<std::string> closure_data;
    std::string closure_predicate;
    bool closure_transitive = false;
    bool closure_reflexive = false;
    bool closure_symmetric = false;
    std::string closure_scope;
    std::string closure_prefixes;
    std::string closure_out;
    auto* closure = app.add_subcommand("closure", "Materialize closures of one predicate");
    closure->add_option("--data", closure_data, "N-Triples input (repeatable)")->required();
    closure->add_option("--predicate", closure_predicate, "predicate as CURIE or <IRI>")->required();
    closure->add_flag("--transitive", closure_transitive);
    closure->add_flag("--reflexive", closure_reflexive);
    closure->add_option("--reflexive-scope", closure_scope, "predicate-nodes | class:<curie-or-iri>");
    closure->add_flag("--symmetric", closure_symmetric);
    closure->add_option("--prefixes", closure_prefixes, "context file whose PREFIX lines resolve CURIEs");
    closure->add_option("--out", closure_out, "output file (default: stdout)");

    MatrixOptions matrix_opts;
    std::string matrix_values = "decimal";
    std::string matrix_format = "csv";
    auto* matrix = app.add_subcommand("matrix", "Compute a similarity matrix");
    add_matrix_options(matrix, matrix_opts);
    matrix->add_option("--values", matrix_values, "decimal | rational")
        ->check(CLI::IsMember({"decimal", "rational"}));
    matrix->add_option("--format", matrix_format, "csv | pgm")->check(CLI::IsMember({"csv", "pgm"}));

    MatrixOptions rank_opts;
    std::string rank_query;
    std::string rank_direction = "from-query";
    std::string rank_values = "decimal";
    auto* rank = app.add_subcommand("rank", "Rank the population against one query resource");
    add_matrix_options(rank, rank_opts);
    rank->add_option("--query", rank_query, "query IRI (or CURIE)")->required();
    rank->add_option("--direction", rank_direction, "from-query | to-query")
        ->check(CLI::IsMember({"from-query", "to-query"}));
    rank->add_option("--values", rank_values, "decimal | rational")
        ->check(CLI::IsMember({"decimal", "rational"}));

    MatrixOptions report_opts;
    auto* report = app.add_subcommand("report", "Classify every pair by containment (TSV)");
    add_matrix_options(report, report_opts);

    SynthParams bench_params;
    unsigned bench_threads = 1;
    auto* bench = app.add_subcommand("bench", "Time the pipeline on a synthetic taxonomy");
    bench->add_option("--concepts", bench_params.n_concepts)->check(CLI::PositiveNumber);
    bench->add_option("--branching", bench_params.branching)->check(CLI::PositiveNumber);
    bench->add_option("--targets", bench_params.n_targets)->check(CLI::PositiveNumber);
    bench->add_option("--density", bench_params.link_density)->check(CLI::NonNegativeNumber);
    bench->add_option("--seed", bench_params.seed);
    bench->add_option("--threads", bench_threads)->check(CLI::PositiveNumber);

    std::vector<const char*> argv{"skossim"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (*ingest) {
            emit(ingest_out, serialize_ntriples(load_store(ingest_data)), out);
        } else if (*validate) {
            RawContext raw = parse_context(read_file(validate_path));
            validate_context(raw);
            out << to_string(raw);
        } else if (*closure) {
            TripleStore store = load_store(closure_data);
            PrefixMap prefixes;
            std::string default_class(vocab::skos_concept);
            if (!closure_prefixes.empty()) {
                std::string text = read_file(closure_prefixes);
                prefixes = parse_prefixes(text);
                try {
                    default_class = parse_context(text).class_iri;
                } catch (const ParseError&) {
                    // prefix-only file
                }
            }
            ClosureRequest request;
            request.predicate = resolve_curie(prefixes, closure_predicate);
            request.transitive = closure_transitive;
            request.reflexive = closure_reflexive;
            request.symmetric = closure_symmetric;
            request.reflexive_scope = closure_scope.empty() ? ReflexiveScope::of_class(default_class)
                                                            : parse_reflexive_scope(closure_scope, prefixes);
            apply_closure(store, request);
            emit(closure_out, serialize_ntriples(store), out);
        } else if (*matrix) {
            auto result = compute_matrix(matrix_opts);
            emit(matrix_opts.out,
                 matrix_format == "pgm" ? render_pgm(result.matrix)
                                        : export_csv(result.matrix, parse_value_format(matrix_values)),
                 out);
        } else if (*rank) {
            auto result = compute_matrix(rank_opts);
            const ValueFormat format = parse_value_format(rank_values);
            std::string text;
            for (const auto& entry :
                 rank_by_similarity(result.matrix, resolve_query(rank_query, result.spec, result.matrix),
                                    parse_rank_direction(rank_direction))) {
                text += entry.resource + "\t" + format_value(entry.value, format) + "\n";
            }
            emit(rank_opts.out, text, out);
        } else if (*report) {
            auto result = compute_matrix(report_opts);
            std::string text;
            for (const auto& entry : containment_report(result.matrix)) {
                text += entry.first + "\t" + entry.second + "\t" + std::string(to_string(entry.relation)) + "\n";
            }
            emit(report_opts.out, text, out);
        } else if (*bench) {
            BenchReport r = bench_matrix(bench_params, bench_threads);
            nlohmann::ordered_json j;
            j["n_concepts"] = r.n_concepts;
            j["n_triples"] = r.n_triples;
            j["workers"] = r.workers;
            j["phases_ms"] = {{"load", r.load_ms},
                              {"closure", r.closure_ms},
                              {"extraction", r.extraction_ms},
                              {"matrix", r.matrix_ms}};
            j["cache"] = {{"extractions", r.extractions}, {"distinct_resources", r.distinct_resources}};
            j["checksum"] = r.checksum;
            out << j.dump(2) << "\n";
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace skossim
