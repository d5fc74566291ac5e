#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "turan/bounds.hpp"
#include "turan/census.hpp"
#include "turan/complex.hpp"
#include "turan/embedding.hpp"
#include "turan/json_io.hpp"
#include "turan/pipeline.hpp"
#include "turan/random_complex.hpp"
#include "turan/sphere_check.hpp"
#include "turan/sphere_factory.hpp"
#include "turan/witness.hpp"

namespace turan::cli {

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return hex.str();
}

namespace {

// A validation failure detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything a command produces; nothing touches the filesystem until the command is done.
struct Outcome {
    int code = kOk;
    std::string stdout_text;
    std::vector<std::pair<std::string, std::string>> files;
    std::map<std::string, std::string> inputs; // path -> sha256
    std::optional<std::uint64_t> seed;

    void emit(const std::string& path, std::string text)
    {
        if (path.empty() || path == "-") {
            stdout_text += text;
        } else {
            files.emplace_back(path, std::move(text));
        }
    }
    void emit(const std::string& path, const json& j) { emit(path, j.dump(2) + "\n"); }
};

json read_input(Outcome& o, const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    o.inputs[path] = sha256_hex(buf.str());
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

int default_effort()
{
    if (const char* env = std::getenv("TURAN_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= 12) {
            return static_cast<int>(v);
        }
        throw UsageError("TURAN_BUDGET must be an integer effort level in [0, 12]");
    }
    return SphereEffort{}.level;
}

std::string density_csv(const BuildTrace& t)
{
    std::ostringstream csv;
    csv << "step,facets,vertices,ratio\n";
    const auto start = f_vector(t.start);
    csv << 0 << ',' << start[t.start.dim()] << ',' << start[0] << ','
        << std::setprecision(12) << static_cast<double>(start[t.start.dim()]) / static_cast<double>(start[0]) << '\n';
    for (std::size_t i = 0; i < t.density.size(); ++i) {
        const auto [fd, f0] = t.density[i];
        csv << i + 1 << ',' << fd << ',' << f0 << ',' << static_cast<double>(fd) / static_cast<double>(f0) << '\n';
    }
    return csv.str();
}

json rational_json(const Rational& r)
{
    return {{"num", r.numerator()}, {"den", r.denominator()}, {"value", to_double(r)}};
}

struct Options {
    // shared
    int d = 2;
    std::uint64_t seed = 0;
    std::string out = "-";
    std::string in;
    std::string manifest;
    int effort = -1;
    // construct
    std::string family;
    int k = 0;
    int t = 1;
    int steps = 0;
    int m = 0;
    int attempts = 100;
    bool lc = false;
    std::string trace;
    std::string density;
    // sample / pipeline / sweep
    std::uint32_t n = 0;
    std::optional<double> p;
    std::optional<double> epsilon;
    std::string catalog;
    std::size_t m_max = 0;
    std::string report;
    std::vector<std::uint32_t> ns;
    int reps = 1;
    std::string summary;
    // witness / embed-count / bounds
    std::size_t pairs = 16;
    bool min_density = false;
    std::string host;
    std::string pattern;
    std::size_t limit = kNoLimit;
    std::optional<std::int64_t> bound_n;
    std::optional<std::int64_t> bound_m;
    double c = 1.0;
    // census
    std::string census_kind;
    int max_n = 8;
    std::string method = "grow";
    std::uint64_t budget = 1000;
    std::string catalog_out;
};

SphereCatalog load_catalog(Outcome& o, const std::string& path)
{
    try {
        return catalog_from_json(read_input(o, path));
    } catch (const ComplexError& e) {
        throw UsageError(std::string("catalog load error: ") + e.what());
    }
}

Complex load_complex(Outcome& o, const std::string& path)
{
    try {
        return complex_from_json(read_input(o, path));
    } catch (const ComplexError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void cmd_construct(const Options& a, Outcome& o, bool seeded)
{
    const bool randomized = a.family == "flip-seq" || a.family == "tree" || a.family == "2lc";
    if (randomized && !seeded) {
        throw UsageError("--seed is required for construct " + a.family);
    }
    std::optional<BuildTrace> trace;
    Complex x;
    if (a.family == "simplex-boundary") {
        x = boundary_simplex(a.d);
    } else if (a.family == "cross-polytope") {
        x = boundary_cross_polytope(a.d);
    } else if (a.family == "cycle") {
        x = cycle(a.k);
    } else if (a.family == "suspension") {
        x = a.in.empty() ? iterated_suspension_sphere(a.k, a.t) : suspension(load_complex(o, a.in));
    } else if (a.family == "flip-seq") {
        if (a.steps < 0) {
            throw UsageError("--steps must be non-negative");
        }
        auto [y, tr] = flip_sequence(boundary_cross_polytope(a.d), a.steps, a.seed);
        x = std::move(y);
        trace = std::move(tr);
    } else if (a.family == "tree") {
        auto [y, tr] = tree_of_simplices_traced(a.d, a.m, a.seed);
        x = std::move(y);
        trace = std::move(tr);
    } else if (a.family == "2lc") {
        TwoLcOptions opts;
        opts.mode = a.lc ? LcMode::LC : LcMode::TwoLC;
        opts.max_attempts = a.attempts;
        opts.effort = SphereEffort{a.effort};
        auto r = two_lc_generate(a.d, a.m, a.seed, opts);
        if (!r) {
            o.code = kBudget;
            throw std::runtime_error("no attempt closed into a verified sphere within --attempts");
        }
        x = std::move(r->first);
        trace = std::move(r->second);
    }
    o.emit(a.out, to_json(x));
    if (trace) {
        if (!a.trace.empty()) {
            o.emit(a.trace, to_json(*trace));
        }
        if (!a.density.empty()) {
            o.emit(a.density, density_csv(*trace));
        }
    } else if (!a.trace.empty() || !a.density.empty()) {
        throw UsageError("--trace/--density-csv apply only to flip-seq, tree and 2lc");
    }
}

void cmd_sample(const Options& a, Outcome& o)
{
    if (a.p.has_value() == a.epsilon.has_value()) {
        throw UsageError("give exactly one of --p and --epsilon");
    }
    LMParams params{a.n, a.d, a.p ? *a.p : turan_probability(a.n, a.d, *a.epsilon), a.seed};
    params.validate();
    o.emit(a.out, to_json(sample_lm(params)));
}

void cmd_check(const Options& a, Outcome& o)
{
    const Complex x = load_complex(o, a.in);
    const auto v = verify_sphere(x, SphereEffort{a.effort});
    json j = to_json(v);
    j["f_vector"] = f_vector(x).counts();
    j["euler_characteristic"] = euler_characteristic(x);
    o.emit(a.out, j);
    if (v.status == SphereStatus::Unknown) {
        o.code = kBudget;
    }
}

void cmd_pipeline(const Options& a, Outcome& o)
{
    const SphereCatalog catalog = load_catalog(o, a.catalog);
    PipelineParams params;
    params.n = a.n;
    params.d = a.d;
    params.epsilon = a.epsilon;
    params.seed = a.seed;
    params.m_max = a.m_max;
    const auto res = lower_bound_construct(params, catalog);
    o.emit(a.report.empty() ? std::string("-") : a.report, to_json(res.report));
    if (!a.out.empty() && a.out != "-") {
        o.emit(a.out, to_json(res.complex));
    }
}

void cmd_witness(const Options& a, Outcome& o)
{
    const Complex x = load_complex(o, a.in);
    WitnessOptions opts;
    opts.pairs_per_level = a.pairs;
    opts.min_density_check = a.min_density;
    opts.effort = SphereEffort{a.effort};
    const auto w = suspension_witness(x, opts);
    if (!w) {
        o.emit(a.out, json{{"found", false}});
        o.code = kBudget;
        return;
    }
    json j = to_json(*w);
    j["found"] = true;
    o.emit(a.out, j);
}

void cmd_bounds(const Options& a, Outcome& o)
{
    const auto e = exponents(a.d);
    json j{{"d", a.d},
           {"flip_facet_gain", flip_facet_gain(a.d)},
           {"critical_exponent", rational_json(critical_exponent(a.d))},
           {"lower_exponent", rational_json(e.lower)},
           {"upper_exponent", rational_json(e.upper)},
           {"flip_density_limit", rational_json(Rational(flip_facet_gain(a.d), a.d + 1))}};
    if (a.bound_n) {
        j["gkn_min_facets"] = gkn_min_facets(a.d, *a.bound_n);
    }
    if (a.bound_m) {
        j["max_vertices_for_facets"] = max_vertices_for_facets(a.d, *a.bound_m);
    }
    if (a.bound_n && a.bound_m) {
        j["log_labeled_copies_bound"] =
            log_labeled_copies_bound(a.d, *a.bound_m, static_cast<double>(*a.bound_n), a.c);
        j["labeled_copies_bound"] = labeled_copies_bound(a.d, *a.bound_m, static_cast<double>(*a.bound_n), a.c);
    }
    o.emit(a.out, j);
}

void cmd_embed_count(const Options& a, Outcome& o)
{
    const Complex host = load_complex(o, a.host);
    const Complex pattern = load_complex(o, a.pattern);
    if (host.dim() != pattern.dim()) {
        throw UsageError("host and pattern dimensions differ");
    }
    const auto s = search_embeddings(EmbeddingIndex(host), pattern, a.limit);
    o.emit(a.out, json{{"copies", s.copies.size()}, {"labeled", s.labeled}, {"truncated", s.truncated}});
}

void cmd_census(const Options& a, Outcome& o, bool seeded)
{
    std::ostringstream csv;
    csv << "key,count\n";
    if (a.census_kind == "s2") {
        if (!a.catalog_out.empty() && a.method != "split") {
            throw UsageError("--catalog-out needs --method split");
        }
        const auto recs = a.method == "split" ? split_2spheres(a.max_n) : enumerate_2spheres(a.max_n);
        for (const auto& r : recs) {
            csv << r.key << ',' << r.count << '\n';
        }
        if (!a.catalog_out.empty()) {
            o.emit(a.catalog_out, to_json(census_catalog(a.max_n)));
        }
    } else {
        if (!seeded) {
            throw UsageError("--seed is required for census 2lc");
        }
        const auto r = census_2lc(a.d, a.m, a.budget, a.seed, a.lc ? LcMode::LC : LcMode::TwoLC);
        csv << r.key << ',' << r.count << '\n';
        if (!below_2lc_growth_bound(a.d, a.m, r.count)) {
            o.code = kFailure;
        }
    }
    o.emit(a.out, csv.str());
}

void cmd_sweep(const Options& a, Outcome& o, std::ostream& err)
{
    SphereCatalog catalog;
    if (!a.catalog.empty()) {
        catalog = load_catalog(o, a.catalog);
    } else {
        catalog.entries.push_back(make_catalog_entry("cross-polytope", boundary_cross_polytope(a.d)));
    }
    const auto r = sweep(a.d, a.ns, a.reps, a.epsilon, catalog, a.seed);
    std::ostringstream csv;
    csv << "n,rep,seed,facets\n";
    for (const auto& row : r.rows) {
        csv << row.n << ',' << row.rep << ',' << row.seed << ',' << row.facets << '\n';
    }
    o.emit(a.out, csv.str());
    json means = json::array();
    for (const auto& [n, mean] : r.means) {
        means.push_back({{"n", n}, {"mean_facets", mean}});
    }
    json summary{{"means", means}, {"theory", rational_json(r.theory)}, {"slope_defined", r.slope.has_value()}};
    summary["slope"] = r.slope ? json(*r.slope) : json(nullptr);
    if (!r.slope) {
        err << "warning: slope undefined with fewer than two n values\n";
    }
    if (!a.summary.empty()) {
        o.emit(a.summary, summary);
    }
}

void record_params(const CLI::App* sub, json& params)
{
    for (const CLI::Option* opt : sub->get_options()) {
        const std::string name = opt->get_single_name();
        if (name.empty() || name == "help" || name == "manifest") {
            continue;
        }
        if (opt->count() > 0) {
            const auto& res = opt->results();
            params[name] = res.size() == 1 ? json(res.front()) : json(res);
        } else if (!opt->get_default_str().empty()) {
            params[name] = opt->get_default_str();
        }
    }
}

int run_replay(const std::string& path, std::ostream& out, std::ostream& err)
{
    json m;
    try {
        m = read_json_file(path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
    if (!m.is_object() || m.value("format", "") != kManifestFormat || !m.contains("argv") ||
        !m.contains("outputs")) {
        err << "error: " << path << " is not a run manifest\n";
        return kValidation;
    }
    std::vector<std::string> argv = m.at("argv").get<std::vector<std::string>>();
    std::ostringstream captured;
    const int code = run_cli(argv, captured, err);
    out << captured.str();
    json mismatches = json::array();
    for (const auto& [file, digest] : m.at("outputs").items()) {
        std::string actual;
        if (file == "<stdout>") {
            actual = sha256_hex(captured.str());
        } else {
            std::ifstream in(file, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            actual = sha256_hex(buf.str());
        }
        if (actual != digest.get<std::string>()) {
            mismatches.push_back(file);
        }
    }
    if (code != m.value("exit_code", 0)) {
        err << "replay: exit code " << code << " differs from recorded " << m.value("exit_code", 0) << '\n';
        return kFailure;
    }
    if (!mismatches.empty()) {
        err << "replay: outputs differ: " << mismatches.dump() << '\n';
        return kFailure;
    }
    err << "replay: identical outputs\n";
    return kOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    if (args.size() >= 1 && args[0] == "replay") {
        if (args.size() != 3 || args[1] != "--manifest") {
            err << "usage: turan replay --manifest FILE\n";
            return kValidation;
        }
        return run_replay(args[2], out, err);
    }

    CLI::App app{"Simplicial sphere constructions, random complexes and Turan-type bounds", "turan"};
    app.require_subcommand(1);
    Options a;
    std::optional<std::uint64_t> seed;

    auto common = [&](CLI::App* s, bool with_d) {
        s->add_option("--out,-o", a.out, "Output file ('-' for stdout)")->capture_default_str();
        s->add_option("--manifest", a.manifest, "Write a run manifest to this file");
        if (with_d) {
            s->add_option("--d", a.d, "Dimension")->capture_default_str();
        }
    };
    auto add_seed = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--seed", seed, "RNG seed");
        if (required) {
            o->required();
        }
    };

    auto* construct = app.add_subcommand("construct", "Build a sphere family member");
    construct->add_option("family", a.family, "Family")
        ->required()
        ->check(CLI::IsMember({"simplex-boundary", "cross-polytope", "cycle", "suspension", "flip-seq", "tree", "2lc"}));
    common(construct, true);
    add_seed(construct, false);
    construct->add_option("--k", a.k, "Cycle length");
    construct->add_option("--t", a.t, "Number of suspensions")->capture_default_str();
    construct->add_option("--in", a.in, "Complex to suspend");
    construct->add_option("--steps", a.steps, "Flip count");
    construct->add_option("--m", a.m, "Number of simplices");
    construct->add_option("--attempts", a.attempts, "Restarts for 2lc")->capture_default_str()->check(CLI::PositiveNumber);
    construct->add_flag("--lc", a.lc, "Identify only faces meeting in dimension >= d-2");
    construct->add_option("--trace", a.trace, "BuildTrace JSON output");
    construct->add_option("--density-csv", a.density, "Density trace CSV output");
    construct->add_option("--effort", a.effort, "Sphere-check effort level");

    auto* sample = app.add_subcommand("sample", "Sample Y_d(n, p)");
    common(sample, true);
    add_seed(sample, true);
    sample->add_option("--n", a.n, "Vertices")->required();
    sample->add_option("--p", a.p, "Facet probability");
    sample->add_option("--epsilon", a.epsilon, "Use p = epsilon * n^(-(d+1)/(2^(d+1)-2))");

    auto* check = app.add_subcommand("check", "Verify that a complex is a sphere");
    common(check, false);
    check->add_option("--in", a.in, "Complex JSON")->required();
    check->add_option("--effort", a.effort, "Effort level (10^L shelling nodes)");

    auto* pipeline = app.add_subcommand("pipeline", "Sample, alter and keep rainbow facets");
    common(pipeline, true);
    add_seed(pipeline, true);
    pipeline->add_option("--n", a.n, "Vertices")->required();
    pipeline->add_option("--epsilon", a.epsilon, "Default 0.3 / C");
    pipeline->add_option("--catalog", a.catalog, "Catalog JSON")->required();
    pipeline->add_option("--m-max", a.m_max, "Largest allowed catalog facet count (0: any)");
    pipeline->add_option("--report", a.report, "Report JSON output ('-' for stdout)");

    auto* witness = app.add_subcommand("witness", "Find an iterated-suspension sphere");
    common(witness, false);
    witness->add_option("--in", a.in, "Host complex JSON")->required();
    witness->add_option("--pairs", a.pairs, "Vertex pairs tried per level")->capture_default_str();
    witness->add_flag("--min-density-check", a.min_density, "Record and use the pair-count bookkeeping");
    witness->add_option("--effort", a.effort, "Sphere-check effort level");

    auto* bounds = app.add_subcommand("bounds", "Exponents and counting bounds");
    common(bounds, true);
    bounds->add_option("--n", a.bound_n, "Vertex count");
    bounds->add_option("--m", a.bound_m, "Facet count");
    bounds->add_option("--C", a.c, "Class growth constant")->capture_default_str();

    auto* embed = app.add_subcommand("embed-count", "Count embedded copies of a pattern");
    common(embed, false);
    embed->add_option("--host", a.host, "Host complex JSON")->required();
    embed->add_option("--pattern", a.pattern, "Pattern complex JSON")->required();
    embed->add_option("--limit", a.limit, "Stop after this many copies");

    auto* census = app.add_subcommand("census", "Enumerate small spheres");
    census->add_option("kind", a.census_kind, "s2 or 2lc")->required()->check(CLI::IsMember({"s2", "2lc"}));
    common(census, true);
    add_seed(census, false);
    census->add_option("--max-n", a.max_n, "Largest vertex count (s2)")->capture_default_str();
    census->add_option("--method", a.method, "grow (n <= 9) or split (n <= 12)")
        ->capture_default_str()
        ->check(CLI::IsMember({"grow", "split"}));
    census->add_option("--catalog-out", a.catalog_out, "Write the spheres as a catalog (split only)");
    census->add_option("--m", a.m, "Facet count (2lc)");
    census->add_option("--budget", a.budget, "Samples (2lc)")->capture_default_str();
    census->add_flag("--lc", a.lc, "LC instead of 2-LC");

    auto* sweep_cmd = app.add_subcommand("sweep", "Pipeline over several n; log-log slope");
    common(sweep_cmd, true);
    add_seed(sweep_cmd, true);
    sweep_cmd->add_option("--n", a.ns, "Vertex counts")->required()->delimiter(',');
    sweep_cmd->add_option("--reps", a.reps, "Seeds per n")->capture_default_str()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--epsilon", a.epsilon, "Default 0.3 / C");
    sweep_cmd->add_option("--catalog", a.catalog, "Catalog JSON (default: the cross-polytope)");
    sweep_cmd->add_option("--summary", a.summary, "Summary JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kValidation;
    }

    Outcome o;
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    try {
        if (a.effort < 0) {
            a.effort = default_effort();
        }
        if (seed) {
            a.seed = *seed;
            o.seed = seed;
        }
        if (command == "construct") {
            cmd_construct(a, o, seed.has_value());
        } else if (command == "sample") {
            cmd_sample(a, o);
        } else if (command == "check") {
            cmd_check(a, o);
        } else if (command == "pipeline") {
            cmd_pipeline(a, o);
        } else if (command == "witness") {
            cmd_witness(a, o);
        } else if (command == "bounds") {
            cmd_bounds(a, o);
        } else if (command == "embed-count") {
            cmd_embed_count(a, o);
        } else if (command == "census") {
            cmd_census(a, o, seed.has_value());
        } else if (command == "sweep") {
            cmd_sweep(a, o, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const ComplexError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return o.code != kOk ? o.code : kFailure;
    }

    try {
        for (const auto& [path, text] : o.files) {
            write_text_file(path, text);
        }
        if (!a.manifest.empty()) {
            json params = json::object();
            record_params(sub, params);
            json outputs = json::object();
            for (const auto& [path, text] : o.files) {
                outputs[path] = sha256_hex(text);
            }
            if (!o.stdout_text.empty()) {
                outputs["<stdout>"] = sha256_hex(o.stdout_text);
            }
            json manifest{{"format", kManifestFormat},
                          {"command", command},
                          {"argv", args},
                          {"params", params},
                          {"seed", o.seed ? json(*o.seed) : json(nullptr)},
                          {"inputs", o.inputs},
                          {"outputs", outputs},
                          {"exit_code", o.code}};
            write_json_file(a.manifest, manifest);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    out << o.stdout_text;
    return o.code;
}

} // namespace turan::cli
