// Command-line front end. Everything goes through the C interface.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shadowlab/shadowlab.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 2;
constexpr int exit_budget = 3;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_software = 70;
constexpr int exit_io = 74;

struct Failure {
    int code;
    std::string message;
};

int exit_code_for(sl_status s)
{
    switch (s) {
    case SL_OK: return exit_ok;
    case SL_INVALID_ARGUMENT:
    case SL_OUT_OF_RANGE:
    case SL_UNKNOWN_CLAIM: return exit_usage;
    case SL_PARSE: return exit_data;
    case SL_BUDGET_EXCEEDED: return exit_budget;
    case SL_IO: return exit_io;
    case SL_INTERNAL: return exit_software;
    }
    return exit_software;
}

void check(sl_status s)
{
    if (s != SL_OK)
        throw Failure{exit_code_for(s), std::string(sl_status_name(s)) + ": " + sl_last_error()};
}

struct FamilyDeleter {
    void operator()(sl_family *f) const { sl_family_free(f); }
};
using FamilyPtr = std::unique_ptr<sl_family, FamilyDeleter>;

struct StringDeleter {
    void operator()(char *s) const { sl_free_string(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string read_input(const std::string &path)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{exit_io, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw Failure{exit_io, "cannot read " + path};
    return buf.str();
}

void write_output(const std::string &path, const std::string &text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw Failure{exit_io, "cannot write to standard output"};
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out)
        throw Failure{exit_io, "cannot write " + path};
}

FamilyPtr load_family(const std::string &path)
{
    const std::string text = read_input(path);
    sl_family *f = nullptr;
    check(sl_family_parse(text.c_str(), &f));
    return FamilyPtr(f);
}

std::string family_text(const sl_family *f)
{
    char *s = nullptr;
    check(sl_family_to_text(f, &s));
    return OwnedString(s).get();
}

std::string take(char *s) { return OwnedString(s).get(); }

/// Leftover "--key value" or "--key=value" pairs.
std::vector<std::pair<std::string, std::string>> key_values(const std::vector<std::string> &rest)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        std::string arg = rest[i];
        if (arg.rfind("--", 0) != 0 || arg.size() < 3)
            throw Failure{exit_usage, "expected --key value, got '" + arg + "'"};
        arg = arg.substr(2);
        const auto eq = arg.find('=');
        if (eq != std::string::npos) {
            out.emplace_back(arg.substr(0, eq), arg.substr(eq + 1));
        } else {
            if (i + 1 >= rest.size())
                throw Failure{exit_usage, "missing value for --" + arg};
            out.emplace_back(arg, rest[++i]);
        }
    }
    return out;
}

template <class T>
T parse_number(const std::string &key, const std::string &text)
{
    std::istringstream in(text);
    T v{};
    in >> v;
    if (!in || !in.eof())
        throw Failure{exit_usage, "--" + key + " needs a number, got '" + text + "'"};
    return v;
}

std::uint64_t parse_set(const std::string &text)
{
    std::uint64_t w = 0;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        const int e = parse_number<int>("set", item);
        if (e < 1 || e > 64)
            throw Failure{exit_usage, "set element out of range: " + item};
        w |= std::uint64_t{1} << (e - 1);
    }
    return w;
}

void emit_trace(const std::string &trace_path, const std::string &json)
{
    if (trace_path.empty())
        std::cerr << json << '\n';
    else
        write_output(trace_path, json + "\n");
}

std::uint64_t budget_from_env()
{
    const char *env = std::getenv("SHADOWLAB_BUDGET");
    if (env == nullptr || *env == '\0')
        return 0;
    return parse_number<std::uint64_t>("SHADOWLAB_BUDGET", env);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"shadowlab: shadows, shifts, diversity and a verifier for small set families"};
    app.require_subcommand(1);

    // construct
    auto *construct = app.add_subcommand("construct", "build a named family (params as --key value)");
    std::string construct_name;
    construct->add_option("name", construct_name, "star, full_level, L_uv, KK_xy, A2, rwise_example, katona_t, "
                                                  "kalai_circle, lex_seg, colex_seg")
        ->required();
    construct->allow_extras();

    // shadow
    auto *shadow = app.add_subcommand("shadow", "l-shadow of a uniform family");
    int shadow_level = -1;
    std::string shadow_in;
    shadow->add_option("-l,--level", shadow_level, "target set size (default k-1)");
    shadow->add_option("file", shadow_in, "input family (default stdin)");

    // diversity
    auto *div = app.add_subcommand("diversity", "diversity metrics as JSON {metric, value, witness}");
    std::string metric = "gamma";
    long long div_s = -1, div_n = -1, div_t = -1;
    std::string div_in;
    div->add_option("--metric", metric, "gamma, s, kk or colex")->check(CLI::IsMember({"gamma", "s", "kk", "colex"}));
    div->add_option("--s", div_s, "s for the s metric");
    div->add_option("--n", div_n, "n for the kk metric");
    div->add_option("--t", div_t, "t for the colex metric");
    div->add_option("file", div_in, "input family (default stdin)");

    // shift / compress
    auto *shift = app.add_subcommand("shift", "shifting operators; family on stdout, trace on stderr");
    std::string op;
    int shift_i = 0, shift_j = 0;
    std::string shift_u, shift_v, shift_in, trace_path;
    shift->add_option("--op", op, "ij, daykin, to-shifted or to-colex")
        ->required()
        ->check(CLI::IsMember({"ij", "daykin", "to-shifted", "to-colex"}));
    shift->add_option("--i", shift_i, "i for ij");
    shift->add_option("--j", shift_j, "j for ij");
    shift->add_option("--U", shift_u, "U for daykin, comma separated");
    shift->add_option("--V", shift_v, "V for daykin, comma separated");
    shift->add_option("--trace", trace_path, "write the trace JSON here instead of stderr");
    shift->add_option("file", shift_in, "input family (default stdin)");

    auto *compress = app.add_subcommand("compress", "colex compression (same as shift --op to-colex)");
    std::string compress_in, compress_trace;
    compress->add_option("--trace", compress_trace, "write the trace JSON here instead of stderr");
    compress->add_option("file", compress_in, "input family (default stdin)");

    // bound
    auto *bound = app.add_subcommand("bound", "evaluate a named bound (params as --key value)");
    std::string bound_name;
    bound->add_option("--name", bound_name, "bound name")->required();
    bound->allow_extras();

    // influence
    auto *infl = app.add_subcommand("influence", "influences of a family in 2^[n]");
    int infl_i = 0;
    std::string infl_in;
    infl->add_option("-i,--element", infl_i, "single coordinate");
    infl->add_option("file", infl_in, "input family (default stdin)");

    // verify
    auto *verify = app.add_subcommand("verify", "check a claim over an instance space");
    std::string claim, space, out_path;
    std::uint64_t seed = 0, budget = 0;
    unsigned jobs = 0;
    bool list = false;
    verify->add_option("--claim", claim, "claim id");
    verify->add_option("--space", space, "instance space, e.g. all-families:n=6,k=3");
    verify->add_option("--seed", seed, "seed for random-sample spaces");
    verify->add_option("--jobs", jobs, "worker threads (default: all cores)");
    verify->add_option("--budget", budget, "maximum number of instances (default $SHADOWLAB_BUDGET or 2^26)");
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_flag("--list", list, "print the claim ids");

    // replay
    auto *replay = app.add_subcommand("replay", "re-check a counterexample from a report; exit 2 if it still fails");
    std::string replay_in;
    std::size_t replay_index = 0;
    replay->add_option("report", replay_in, "report JSON (default stdin)");
    replay->add_option("--index", replay_index, "counterexample index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*construct) {
            std::vector<std::string> keys;
            std::vector<long long> values;
            for (auto &[k, v] : key_values(construct->remaining())) {
                keys.push_back(k);
                values.push_back(parse_number<long long>(k, v));
            }
            std::vector<const char *> key_ptrs;
            for (auto &k : keys)
                key_ptrs.push_back(k.c_str());
            sl_family *f = nullptr;
            check(sl_construct(construct_name.c_str(), key_ptrs.data(), values.data(), keys.size(), &f));
            FamilyPtr owned(f);
            write_output("", family_text(f));
        } else if (*shadow) {
            auto f = load_family(shadow_in);
            int level = shadow_level;
            if (level < 0) {
                const int k = sl_family_uniformity(f.get());
                if (k < 1)
                    throw Failure{exit_usage, "give -l for a family that is not uniform of size >= 1"};
                level = k - 1;
            }
            sl_family *s = nullptr;
            check(sl_shadow(f.get(), level, &s));
            FamilyPtr owned(s);
            write_output("", family_text(s));
        } else if (*div) {
            auto f = load_family(div_in);
            long long param = 0;
            if (metric == "s")
                param = div_s;
            else if (metric == "kk")
                param = div_n;
            else if (metric == "colex")
                param = div_t;
            if (metric != "gamma" && param < 0)
                throw Failure{exit_usage, "metric " + metric + " needs --" +
                                              (metric == "s" ? "s" : metric == "kk" ? "n" : "t")};
            char *json = nullptr;
            check(sl_diversity(f.get(), metric.c_str(), param, &json));
            write_output("", take(json) + "\n");
        } else if (*shift || *compress) {
            const bool is_compress = compress->parsed();
            auto f = load_family(is_compress ? compress_in : shift_in);
            const std::string which = is_compress ? "to-colex" : op;
            const std::string trace_to = is_compress ? compress_trace : trace_path;
            sl_family *r = nullptr;
            char *trace = nullptr;
            if (which == "ij") {
                check(sl_shift_ij(f.get(), shift_i, shift_j, &r));
            } else if (which == "daykin") {
                check(sl_daykin_shift(f.get(), parse_set(shift_u), parse_set(shift_v), &r));
            } else if (which == "to-shifted") {
                check(sl_shift_to_shifted(f.get(), &r, &trace));
            } else {
                check(sl_compress_to_colex(f.get(), &r, &trace));
            }
            FamilyPtr owned(r);
            write_output("", family_text(r));
            if (trace != nullptr)
                emit_trace(trace_to, take(trace));
        } else if (*bound) {
            std::vector<std::string> keys;
            std::vector<double> values;
            for (auto &[k, v] : key_values(bound->remaining())) {
                keys.push_back(k);
                values.push_back(parse_number<double>(k, v));
            }
            std::vector<const char *> key_ptrs;
            for (auto &k : keys)
                key_ptrs.push_back(k.c_str());
            double value = 0;
            char *exact = nullptr;
            check(sl_bound(bound_name.c_str(), key_ptrs.data(), values.data(), keys.size(), &value, &exact));
            if (exact != nullptr) {
                write_output("", take(exact) + "\n");
            } else {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.15g\n", value);
                write_output("", buf);
            }
        } else if (*infl) {
            auto f = load_family(infl_in);
            char buf[64];
            if (infl_i != 0) {
                double v = 0;
                check(sl_influence(f.get(), infl_i, &v));
                std::snprintf(buf, sizeof buf, "%.17g\n", v);
                write_output("", buf);
            } else {
                std::string out = "{\"influences\":[";
                for (int e = 1; e <= sl_family_ground_size(f.get()); ++e) {
                    double v = 0;
                    check(sl_influence(f.get(), e, &v));
                    std::snprintf(buf, sizeof buf, "%s%.17g", e == 1 ? "" : ",", v);
                    out += buf;
                }
                double total = 0;
                check(sl_total_influence(f.get(), &total));
                std::snprintf(buf, sizeof buf, "],\"total\":%.17g}\n", total);
                write_output("", out + buf);
            }
        } else if (*verify) {
            if (list) {
                char *ids = nullptr;
                check(sl_claim_ids(&ids));
                write_output("", take(ids) + "\n");
                return exit_ok;
            }
            if (claim.empty() || space.empty())
                throw Failure{exit_usage, "verify needs --claim and --space (or --list)"};
            if (budget == 0)
                budget = budget_from_env();
            char *report = nullptr;
            int passed = 0;
            check(sl_verify(claim.c_str(), space.c_str(), seed, jobs, budget, &report, &passed));
            write_output(out_path, take(report) + "\n");
            return passed ? exit_ok : exit_counterexample;
        } else if (*replay) {
            const std::string text = read_input(replay_in);
            int still = 0;
            check(sl_replay(text.c_str(), replay_index, &still));
            write_output("", still ? "counterexample reproduced\n" : "counterexample no longer fails\n");
            return still ? exit_counterexample : exit_ok;
        }
    } catch (const Failure &f) {
        std::cerr << "shadowlab: " << f.message << '\n';
        return f.code;
    }
    return exit_ok;
}
