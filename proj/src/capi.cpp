#include "shadowlab/shadowlab.h"

#include <cstring>
#include <new>

#include <json.hpp>

#include "shadowlab/binom.hpp"
#include "shadowlab/constructions.hpp"
#include "shadowlab/diversity.hpp"
#include "shadowlab/error.hpp"
#include "shadowlab/family.hpp"
#include "shadowlab/orders.hpp"
#include "shadowlab/verifier.hpp"

struct sl_family {
    shadowlab::Family family;
};

namespace {

using shadowlab::ErrorCode;

thread_local std::string last_error;

sl_status to_status(ErrorCode code)
{
    switch (code) {
    case ErrorCode::invalid_argument: return SL_INVALID_ARGUMENT;
    case ErrorCode::out_of_range: return SL_OUT_OF_RANGE;
    case ErrorCode::parse: return SL_PARSE;
    case ErrorCode::budget_exceeded: return SL_BUDGET_EXCEEDED;
    case ErrorCode::unknown_claim: return SL_UNKNOWN_CLAIM;
    case ErrorCode::io: return SL_IO;
    case ErrorCode::internal: return SL_INTERNAL;
    }
    return SL_INTERNAL;
}

template <class Fn>
sl_status guarded(Fn &&fn)
{
    try {
        last_error.clear();
        fn();
        return SL_OK;
    } catch (const shadowlab::Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return SL_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return SL_INTERNAL;
    }
}

char *dup(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void *p, const char *what)
{
    if (p == nullptr)
        shadowlab::fail(ErrorCode::invalid_argument, std::string(what) + " is null");
}

sl_family *wrap(shadowlab::Family f) { return new sl_family{std::move(f)}; }

} // namespace

extern "C" {

const char *sl_version(void) { return "0.1.0"; }

const char *sl_status_name(sl_status status)
{
    switch (status) {
    case SL_OK: return "ok";
    case SL_INVALID_ARGUMENT: return "invalid_argument";
    case SL_OUT_OF_RANGE: return "out_of_range";
    case SL_PARSE: return "parse";
    case SL_BUDGET_EXCEEDED: return "budget_exceeded";
    case SL_UNKNOWN_CLAIM: return "unknown_claim";
    case SL_IO: return "io";
    case SL_INTERNAL: return "internal";
    }
    return "unknown";
}

const char *sl_last_error(void) { return last_error.c_str(); }

void sl_free_string(char *s) { std::free(s); }

sl_status sl_family_parse(const char *text, sl_family **out)
{
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = wrap(shadowlab::parse_family(text));
    });
}

sl_status sl_family_from_words(int n, const uint64_t *words, size_t count, int k, sl_family **out)
{
    return guarded([&] {
        need(out, "out");
        if (count > 0)
            need(words, "words");
        std::vector<shadowlab::SetWord> members;
        members.reserve(count);
        for (size_t i = 0; i < count; ++i)
            members.emplace_back(words[i]);
        std::optional<int> tag;
        if (k >= 0)
            tag = k;
        *out = wrap(shadowlab::Family(n, std::move(members), tag));
    });
}

sl_status sl_family_to_text(const sl_family *f, char **out)
{
    return guarded([&] {
        need(f, "family");
        need(out, "out");
        *out = dup(shadowlab::to_text(f->family));
    });
}

void sl_family_free(sl_family *f) { delete f; }

size_t sl_family_size(const sl_family *f) { return f ? f->family.size() : 0; }

int sl_family_ground_size(const sl_family *f) { return f ? f->family.ground_size() : 0; }

int sl_family_uniformity(const sl_family *f)
{
    if (!f)
        return -1;
    auto k = f->family.uniformity();
    return k ? *k : -1;
}

size_t sl_family_words(const sl_family *f, uint64_t *out, size_t capacity)
{
    if (!f)
        return 0;
    size_t i = 0;
    for (auto s : f->family) {
        if (i < capacity && out)
            out[i] = s.bits();
        ++i;
    }
    return i;
}

sl_status sl_construct(const char *name, const char *const *keys, const long long *values, size_t count,
                       sl_family **out)
{
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        auto which = shadowlab::construction_from_string(name);
        if (!which)
            shadowlab::fail(ErrorCode::invalid_argument, std::string("unknown construction '") + name + "'");
        shadowlab::ConstructionSpec spec{*which, {}};
        for (size_t i = 0; i < count; ++i) {
            need(keys[i], "key");
            spec.params[keys[i]] = values[i];
        }
        *out = wrap(shadowlab::build(spec));
    });
}

sl_status sl_shadow(const sl_family *f, int level, sl_family **out)
{
    return guarded([&] {
        need(f, "family");
        need(out, "out");
        *out = wrap(shadowlab::shadow(f->family, level));
    });
}

sl_status sl_diversity(const sl_family *f, const char *metric, long long param, char **json_out)
{
    return guarded([&] {
        need(f, "family");
        need(metric, "metric");
        need(json_out, "json_out");
        const std::string m = metric;
        shadowlab::DiversityValue d;
        if (m == "gamma")
            d = shadowlab::diversity(f->family);
        else if (m == "s")
            d = shadowlab::s_diversity(f->family, static_cast<int>(param));
        else if (m == "kk")
            d = shadowlab::kk_diversity(f->family, static_cast<int>(param));
        else if (m == "colex")
            d = shadowlab::colex_diversity(f->family, param);
        else
            shadowlab::fail(ErrorCode::invalid_argument, "unknown metric '" + m + "'");
        *json_out = dup(shadowlab::to_json(d));
    });
}

sl_status sl_shift_ij(const sl_family *f, int i, int j, sl_family **out)
{
    return guarded([&] {
        need(f, "family");
        need(out, "out");
        *out = wrap(shadowlab::shift_ij(f->family, i, j));
    });
}

sl_status sl_daykin_shift(const sl_family *f, uint64_t u, uint64_t v, sl_family **out)
{
    return guarded([&] {
        need(f, "family");
        need(out, "out");
        *out = wrap(shadowlab::daykin_shift(f->family, shadowlab::SetWord(u), shadowlab::SetWord(v)));
    });
}

sl_status sl_shift_to_shifted(const sl_family *f, sl_family **out, char **trace_json)
{
    return guarded([&] {
        need(f, "family");
        need(out, "out");
        auto r = shadowlab::shift_to_shifted(f->family);
        if (trace_json)
            *trace_json = dup(shadowlab::trace_to_json(r.trace));
        *out = wrap(std::move(r.family));
    });
}

sl_status sl_compress_to_colex(const sl_family *f, sl_family **out, char **trace_json)
{
    return guarded([&] {
        need(f, "family");
        need(out, "out");
        auto r = shadowlab::compress_to_colex(f->family);
        if (trace_json) {
            auto j = nlohmann::json::parse(shadowlab::trace_to_json(r.trace));
            j["shadow_sizes"] = r.shadow_sizes;
            *trace_json = dup(j.dump());
        }
        *out = wrap(std::move(r.family));
    });
}

sl_status sl_bound(const char *name, const char *const *keys, const double *values, size_t count,
                   double *value_out, char **exact_out)
{
    return guarded([&] {
        need(name, "name");
        need(value_out, "value_out");
        auto which = shadowlab::bound_from_string(name);
        if (!which)
            shadowlab::fail(ErrorCode::invalid_argument, std::string("unknown bound '") + name + "'");
        shadowlab::BoundParams params;
        for (size_t i = 0; i < count; ++i) {
            need(keys[i], "key");
            params[keys[i]] = values[i];
        }
        const auto v = shadowlab::evaluate_bound(*which, params);
        *value_out = v.value;
        if (exact_out)
            *exact_out = v.exact ? dup(shadowlab::to_string(*v.exact)) : nullptr;
    });
}

sl_status sl_influence(const sl_family *f, int element, double *out)
{
    return guarded([&] {
        need(f, "family");
        need(out, "out");
        *out = shadowlab::influence(f->family, element);
    });
}

sl_status sl_total_influence(const sl_family *f, double *out)
{
    return guarded([&] {
        need(f, "family");
        need(out, "out");
        *out = shadowlab::total_influence(f->family);
    });
}

sl_status sl_claim_ids(char **json_out)
{
    return guarded([&] {
        need(json_out, "json_out");
        *json_out = dup(nlohmann::json(shadowlab::claim_ids()).dump());
    });
}

sl_status sl_verify(const char *claim, const char *space, uint64_t seed, unsigned jobs, uint64_t budget,
                    char **report_json, int *passed_out)
{
    return guarded([&] {
        need(claim, "claim");
        need(space, "space");
        need(report_json, "report_json");
        auto parsed = shadowlab::InstanceSpace::parse(space);
        if (seed != 0 && parsed.kind == shadowlab::SpaceKind::random_sample)
            parsed.params["seed"] = {static_cast<long long>(seed), static_cast<long long>(seed)};
        shadowlab::VerifyOptions opt;
        opt.jobs = jobs;
        if (budget != 0)
            opt.budget = budget;
        const auto report = shadowlab::verify(claim, parsed, opt);
        *report_json = dup(shadowlab::to_json(report));
        if (passed_out)
            *passed_out = report.passed() ? 1 : 0;
    });
}

sl_status sl_verify_cross_pairs(int n, int a, int b, double u, double v, unsigned jobs, uint64_t budget,
                                char **report_json, int *passed_out)
{
    return guarded([&] {
        need(report_json, "report_json");
        shadowlab::VerifyOptions opt;
        opt.jobs = jobs;
        if (budget != 0)
            opt.budget = budget;
        const auto report = shadowlab::verify_cross_pair_space(n, a, b, u, v, opt);
        *report_json = dup(shadowlab::to_json(report));
        if (passed_out)
            *passed_out = report.passed() ? 1 : 0;
    });
}

sl_status sl_replay(const char *report_json, size_t index, int *still_fails_out)
{
    return guarded([&] {
        need(report_json, "report_json");
        need(still_fails_out, "still_fails_out");
        const auto report = shadowlab::report_from_json(report_json);
        *still_fails_out = shadowlab::replay_counterexample(report, index) ? 1 : 0;
    });
}

} // extern "C"
