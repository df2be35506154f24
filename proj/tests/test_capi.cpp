// Exercises the shared library through the C header only.
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "shadowlab/shadowlab.h"

namespace {

struct Owned {
    sl_family *f = nullptr;
    ~Owned() { sl_family_free(f); }
};

std::string take(char *s)
{
    std::string out = s ? s : "";
    sl_free_string(s);
    return out;
}

sl_family *construct(const char *name, std::vector<const char *> keys, std::vector<long long> values)
{
    sl_family *f = nullptr;
    REQUIRE(sl_construct(name, keys.data(), values.data(), keys.size(), &f) == SL_OK);
    return f;
}

} // namespace

TEST_CASE("status names and version")
{
    CHECK(std::strlen(sl_version()) > 0);
    CHECK(std::string(sl_status_name(SL_OK)) == "ok");
    CHECK(std::string(sl_status_name(SL_BUDGET_EXCEEDED)) == "budget_exceeded");
}

TEST_CASE("family handles")
{
    Owned f;
    REQUIRE(sl_family_parse("n=4 k=2\n1,2\n3,4\n1,2\n", &f.f) == SL_OK);
    CHECK(sl_family_size(f.f) == 2);
    CHECK(sl_family_ground_size(f.f) == 4);
    CHECK(sl_family_uniformity(f.f) == 2);
    uint64_t words[4] = {};
    CHECK(sl_family_words(f.f, words, 4) == 2);
    CHECK(words[0] == 0b0011);
    CHECK(words[1] == 0b1100);
    char *text = nullptr;
    REQUIRE(sl_family_to_text(f.f, &text) == SL_OK);
    CHECK(take(text) == "n=4 k=2\n1,2\n3,4\n");

    Owned g;
    const uint64_t ws[] = {1, 3};
    REQUIRE(sl_family_from_words(3, ws, 2, -1, &g.f) == SL_OK);
    CHECK(sl_family_uniformity(g.f) == -1);

    Owned bad;
    CHECK(sl_family_parse("n=3 k=2\n1,7\n", &bad.f) != SL_OK);
    CHECK(bad.f == nullptr);
    CHECK(std::strlen(sl_last_error()) > 0);
    CHECK(sl_family_from_words(3, ws, 2, 2, &bad.f) == SL_INVALID_ARGUMENT);
}

TEST_CASE("constructions, shadows and diversity")
{
    Owned l;
    l.f = construct("L_uv", {"n", "k", "u", "v"}, {7, 3, 3, 3});
    CHECK(sl_family_size(l.f) == 13);
    char *json = nullptr;
    REQUIRE(sl_diversity(l.f, "gamma", 0, &json) == SL_OK);
    const auto d = nlohmann::json::parse(take(json));
    CHECK(d["value"] == 1);

    Owned kk;
    kk.f = construct("KK_xy", {"n", "k", "x", "y"}, {6, 3, 2, 3});
    Owned sh;
    REQUIRE(sl_shadow(kk.f, 2, &sh.f) == SL_OK);
    CHECK(sl_family_size(sh.f) == 17);
    REQUIRE(sl_diversity(kk.f, "kk", 6, &json) == SL_OK);
    CHECK(nlohmann::json::parse(take(json))["value"] == 1);
    CHECK(sl_diversity(kk.f, "bogus", 0, &json) == SL_INVALID_ARGUMENT);

    sl_family *none = nullptr;
    CHECK(sl_construct("nope", nullptr, nullptr, 0, &none) == SL_INVALID_ARGUMENT);
}

TEST_CASE("shifts and compression")
{
    Owned f;
    REQUIRE(sl_family_parse("n=3 k=2\n2,3\n", &f.f) == SL_OK);
    Owned s;
    REQUIRE(sl_shift_ij(f.f, 1, 2, &s.f) == SL_OK);
    uint64_t w = 0;
    sl_family_words(s.f, &w, 1);
    CHECK(w == 0b101);

    Owned d;
    Owned five;
    REQUIRE(sl_family_parse("n=5 k=3\n3,4,5\n", &five.f) == SL_OK);
    REQUIRE(sl_daykin_shift(five.f, 0b00011, 0b01100, &d.f) == SL_OK);
    sl_family_words(d.f, &w, 1);
    CHECK(w == 0b10011);

    Owned lex, colex;
    lex.f = construct("lex_seg", {"n", "k", "t"}, {5, 2, 6});
    char *trace = nullptr;
    REQUIRE(sl_compress_to_colex(lex.f, &colex.f, &trace) == SL_OK);
    const auto t = nlohmann::json::parse(take(trace));
    CHECK(t.contains("steps"));
    CHECK(t.contains("shadow_sizes"));
    uint64_t ws[6];
    REQUIRE(sl_family_words(colex.f, ws, 6) == 6);
    CHECK(ws[5] == 0b1100); // {3,4}: the sixth pair in colex

    Owned shifted;
    REQUIRE(sl_shift_to_shifted(f.f, &shifted.f, &trace) == SL_OK);
    sl_family_words(shifted.f, &w, 1);
    CHECK(w == 0b011);
    sl_free_string(trace);
}

TEST_CASE("bounds and influences")
{
    const char *keys[] = {"m", "k"};
    const double vals[] = {20, 3};
    double v = 0;
    char *exact = nullptr;
    REQUIRE(sl_bound("kk", keys, vals, 2, &v, &exact) == SL_OK);
    CHECK(v == doctest::Approx(15));
    CHECK(take(exact) == "15");
    const double frac[] = {4, 2};
    REQUIRE(sl_bound("kk", keys, frac, 2, &v, &exact) == SL_OK);
    CHECK(exact == nullptr);
    CHECK(sl_bound("missing", keys, vals, 2, &v, nullptr) == SL_INVALID_ARGUMENT);

    Owned maj;
    maj.f = construct("kalai_circle", {"n"}, {3});
    REQUIRE(sl_influence(maj.f, 2, &v) == SL_OK);
    CHECK(v == doctest::Approx(0.5));
    REQUIRE(sl_total_influence(maj.f, &v) == SL_OK);
    CHECK(v == doctest::Approx(1.5));
}

TEST_CASE("verification through the C API")
{
    char *ids = nullptr;
    REQUIRE(sl_claim_ids(&ids) == SL_OK);
    const auto list = nlohmann::json::parse(take(ids));
    CHECK(list.size() >= 20);

    char *report = nullptr;
    int passed = 0;
    REQUIRE(sl_verify("kruskal-katona", "all-families:n=5,k=2", 0, 2, 0, &report, &passed) == SL_OK);
    CHECK(passed == 1);
    const auto r = nlohmann::json::parse(take(report));
    CHECK(r["checked"].get<long long>() + r["skipped"].get<long long>() == 1024);

    CHECK(sl_verify("kruskal-katona", "all-families:n=6,k=3", 0, 1, 100, &report, &passed) == SL_BUDGET_EXCEEDED);
    CHECK(sl_verify("nope", "all-families:n=4,k=2", 0, 1, 0, &report, &passed) == SL_UNKNOWN_CLAIM);
    CHECK(sl_verify("kruskal-katona", "all-families:n=", 0, 1, 0, &report, &passed) == SL_PARSE);

    REQUIRE(sl_verify("lovasz-shadow", "random-sample:n=6,k=3,count=20", 9, 1, 0, &report, &passed) == SL_OK);
    const std::string a = take(report);
    REQUIRE(sl_verify("lovasz-shadow", "random-sample:n=6,k=3,count=20,seed=9", 0, 1, 0, &report, &passed) == SL_OK);
    auto ja = nlohmann::json::parse(a), jb = nlohmann::json::parse(take(report));
    ja.erase("seconds");
    jb.erase("seconds");
    CHECK(ja["checked"] == jb["checked"]);
    CHECK(ja["equality_count"] == jb["equality_count"]);

    REQUIRE(sl_verify_cross_pairs(6, 3, 3, 3, 3, 1, 0, &report, &passed) == SL_OK);
    CHECK(passed == 1);
    sl_free_string(report);

    int still = -1;
    CHECK(sl_replay("{}", 0, &still) != SL_OK);
}
