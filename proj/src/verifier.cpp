#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "shadowlab/binom.hpp"
#include "shadowlab/error.hpp"
#include "shadowlab/level.hpp"
#include "shadowlab/verifier.hpp"

namespace shadowlab {

namespace {

using nlohmann::json;

struct Partial {
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::uint64_t equality = 0;
    std::vector<RecordedInstance> counterexamples;
    std::vector<RecordedInstance> witnesses;
    std::vector<RecordedInstance> exploratory;
};

void keep(std::vector<RecordedInstance> &into, std::size_t limit, InstanceKey key, const Instance &inst,
          const std::string &detail)
{
    if (into.size() < limit)
        into.push_back({key, inst, detail});
}

void append(std::vector<RecordedInstance> &into, std::vector<RecordedInstance> &from, std::size_t limit)
{
    for (auto &r : from) {
        if (into.size() >= limit)
            break;
        into.push_back(std::move(r));
    }
}

Report run(const Claim &claim, const InstanceStream &stream, std::string space, bool exploratory,
           const VerifyOptions &options)
{
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.claim = std::string(claim.id());
    report.space = std::move(space);
    report.exploratory = exploratory;

    const std::uint64_t units = stream.units();
    unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t blocks = std::min<std::uint64_t>(units, std::uint64_t{jobs} * 16);
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(blocks, 1)));

    std::vector<Partial> partials(static_cast<std::size_t>(blocks));
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        try {
            for (std::uint64_t b = next++; b < blocks; b = next++) {
                Partial &p = partials[static_cast<std::size_t>(b)];
                const std::uint64_t lo = b * units / blocks, hi = (b + 1) * units / blocks;
                for (std::uint64_t u = lo; u < hi; ++u)
                    stream.visit(u, [&](InstanceKey key, const Instance &inst) {
                        const Outcome o = claim.check(inst);
                        switch (o.status) {
                        case Outcome::Status::skipped:
                            ++p.skipped;
                            break;
                        case Outcome::Status::holds:
                            ++p.checked;
                            break;
                        case Outcome::Status::violated:
                            ++p.checked;
                            keep(exploratory ? p.exploratory : p.counterexamples, options.counterexample_limit,
                                 key, inst, o.detail);
                            break;
                        }
                        if (o.equality) {
                            ++p.equality;
                            keep(p.witnesses, options.witness_limit, key, inst, o.detail);
                        }
                    });
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
            next = blocks;
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned i = 0; i < jobs; ++i)
            threads.emplace_back(worker);
        for (auto &t : threads)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);

    for (auto &p : partials) {
        report.checked += p.checked;
        report.skipped += p.skipped;
        report.equality_count += p.equality;
        append(report.counterexamples, p.counterexamples, options.counterexample_limit);
        append(report.exploratory_violations, p.exploratory, options.counterexample_limit);
        append(report.equality_witnesses, p.witnesses, options.witness_limit);
    }
    if (report.checked == 0)
        report.notes.push_back("vacuous: no instance satisfies the hypotheses");
    if (exploratory)
        report.notes.push_back("exploratory: the space lies outside the stated range; violations do not fail");
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

constexpr std::uint64_t block = 4096;

/// Cross-intersecting pairs meeting both size thresholds (non-strictly).
class ThresholdPairStream : public InstanceStream {
public:
    ThresholdPairStream(int n, int a, int b, double u, double v, std::size_t min_a, std::size_t min_b,
                        std::uint64_t budget)
        : la_(n, a), lb_(n, b), u_(u), v_(v), min_a_(min_a), min_b_(min_b)
    {
        require(n >= a + b, ErrorCode::invalid_argument, "cross pairs need n >= a + b");
        require(la_.count() < 63, ErrorCode::budget_exceeded, "first level too large");
        a_total_ = std::uint64_t{1} << la_.count();
        require(a_total_ <= budget, ErrorCode::budget_exceeded,
                "cross pair space holds " + std::to_string(a_total_) + " first families, budget is " +
                    std::to_string(budget));
        disjoint_.resize(static_cast<std::size_t>(lb_.count()));
        for (int j = 0; j < lb_.count(); ++j)
            for (int i = 0; i < la_.count(); ++i)
                if (la_.set(i).disjoint(lb_.set(j)))
                    disjoint_[static_cast<std::size_t>(j)] |= LevelMask{1} << i;
        std::uint64_t total = 0;
        for (std::uint64_t am = 0; am < a_total_; ++am) {
            if (static_cast<std::size_t>(std::popcount(am)) < min_a_)
                continue;
            const int c = std::popcount(compatible(am));
            for (int j = static_cast<int>(min_b_); j <= c; ++j)
                total += static_cast<std::uint64_t>(binom(c, j));
            require(total <= budget, ErrorCode::budget_exceeded,
                    "cross pair space exceeds the budget of " + std::to_string(budget));
        }
        total_ = total;
    }

    std::uint64_t total() const { return total_; }

    LevelMask compatible(LevelMask a_mask) const
    {
        LevelMask out = 0;
        for (int j = 0; j < lb_.count(); ++j)
            if ((a_mask & disjoint_[static_cast<std::size_t>(j)]) == 0)
                out |= LevelMask{1} << j;
        return out;
    }

    std::uint64_t units() const override { return (a_total_ + block - 1) / block; }

    void visit(std::uint64_t unit, const std::function<void(InstanceKey, const Instance &)> &fn) const override
    {
        Instance inst;
        inst.params = {{"u", u_}, {"v", v_}};
        inst.families.resize(2);
        const std::uint64_t end = std::min(a_total_, (unit + 1) * block);
        for (std::uint64_t am = unit * block; am < end; ++am) {
            if (static_cast<std::size_t>(std::popcount(am)) < min_a_)
                continue;
            const LevelMask bmax = compatible(am);
            if (static_cast<std::size_t>(std::popcount(bmax)) < min_b_)
                continue;
            inst.families[0] = la_.to_family(am);
            std::uint64_t index = 0;
            LevelMask sub = 0;
            while (true) {
                if (static_cast<std::size_t>(std::popcount(sub)) >= min_b_) {
                    inst.families[1] = lb_.to_family(sub);
                    fn({am, index}, inst);
                }
                ++index;
                if (sub == bmax)
                    break;
                sub = (sub - bmax) & bmax;
            }
        }
    }

private:
    Level la_;
    Level lb_;
    double u_;
    double v_;
    std::size_t min_a_;
    std::size_t min_b_;
    std::uint64_t a_total_ = 0;
    std::uint64_t total_ = 0;
    std::vector<LevelMask> disjoint_;
};

std::size_t threshold_count(double t)
{
    if (t <= 0)
        return 0;
    return static_cast<std::size_t>(std::ceil(t - 1e-9 * std::max(1.0, t)));
}

json instance_to_json(const RecordedInstance &r)
{
    json j;
    j["key"] = {r.key.unit, r.key.sub};
    json fams = json::array();
    for (const auto &f : r.instance.families)
        fams.push_back(to_text(f));
    j["families"] = fams;
    json params = json::object();
    for (const auto &[k, v] : r.instance.params)
        params[k] = v;
    j["params"] = params;
    j["detail"] = r.detail;
    return j;
}

RecordedInstance instance_from_json(const json &j)
{
    RecordedInstance r;
    r.key = {j.at("key").at(0).get<std::uint64_t>(), j.at("key").at(1).get<std::uint64_t>()};
    for (const auto &f : j.at("families"))
        r.instance.families.push_back(parse_family(f.get<std::string>()));
    for (const auto &[k, v] : j.at("params").items())
        r.instance.params[k] = v.get<double>();
    r.detail = j.value("detail", "");
    return r;
}

json list_to_json(const std::vector<RecordedInstance> &list)
{
    json out = json::array();
    for (const auto &r : list)
        out.push_back(instance_to_json(r));
    return out;
}

std::vector<RecordedInstance> list_from_json(const json &j, const char *key)
{
    std::vector<RecordedInstance> out;
    if (j.contains(key))
        for (const auto &e : j.at(key))
            out.push_back(instance_from_json(e));
    return out;
}

std::string cross_space_text(int n, int a, int b)
{
    return "all-cross-pairs:a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",n=" + std::to_string(n);
}

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

} // namespace

Report verify(Claim &claim, const InstanceSpace &space, const VerifyOptions &options)
{
    require(claim.supports(space.kind), ErrorCode::invalid_argument,
            "claim " + std::string(claim.id()) + " does not run on " + std::string(to_string(space.kind)));
    auto stream = open_space(space, options.budget);
    claim.prepare(space);
    Report report = run(claim, *stream, space.describe(), claim.exploratory(space), options);
    report.expected_boundary = claim.boundary_records(space);
    return report;
}

Report verify(std::string_view claim_id, const InstanceSpace &space, const VerifyOptions &options)
{
    auto claim = make_claim(claim_id);
    if (claim_id == "cross-stability" && space.kind == SpaceKind::all_cross_pairs && space.has("u") &&
        space.has("v"))
        return verify_cross_pair_space(static_cast<int>(space.get("n")), static_cast<int>(space.get("a")),
                                       static_cast<int>(space.get("b")), static_cast<double>(space.get("u")),
                                       static_cast<double>(space.get("v")), options);
    return verify(*claim, space, options);
}

Report verify_cross_pair_space(int n, int a, int b, double u, double v, const VerifyOptions &options)
{
    require(a >= 1 && b >= 1 && n >= a + b, ErrorCode::out_of_range, "cross pairs need 1 <= a, b and n >= a + b");
    require(std::isfinite(u) && std::isfinite(v), ErrorCode::invalid_argument, "u and v must be finite");
    const double ta = gbinom(n - 1, a - 1) - gbinom(n - v - 1, a - 1) + gbinom(n - u - 1, n - a - 1);
    const double tb = gbinom(n - 1, b - 1) - gbinom(n - u - 1, b - 1) + gbinom(n - v - 1, n - b - 1);
    ThresholdPairStream stream(n, a, b, u, v, threshold_count(ta), threshold_count(tb), options.budget);

    auto claim = make_claim("cross-stability");
    const InstanceSpace space = InstanceSpace::parse(cross_space_text(n, a, b));
    claim->prepare(space);
    const bool exploratory = u < 3 || u > a || v < 3 || v > b;
    Report report = run(*claim, stream, space.describe(), exploratory, options);
    report.notes.insert(report.notes.begin(), "u=" + format_real(u) + ", v=" + format_real(v) + ": |A| >= " +
                                                  format_real(ta) + ", |B| >= " + format_real(tb) + ", " +
                                                  std::to_string(stream.total()) + " pairs expanded");
    if (u == 3 && v == 3)
        report.expected_boundary = claim->boundary_records(space);
    return report;
}

std::string to_json(const Report &report, int indent)
{
    json j;
    j["claim"] = report.claim;
    j["space"] = report.space;
    j["checked"] = report.checked;
    j["skipped"] = report.skipped;
    j["equality_count"] = report.equality_count;
    j["counterexamples"] = list_to_json(report.counterexamples);
    j["equality_witnesses"] = list_to_json(report.equality_witnesses);
    j["exploratory_violations"] = list_to_json(report.exploratory_violations);
    j["expected_boundary"] = report.expected_boundary;
    j["notes"] = report.notes;
    j["exploratory"] = report.exploratory;
    j["passed"] = report.passed();
    j["seconds"] = report.seconds;
    return j.dump(indent);
}

Report report_from_json(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        fail(ErrorCode::parse, std::string("report is not valid JSON: ") + e.what());
    }
    try {
        Report r;
        r.claim = j.at("claim").get<std::string>();
        r.space = j.at("space").get<std::string>();
        r.checked = j.at("checked").get<std::uint64_t>();
        r.skipped = j.at("skipped").get<std::uint64_t>();
        r.equality_count = j.value("equality_count", std::uint64_t{0});
        r.counterexamples = list_from_json(j, "counterexamples");
        r.equality_witnesses = list_from_json(j, "equality_witnesses");
        r.exploratory_violations = list_from_json(j, "exploratory_violations");
        r.expected_boundary = j.value("expected_boundary", std::vector<std::string>{});
        r.notes = j.value("notes", std::vector<std::string>{});
        r.exploratory = j.value("exploratory", false);
        r.seconds = j.value("seconds", 0.0);
        return r;
    } catch (const json::exception &e) {
        fail(ErrorCode::parse, std::string("malformed report: ") + e.what());
    }
}

bool replay_counterexample(const Report &report, std::size_t index)
{
    require(index < report.counterexamples.size(), ErrorCode::out_of_range, "no counterexample at that index");
    auto claim = make_claim(report.claim);
    claim->prepare(InstanceSpace::parse(report.space));
    return claim->check(report.counterexamples[index].instance).status == Outcome::Status::violated;
}

} // namespace shadowlab
