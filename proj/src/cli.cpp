#include "biharmonic/cli.hpp"

#include "biharmonic/classify.hpp"
#include "biharmonic/report.hpp"

#include <sstream>

namespace biharmonic {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitCertification = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitViolation = 5;

struct SweepCase {
    FamilyId id;
    FamilyParams params;
};

std::vector<SweepCase> theorem_41_cases(int n_min, int n_max)
{
    std::vector<SweepCase> cases;
    for (int n = std::max(2, n_min); n <= n_max; ++n)
        cases.push_back({FamilyId::sphere_g1, FamilyParams{.n = n}});
    for (int n = std::max(3, n_min); n <= n_max; ++n)
        for (int p = 2; 2 * p <= n + 1; ++p)
            cases.push_back({FamilyId::sphere_g2, FamilyParams{.n = n, .p = p}});
    for (int mult : {1, 2, 4, 8})
        cases.push_back({FamilyId::sphere_g3, FamilyParams{.mult = mult}});
    for (int n = std::max(5, n_min); n <= n_max; ++n) {
        if ((n - 1) % 2 != 0)
            continue;
        int half = (n - 1) / 2;
        for (int m1 = 1; 2 * m1 <= half; ++m1)
            cases.push_back(
                {FamilyId::sphere_g4, FamilyParams{.m1 = m1, .m2 = half - m1}});
    }
    for (int mult : {1, 2})
        cases.push_back({FamilyId::sphere_g6, FamilyParams{.mult = mult}});
    return cases;
}

std::vector<SweepCase> theorem_62_cases(int n_min, int n_max)
{
    std::vector<SweepCase> cases;
    for (int n = std::max(2, n_min); n <= n_max; ++n)
        for (int p = 0; 2 * p <= n - 1; ++p) {
            int q = n - 1 - p;
            if (q <= 0 || p > q)
                continue;
            cases.push_back({FamilyId::cp_a, FamilyParams{.p = p, .q = q}});
        }
    for (int n = std::max(2, n_min); n <= n_max; ++n)
        cases.push_back({FamilyId::cp_b, FamilyParams{.n = n}});
    for (int n = std::max(3, n_min); n <= n_max; ++n)
        cases.push_back({FamilyId::cp_c, FamilyParams{.n = n}});
    cases.push_back({FamilyId::cp_d, FamilyParams{}});
    cases.push_back({FamilyId::cp_e, FamilyParams{}});
    return cases;
}

std::vector<SweepCase> theorem_73_cases(int n_min, int n_max)
{
    std::vector<SweepCase> cases;
    for (int n = std::max(2, n_min); n <= n_max; ++n)
        cases.push_back({FamilyId::hp_geodesic_sphere, FamilyParams{.n = n}});
    for (int n = std::max(2, n_min); n <= n_max; ++n)
        cases.push_back({FamilyId::hp_cp_tube, FamilyParams{.n = n}});
    for (int n = std::max(2, n_min); n <= n_max; ++n)
        for (int k = 1; k <= n - 1; ++k)
            cases.push_back({FamilyId::hp_hpk_tube, FamilyParams{.n = n, .k = k}});
    return cases;
}

std::string group_key(FamilyId id)
{
    switch (id) {
    case FamilyId::sphere_g1: return "g=1";
    case FamilyId::sphere_g2: return "g=2";
    case FamilyId::sphere_g3: return "g=3";
    case FamilyId::sphere_g4: return "g=4";
    case FamilyId::sphere_g6: return "g=6";
    default: return family_name(id);
    }
}

RunOutcome sweep(const RunConfig& config)
{
    if (config.n_min > config.n_max)
        return {kExitParam, "error: empty sweep range\n"};
    std::vector<SweepCase> cases;
    if (config.theorem == "4.1")
        cases = theorem_41_cases(config.n_min, config.n_max);
    else if (config.theorem == "6.2")
        cases = theorem_62_cases(config.n_min, config.n_max);
    else if (config.theorem == "7.3")
        cases = theorem_73_cases(config.n_min, config.n_max);
    else
        return {kExitParam, "error: unknown sweep selector '" + config.theorem +
                                "' (expected 4.1, 6.2 or 7.3)\n"};

    struct GroupStats {
        int total = 0;
        int with_nonminimal = 0;
        int with_certificate = 0;
        int endpoint_errors = 0;
    };
    std::vector<std::pair<std::string, GroupStats>> groups;
    auto stats_for = [&](const std::string& key) -> GroupStats& {
        for (auto& [k, g] : groups)
            if (k == key)
                return g;
        groups.emplace_back(key, GroupStats{});
        return groups.back().second;
    };

    Json doc;
    doc["schema"] = 1;
    doc["sweep"] = config.theorem;
    doc["n_min"] = config.n_min;
    doc["n_max"] = config.n_max;
    doc["digits"] = config.digits;
    Json jcases = Json::array();
    for (const auto& c : cases) {
        GroupStats& g = stats_for(group_key(c.id));
        ++g.total;
        try {
            FamilySpec f = build_family(c.id, c.params);
            ClassificationResult r = classify(f, config.digits,
                                              config.round_decimals ? DecimalMode::round
                                                                    : DecimalMode::truncate);
            if (!r.nonminimal_indices.empty())
                ++g.with_nonminimal;
            if (r.nonexistence)
                ++g.with_certificate;
            jcases.push_back(classification_json(r));
        } catch (const EndpointRootError& e) {
            ++g.endpoint_errors;
            Json err;
            err["schema"] = 1;
            err["family"] = family_name(c.id);
            Json p;
            if (c.params.n)
                p["n"] = c.params.n;
            if (c.params.p)
                p["p"] = c.params.p;
            if (c.params.q)
                p["q"] = c.params.q;
            if (c.params.k)
                p["k"] = c.params.k;
            if (c.params.mult)
                p["mult"] = c.params.mult;
            err["params"] = p;
            err["error"] = std::string("endpoint-root: ") + e.what();
            jcases.push_back(std::move(err));
        }
    }
    doc["cases"] = jcases;
    Json summary = Json::array();
    for (const auto& [key, g] : groups) {
        Json row;
        row["group"] = key;
        row["cases"] = g.total;
        row["with_nonminimal_biharmonic"] = g.with_nonminimal;
        row["with_nonexistence_certificate"] = g.with_certificate;
        row["endpoint_root_errors"] = g.endpoint_errors;
        summary.push_back(std::move(row));
    }
    doc["summary"] = summary;

    if (config.json)
        return {kExitOk, doc.dump(2) + "\n"};

    std::ostringstream os;
    os << "sweep " << config.theorem << "  (n = " << config.n_min << ".." << config.n_max
       << ", digits = " << config.digits << ")\n";
    auto pad = [](std::string s, size_t w) {
        if (s.size() < w)
            s.append(w - s.size(), ' ');
        return s;
    };
    os << pad("group", 20) << pad("cases", 7) << pad("nonminimal", 12)
       << pad("certificates", 14) << "endpoint-errors\n";
    for (const auto& [key, g] : groups)
        os << pad(key, 20) << pad(std::to_string(g.total), 7)
           << pad(std::to_string(g.with_nonminimal), 12)
           << pad(std::to_string(g.with_certificate), 14) << g.endpoint_errors << "\n";
    return {kExitOk, os.str()};
}

RunOutcome classify_one(const RunConfig& config)
{
    auto id = family_from_name(config.family);
    if (!id)
        return {kExitParam, "error: unknown family '" + config.family +
                                "'; known families: sphere-g1 sphere-g2 sphere-g3 "
                                "sphere-g4 sphere-g6 cp-a cp-b cp-c cp-d cp-e "
                                "hp-geodesic-sphere hp-cp-tube hp-hpk-tube\n"};
    FamilySpec f = build_family(*id, config.params);
    ClassificationResult r = classify(f, config.digits,
                                      config.round_decimals ? DecimalMode::round
                                                            : DecimalMode::truncate);
    return {kExitOk, render(r, config.json ? ReportFormat::json : ReportFormat::table)};
}

RunOutcome catalog_dump(const RunConfig& config)
{
    std::vector<SweepCase> cases;
    if (!config.family.empty()) {
        auto id = family_from_name(config.family);
        if (!id)
            return {kExitParam, "error: unknown family '" + config.family + "'\n"};
        cases.push_back({*id, config.params});
    } else {
        const int n = config.params.n ? config.params.n : 5;
        cases.push_back({FamilyId::sphere_g1, FamilyParams{.n = n}});
        for (int p = 2; 2 * p <= n + 1; ++p)
            cases.push_back({FamilyId::sphere_g2, FamilyParams{.n = n, .p = p}});
        for (int mult : {1, 2, 4, 8})
            cases.push_back({FamilyId::sphere_g3, FamilyParams{.mult = mult}});
        if ((n - 1) % 2 == 0)
            for (int m1 = 1; 2 * m1 <= (n - 1) / 2; ++m1)
                cases.push_back({FamilyId::sphere_g4,
                                 FamilyParams{.m1 = m1, .m2 = (n - 1) / 2 - m1}});
        for (int mult : {1, 2})
            cases.push_back({FamilyId::sphere_g6, FamilyParams{.mult = mult}});
        for (int p = 0; 2 * p <= n - 1; ++p) {
            int q = n - 1 - p;
            if (q > 0 && p <= q)
                cases.push_back({FamilyId::cp_a, FamilyParams{.p = p, .q = q}});
        }
        cases.push_back({FamilyId::cp_b, FamilyParams{.n = std::max(2, n)}});
        cases.push_back({FamilyId::cp_c, FamilyParams{.n = std::max(3, n)}});
        cases.push_back({FamilyId::cp_d, FamilyParams{}});
        cases.push_back({FamilyId::cp_e, FamilyParams{}});
        cases.push_back({FamilyId::hp_geodesic_sphere, FamilyParams{.n = std::max(2, n)}});
        cases.push_back({FamilyId::hp_cp_tube, FamilyParams{.n = std::max(2, n)}});
        for (int k = 1; k <= std::max(2, n) - 1; ++k)
            cases.push_back({FamilyId::hp_hpk_tube, FamilyParams{.n = std::max(2, n), .k = k}});
    }
    Json doc;
    doc["schema"] = 1;
    Json fams = Json::array();
    for (const auto& c : cases)
        fams.push_back(family_json(build_family(c.id, c.params)));
    doc["families"] = fams;
    return {kExitOk, doc.dump(2) + "\n"};
}

RunOutcome verify_example_verb(const RunConfig& config)
{
    VerificationReport report = verify_example(config.m);
    std::string out = config.json ? verification_json(report).dump(2) + "\n"
                                  : verification_table(report);
    return {report.all_equal() ? kExitOk : kExitMismatch, std::move(out)};
}

RunOutcome ym_check_verb(const RunConfig& config)
{
    InequalityReport report =
        check_inequalities(config.trials, config.seed, config.m, config.r);
    std::string out =
        config.json ? inequality_json(report).dump(2) + "\n" : inequality_table(report);
    return {report.ok() ? kExitOk : kExitViolation, std::move(out)};
}

} // namespace

RunOutcome run(const RunConfig& config)
{
    try {
        if (config.digits < 1 || config.digits > 50)
            return {kExitParam, "error: digits must be in [1, 50]\n"};
        switch (config.verb) {
        case RunConfig::Verb::classify:
            return classify_one(config);
        case RunConfig::Verb::sweep:
            return sweep(config);
        case RunConfig::Verb::catalog_dump:
            return catalog_dump(config);
        case RunConfig::Verb::verify_example:
            return verify_example_verb(config);
        case RunConfig::Verb::ym_check:
            return ym_check_verb(config);
        }
        return {kExitParam, "error: unknown verb\n"};
    } catch (const EndpointRootError& e) {
        return {kExitCertification, std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {kExitParam, std::string("error: ") + e.what() + "\n"};
    } catch (const std::domain_error& e) {
        return {kExitParam, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kExitCertification, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace biharmonic
