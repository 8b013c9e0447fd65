#include "biharmonic/report.hpp"

#include <sstream>

namespace biharmonic {

namespace {

std::string param_var(const FamilySpec& f)
{
    switch (f.ambient.kind) {
    case AmbientSpace::Kind::sphere:
        return "y";
    default:
        return "t";
    }
}

Json coeff_array(const Poly& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs())
        a.push_back(c.get_str());
    return a;
}

Json root_json(const IsolatedRoot& r)
{
    Json j;
    j["low"] = r.low.get_str();
    j["high"] = r.high.get_str();
    j["decimal"] = r.decimal;
    j["simple"] = r.simple;
    if (r.exact)
        j["exact"] = r.exact->get_str();
    else
        j["exact"] = nullptr;
    return j;
}

Json certificate_json(const SignCertificate& sc, const std::string& var)
{
    Json j;
    j["polynomial"] = sc.certificate.polynomial.to_string(var);
    j["interval"] = {{"lo", sc.certificate.lo.to_string()},
                     {"hi", sc.certificate.hi.to_string()}};
    j["sturm_root_count"] = sc.certificate.sturm_root_count;
    j["sample_point"] = sc.certificate.sample_point.get_str();
    j["sample_sign"] = sc.numerator_sign;
    j["denominator_sign"] = sc.denominator_sign;
    j["function_sign"] = sc.function_sign;
    j["statement"] = sc.function_sign > 0
                         ? "||B||^2 - threshold > 0 on the whole range"
                         : "||B||^2 - threshold < 0 on the whole range";
    return j;
}

Json params_json(const FamilySpec& f)
{
    Json p;
    p["n"] = f.ambient.n;
    switch (f.id) {
    case FamilyId::sphere_g2:
        p["p"] = f.params.p;
        break;
    case FamilyId::sphere_g3:
    case FamilyId::sphere_g6:
        p["mult"] = f.params.mult;
        break;
    case FamilyId::sphere_g4:
        p["m1"] = f.params.m1;
        p["m2"] = f.params.m2;
        break;
    case FamilyId::cp_a:
        p["p"] = f.params.p;
        p["q"] = f.params.q;
        break;
    case FamilyId::hp_hpk_tube:
        p["k"] = f.params.k;
        break;
    default:
        break;
    }
    return p;
}

} // namespace

Json classification_json(const ClassificationResult& r)
{
    const std::string var = param_var(r.family);
    Json j;
    j["schema"] = 1;
    j["family"] = family_name(r.family.id);
    j["params"] = params_json(r.family);
    j["ambient"] = r.family.ambient.to_string();
    j["dim_m"] = r.family.ambient.dim_m;
    j["parameter"] = r.family.parameter_note;
    j["range"] = {{"lo", r.family.range_lo.to_string()},
                  {"hi", r.family.range_hi.to_string()}};
    j["threshold"] = r.threshold.get_str();
    j["digits"] = r.digits;
    j["equations"] = {
        {"minimal", r.minimal_eq.to_string(var)},
        {"biharmonic", r.biharmonic_eq.to_string(var)},
    };
    // repeated factors, when the full numerators have any
    if (r.minimal_gcd.degree() > 0)
        j["equations"]["minimal_multiplicity_gcd"] = r.minimal_gcd.to_string(var);
    if (r.biharmonic_gcd.degree() > 0)
        j["equations"]["biharmonic_multiplicity_gcd"] = r.biharmonic_gcd.to_string(var);
    auto roots_array = [](const std::vector<IsolatedRoot>& roots) {
        Json a = Json::array();
        for (const auto& root : roots)
            a.push_back(root_json(root));
        return a;
    };
    j["minimal"] = roots_array(r.minimal_roots);
    j["biharmonic"] = roots_array(r.biharmonic_roots);
    Json nm = Json::array();
    for (size_t idx : r.nonminimal_indices)
        nm.push_back(root_json(r.biharmonic_roots[idx]));
    j["nonminimal_biharmonic"] = nm;
    j["nonexistence_certificate"] =
        r.nonexistence ? certificate_json(*r.nonexistence, var) : Json(nullptr);
    if (!r.levels.empty()) {
        Json lv = Json::array();
        for (const auto& l : r.levels) {
            Json e;
            e["which"] = l.which;
            e["root_index"] = l.root_index;
            e["value"] = l.value.to_string();
            e["decimal"] = l.decimal;
            lv.push_back(std::move(e));
        }
        j["levels"] = lv;
    }
    Json ledger = Json::array();
    for (const auto& entry : r.ledger) {
        Json e;
        e["code"] = entry.code;
        e["detail"] = entry.detail;
        if (!entry.data.empty()) {
            Json d;
            for (const auto& [k, v] : entry.data)
                d[k] = v;
            e["data"] = d;
        }
        ledger.push_back(std::move(e));
    }
    j["ledger"] = ledger;
    return j;
}

std::string classification_table(const ClassificationResult& r)
{
    const std::string var = param_var(r.family);
    std::ostringstream os;
    os << "family " << family_name(r.family.id) << "  ambient "
       << r.family.ambient.to_string() << "  dim M = " << r.family.ambient.dim_m << "\n";
    os << "  parameter " << r.family.parameter_note << ", range ("
       << r.family.range_lo.to_string() << ", " << r.family.range_hi.to_string() << ")\n";
    os << "  threshold ||B||^2 = " << r.threshold.get_str() << "\n";
    os << "  minimal equation    " << r.minimal_eq.to_string(var) << "\n";
    os << "  biharmonic equation " << r.biharmonic_eq.to_string(var) << "\n";
    auto print_roots = [&](const char* name, const std::vector<IsolatedRoot>& roots) {
        os << "  " << name << ":";
        if (roots.empty())
            os << " none";
        for (const auto& root : roots) {
            os << " " << root.decimal;
            if (root.exact)
                os << " (= " << root.exact->get_str() << ")";
            if (!root.simple)
                os << " [multiple]";
        }
        os << "\n";
    };
    print_roots("minimal roots", r.minimal_roots);
    print_roots("biharmonic roots", r.biharmonic_roots);
    os << "  nonminimal biharmonic:";
    if (r.nonminimal_indices.empty())
        os << " none";
    for (size_t idx : r.nonminimal_indices)
        os << " " << r.biharmonic_roots[idx].decimal;
    os << "\n";
    if (r.nonexistence) {
        os << "  no nonminimal biharmonic radii; certificate attached: "
           << (r.nonexistence->function_sign > 0 ? "||B||^2 > threshold"
                                                 : "||B||^2 < threshold")
           << " on the whole range (Sturm count 0, sample "
           << r.nonexistence->certificate.sample_point.get_str() << ")\n";
    }
    for (const auto& l : r.levels)
        os << "  level[" << l.which << " #" << l.root_index << "] = " << l.value.to_string()
           << " = " << l.decimal << "\n";
    for (const auto& e : r.ledger) {
        os << "  ledger " << e.code << ": " << e.detail << "\n";
        for (const auto& [k, v] : e.data)
            os << "    " << k << " = " << v << "\n";
    }
    return os.str();
}

std::string render(const ClassificationResult& r, ReportFormat format)
{
    if (format == ReportFormat::json)
        return classification_json(r).dump(2) + "\n";
    return classification_table(r);
}

Json family_json(const FamilySpec& f)
{
    Json j;
    j["id"] = family_name(f.id);
    j["params"] = params_json(f);
    j["ambient"] = f.ambient.to_string();
    j["dim_m"] = f.ambient.dim_m;
    j["parameter"] = f.parameter_note;
    j["range"] = {{"lo", f.range_lo.to_string()}, {"hi", f.range_hi.to_string()}};
    j["threshold"] = biharmonic_threshold(f).get_str();
    Json spectrum = Json::array();
    for (const auto& term : f.spectrum) {
        Json e;
        if (const auto* b = std::get_if<RationalBranch>(&term)) {
            e["kind"] = "rational";
            e["label"] = b->label;
            e["num_coeffs"] = coeff_array(b->value.num());
            e["den_coeffs"] = coeff_array(b->value.den());
            e["multiplicity"] = b->multiplicity.get_str();
        } else {
            const auto& pr = std::get<ConjugatePairRule>(term);
            e["kind"] = "conjugate-pair";
            e["label"] = pr.label;
            e["pair_sum_num_coeffs"] = coeff_array(pr.pair_sum.num());
            e["pair_sum_den_coeffs"] = coeff_array(pr.pair_sum.den());
            e["pair_sumsq_num_coeffs"] = coeff_array(pr.pair_sum_squares.num());
            e["pair_sumsq_den_coeffs"] = coeff_array(pr.pair_sum_squares.den());
            e["multiplicity"] = Integer(pr.multiplicity_each * 2).get_str();
        }
        spectrum.push_back(std::move(e));
    }
    j["spectrum"] = spectrum;
    return j;
}

Json verification_json(const VerificationReport& r)
{
    Json j;
    j["schema"] = 1;
    j["m"] = r.m;
    Json ids = Json::array();
    for (const auto& id : r.identities) {
        Json e;
        e["name"] = id.name;
        e["claimed"] = id.claimed.to_string();
        e["computed"] = id.computed.to_string();
        e["equal"] = id.equal;
        e["difference"] = id.difference.to_string();
        ids.push_back(std::move(e));
    }
    j["identities"] = ids;
    j["bilaplacian_vanishes"] = r.bilaplacian_vanishes;
    j["tension_norm_nonnegative_samples"] = r.sample_count;
    j["tension_norm_nonnegative"] = r.tension_norm_nonnegative;
    j["all_equal"] = r.all_equal();
    return j;
}

std::string verification_table(const VerificationReport& r)
{
    std::ostringstream os;
    os << "explicit biharmonic map verifier, m = " << r.m << "\n";
    for (const auto& id : r.identities) {
        os << "  " << id.name << ": " << (id.equal ? "equal" : "UNEQUAL") << "\n";
        if (!id.equal) {
            os << "    claimed   " << id.claimed.to_string() << "\n";
            os << "    computed  " << id.computed.to_string() << "\n";
            os << "    difference " << id.difference.to_string() << "\n";
        }
    }
    os << "  bilaplacian vanishes: " << (r.bilaplacian_vanishes ? "yes" : "NO") << "\n";
    os << "  tension norm nonnegative at " << r.sample_count
       << " random rational points: " << (r.tension_norm_nonnegative ? "yes" : "NO") << "\n";
    return os.str();
}

Json inequality_json(const InequalityReport& r)
{
    Json j;
    j["schema"] = 1;
    j["m"] = r.m;
    j["r"] = r.r;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["violations"] = Json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back({{"which", v.which}, {"trial", v.trial}});
    j["identities_exact"] = r.identities_exact;
    j["contraction_identity_exact"] = r.contraction_identity_exact;
    j["max_curvature_ratio"] = r.max_curvature_ratio.get_str();
    j["max_bracket_ratio"] = r.max_bracket_ratio.get_str();
    j["max_curvature_ratio_decimal"] = decimal_string(r.max_curvature_ratio, 6);
    j["max_bracket_ratio_decimal"] = decimal_string(r.max_bracket_ratio, 6);
    j["ok"] = r.ok();
    return j;
}

std::string inequality_table(const InequalityReport& r)
{
    std::ostringstream os;
    os << "pointwise curvature inequalities, m = " << r.m << ", r = " << r.r
       << ", trials = " << r.trials << ", seed = " << r.seed << "\n";
    os << "  adjoint identity exact: " << (r.identities_exact ? "yes" : "NO") << "\n";
    os << "  contraction identity exact: " << (r.contraction_identity_exact ? "yes" : "NO")
       << "\n";
    os << "  violations: " << r.violations.size() << "\n";
    for (const auto& v : r.violations)
        os << "    " << v.which << " at trial " << v.trial << "\n";
    os << "  max pairing tightness  " << decimal_string(r.max_curvature_ratio, 6) << "\n";
    os << "  max bracket tightness  " << decimal_string(r.max_bracket_ratio, 6) << "\n";
    return os.str();
}

} // namespace biharmonic
