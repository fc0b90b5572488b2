#include "relthue/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace relthue {

namespace {

Rat rat_from_string(const std::string& s) {
    Rat r(s, 10); // throws std::invalid_argument on malformed input
    r.canonicalize();
    return r;
}

Int int_from_string(const std::string& s) { return Int(s, 10); }

Json int_json(const Int& n) { return Json(n.get_str()); }

Int int_from_json(const Json& j) { return int_from_string(j.get<std::string>()); }

Json int_list_json(const std::vector<Int>& v) {
    Json out = Json::array();
    for (const auto& n : v) out.push_back(int_json(n));
    return out;
}

std::vector<Int> int_list_from_json(const Json& j) {
    std::vector<Int> out;
    for (const auto& e : j) out.push_back(int_from_json(e));
    return out;
}

} // namespace

Family family_from_name(const std::string& name) {
    if (name == "quartic") return Family::quartic;
    if (name == "sextic") return Family::sextic;
    throw std::invalid_argument("unknown family: " + name);
}

Scenario scenario_from_name(const std::string& name) {
    for (Scenario s : {Scenario::generic_m, Scenario::m1, Scenario::m3_large_t,
                       Scenario::m3_small_t})
        if (scenario_name(s) == name) return s;
    throw std::invalid_argument("unknown scenario: " + name);
}

SolveMode mode_from_name(const std::string& name) {
    if (name == "cited") return SolveMode::cited;
    if (name == "search") return SolveMode::search;
    throw std::invalid_argument("unknown mode: " + name);
}

CaseId case_from_name(const std::string& name) {
    for (CaseId id : {CaseId::IA1, CaseId::IA2, CaseId::IB1, CaseId::IB2, CaseId::IIA1,
                      CaseId::IIA2, CaseId::IIB1, CaseId::IIB2})
        if (case_name(id) == name) return id;
    throw std::invalid_argument("unknown case: " + name);
}

Completeness completeness_from_name(const std::string& name) {
    if (name == "proof_backed") return Completeness::proof_backed;
    if (name == "box_bounded") return Completeness::box_bounded;
    throw std::invalid_argument("unknown completeness tag: " + name);
}

Json rat_json(const Rat& q) {
    return Json{{"exact", q.get_str()}, {"decimal", rat_to_decimal(q, 6)}};
}

Rat rat_from_json(const Json& j) { return rat_from_string(j.at("exact").get<std::string>()); }

Json interval_json(const RatInterval& iv) {
    return Json{{"lo", rat_json(iv.lo)}, {"hi", rat_json(iv.hi)}};
}

RatInterval interval_from_json(const Json& j) {
    return RatInterval{rat_from_json(j.at("lo")), rat_from_json(j.at("hi"))};
}

Json quadint_json(const QuadInt& z) {
    return Json::array({z.a1.get_str(), z.a2.get_str()});
}

QuadInt quadint_from_json(const Json& j, const RingSpec& ring) {
    return make_elem(ring, int_from_json(j.at(0)), int_from_json(j.at(1)));
}

Json pair_json(const SolutionPair& p) {
    return Json{{"x", quadint_json(p.x)}, {"y", quadint_json(p.y)}, {"text", render(p)}};
}

SolutionPair pair_from_json(const Json& j, const RingSpec& ring) {
    return SolutionPair{quadint_from_json(j.at("x"), ring), quadint_from_json(j.at("y"), ring)};
}

Json form_json(const ParamForm& form) {
    return Json{{"family", family_name(form.family)}, {"t", form.t}};
}

Json bounds_json(const BoundSet& b) {
    return Json{{"C", rat_json(b.C)},
                {"C1", interval_json(b.C1)},
                {"C2", interval_json(b.C2)},
                {"D", interval_json(b.D)},
                {"E", rat_json(b.E)}};
}

BoundSet bounds_from_json(const Json& j) {
    BoundSet b;
    b.C = rat_from_json(j.at("C"));
    b.C1 = interval_from_json(j.at("C1"));
    b.C2 = interval_from_json(j.at("C2"));
    b.D = interval_from_json(j.at("D"));
    b.E = rat_from_json(j.at("E"));
    return b;
}

Json case_rule_json(const CaseRule& r) {
    return Json{{"case", case_name(r.id)},
                {"trigger", r.trigger},
                {"form_args", r.form_args},
                {"equality", r.trigger_is_equality},
                {"threshold", interval_json(r.threshold)},
                {"rhs", rat_json(r.rhs)}};
}

Json gap_data_json(const RootGapData& g) {
    Json intervals = Json::array();
    for (const auto& r : g.roots)
        intervals.push_back(Json::array({rat_json(r.lo), rat_json(r.hi)}));
    return Json{{"family", family_name(g.family)},
                {"t", g.t},
                {"intervals", intervals},
                {"A_lower", rat_json(g.a_lower)},
                {"B_lower", rat_json(g.b_lower)},
                {"width", rat_json(g.width)}};
}

Json abs_list_json(const AbsSolutionList& list) {
    Json pairs = Json::array();
    for (const auto& p : list.pairs)
        pairs.push_back(Json::array({p.u.get_str(), p.v.get_str()}));
    return Json{{"schema", report_schema_version},
                {"form", form_json(list.form)},
                {"d_max", int_json(list.d_max)},
                {"v_max", int_json(list.v_max)},
                {"completeness", completeness_name(list.completeness)},
                {"pairs", pairs}};
}

Json resolution_json(const AbsResolution& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(Json::array({p.u.get_str(), p.v.get_str()}));
    return Json{{"case", case_name(r.id)},
                {"d", int_json(r.d)},
                {"method", r.method},
                {"pairs", pairs},
                {"survivors", int_list_json(r.survivors)}};
}

AbsResolution resolution_from_json(const Json& j) {
    AbsResolution r;
    r.id = case_from_name(j.at("case").get<std::string>());
    r.d = int_from_json(j.at("d"));
    r.method = j.at("method").get<std::string>();
    for (const auto& p : j.at("pairs"))
        r.pairs.push_back(IntPair{int_from_json(p.at(0)), int_from_json(p.at(1))});
    r.survivors = int_list_from_json(j.at("survivors"));
    return r;
}

Json solve_report_json(const SolveReport& rep) {
    Json trace = Json::array();
    for (const auto& r : rep.trace) trace.push_back(resolution_json(r));

    Json combos = Json::array();
    for (const auto& [a, b] : rep.survivors.combos)
        combos.push_back(Json::array({a.get_str(), b.get_str()}));

    Json solutions = Json::array();
    for (const auto& s : rep.solutions) solutions.push_back(pair_json(s));

    Json missing = Json::array(), extra = Json::array(), extra_values = Json::array();
    for (const auto& s : rep.golden.missing) missing.push_back(pair_json(s));
    for (const auto& s : rep.golden.extra) extra.push_back(pair_json(s));
    for (const auto& v : rep.golden.extra_values) extra_values.push_back(quadint_json(v));

    return Json{{"schema", report_schema_version},
                {"family", family_name(rep.family)},
                {"t", rep.t},
                {"m", rep.m},
                {"mode", mode_name(rep.mode)},
                {"dualized", rep.dualized},
                {"solved_t", rep.solved_t},
                {"scenario", scenario_name(rep.scenario)},
                {"bounds", bounds_json(rep.bounds)},
                {"box_norm_cap", int_json(rep.box_norm_cap)},
                {"trace", trace},
                {"survivors", Json{{"a", int_list_json(rep.survivors.a_values)},
                                   {"b", int_list_json(rep.survivors.b_values)},
                                   {"combos", combos}}},
                {"counts", Json{{"box_pairs", rep.counts.box_pairs},
                                {"box_pass", rep.counts.box_pass},
                                {"pinned_candidates", rep.counts.pinned_candidates},
                                {"pinned_pass", rep.counts.pinned_pass},
                                {"rays", rep.counts.rays},
                                {"ray_pass", rep.counts.ray_pass},
                                {"column_candidates", rep.counts.column_candidates},
                                {"column_pass", rep.counts.column_pass},
                                {"orbit_added", rep.counts.orbit_added}}},
                {"solutions", solutions},
                {"completeness", completeness_name(rep.completeness)},
                {"golden", Json{{"missing", missing},
                                {"extra", extra},
                                {"extra_values", extra_values}}}};
}

SolveReport solve_report_from_json(const Json& j) {
    if (j.at("schema").get<int>() != report_schema_version)
        throw std::invalid_argument("unsupported report schema");
    SolveReport rep;
    rep.family = family_from_name(j.at("family").get<std::string>());
    rep.t = j.at("t").get<long>();
    rep.m = j.at("m").get<long>();
    rep.mode = mode_from_name(j.at("mode").get<std::string>());
    rep.dualized = j.at("dualized").get<bool>();
    rep.solved_t = j.at("solved_t").get<long>();
    rep.scenario = scenario_from_name(j.at("scenario").get<std::string>());
    rep.bounds = bounds_from_json(j.at("bounds"));
    rep.box_norm_cap = int_from_json(j.at("box_norm_cap"));
    for (const auto& r : j.at("trace")) rep.trace.push_back(resolution_from_json(r));

    const auto& surv = j.at("survivors");
    rep.survivors.a_values = int_list_from_json(surv.at("a"));
    rep.survivors.b_values = int_list_from_json(surv.at("b"));
    for (const auto& c : surv.at("combos"))
        rep.survivors.combos.emplace_back(int_from_json(c.at(0)), int_from_json(c.at(1)));

    const auto& counts = j.at("counts");
    rep.counts.box_pairs = counts.at("box_pairs").get<long long>();
    rep.counts.box_pass = counts.at("box_pass").get<long long>();
    rep.counts.pinned_candidates = counts.at("pinned_candidates").get<long long>();
    rep.counts.pinned_pass = counts.at("pinned_pass").get<long long>();
    rep.counts.rays = counts.at("rays").get<long long>();
    rep.counts.ray_pass = counts.at("ray_pass").get<long long>();
    rep.counts.column_candidates = counts.at("column_candidates").get<long long>();
    rep.counts.column_pass = counts.at("column_pass").get<long long>();
    rep.counts.orbit_added = counts.at("orbit_added").get<long long>();

    const RingSpec ring = make_ring(rep.m);
    for (const auto& s : j.at("solutions")) rep.solutions.push_back(pair_from_json(s, ring));
    rep.completeness = completeness_from_name(j.at("completeness").get<std::string>());
    const auto& golden = j.at("golden");
    for (const auto& s : golden.at("missing"))
        rep.golden.missing.push_back(pair_from_json(s, ring));
    for (const auto& s : golden.at("extra")) rep.golden.extra.push_back(pair_from_json(s, ring));
    for (const auto& v : golden.at("extra_values"))
        rep.golden.extra_values.push_back(quadint_from_json(v, ring));
    return rep;
}

Json verify_report_json(const VerifyReport& rep) {
    Json reports = Json::array();
    for (const auto& r : rep.reports) reports.push_back(solve_report_json(r));
    return Json{{"schema", report_schema_version},
                {"family", family_name(rep.family)},
                {"m", rep.m},
                {"t_lo", rep.t_lo},
                {"t_hi", rep.t_hi},
                {"mode", mode_name(rep.mode)},
                {"skipped", rep.skipped},
                {"mismatches", rep.mismatches},
                {"reports", reports}};
}

VerifyReport verify_report_from_json(const Json& j) {
    if (j.at("schema").get<int>() != report_schema_version)
        throw std::invalid_argument("unsupported report schema");
    VerifyReport rep;
    rep.family = family_from_name(j.at("family").get<std::string>());
    rep.m = j.at("m").get<long>();
    rep.t_lo = j.at("t_lo").get<long>();
    rep.t_hi = j.at("t_hi").get<long>();
    rep.mode = mode_from_name(j.at("mode").get<std::string>());
    rep.skipped = j.at("skipped").get<std::vector<long>>();
    rep.mismatches = j.at("mismatches").get<long>();
    for (const auto& r : j.at("reports")) rep.reports.push_back(solve_report_from_json(r));
    return rep;
}

std::string csv_summary_header() { return "t,m,solutions,completeness,mismatches\n"; }

std::string csv_summary_row(const SolveReport& rep) {
    std::ostringstream os;
    os << rep.t << ',' << rep.m << ',' << rep.solutions.size() << ','
       << completeness_name(rep.completeness) << ','
       << rep.golden.missing.size() + rep.golden.extra.size() << '\n';
    return os.str();
}

std::string csv_verify_summary(const VerifyReport& rep) {
    std::string out = csv_summary_header();
    for (const auto& r : rep.reports) out += csv_summary_row(r);
    return out;
}

std::string csv_abs_list(const AbsSolutionList& list) {
    std::ostringstream os;
    os << "u,v,value,completeness\n";
    for (const auto& p : list.pairs)
        os << p.u.get_str() << ',' << p.v.get_str() << ','
           << evaluate_int(list.form, p.u, p.v).get_str() << ','
           << completeness_name(list.completeness) << '\n';
    return os.str();
}

} // namespace relthue
