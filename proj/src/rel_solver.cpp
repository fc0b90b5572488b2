#include "relthue/rel_solver.hpp"

#include "relthue/enclosure.hpp"
#include "relthue/errors.hpp"
#include "relthue/polynomial.hpp"
#include "relthue/root_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace relthue {

std::string mode_name(SolveMode m) { return m == SolveMode::cited ? "cited" : "search"; }

namespace {

bool is_solution(const ParamForm& form, const SolutionPair& p) {
    return norm(evaluate(form, p.x, p.y)) <= 1;
}

CaseId id_a1(long m) { return m % 4 == 3 ? CaseId::IA1 : CaseId::IIA1; }
CaseId id_a2(long m) { return m % 4 == 3 ? CaseId::IA2 : CaseId::IIA2; }
CaseId id_b1(long m) { return m % 4 == 3 ? CaseId::IB1 : CaseId::IIB1; }
CaseId id_b2(long m) { return m % 4 == 3 ? CaseId::IB2 : CaseId::IIB2; }

const CaseRule& rule_of(const std::vector<CaseRule>& rules, CaseId id) {
    for (const auto& r : rules)
        if (r.id == id) return r;
    throw std::logic_error("case rule missing from the rule set");
}

const AbsResolution* find_res(const std::vector<AbsResolution>& res, CaseId id) {
    for (const auto& r : res)
        if (r.id == id) return &r;
    return nullptr;
}

// A component value survives a threshold rule by lying under the threshold or
// by appearing as a second coordinate of the rule's absolute solution list at
// or above it.  Endpoints are read conservatively (hi below, lo above).
std::vector<Int> surviving_values(const CaseRule& rule, const AbsResolution& res) {
    std::vector<Int> vals;
    Int below = ceil_rat(rule.threshold.hi) - 1;
    for (Int k = 1; k <= below; ++k) vals.push_back(k);
    for (const auto& p : res.pairs) {
        Int a = abs(p.v);
        if (a != 0 && Rat(a) >= rule.threshold.lo) vals.push_back(a);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

AbsResolution resolve_case(const CaseRule& rule, Family f, long solved_t,
                           const ParamForm& form, SolveMode mode, const Int& v_max,
                           bool& used_box) {
    AbsResolution res;
    res.id = rule.id;
    res.d = floor_rat(rule.rhs);
    if (res.d == 0) {
        res.method = "trivial"; // only the origin satisfies |F| < 1 in integers
        return res;
    }
    if (auto known = known_abs_solutions(f, solved_t, res.d)) {
        res.method = "lemma";
        res.pairs = std::move(known->pairs);
        return res;
    }
    if (mode == SolveMode::search) {
        res.method = "box";
        res.pairs = brute_box(form, res.d, v_max).pairs;
        used_box = true;
        return res;
    }
    std::ostringstream msg;
    msg << "case " << case_name(rule.id) << " needs all integer solutions of |F(t=" << solved_t
        << ")| <= " << res.d << ", which no embedded table covers; rerun with mode=search";
    throw UnresolvedCaseError(msg.str());
}

} // namespace

ComponentSurvivors component_constraints(const std::vector<CaseRule>& rules,
                                         const std::vector<AbsResolution>& abs_results,
                                         long m) {
    const CaseRule& b2 = rule_of(rules, id_b2(m));
    const AbsResolution* rb2 = find_res(abs_results, id_b2(m));
    if (rb2 == nullptr || rb2->method == "skipped")
        throw UnresolvedCaseError("case " + case_name(b2.id) + " was not resolved");

    ComponentSurvivors s;
    s.b_values = surviving_values(b2, *rb2);
    if (s.b_values.empty()) return s; // every nonreal component ruled out; A-side moot

    const CaseRule& a2 = rule_of(rules, id_a2(m));
    const AbsResolution* ra2 = find_res(abs_results, id_a2(m));
    if (ra2 == nullptr || ra2->method == "skipped")
        throw UnresolvedCaseError("case " + case_name(a2.id) + " was not resolved");
    s.a_values = surviving_values(a2, *ra2);

    // In the half basis c1 = 2*y1 + y2 and c2 = y2 share parity.
    for (const auto& a : s.a_values)
        for (const auto& b : s.b_values)
            if (m % 4 != 3 || (a - b) % 2 == 0) s.combos.emplace_back(a, b);
    return s;
}

std::vector<SolutionPair> ray_solutions(const ParamForm& form, const RingSpec& ring,
                                        const Int& x2, const Int& y2, const Int& K) {
    if (x2 == 0 && y2 == 0) throw std::invalid_argument("ray_solutions: zero direction");
    if (K < 1) throw std::invalid_argument("ray_solutions: K must be positive");

    Int g = gcd(x2, y2);
    Int p = x2 / g, q = y2 / g;
    Int c = evaluate_int(form, p, q);
    if (c == 0) throw DegenerateRayError("form vanishes on a primitive integer pair");

    // norm(z + g*w) as a polynomial in z.
    QPoly qp = ring.half_basis()
                   ? QPoly({Rat(g * g * ((Int(ring.m) + 1) / 4)), Rat(g), Rat(1)})
                   : QPoly({Rat(Int(ring.m) * g * g), Rat(0), Rat(1)});

    // norm(F) = c^2 * norm(z + g*w)^n; solutions are the integer z with
    // that value <= K^2, trapped between the real roots of the difference.
    const int n = form.degree();
    QPoly cond({Rat(1)});
    for (int i = 0; i < n; ++i) cond = cond * qp;
    cond = Rat(c * c) * cond - QPoly({Rat(K * K)});

    std::vector<SolutionPair> out;
    auto roots = isolate_real_roots(cond, Rat(1, 4));
    if (roots.empty()) return out;
    Int zlo = floor_rat(roots.front().lo) - 1;
    Int zhi = ceil_rat(roots.back().hi) + 1;
    for (Int z = zlo; z <= zhi; ++z) {
        Rat value = Rat(c * c) * pow_rat(qp.eval(Rat(z)), static_cast<unsigned long>(n));
        if (value <= Rat(K * K))
            out.push_back(SolutionPair{make_elem(ring, z * p, x2), make_elem(ring, z * q, y2)});
    }
    return out;
}

std::vector<SolutionPair> enumerate_box_solutions(const ParamForm& form,
                                                  const RingSpec& ring,
                                                  const Int& norm_cap) {
    const auto disc = enumerate_disc(ring, Rat(norm_cap));
    const int n = form.degree();

    // Complex prefilter: |x| = sqrt(norm(x)) <= sqrt(norm_cap), so every
    // Horner partial sum is bounded by (n+1) * max|coeff| * norm_cap^(n/2)
    // and the accumulated floating error by that magnitude times a few
    // hundred ulps.  The margin below overstates it by orders of magnitude;
    // survivors are confirmed exactly, so only completeness is at stake.
    const std::complex<double> w = ring.half_basis()
        ? std::complex<double>(0.5, std::sqrt(static_cast<double>(ring.m)) / 2.0)
        : std::complex<double>(0.0, std::sqrt(static_cast<double>(ring.m)));
    std::vector<std::complex<double>> emb(disc.size());
    for (std::size_t i = 0; i < disc.size(); ++i)
        emb[i] = disc[i].a1.get_d() + disc[i].a2.get_d() * w;

    std::vector<double> cd(form.coeffs.size());
    double max_coeff = 0;
    for (std::size_t k = 0; k < cd.size(); ++k) {
        cd[k] = form.coeffs[k].get_d();
        max_coeff = std::max(max_coeff, std::fabs(cd[k]));
    }
    const double mag = (n + 1) * max_coeff * std::pow(norm_cap.get_d(), n / 2.0);
    const double err = mag * 1e-12 + 1e-9;
    const double cap = (1.0 + err) * (1.0 + err);
    const bool filter_usable = std::isfinite(cap);

    std::vector<SolutionPair> out;
    std::vector<std::complex<double>> ypow(static_cast<std::size_t>(n) + 1);
    for (std::size_t j = 0; j < disc.size(); ++j) {
        ypow[0] = 1.0;
        for (int k = 1; k <= n; ++k) ypow[k] = ypow[k - 1] * emb[j];
        for (std::size_t i = 0; i < disc.size(); ++i) {
            if (filter_usable) {
                std::complex<double> acc = cd[0];
                for (int k = 1; k <= n; ++k) acc = acc * emb[i] + cd[k] * ypow[k];
                if (std::norm(acc) > cap) continue;
            }
            SolutionPair cand{disc[i], disc[j]};
            if (is_solution(form, cand)) out.push_back(cand);
        }
    }
    return out;
}

SolveReport solve_relative(Family f, long t, long m, SolveMode mode, const Int& v_max) {
    if (v_max < 1) throw std::invalid_argument("solve_relative: v_max must be positive");
    RingSpec ring = make_ring(m);
    ParamForm original = make_form(f, t);

    SolveReport rep;
    rep.family = f;
    rep.t = t;
    rep.m = m;
    rep.mode = mode;
    rep.dualized = f == Family::quartic ? t < 0 : t < -1;
    rep.solved_t = rep.dualized ? dual_parameter(f, t) : t;
    const ParamForm form = rep.dualized ? make_form(f, rep.solved_t) : original;

    rep.scenario = m == 1 ? Scenario::m1
                 : m == 3 ? (regime_of(f, rep.solved_t) == Regime::large_t
                                 ? Scenario::m3_large_t
                                 : Scenario::m3_small_t)
                          : Scenario::generic_m;
    const BoundParams bp = presets(f, rep.scenario);
    const BoundSet bs = derive_bounds(bp);
    rep.bounds = bs;
    const auto rules = case_rules(m, bp, bs);

    const RatInterval threshold = m % 4 == 3 ? bs.C1 : bs.C2;
    Int r2 = floor_rat(threshold.hi * threshold.hi);
    if (r2 < 1) r2 = 1;
    rep.box_norm_cap = r2;

    // Case resolution: the B-side rules drive completeness, so they resolve
    // first; the A-side is only consulted when nonreal components survive.
    bool used_box = false;
    std::vector<AbsResolution> res;
    res.push_back(resolve_case(rule_of(rules, id_b1(m)), f, rep.solved_t, form, mode, v_max, used_box));
    res.push_back(resolve_case(rule_of(rules, id_b2(m)), f, rep.solved_t, form, mode, v_max, used_box));
    const bool b_alive = !surviving_values(rule_of(rules, id_b2(m)), res.back()).empty();
    for (CaseId id : {id_a1(m), id_a2(m)}) {
        if (b_alive) {
            res.push_back(resolve_case(rule_of(rules, id), f, rep.solved_t, form, mode, v_max, used_box));
        } else {
            AbsResolution sk;
            sk.id = id;
            sk.d = floor_rat(rule_of(rules, id).rhs);
            sk.method = "skipped";
            res.push_back(sk);
        }
    }
    rep.survivors = component_constraints(rules, res, m);
    for (auto& r : res) {
        if (r.id == id_b2(m)) r.survivors = rep.survivors.b_values;
        if (r.id == id_a2(m)) r.survivors = rep.survivors.a_values;
    }
    rep.trace = res;
    rep.completeness = used_box ? Completeness::box_bounded : Completeness::proof_backed;

    // Residual enumeration.  Solutions with both coordinates inside the
    // threshold disc come from the box; a large second coordinate forces the
    // coordinate relation, covered by pinning (one small), rays (both
    // large), and the equality columns; the orbit closure at the end maps
    // every remaining arrangement onto one of these.
    const auto disc = enumerate_disc(ring, Rat(r2));
    std::vector<SolutionPair> found = enumerate_box_solutions(form, ring, r2);
    rep.counts.box_pairs = static_cast<long long>(disc.size()) * static_cast<long long>(disc.size());
    rep.counts.box_pass = static_cast<long long>(found.size());

    std::vector<Int> vb_signed;
    for (const auto& b : rep.survivors.b_values) {
        vb_signed.push_back(b);
        vb_signed.push_back(-b);
    }

    for (const auto& x : disc) {
        if (x.a2 == 0) continue; // relation then forces x = 0, already boxed
        for (const auto& v : vb_signed) {
            Int num = x.a1 * v;
            if (!mpz_divisible_p(num.get_mpz_t(), x.a2.get_mpz_t())) continue;
            ++rep.counts.pinned_candidates;
            SolutionPair cand{x, make_elem(ring, num / x.a2, v)};
            if (is_solution(form, cand)) {
                ++rep.counts.pinned_pass;
                found.push_back(cand);
            }
        }
    }

    for (const auto& u : rep.survivors.b_values) {
        for (const auto& v : vb_signed) {
            ++rep.counts.rays;
            for (auto& s : ray_solutions(form, ring, u, v, Int(1))) {
                ++rep.counts.ray_pass;
                found.push_back(std::move(s));
            }
        }
    }

    for (const auto& p : find_res(res, id_b1(m))->pairs) {
        ++rep.counts.column_candidates;
        SolutionPair cand{make_elem(ring, p.u, Int(0)), make_elem(ring, p.v, Int(0))};
        if (is_solution(form, cand)) {
            ++rep.counts.column_pass;
            found.push_back(cand);
        }
    }
    const AbsResolution* ra1 = find_res(res, id_a1(m));
    if (ra1->method == "lemma" || ra1->method == "box") {
        for (const auto& p : ra1->pairs) {
            SolutionPair cand;
            if (m % 4 == 3) {
                // c1 = 0 forces the basis coordinates (-u/2, u); odd lists entries
                // cannot arise from a ring element.
                if (mpz_odd_p(p.u.get_mpz_t()) || mpz_odd_p(p.v.get_mpz_t())) continue;
                cand = SolutionPair{make_elem(ring, -(p.u / 2), p.u),
                                    make_elem(ring, -(p.v / 2), p.v)};
            } else {
                cand = SolutionPair{make_elem(ring, Int(0), p.u), make_elem(ring, Int(0), p.v)};
            }
            ++rep.counts.column_candidates;
            if (is_solution(form, cand)) {
                ++rep.counts.column_pass;
                found.push_back(cand);
            }
        }
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<SolutionPair> closed;
    for (const auto& s : found)
        for (const auto& o : orbit(f, s)) closed.push_back(o);
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    rep.counts.orbit_added = static_cast<long long>(closed.size()) -
                             static_cast<long long>(found.size());

    if (rep.dualized)
        for (auto& s : closed) s = dual_pair(s);
    rep.solutions = normalize_sign(std::move(closed));

    const auto expected = golden_solutions(f, t, m);
    std::set_difference(expected.begin(), expected.end(), rep.solutions.begin(),
                        rep.solutions.end(), std::back_inserter(rep.golden.missing));
    std::set_difference(rep.solutions.begin(), rep.solutions.end(), expected.begin(),
                        expected.end(), std::back_inserter(rep.golden.extra));
    for (const auto& e : rep.golden.extra)
        rep.golden.extra_values.push_back(evaluate(original, e.x, e.y));
    return rep;
}

std::vector<SolutionPair> golden_solutions(Family f, long t, long m) {
    RingSpec ring = make_ring(m);
    make_form(f, t); // validates the parameter

    std::vector<std::pair<long, long>> base;
    if (f == Family::quartic) {
        base = {{0, 0}, {0, 1}, {1, 0}};
        if (t == 1) base.insert(base.end(), {{1, 2}, {2, -1}});
        if (t == -1) base.insert(base.end(), {{2, 1}, {-1, 2}});
        if (t == 4) base.insert(base.end(), {{2, 3}, {3, -2}});
        if (t == -4) base.insert(base.end(), {{3, 2}, {-2, 3}});
    } else {
        base = {{0, 0}, {0, 1}, {1, 0}, {1, -1}};
    }

    std::vector<QuadInt> units{make_elem(ring, 1, 0)};
    if (m == 1) units.push_back(make_elem(ring, 0, 1));
    if (m == 3) {
        units.push_back(make_elem(ring, 0, 1));  // w
        units.push_back(make_elem(ring, -1, 1)); // w^2 = w - 1
    }

    std::vector<SolutionPair> out;
    for (const auto& u : units)
        for (const auto& [a, b] : base)
            out.push_back(SolutionPair{Int(a) * u, Int(b) * u});
    return normalize_sign(std::move(out));
}

VerifyReport verify_theorem(Family f, long m, long t_lo, long t_hi, SolveMode mode,
                            int jobs, const Int& v_max) {
    VerifyReport vr;
    vr.family = f;
    vr.m = m;
    vr.t_lo = t_lo;
    vr.t_hi = t_hi;
    vr.mode = mode;

    std::vector<long> ts;
    for (long t = t_lo; t <= t_hi; ++t)
        (parameter_excluded(f, t) ? vr.skipped : ts).push_back(t);
    vr.reports.resize(ts.size());
    if (ts.empty()) return vr;

    if (jobs < 1) jobs = 1;
    jobs = std::min<long>(jobs, static_cast<long>(ts.size()));
    std::atomic<std::size_t> next{0};
    std::mutex fail_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= ts.size()) return;
            try {
                vr.reports[i] = solve_relative(f, ts[i], m, mode, v_max);
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    for (const auto& r : vr.reports)
        vr.mismatches += static_cast<long>(r.golden.missing.size() + r.golden.extra.size());
    return vr;
}

} // namespace relthue
