#include "relthue/report_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

using namespace relthue;

namespace {

// Exit codes: 0 success, 1 mismatch or runtime failure, 2 usage, 3 unresolved case.
constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_unresolved = 3;

struct TSpec {
    long lo = 0, hi = 0;
    bool is_range = false;
};

TSpec parse_t_spec(const std::string& text) {
    auto pos = text.find("..", 1); // offset 1 so a leading minus sign survives
    if (pos == std::string::npos) {
        long v = std::stol(text);
        return TSpec{v, v, false};
    }
    TSpec spec{std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2)), true};
    if (spec.lo > spec.hi) throw std::invalid_argument("empty t range: " + text);
    return spec;
}

std::vector<long> parse_m_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stol(item));
    if (out.empty()) throw std::invalid_argument("empty m list: " + text);
    for (long m : out) make_ring(m); // validates each entry
    return out;
}

// Valid parameters of the requested t range; excluded values get a stderr
// notice in range mode and are a hard error when named individually.
std::vector<long> expand_ts(Family f, const TSpec& spec) {
    std::vector<long> ts;
    for (long t = spec.lo; t <= spec.hi; ++t) {
        if (parameter_excluded(f, t)) {
            if (!spec.is_range)
                throw ReducibleParameterError("t = " + std::to_string(t) +
                                              " is excluded for the " + family_name(f) +
                                              " family");
            std::cerr << "note: skipping excluded t = " << t << "\n";
            continue;
        }
        ts.push_back(t);
    }
    return ts;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return exit_ok;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return exit_mismatch;
    }
    file << text;
    return exit_ok;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

template <class Fn>
void parallel_cells(std::size_t n, int jobs, Fn&& fn) {
    if (jobs < 1) jobs = 1;
    jobs = static_cast<int>(std::min<std::size_t>(jobs, n));
    std::atomic<std::size_t> next{0};
    std::mutex fail_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
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
}

std::string solve_table(const SolveReport& rep) {
    std::ostringstream os;
    os << family_name(rep.family) << " t=" << rep.t << " m=" << rep.m
       << " scenario=" << scenario_name(rep.scenario)
       << " completeness=" << completeness_name(rep.completeness)
       << " solutions=" << rep.solutions.size()
       << " golden=" << (rep.golden.clean() ? "match" : "MISMATCH") << "\n";
    for (const auto& s : rep.solutions) os << "  " << render(s) << "\n";
    for (const auto& s : rep.golden.missing) os << "  missing: " << render(s) << "\n";
    for (std::size_t i = 0; i < rep.golden.extra.size(); ++i)
        os << "  extra: " << render(rep.golden.extra[i])
           << "  F = " << render(rep.golden.extra_values[i]) << "\n";
    return os.str();
}

int cmd_solve(Family f, const TSpec& tspec, const std::vector<long>& ms, SolveMode mode,
              long v_max, int jobs, const std::string& format, const std::string& out) {
    auto ts = expand_ts(f, tspec);
    struct Cell {
        long t, m;
    };
    std::vector<Cell> cells;
    for (long t : ts)
        for (long m : ms) cells.push_back(Cell{t, m});
    if (cells.empty()) throw std::invalid_argument("no valid (t, m) cells in the request");

    std::vector<SolveReport> reports(cells.size());
    parallel_cells(cells.size(), jobs, [&](std::size_t i) {
        reports[i] = solve_relative(f, cells[i].t, cells[i].m, mode, Int(v_max));
    });

    std::string text;
    if (format == "json") {
        if (reports.size() == 1) {
            text = json_text(solve_report_json(reports.front()));
        } else {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(solve_report_json(r));
            text = json_text(arr);
        }
    } else if (format == "csv") {
        text = csv_summary_header();
        for (const auto& r : reports) text += csv_summary_row(r);
    } else {
        for (const auto& r : reports) text += solve_table(r);
    }
    return emit(text, out);
}

int cmd_verify(Family f, const TSpec& tspec, const std::vector<long>& ms, SolveMode mode,
               long v_max, int jobs, const std::string& format, const std::string& out) {
    std::vector<VerifyReport> vrs;
    long total = 0;
    for (long m : ms) {
        vrs.push_back(verify_theorem(f, m, tspec.lo, tspec.hi, mode, jobs, Int(v_max)));
        total += vrs.back().mismatches;
        std::cerr << family_name(f) << " m=" << m << " t=" << tspec.lo << ".." << tspec.hi
                  << ": " << vrs.back().mismatches << " mismatches\n";
    }

    std::string text;
    if (format == "json") {
        if (vrs.size() == 1) {
            text = json_text(verify_report_json(vrs.front()));
        } else {
            Json arr = Json::array();
            for (const auto& v : vrs) arr.push_back(verify_report_json(v));
            text = json_text(arr);
        }
    } else if (format == "csv") {
        text = csv_summary_header();
        for (const auto& v : vrs)
            for (const auto& r : v.reports) text += csv_summary_row(r);
    } else {
        for (const auto& v : vrs)
            for (const auto& r : v.reports) text += solve_table(r);
        text += std::to_string(total) + " mismatches\n";
    }
    int rc = emit(text, out);
    if (rc != exit_ok) return rc;
    return total == 0 ? exit_ok : exit_mismatch;
}

int cmd_bounds(Family f, const std::string& scenario_str, long m, const std::string& format,
               const std::string& out) {
    Scenario sc = scenario_from_name(scenario_str);
    BoundParams p = presets(f, sc);
    BoundSet b = derive_bounds(p);
    auto rules = case_rules(m, p, b);

    std::string text;
    if (format == "json") {
        Json rj = Json::array();
        for (const auto& r : rules) rj.push_back(case_rule_json(r));
        text = json_text(Json{{"schema", report_schema_version},
                              {"family", family_name(f)},
                              {"scenario", scenario_name(sc)},
                              {"m", m},
                              {"params", Json{{"K", rat_json(p.K)},
                                              {"epsilon", rat_json(p.epsilon)},
                                              {"eta", rat_json(p.eta)},
                                              {"n", p.n},
                                              {"A", rat_json(p.A)},
                                              {"B", rat_json(p.B)}}},
                              {"bounds", bounds_json(b)},
                              {"rules", rj}});
    } else if (format == "csv") {
        std::ostringstream os;
        os << "label,exact,decimal\n";
        auto row = [&](const std::string& label, const Rat& v) {
            os << label << ',' << v.get_str() << ',' << rat_to_decimal(v, 6) << '\n';
        };
        row("C", b.C);
        row("C1_lo", b.C1.lo);
        row("C1_hi", b.C1.hi);
        row("C2_lo", b.C2.lo);
        row("C2_hi", b.C2.hi);
        row("D_lo", b.D.lo);
        row("D_hi", b.D.hi);
        row("E", b.E);
        for (const auto& r : rules) {
            row(case_name(r.id) + "_threshold", r.threshold.hi);
            row(case_name(r.id) + "_rhs", r.rhs);
        }
        text = os.str();
    } else {
        std::ostringstream os;
        os << family_name(f) << " " << scenario_name(sc) << " m=" << m
           << "  (K=" << rat_to_decimal(p.K, 6) << " eps=" << rat_to_decimal(p.epsilon, 6)
           << " eta=" << rat_to_decimal(p.eta, 6) << " n=" << p.n
           << " A=" << rat_to_decimal(p.A, 6) << " B=" << rat_to_decimal(p.B, 6) << ")\n";
        os << "  C  = " << rat_to_decimal(b.C, 6) << "\n";
        os << "  C1 = " << to_string(b.C1, 6) << "\n";
        os << "  C2 = " << to_string(b.C2, 6) << "\n";
        os << "  D  = " << to_string(b.D, 6) << "\n";
        os << "  E  = " << rat_to_decimal(b.E, 6) << "\n";
        for (const auto& r : rules) {
            os << "  " << case_name(r.id) << ": " << r.trigger;
            if (!r.trigger_is_equality)
                os << " [threshold " << rat_to_decimal(r.threshold.hi, 6) << "]";
            os << "  ->  |F" << r.form_args << "| <= " << rat_to_decimal(r.rhs, 6) << "\n";
        }
        text = os.str();
    }
    return emit(text, out);
}

int cmd_roots(Family f, const TSpec& tspec, const std::string& width_str,
              const std::string& format, const std::string& out) {
    auto ts = expand_ts(f, tspec);
    if (ts.empty()) throw std::invalid_argument("no valid t in the request");
    std::vector<RootGapData> data;
    for (long t : ts) {
        ParamForm form = make_form(f, t);
        data.push_back(width_str.empty() ? gap_stats(form)
                                         : gap_stats(form, parse_decimal(width_str)));
    }

    std::string text;
    if (format == "json") {
        if (data.size() == 1) {
            text = json_text(gap_data_json(data.front()));
        } else {
            Json arr = Json::array();
            for (const auto& g : data) arr.push_back(gap_data_json(g));
            text = json_text(arr);
        }
    } else if (format == "csv") {
        std::ostringstream os;
        os << "t,real_roots,A_lower,B_lower\n";
        for (const auto& g : data)
            os << g.t << ',' << g.roots.size() << ',' << rat_to_decimal(g.a_lower, 6) << ','
               << rat_to_decimal(g.b_lower, 6) << '\n';
        text = os.str();
    } else {
        std::ostringstream os;
        for (const auto& g : data) {
            os << family_name(g.family) << " t=" << g.t
               << "  A_lower=" << rat_to_decimal(g.a_lower, 6)
               << "  B_lower=" << rat_to_decimal(g.b_lower, 6) << "\n";
            for (const auto& r : g.roots)
                os << "  root in [" << rat_to_decimal(r.lo, 9) << ", "
                   << rat_to_decimal(r.hi, 9) << "]\n";
        }
        text = os.str();
    }
    return emit(text, out);
}

int cmd_oracle(Family f, const TSpec& tspec, long d_max, long v_max,
               const std::string& format, const std::string& out) {
    auto ts = expand_ts(f, tspec);
    if (ts.empty()) throw std::invalid_argument("no valid t in the request");
    std::vector<AbsSolutionList> lists;
    for (long t : ts) lists.push_back(brute_box(make_form(f, t), Int(d_max), Int(v_max)));

    std::string text;
    if (format == "json") {
        if (lists.size() == 1) {
            text = json_text(abs_list_json(lists.front()));
        } else {
            Json arr = Json::array();
            for (const auto& l : lists) arr.push_back(abs_list_json(l));
            text = json_text(arr);
        }
    } else if (format == "csv") {
        std::ostringstream os;
        os << "t,u,v,value,completeness\n";
        for (const auto& l : lists)
            for (const auto& p : l.pairs)
                os << l.form.t << ',' << p.u.get_str() << ',' << p.v.get_str() << ','
                   << evaluate_int(l.form, p.u, p.v).get_str() << ','
                   << completeness_name(l.completeness) << '\n';
        text = os.str();
    } else {
        std::ostringstream os;
        for (const auto& l : lists) {
            os << family_name(l.form.family) << " t=" << l.form.t << " |F| <= " << d_max
               << " (" << completeness_name(l.completeness) << ", " << l.pairs.size()
               << " pairs)\n";
            for (const auto& p : l.pairs) os << "  " << render(p) << "\n";
        }
        text = os.str();
    }
    return emit(text, out);
}

int cmd_presets(const std::string& family_filter, const std::string& format,
                const std::string& out) {
    std::vector<std::pair<Family, Scenario>> combos;
    for (Family f : {Family::quartic, Family::sextic}) {
        if (!family_filter.empty() && family_name(f) != family_filter) continue;
        for (Scenario s : {Scenario::generic_m, Scenario::m1, Scenario::m3_large_t,
                           Scenario::m3_small_t})
            combos.emplace_back(f, s);
    }
    if (combos.empty()) throw std::invalid_argument("unknown family: " + family_filter);

    std::string text;
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& [f, s] : combos) {
            BoundParams p = presets(f, s);
            arr.push_back(Json{{"family", family_name(f)},
                               {"scenario", scenario_name(s)},
                               {"K", rat_json(p.K)},
                               {"epsilon", rat_json(p.epsilon)},
                               {"eta", rat_json(p.eta)},
                               {"n", p.n},
                               {"A", rat_json(p.A)},
                               {"B", rat_json(p.B)},
                               {"bounds", bounds_json(derive_bounds(p))}});
        }
        text = json_text(arr);
    } else if (format == "csv") {
        std::ostringstream os;
        os << "family,scenario,epsilon,eta,A,B,C1_hi,D_hi,E\n";
        for (const auto& [f, s] : combos) {
            BoundParams p = presets(f, s);
            BoundSet b = derive_bounds(p);
            os << family_name(f) << ',' << scenario_name(s) << ','
               << rat_to_decimal(p.epsilon, 6) << ',' << rat_to_decimal(p.eta, 6) << ','
               << rat_to_decimal(p.A, 6) << ',' << rat_to_decimal(p.B, 6) << ','
               << rat_to_decimal(b.C1.hi, 6) << ',' << rat_to_decimal(b.D.hi, 6) << ','
               << rat_to_decimal(b.E, 6) << '\n';
        }
        text = os.str();
    } else {
        std::ostringstream os;
        for (const auto& [f, s] : combos) {
            BoundParams p = presets(f, s);
            BoundSet b = derive_bounds(p);
            os << family_name(f) << " " << scenario_name(s)
               << ": eps=" << rat_to_decimal(p.epsilon, 6)
               << " eta=" << rat_to_decimal(p.eta, 6) << " A=" << rat_to_decimal(p.A, 6)
               << " B=" << rat_to_decimal(p.B, 6) << " C1=" << rat_to_decimal(b.C1.hi, 6)
               << " D=" << rat_to_decimal(b.D.hi, 6) << " E=" << rat_to_decimal(b.E, 6)
               << "\n";
        }
        text = os.str();
    }
    return emit(text, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative Thue inequality solver for parametric quartic/sextic families"};
    app.require_subcommand(1);

    std::string family_str, t_str, m_str = "1", mode_str = "search", scenario_str;
    std::string format = "json", out_path, width_str, family_filter;
    long v_max = 1000, d_max = 1, m_single = 1;
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd, bool with_mode) {
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
        if (with_mode) {
            cmd->add_option("--mode", mode_str)->check(CLI::IsMember({"cited", "search"}));
            cmd->add_option("--v-max", v_max)->check(CLI::PositiveNumber);
            cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
        }
    };

    CLI::App* solve = app.add_subcommand("solve", "solve one or more (t, m) cells");
    solve->add_option("--family", family_str)->required();
    solve->add_option("--t", t_str, "parameter value or inclusive range a..b")->required();
    solve->add_option("--m", m_str, "field parameter or comma list")->required();
    add_common(solve, true);

    CLI::App* verify = app.add_subcommand("verify", "sweep t and compare against the golden tables");
    verify->add_option("--family", family_str)->required();
    verify->add_option("--t", t_str)->required();
    verify->add_option("--m", m_str)->required();
    add_common(verify, true);

    CLI::App* bounds = app.add_subcommand("bounds", "derived constants and case rules");
    bounds->add_option("--family", family_str)->required();
    bounds->add_option("--scenario", scenario_str)->required();
    bounds->add_option("--m", m_single)->required();
    add_common(bounds, false);

    CLI::App* roots = app.add_subcommand("roots", "certified root intervals and gap bounds");
    roots->add_option("--family", family_str)->required();
    roots->add_option("--t", t_str)->required();
    roots->add_option("--width", width_str, "fixed isolation width (decimal), default adaptive");
    add_common(roots, false);

    CLI::App* oracle = app.add_subcommand("oracle", "bounded absolute-inequality solution lists");
    oracle->add_option("--family", family_str)->required();
    oracle->add_option("--t", t_str)->required();
    oracle->add_option("--d-max", d_max)->check(CLI::NonNegativeNumber);
    oracle->add_option("--v-max", v_max)->check(CLI::PositiveNumber);
    add_common(oracle, false);

    CLI::App* presets_cmd = app.add_subcommand("presets", "published parameter presets");
    presets_cmd->add_option("--family", family_filter);
    add_common(presets_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(family_from_name(family_str), parse_t_spec(t_str),
                             parse_m_list(m_str), mode_from_name(mode_str), v_max, jobs,
                             format, out_path);
        if (verify->parsed())
            return cmd_verify(family_from_name(family_str), parse_t_spec(t_str),
                              parse_m_list(m_str), mode_from_name(mode_str), v_max, jobs,
                              format, out_path);
        if (bounds->parsed())
            return cmd_bounds(family_from_name(family_str), scenario_str, m_single, format,
                              out_path);
        if (roots->parsed())
            return cmd_roots(family_from_name(family_str), parse_t_spec(t_str), width_str,
                             format, out_path);
        if (oracle->parsed())
            return cmd_oracle(family_from_name(family_str), parse_t_spec(t_str), d_max, v_max,
                              format, out_path);
        if (presets_cmd->parsed()) return cmd_presets(family_filter, format, out_path);
        std::cerr << "error: no subcommand\n";
        return exit_usage;
    } catch (const UnresolvedCaseError& e) {
        std::cerr << "unresolved: " << e.what() << "\n";
        return exit_unresolved;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_mismatch;
    }
}
