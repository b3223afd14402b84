#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "mfcat/checks.hpp"
#include "mfcat/cns_ring.hpp"
#include "mfcat/perm_cat.hpp"
#include "mfcat/properties.hpp"
#include "mfcat/tl_charged.hpp"

using json = nlohmann::ordered_json;
using namespace mfcat;

namespace {

constexpr const char* kVersion = "1";
constexpr int kRingMax = 8;  // closed-form and diagrammatic tables
constexpr int kHomMax = 6;   // tables computed from hom-space dimensions

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "json";
    std::string out;
    int max_degree = -1;
    bool max_degree_set = false;
    int jobs = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void add_common(CLI::App* sub, Common& c, bool solver) {
    sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.out, "write output to this file");
    if (!solver) return;
    sub->add_option("--max-degree", c.max_degree, "homotopy search degree bound (env MFCAT_MAX_DEGREE)")
        ->check(CLI::NonNegativeNumber)
        ->each([&c](const std::string&) { c.max_degree_set = true; });
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "seed for the randomised property tests")
        ->each([&c](const std::string&) { c.seed_set = true; });
}

SolveOptions solve_options(const Common& c) {
    SolveOptions opt;
    if (c.max_degree_set) {
        opt.degree_bound = c.max_degree;
    } else if (const char* env = std::getenv("MFCAT_MAX_DEGREE")) {
        try {
            std::size_t used = 0;
            int v = std::stoi(env, &used);
            if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
            opt.degree_bound = v;
        } catch (const std::exception&) {
            throw UsageError(std::string("MFCAT_MAX_DEGREE is not a nonnegative integer: ") + env);
        }
    }
    if (c.seed_set) set_property_seed(c.seed);
    return opt;
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot open " + c.out);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + c.out);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return r + "\"";
}

std::string params_str(const CaseReport& r) {
    std::string s;
    for (auto& [k, v] : r.params) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
}

// ---- verification reports ----

struct CheckRun {
    const CheckDef* def;
    std::vector<CaseReport> reports;
    std::string error;  // set when the check itself threw
};

struct Tally {
    long cases = 0, passed = 0, failed = 0, bound = 0;
    void add(const CaseReport& r) {
        ++cases;
        if (r.status == Status::Pass) ++passed;
        else if (r.status == Status::FalseAtBound) ++bound;
        else ++failed;
    }
    json to_json() const { return {{"cases", cases}, {"passed", passed}, {"failed", failed}, {"false_at_bound", bound}}; }
};

json report_json(const CaseReport& r) {
    json p = json::object();
    for (auto& [k, v] : r.params) p[k] = v;
    json j = {{"check_name", r.check}, {"d", r.d}, {"params", p}, {"status", status_name(r.status)}};
    j["witness"] = r.witness.empty() ? json(nullptr) : json(r.witness);
    j["scalar"] = r.scalar.empty() ? json(nullptr) : json(r.scalar);
    j["note"] = r.note.empty() ? json(nullptr) : json(r.note);
    j["degree_bound_used"] = r.degree_bound;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

std::vector<CheckRun> run_checks(std::vector<const CheckDef*> defs, int d, const SolveOptions& opt, int jobs) {
    std::sort(defs.begin(), defs.end(), [](auto* a, auto* b) { return a->name < b->name; });
    std::vector<CheckRun> runs(defs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < defs.size();) {
            runs[i].def = defs[i];
            try {
                runs[i].reports = defs[i]->run(d, opt);
            } catch (const std::exception& e) {
                runs[i].error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::min<int>(jobs, static_cast<int>(defs.size())); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return runs;
}

Tally tally_of(const CheckRun& run) {
    Tally t;
    for (auto& r : run.reports) t.add(r);
    if (!run.error.empty()) ++t.cases, ++t.failed;
    return t;
}

std::string render_runs(const std::vector<CheckRun>& runs, int d, const std::string& format) {
    Tally total;
    for (auto& run : runs) {
        for (auto& r : run.reports) total.add(r);
        if (!run.error.empty()) ++total.cases, ++total.failed;
    }
    std::ostringstream os;
    if (format == "json") {
        json checks = json::array();
        for (auto& run : runs) {
            json reps = json::array();
            for (auto& r : run.reports) reps.push_back(report_json(r));
            json c = {{"name", run.def->name}, {"summary", tally_of(run).to_json()}};
            c["error"] = run.error.empty() ? json(nullptr) : json(run.error);
            c["reports"] = std::move(reps);
            checks.push_back(std::move(c));
        }
        json s = total.to_json();
        s["checks"] = runs.size();
        json doc = {{"version", kVersion}, {"d", d}, {"checks", std::move(checks)}, {"summary", std::move(s)}};
        os << doc.dump(2) << "\n";
    } else if (format == "csv") {
        os << "check,d,params,status,scalar,bound,ms\n";
        for (auto& run : runs) {
            for (auto& r : run.reports)
                os << csv_field(r.check) << "," << r.d << "," << csv_field(params_str(r)) << "," << status_name(r.status)
                   << "," << csv_field(r.scalar) << "," << r.degree_bound << "," << r.runtime_ms << "\n";
            if (!run.error.empty()) os << csv_field(run.def->name) << "," << d << ",,fail," << csv_field(run.error) << ",0,0\n";
        }
    } else {
        for (auto& run : runs) {
            Tally t = tally_of(run);
            os << run.def->name << " (d = " << d << "): " << t.passed << "/" << t.cases << " pass";
            if (t.failed) os << ", " << t.failed << " fail";
            if (t.bound) os << ", " << t.bound << " false-at-bound";
            os << "\n";
            for (auto& r : run.reports) {
                if (r.status == Status::Pass && r.scalar.empty()) continue;
                os << "  " << status_name(r.status) << "  " << params_str(r);
                if (!r.scalar.empty()) os << "  scalar = " << r.scalar;
                if (!r.note.empty()) os << "  (" << r.note << ")";
                os << "\n";
            }
            if (!run.error.empty()) os << "  error: " << run.error << "\n";
        }
        os << "total: " << total.passed << "/" << total.cases << " pass\n";
    }
    return os.str();
}

int exit_code(const std::vector<CheckRun>& runs) {
    bool fail = false, bound = false;
    for (auto& run : runs) {
        fail |= !run.error.empty();
        for (auto& r : run.reports) {
            fail |= r.status == Status::Fail;
            bound |= r.status == Status::FalseAtBound;
        }
    }
    if (bound) std::cerr << "some cases are false at the degree bound; raise --max-degree\n";
    return fail || bound ? 1 : 0;
}

// key=value filters on case parameters
std::vector<std::pair<std::string, std::string>> parse_filters(const std::vector<std::string>& raw) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& s : raw) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got " + s);
        out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    return out;
}

void apply_filters(CheckRun& run, const std::vector<std::pair<std::string, std::string>>& filters) {
    for (auto& [k, v] : filters) {
        bool known = std::any_of(run.reports.begin(), run.reports.end(), [&](const CaseReport& r) {
            return std::any_of(r.params.begin(), r.params.end(), [&](auto& p) { return p.first == k; });
        });
        if (!known && run.error.empty()) throw UsageError("check " + run.def->name + " has no parameter " + k);
        std::erase_if(run.reports, [&](const CaseReport& r) {
            return std::none_of(r.params.begin(), r.params.end(), [&](auto& p) { return p.first == k && p.second == v; });
        });
    }
}

// ---- fusion and dimension tables ----

struct Table {
    std::vector<std::string> simples;
    // row (a, b) -> summand -> multiplicity, indices into simples
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, int>> rows;
};

struct Side {
    std::vector<std::string> names;
    std::vector<PermLabel> as_lg;  // relabelling to P_{m;l}
};

// Display order of summands: by l, then m, matching P_{0;1} (x) P_{0;1} = P_{1;0} + P_{0;2}.
std::vector<PermLabel> lg_order(const PermCategory& C) {
    auto v = C.labels();
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.l != b.l ? a.l < b.l : a.m < b.m; });
    return v;
}

void require_d(int d, int max, const std::string& what) {
    if (d < 3 || d > max)
        throw UsageError(what + " needs 3 <= d <= " + std::to_string(max) + ", got " + std::to_string(d));
}

Table fusion_table(const std::string& side, int d, const std::string& method, const std::string& relabel) {
    bool hom = method == "hom-space";
    if (hom && side != "lg") throw UsageError("--method hom-space applies to --side lg only");
    require_d(d, hom ? kHomMax : kRingMax, hom ? "a hom-space table" : "a fusion table");
    PermCategory C(d);
    auto lg = lg_order(C);
    std::map<PermLabel, std::size_t> lg_index;
    for (std::size_t i = 0; i < lg.size(); ++i) lg_index[lg[i]] = i;

    // Native labels, their lg images and the native fusion in lg terms.
    Side S;
    std::function<std::vector<PermLabel>(std::size_t, std::size_t)> fuse;
    std::unique_ptr<ChargedFusionRing> ring;
    std::vector<CnsLabel> cns;
    if (side == "lg") {
        for (auto& s : lg) S.names.push_back(s.str()), S.as_lg.push_back(s);
        fuse = [&](std::size_t a, std::size_t b) {
            if (!hom) return C.fusion_rule(lg[a], lg[b]);
            std::vector<PermLabel> v;
            for (auto& [c, n] : C.fusion_by_hom(lg[a], lg[b]))
                for (std::size_t i = 0; i < n; ++i) v.push_back(c);
            return v;
        };
    } else if (side == "cft") {
        cns = cns_simples(d);
        for (auto& c : cns) S.names.push_back(c.str()), S.as_lg.push_back(cns_to_perm(d, c));
        fuse = [&](std::size_t a, std::size_t b) {
            std::vector<PermLabel> v;
            for (auto& c : cns_fuse(d, cns[a], cns[b])) v.push_back(cns_to_perm(d, c));
            return v;
        };
    } else {
        ring = std::make_unique<ChargedFusionRing>(d);
        for (auto& s : ring->simples()) S.names.push_back(s.str()), S.as_lg.push_back(C.label(s.k, s.n));
        fuse = [&](std::size_t a, std::size_t b) {
            std::vector<PermLabel> v;
            for (auto& c : ring->fuse(ring->simples()[a], ring->simples()[b])) v.push_back(C.label(c.k, c.n));
            return v;
        };
    }

    // Target labelling: native, or lg / cft names via the lg images.
    Table T;
    std::vector<std::size_t> pos(S.names.size());  // native index -> target index
    std::map<PermLabel, std::size_t> target_of;    // lg label -> target index
    if (relabel.empty() || relabel == side) {
        T.simples = S.names;
        for (std::size_t i = 0; i < S.names.size(); ++i) pos[i] = i, target_of[S.as_lg[i]] = i;
    } else if (relabel == "lg") {
        for (auto& s : lg) T.simples.push_back(s.str());
        for (std::size_t i = 0; i < S.names.size(); ++i) pos[i] = lg_index.at(S.as_lg[i]);
        target_of = lg_index;
    } else if (relabel == "cft") {
        auto all = cns_simples(d);
        for (std::size_t i = 0; i < all.size(); ++i) {
            T.simples.push_back(all[i].str());
            target_of[cns_to_perm(d, all[i])] = i;
        }
        for (std::size_t i = 0; i < S.names.size(); ++i) pos[i] = target_of.at(S.as_lg[i]);
    } else {
        throw UsageError("--relabel supports lg and cft");
    }
    for (std::size_t a = 0; a < S.names.size(); ++a)
        for (std::size_t b = 0; b < S.names.size(); ++b) {
            auto& row = T.rows[{pos[a], pos[b]}];
            for (auto& c : fuse(a, b)) ++row[target_of.at(c)];
        }
    return T;
}

std::string render_table(const Table& T, const json& head, const std::string& format) {
    auto summands = [&](const std::map<std::size_t, int>& row) {
        std::string s;
        for (auto& [c, n] : row) {
            if (!s.empty()) s += " ⊕ ";
            s += (n > 1 ? std::to_string(n) + " " : "") + T.simples[c];
        }
        return s.empty() ? std::string("0") : s;
    };
    std::ostringstream os;
    if (format == "json") {
        json doc = head;
        doc["simples"] = T.simples;
        json rows = json::array();
        for (auto& [ab, row] : T.rows) {
            json sum = json::array();
            for (auto& [c, n] : row) sum.push_back({{"simple", T.simples[c]}, {"N", n}});
            rows.push_back({{"left", T.simples[ab.first]}, {"right", T.simples[ab.second]}, {"summands", std::move(sum)}});
        }
        doc["rows"] = std::move(rows);
        os << doc.dump(2) << "\n";
    } else if (format == "csv") {
        os << "left,right,summand,N\n";
        for (auto& [ab, row] : T.rows)
            for (auto& [c, n] : row)
                os << csv_field(T.simples[ab.first]) << "," << csv_field(T.simples[ab.second]) << "," << csv_field(T.simples[c])
                   << "," << n << "\n";
    } else {
        os << "fusion table, side " << head["side"].get<std::string>() << ", d = " << head["d"].get<int>() << ", "
           << T.simples.size() << " simples\n";
        for (auto& [ab, row] : T.rows)
            os << T.simples[ab.first] << "⊗" << T.simples[ab.second] << " = " << summands(row) << "\n";
    }
    return os.str();
}

struct DimRow {
    std::string simple;
    std::string qdim;
    std::string qdim_left;  // lg only
};

std::string render_dims(const std::string& side, int d, const std::string& format) {
    require_d(d, kRingMax, "a dimension table");
    std::vector<DimRow> rows;
    CycNumber global = 0;
    if (side == "lg") {
        PermCategory C(d);
        for (auto& s : lg_order(C)) {
            CycNumber q = C.qdim_spherical(s);
            global += q * q;
            rows.push_back({s.str(), q.str(), C.qdim_left(s).str()});
        }
    } else if (side == "cft") {
        for (auto& c : cns_simples(d)) {
            CycNumber q = cns_qdim(d, c);
            global += q * q;
            rows.push_back({c.str(), q.str(), ""});
        }
    } else {
        ChargedFusionRing R(d);
        TemperleyLieb tl(d);
        for (auto& s : R.simples()) {
            CycNumber q = tl.markov_trace(tl.jones_wenzl(s.n));
            global += q * q;
            rows.push_back({s.str(), q.str(), ""});
        }
    }
    std::ostringstream os;
    if (format == "json") {
        json list = json::array();
        for (auto& r : rows) {
            json j = {{"simple", r.simple}, {"qdim", r.qdim}};
            if (side == "lg") j["qdim_left"] = r.qdim_left;
            list.push_back(std::move(j));
        }
        json doc = {{"version", kVersion}, {"side", side}, {"d", d}, {"rows", std::move(list)}, {"global_dim", global.str()}};
        os << doc.dump(2) << "\n";
    } else if (format == "csv") {
        os << "simple,qdim" << (side == "lg" ? ",qdim_left" : "") << "\n";
        for (auto& r : rows) {
            os << csv_field(r.simple) << "," << csv_field(r.qdim);
            if (side == "lg") os << "," << csv_field(r.qdim_left);
            os << "\n";
        }
    } else {
        os << "quantum dimensions, side " << side << ", d = " << d << " (zeta = exp(pi i / " << d << "))\n";
        for (auto& r : rows) {
            os << r.simple << ": " << r.qdim;
            if (side == "lg") os << "   left: " << r.qdim_left;
            os << "\n";
        }
        os << "global dimension: " << global.str() << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the permutation-type matrix factorisation category and its fusion rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("mfcat ") + kVersion);

    Common common;
    int d = 0;

    auto* list = app.add_subcommand("checks", "list the named checks");
    add_common(list, common, false);

    std::string check;
    std::vector<std::string> raw_params;
    auto* verify = app.add_subcommand("verify", "run one named check");
    verify->add_option("--check", check, "check name")->required();
    verify->add_option("--d", d, "d >= 3 (2 for vd)")->required();
    verify->add_option("--param", raw_params, "keep only cases with key=value (repeatable)");
    add_common(verify, common, true);

    std::string side = "lg", method = "closed-form", relabel;
    auto* fusion = app.add_subcommand("fusion-table", "N-coefficient table");
    fusion->add_option("--side", side, "lg, cft or tl")->check(CLI::IsMember({"lg", "cft", "tl"}));
    fusion->add_option("--d", d, "3 <= d")->required();
    fusion->add_option("--method", method, "closed-form or hom-space (lg only)")
        ->check(CLI::IsMember({"closed-form", "hom-space"}));
    fusion->add_option("--relabel", relabel, "print the table in lg or cft labels")->check(CLI::IsMember({"lg", "cft"}));
    add_common(fusion, common, false);

    auto* dims = app.add_subcommand("dim-table", "quantum dimensions of the simples");
    dims->add_option("--side", side, "lg, cft or tl")->check(CLI::IsMember({"lg", "cft", "tl"}));
    dims->add_option("--d", d, "3 <= d")->required();
    add_common(dims, common, false);

    bool all = false;
    auto* report = app.add_subcommand("report", "run every check for one d");
    report->add_flag("--all", all, "run the full suite")->required();
    report->add_option("--d", d, "d >= 3")->required();
    add_common(report, common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            std::ostringstream os;
            std::vector<const CheckDef*> defs;
            for (auto& c : check_registry()) defs.push_back(&c);
            std::sort(defs.begin(), defs.end(), [](auto* a, auto* b) { return a->name < b->name; });
            if (common.format == "json") {
                json arr = json::array();
                for (auto* c : defs) arr.push_back({{"name", c->name}, {"summary", c->summary}, {"min_d", c->min_d}});
                os << json{{"version", kVersion}, {"checks", arr}}.dump(2) << "\n";
            } else if (common.format == "csv") {
                os << "name,min_d,summary\n";
                for (auto* c : defs) os << c->name << "," << c->min_d << "," << csv_field(c->summary) << "\n";
            } else {
                for (auto* c : defs) os << c->name << "  " << c->summary << "\n";
            }
            emit(common, os.str());
            return 0;
        }
        if (verify->parsed()) {
            const CheckDef* def = find_check(check);
            if (!def) throw UsageError("unknown check: " + check + " (see `mfcat checks`)");
            if (d < def->min_d) throw UsageError(check + " needs d >= " + std::to_string(def->min_d));
            auto filters = parse_filters(raw_params);
            SolveOptions opt = solve_options(common);
            auto runs = run_checks({def}, d, opt, 1);
            apply_filters(runs[0], filters);
            emit(common, render_runs(runs, d, common.format));
            return exit_code(runs);
        }
        if (report->parsed()) {
            if (d < 3) throw UsageError("report needs d >= 3");
            SolveOptions opt = solve_options(common);
            std::vector<const CheckDef*> defs;
            for (auto& c : check_registry()) defs.push_back(&c);
            auto runs = run_checks(defs, d, opt, common.jobs);
            emit(common, render_runs(runs, d, common.format));
            return exit_code(runs);
        }
        if (fusion->parsed()) {
            Table T = fusion_table(side, d, method, relabel);
            json head = {{"version", kVersion}, {"side", side}, {"d", d}, {"method", side == "lg" ? method : "closed-form"}};
            head["labels"] = relabel.empty() ? side : relabel;
            emit(common, render_table(T, head, common.format));
            return 0;
        }
        if (dims->parsed()) {
            emit(common, render_dims(side, d, common.format));
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "mfcat: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mfcat: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
