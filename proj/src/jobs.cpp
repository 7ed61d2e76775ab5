#include "elkchi/jobs.hpp"

#include <chrono>

#include "elkchi/milnor.hpp"
#include "elkchi/oracle.hpp"
#include "elkchi/parse.hpp"

namespace elkchi {

const char* const kEngineVersion = "1.0.0";

namespace {

// Input-side problems (schema, parse, arity) surface as exit code 1.
struct JobInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void bad_job(const std::string& what) { throw JobInputError(what); }

VarsPtr job_variables(const Json& job) {
    if (!job.contains("variables") || !job["variables"].is_array() || job["variables"].empty())
        bad_job("job needs a non-empty \"variables\" array");
    std::vector<std::string> names;
    for (const auto& v : job["variables"]) {
        if (!v.is_string()) bad_job("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    try {
        return make_vars(std::move(names));
    } catch (const EngineError& e) {
        bad_job(e.what());
    }
}

Polynomial job_polynomial(const Json& job, const VarsPtr& vars, const std::string& name) {
    if (!job.contains("polynomials") || !job["polynomials"].is_object())
        bad_job("job needs a \"polynomials\" object");
    const Json& polys = job["polynomials"];
    if (!polys.contains(name)) bad_job("missing polynomial \"" + name + "\"");
    if (!polys[name].is_string()) bad_job("polynomial \"" + name + "\" must be a string");
    try {
        return parse_polynomial(polys[name].get<std::string>(), vars);
    } catch (const EngineError& e) {
        bad_job("polynomial \"" + name + "\": " + e.what());
    }
}

// Collects prefix1, prefix2, ... as long as the keys exist.
std::vector<Polynomial> job_polynomial_list(const Json& job, const VarsPtr& vars,
                                            const std::string& prefix) {
    if (!job.contains("polynomials") || !job["polynomials"].is_object())
        bad_job("job needs a \"polynomials\" object");
    std::vector<Polynomial> out;
    for (std::size_t i = 1;; ++i) {
        std::string name = prefix + std::to_string(i);
        if (!job["polynomials"].contains(name)) break;
        out.push_back(job_polynomial(job, vars, name));
    }
    if (out.empty()) bad_job("no polynomials named " + prefix + "1, " + prefix + "2, ... found");
    return out;
}

WeightedType job_weighted_type(const Json& job, std::size_t nvars) {
    if (!job.contains("weights") || !job["weights"].is_array())
        bad_job("job needs a \"weights\" array");
    if (!job.contains("weighted_degree") || !job["weighted_degree"].is_number_integer())
        bad_job("job needs an integer \"weighted_degree\"");
    WeightedType w;
    for (const auto& v : job["weights"]) {
        if (!v.is_number_integer()) bad_job("weights must be integers");
        w.weights.push_back(v.get<long>());
    }
    if (w.weights.size() != nvars) bad_job("weights count must match the variable count");
    w.degree = job["weighted_degree"].get<long>();
    return w;
}

DeltaSign job_delta_sign(const Json& job) {
    if (!job.contains("delta_sign")) return DeltaSign::Plus;
    std::string s = job["delta_sign"].is_string() ? job["delta_sign"].get<std::string>() : "";
    if (s == "+") return DeltaSign::Plus;
    if (s == "-") return DeltaSign::Minus;
    bad_job("\"delta_sign\" must be \"+\" or \"-\"");
}

Json signature_json(const SignatureResult& s) {
    return Json{{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}};
}

Json rows_json(const ConsistencyReport& rep) {
    Json rows = Json::array();
    for (const ConsistencyRow& r : rep.rows) {
        Json row{{"relation", r.relation},
                 {"expected", r.expected},
                 {"computed", r.computed},
                 {"verdict", r.pass ? "pass" : "fail"}};
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(row);
    }
    return rows;
}

Json germ_json(const MapGerm& h) {
    Json a = Json::array();
    for (const Polynomial& c : h.components()) a.push_back(c.str());
    return a;
}

struct ComponentLink {
    std::string name;
    long chi = 0;
    std::string method;
    std::optional<LinkEulerResult> detail;
};

bool df_nonzero_at_origin(const Polynomial& f) {
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (!f.derivative(i).constant_coefficient().is_zero()) return true;
    return false;
}

ComponentLink component_link(const std::string& name, const Polynomial& f,
                             const std::optional<WeightedType>& given) {
    std::optional<WeightedType> w = given;
    if (!w) w = infer_weighted_type(f);
    if (!w)
        fail(ErrorCode::NotWeightedHomogeneous,
             "component " + name + " is not weighted homogeneous; no link formula applies");
    LinkEulerResult r = link_euler(f, *w);
    ComponentLink out{name, r.chi, "", r};
    out.method = df_nonzero_at_origin(f) ? "nonvanishing-differential" : "weighted-homogeneous-link";
    return out;
}

void run_task(const Json& job, const JobOptions& opt, const VarsPtr& vars,
              const std::string& task, Json& inputs, Json& outputs, Json& consistency) {
    const std::size_t n = vars->size();

    if (task == "degree") {
        std::vector<Polynomial> comps = job_polynomial_list(job, vars, "h");
        if (comps.size() != n) bad_job("task degree needs h1..hn with n = variable count");
        MapGerm h(vars, comps);
        inputs["h"] = germ_json(h);
        DegreeResult d = local_degree_detailed(h);
        outputs["mu"] = d.mu;
        outputs["local_degree"] = d.degree;
        outputs["signature"] = signature_json(d.sig);
        if (opt.oracle && (n == 2 || n == 3)) outputs["oracle_degree"] = oracle_degree(h);
        if (opt.debug_order) {
            TermOrder ord = (*opt.debug_order == "global") ? global_order() : local_order();
            StandardBasis sb = compute_standard_basis(comps, ord);
            outputs["standard_basis"] = Json{{"order", ord.name()}, {"dump", sb.dump()}};
        }
        return;
    }

    if (task == "khimshiashvili") {
        Polynomial f = job_polynomial(job, vars, "f");
        DeltaSign delta = job_delta_sign(job);
        inputs["f"] = f.str();
        inputs["delta_sign"] = (delta == DeltaSign::Plus) ? "+" : "-";
        outputs["gradient_degree"] = local_degree(MapGerm::gradient(f));
        outputs["chi"] = khimshiashvili_chi(f, delta);
        return;
    }

    if (task == "link-euler" || task == "link-euler-odd") {
        Polynomial f = job_polynomial(job, vars, "f");
        WeightedType w = job_weighted_type(job, n);
        inputs["f"] = f.str();
        inputs["weights"] = w.weights;
        inputs["weighted_degree"] = w.degree;
        LinkEulerResult r =
            (task == "link-euler") ? link_euler(f, w) : link_euler_odd(f, w);
        outputs["p"] = r.p;
        outputs["deg1"] = r.deg1;
        outputs["deg2"] = r.deg2;
        outputs["sphere_chi"] = r.sphere_chi;
        outputs["chi"] = r.chi;
        try {
            SzafraniecData data = szafraniec_setup(f, w);
            Json a = Json::array();
            for (long ai : data.a) a.push_back(ai);
            outputs["a"] = a;
            outputs["omega"] = data.omega.str();
            outputs["h1"] = germ_json(data.h1);
            outputs["h2"] = germ_json(data.h2);
        } catch (const EngineError& e) {
            if (e.code() != ErrorCode::DfNonzeroAtOrigin) throw;
            outputs["note"] = "df(0) != 0: degrees are 0 by the nonvanishing-germ rule";
        }
        return;
    }

    if (task == "variety-link") {
        std::vector<Polynomial> fs = job_polynomial_list(job, vars, "f");
        long k_max = 20;
        if (job.contains("k_max")) {
            if (!job["k_max"].is_number_integer()) bad_job("\"k_max\" must be an integer");
            k_max = job["k_max"].get<long>();
        }
        Json in = Json::array();
        for (const Polynomial& f : fs) in.push_back(f.str());
        inputs["f"] = in;
        inputs["k_max"] = k_max;
        VarietyLinkResult r = variety_link_euler(fs, k_max);
        outputs["chi"] = r.chi;
        outputs["k_used"] = r.k_used;
        outputs["gradient_degree"] = r.degree;
        return;
    }

    if (task == "isolated-milnor") {
        std::vector<Polynomial> fs = job_polynomial_list(job, vars, "f");
        Json in = Json::array();
        for (const Polynomial& f : fs) in.push_back(f.str());
        inputs["f"] = in;
        IsolatedMilnorResult r = isolated_milnor_chi(fs);
        outputs["chi"] = r.chi;
        outputs["gradient_degrees"] = r.degrees;
        return;
    }

    if (task == "fukui") {
        Polynomial f = job_polynomial(job, vars, "f");
        inputs["f"] = f.str();
        FukuiResult r = fukui_D(f);
        outputs["degree"] = r.degree;
        outputs["D"] = r.d_value;
        return;
    }

    if (task == "aoki") {
        std::vector<Polynomial> phi = job_polynomial_list(job, vars, "phi");
        std::optional<Polynomial> fn;
        if (job["polynomials"].contains("fn")) fn = job_polynomial(job, vars, "fn");
        Json in = Json::array();
        for (const Polynomial& p : phi) in.push_back(p.str());
        inputs["phi"] = in;
        if (fn) inputs["fn"] = fn->str();
        AokiResult r = aoki_semibranches(phi, fn);
        outputs["degree"] = r.degree;
        outputs["semibranches"] = r.semibranches;
        outputs["oracle_fallback"] = r.oracle_fallback;
        return;
    }

    if (task == "mod2") {
        std::vector<Polynomial> fs = job_polynomial_list(job, vars, "f");
        Json in = Json::array();
        for (const Polynomial& f : fs) in.push_back(f.str());
        inputs["f"] = in;
        Mod2Result r = dutertre_mod2(fs);
        outputs["mu"] = r.mu;
        outputs["bit"] = r.bit;
        return;
    }

    if (task == "verify") {
        std::vector<Polynomial> fs = job_polynomial_list(job, vars, "f");
        Json in = Json::array();
        for (const Polynomial& f : fs) in.push_back(f.str());
        inputs["f"] = in;
        bool asserted = job.contains("milnor_ab_asserted") &&
                        job["milnor_ab_asserted"].is_boolean() &&
                        job["milnor_ab_asserted"].get<bool>();
        inputs["milnor_ab_asserted"] = asserted;
        std::optional<long> chi_witness;
        if (job.contains("chi_MF")) {
            if (!job["chi_MF"].is_number_integer()) bad_job("\"chi_MF\" must be an integer");
            chi_witness = job["chi_MF"].get<long>();
            inputs["chi_MF"] = *chi_witness;
        }

        std::vector<LinkWitness> witnesses;
        Json links = Json::array();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            std::string name = "f" + std::to_string(i + 1);
            ComponentLink cl = component_link(name, fs[i], std::nullopt);
            witnesses.push_back({cl.name, cl.chi});
            links.push_back(Json{{"component", cl.name},
                                 {"chi_link", cl.chi},
                                 {"method", cl.method},
                                 {"deg1", cl.detail->deg1},
                                 {"deg2", cl.detail->deg2}});
        }
        MilnorInvariants inv{n, fs.size(), 0, asserted};
        ConsistencyReport rep = verify_all(inv, witnesses, chi_witness);
        outputs["n"] = n;
        outputs["k"] = fs.size();
        outputs["links"] = links;
        if (rep.chi_mf) outputs["chi_MF"] = *rep.chi_mf;
        if (rep.chi_mf && fs.size() >= 2 && fs.size() <= n - 1) {
            MilnorInvariants filled = inv;
            filled.chi_mf = *rep.chi_mf;
            Json table = Json::array();
            LinkTable t = link_table(filled);
            for (std::size_t l = 1; l <= t.chi_l.size(); ++l)
                table.push_back(Json{{"l", l}, {"chi", t.chi_l[l - 1]}});
            outputs["link_table"] = table;
            long dim_mf = static_cast<long>(n) - static_cast<long>(fs.size());
            if (dim_mf >= 1) outputs["boundary_chi"] = boundary_chi(*rep.chi_mf, dim_mf);
        }
        outputs["milnor_ab_consistent"] = rep.all_pass;
        consistency = rows_json(rep);
        return;
    }

    bad_job("unknown task \"" + task + "\"");
}

} // namespace

JobOutcome run_job(const Json& job, const JobOptions& options) {
    auto start = std::chrono::steady_clock::now();
    Json report;
    report["engine"] = Json{{"name", "elkchi"}, {"version", kEngineVersion}};
    int exit_code = 0;
    try {
        if (!job.is_object()) bad_job("job must be a JSON object");
        if (!job.contains("task") || !job["task"].is_string())
            bad_job("job needs a \"task\" string");
        std::string task = job["task"].get<std::string>();
        report["task"] = task;
        VarsPtr vars = job_variables(job);
        report["variables"] = vars->names();

        JobOptions opt = options;
        if (job.contains("oracle") && job["oracle"].is_boolean() && job["oracle"].get<bool>())
            opt.oracle = true;

        Json inputs = Json::object();
        Json outputs = Json::object();
        Json consistency = Json::array();
        run_task(job, opt, vars, task, inputs, outputs, consistency);
        report["inputs"] = inputs;
        report["outputs"] = outputs;
        if (!consistency.empty()) report["consistency"] = consistency;
    } catch (const JobInputError& e) {
        report["error"] = Json{{"code", "MALFORMED_INPUT"}, {"message", e.what()}};
        exit_code = 1;
    } catch (const EngineError& e) {
        report["error"] = Json{{"code", e.code_name()}, {"message", e.what()}};
        exit_code = 2;
    } catch (const std::exception& e) {
        report["error"] = Json{{"code", "INTERNAL"}, {"message", e.what()}};
        exit_code = 2;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report["timing_ms"] = elapsed;
    return JobOutcome{std::move(report), exit_code};
}

JobOutcome run_job_text(const std::string& text, const JobOptions& options) {
    Json job = Json::parse(text, nullptr, false);
    if (job.is_discarded()) {
        Json report;
        report["engine"] = Json{{"name", "elkchi"}, {"version", kEngineVersion}};
        report["error"] = Json{{"code", "MALFORMED_INPUT"}, {"message", "invalid JSON"}};
        report["timing_ms"] = 0;
        return JobOutcome{std::move(report), 1};
    }
    return run_job(job, options);
}

} // namespace elkchi
