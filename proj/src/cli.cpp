#include "torfan/cli.hpp"

#include "torfan/degeneration.hpp"
#include "torfan/error.hpp"
#include "torfan/json_io.hpp"
#include "torfan/oracle.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace torfan::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct RunConfig {
    std::string instance;
    std::string chi, lambda, lambda1, lambda2;
    std::vector<std::string> degrees;
    std::size_t budget = default_lattice_budget;
    long oracle_bound = 6;
    bool oracle = false;
    std::string format = "json";
    std::string output;
};

IntVector parse_vector(const std::string& flag, const std::string& text, std::size_t expected) {
    IntVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(Integer::parse(item));
        } catch (const std::exception&) {
            throw UsageError(flag + ": \"" + item + "\" is not an integer");
        }
    }
    if (v.size() != expected)
        throw UsageError(flag + ": expected " + std::to_string(expected) + " comma-separated integers, got " +
                         std::to_string(v.size()));
    return v;
}

Json limit_to_json(const LimitData& d) {
    Json faces = Json::array(), pairs = Json::array();
    for (const auto& f : d.min_faces) faces.push_back(to_json(f));
    for (const auto& [i, j] : d.vanishing_pairs)
        pairs.push_back(Json::array({to_json(std::span<const Integer>(d.degrees[i])),
                                     to_json(std::span<const Integer>(d.degrees[j]))}));
    Json values = Json::array();
    for (const auto& v : d.values) values.push_back(to_json(v));
    return Json{{"lambda", to_json(std::span<const Integer>(d.lambda))},
                {"degrees", to_json(d.degrees)},
                {"n_values", values},
                {"min_faces", faces},
                {"vanishing_pairs", pairs}};
}

Json chambers_to_json(const ChamberDecomposition& dec) {
    Json out = Json::array();
    for (const auto& ch : dec.chambers)
        out.push_back(Json{{"cone", to_json(ch.cone)},
                           {"witness", to_json(std::span<const Integer>(ch.witness))},
                           {"signature", ch.signature},
                           {"vertex_count", ch.vertex_count}});
    return out;
}

Json representatives_to_json(const RepresentativeSet& reps) {
    Json out = Json::array();
    for (std::size_t i = 0; i < reps.per_chamber.size(); ++i) {
        const auto& r = reps.per_chamber[i];
        Json mult = Json::array();
        for (const auto& c : r.multipliers) mult.push_back(to_json(c));
        out.push_back(Json{{"chamber", i},
                           {"generators", to_json(r.generators)},
                           {"multipliers", mult},
                           {"vertex_count", r.vertex_count},
                           {"box_size", to_json(r.box_size)},
                           {"characters", to_json(r.characters)}});
    }
    return out;
}

Json oracle_to_json(const OracleReport& r) {
    return Json{{"bound", r.bound},     {"points", r.points},         {"in_support", r.in_support},
                {"cones_hit", r.cones_hit}, {"face_classes", r.face_classes}, {"failures", r.failures},
                {"ok", r.ok()}};
}

Json refinement_to_json(const std::string& fine_name, const Fan& fine, const std::string& coarse_name,
                        const Fan& coarse) {
    const bool refines = fan_refines(fine, coarse);
    return Json{{"fine", fine_name},
                {"coarse", coarse_name},
                {"fine_cones", fine.size()},
                {"coarse_cones", coarse.size()},
                {"refines", refines},
                {"strict", refines && fine != coarse}};
}

std::vector<Polyhedron> family_polyhedra(const ToricInstance& inst, const HilbertFanData& data) {
    auto parts = data.summands();
    parts.push_back(omega_polyhedron(inst));
    return parts;
}

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

// Full invariant suite behind `torfan check`.
Json run_checks(const ToricInstance& inst, const RunConfig& cfg) {
    std::vector<Check> checks;
    auto record = [&](std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    };
    std::optional<HilbertFanData> data;
    try {
        data = compute_hilbert_fan(inst);
        record("pipeline cross-checks", true);
    } catch (const InvariantViolation& e) {
        record("pipeline cross-checks", false, e.what());
    }
    if (data) {
        const auto& d = *data;
        for (const auto& [name, fan] : {std::pair<std::string, const Fan*>{"chamber fan", &d.decomposition.fan},
                                        {"real fiber fan", &d.real.fan},
                                        {"hilbert fan", &d.fan}}) {
            auto bad = validate_fan(*fan);
            record(name + " is a fan", !bad, bad.value_or(""));
        }
        record("hilbert fan refines real fiber fan", fan_refines(d.fan, d.real.fan));
        record("hilbert fan support equals support cone", d.fan.support() == support_cone(inst));

        std::string refine_detail;
        for (std::size_t i = 0; i < d.hulls.size() && refine_detail.empty(); ++i)
            if (!fan_refines(d.fan, normal_fan(d.hulls[i])))
                refine_detail = "normal fan of P at " + to_string(d.representatives.characters[i]) + " is not refined";
        record("hilbert fan refines every representative fan", refine_detail.empty(), refine_detail);

        std::string stab_detail;
        for (const auto& reps : d.representatives.per_chamber)
            for (std::size_t i = 0; i < reps.generators.size() && stab_detail.empty(); ++i) {
                // Some exponent at or past l*c, all others 1: still interior to the chamber.
                const Integer top = Integer(static_cast<long>(reps.vertex_count)) * reps.multipliers[i];
                IntVector base(inst.r());
                for (std::size_t j = 0; j < reps.generators.size(); ++j)
                    for (std::size_t c = 0; c < base.size(); ++c)
                        base[c] = base[c] + (j == i ? top : Integer(1)) * reps.generators[j][c];
                IntVector step(inst.r());
                for (std::size_t c = 0; c < step.size(); ++c) step[c] = reps.multipliers[i] * reps.generators[i][c];
                IntVector below(inst.r());
                for (std::size_t c = 0; c < below.size(); ++c) below[c] = base[c] - step[c];
                const Polyhedron lhs = integral_fiber_hull(inst, base);
                if (lhs != minkowski_sum(integral_fiber_hull(inst, below), integral_fiber_hull(inst, step)))
                    stab_detail = "P at " + to_string(base) + " is not P at " + to_string(below) + " + P at " +
                                  to_string(step);
            }
        record("stabilization of integral fibers", stab_detail.empty(), stab_detail);

        std::string sub_detail;
        const auto degrees = default_degrees(d.representatives);
        const Cone support = support_cone(inst);
        for (std::size_t k = 0; k <= inst.n() && sub_detail.empty(); ++k) {
            IntVector lambda(inst.n());
            if (k < inst.n()) lambda[k] = Integer(1);
            if (!support.contains(lambda)) continue;
            try {
                (void)limit_data(inst, lambda, degrees);
            } catch (const InvariantViolation& e) {
                sub_detail = e.what();
            }
        }
        record("subadditivity of n_lambda", sub_detail.empty(), sub_detail);

        OracleReport hil = lambda_grid_oracle(d.fan, d.summands(), cfg.oracle_bound);
        record("lambda-grid oracle, hilbert fan", hil.ok(), hil.ok() ? "" : hil.failures.front());
        OracleReport fam =
            lambda_grid_oracle(universal_family_fan(inst, d), family_polyhedra(inst, d), cfg.oracle_bound);
        record("lambda-grid oracle, family fan", fam.ok(), fam.ok() ? "" : fam.failures.front());
    }
    Json list = Json::array();
    bool all = true;
    for (const auto& c : checks) {
        list.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        all = all && c.ok;
    }
    return Json{{"checks", list}, {"ok", all}};
}

Json execute(const std::string& command, const RunConfig& cfg) {
    ToricInstance inst = load_instance_file(cfg.instance);
    inst.budget = cfg.budget;
    Json report;
    report["instance"] = Json{{"name", inst.name()}, {"n", inst.n()}, {"r", inst.r()}};
    report["command"] = command;
    auto chi = [&] { return parse_vector("--chi", cfg.chi, inst.r()); };
    auto lam = [&](const char* flag, const std::string& v) { return parse_vector(flag, v, inst.n()); };

    if (command == "validate") {
        report["valid"] = true;
        report["positive_grading"] = is_positive_grading(inst);
        report["sigma_cone"] = to_json(inst.sigma_cone());
        report["sigma_lattice"] = to_json(inst.sigma_lattice());
        report["support_cone"] = to_json(support_cone(inst));
    } else if (command == "fiber") {
        const IntVector c = chi();
        report["chi"] = to_json(std::span<const Integer>(c));
        Polyhedron real = fiber_polyhedron(inst, c), integral = integral_fiber_hull(inst, c);
        report["empty"] = integral.is_empty();
        report["real"] = to_json(real);
        report["integral"] = to_json(integral);
    } else if (command == "integral") {
        const IntVector c = chi();
        report["chi"] = to_json(std::span<const Integer>(c));
        report["integral"] = is_integral(inst, c);
        report["multiplier"] = is_zero(c) ? Json(1) : to_json(integral_multiplier(inst, c));
    } else if (command == "git-fan") {
        ChamberDecomposition dec = git_decomposition(inst);
        RealFiberFan real = real_fiber_fan(inst, dec);
        report["chambers"] = chambers_to_json(dec);
        report["chamber_fan"] = to_json(dec.fan);
        report["real_polyhedron"] = to_json(real.polyhedron);
        report["real_fiber_fan"] = to_json(real.fan);
    } else if (command == "hilbert-fan" || command == "family-fan") {
        HilbertFanData data = compute_hilbert_fan(inst);
        report["representatives"] = representatives_to_json(data.representatives);
        report["characters"] = to_json(data.representatives.characters);
        report["hilbert_fan"] = to_json(data.fan);
        if (command == "hilbert-fan") {
            report["chambers"] = chambers_to_json(data.decomposition);
            report["state_polytope"] = to_json(data.state_polytope);
            report["real_fiber_fan"] = to_json(data.real.fan);
            report["refinement"] = refinement_to_json("C_H0", data.fan, "C_R", data.real.fan);
            if (cfg.oracle) report["oracle"] = oracle_to_json(lambda_grid_oracle(data.fan, data.summands(), cfg.oracle_bound));
        } else {
            Fan family = universal_family_fan(inst, data);
            report["family_fan"] = to_json(family);
            report["refinement"] = Json{{"fine", "C_W0"},         {"coarse", "C_H0"},
                                        {"fine_cones", family.size()}, {"coarse_cones", data.fan.size()},
                                        {"refines", cones_refine(family, data.fan)}};
            if (cfg.oracle)
                report["oracle"] =
                    oracle_to_json(lambda_grid_oracle(family, family_polyhedra(inst, data), cfg.oracle_bound));
        }
    } else if (command == "limit") {
        const IntVector l = lam("--lambda", cfg.lambda);
        report["lambda"] = to_json(std::span<const Integer>(l));
        report["limit_exists"] = limit_exists(inst, l);
        if (!report["limit_exists"].get<bool>()) {
            report["limit"] = nullptr;
        } else {
            std::vector<IntVector> degrees;
            if (cfg.degrees.empty()) {
                degrees = default_degrees(degree_representatives(inst, git_decomposition(inst)));
            } else {
                for (const auto& d : cfg.degrees) degrees.push_back(parse_vector("--degree", d, inst.r()));
            }
            report["limit"] = limit_to_json(limit_data(inst, l, degrees));
        }
    } else if (command == "same-limit") {
        const IntVector l1 = lam("--lambda1", cfg.lambda1), l2 = lam("--lambda2", cfg.lambda2);
        HilbertFanData data = compute_hilbert_fan(inst);
        report["lambda1"] = to_json(std::span<const Integer>(l1));
        report["lambda2"] = to_json(std::span<const Integer>(l2));
        report["same_limit"] = same_limit(inst, data, l1, l2);
        report["cone1"] = to_json(*data.fan.minimal_cone_containing(l1));
        report["cone2"] = to_json(*data.fan.minimal_cone_containing(l2));
    } else if (command == "subdivision") {
        const IntVector l = lam("--lambda", cfg.lambda);
        HilbertFanData data = compute_hilbert_fan(inst);
        report["lambda"] = to_json(std::span<const Integer>(l));
        report["subdivision"] = to_json(sigma_subdivision(inst, data, l));
    } else if (command == "check") {
        Json checks = run_checks(inst, cfg);
        report["checks"] = checks["checks"];
        report["ok"] = checks["ok"];
    }
    return report;
}

std::string vector_text(const Json& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
    }
    return s + ")";
}

std::string list_text(const Json& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + vector_text(vs[i]);
    return s.empty() ? "-" : s;
}

std::string fan_text(const std::string& label, const Json& fan) {
    std::string s = label + ": " + std::to_string(fan["n_maximal_cones"].get<std::size_t>()) + " maximal cones";
    if (!fan["lineality"].empty()) s += "; lineality " + list_text(fan["lineality"]);
    s += "\n  rays " + list_text(fan["rays"]) + "\n";
    for (const auto& cone : fan["maximal_cones"]) s += "  cone " + cone.dump() + "\n";
    return s;
}

}  // namespace

std::string emit_report(const Json& report) {
    std::ostringstream os;
    if (report.contains("instance")) {
        const Json& i = report["instance"];
        os << "instance " << (i["name"].get<std::string>().empty() ? "(unnamed)" : i["name"].get<std::string>())
           << " (n=" << i["n"] << ", r=" << i["r"] << ")\n";
    }
    for (const char* key : {"valid", "positive_grading", "empty", "integral", "multiplier", "limit_exists",
                            "same_limit", "ok"})
        if (report.contains(key) && !report[key].is_object()) os << key << ": " << report[key].dump() << "\n";
    for (const char* key : {"chi", "lambda", "lambda1", "lambda2"})
        if (report.contains(key)) os << key << ": " << vector_text(report[key]) << "\n";

    if (report.contains("chambers")) {
        os << "\nchamber  rays  witness  l(sigma)\n";
        std::size_t k = 0;
        for (const auto& ch : report["chambers"])
            os << k++ << "  " << list_text(ch["cone"]["rays"]) << "  " << vector_text(ch["witness"]) << "  "
               << ch["vertex_count"] << "\n";
    }
    if (report.contains("representatives")) {
        os << "\nchamber  mu  c  l(sigma)  box  representatives\n";
        for (const auto& r : report["representatives"]) {
            std::string mult;
            for (const auto& c : r["multipliers"]) mult += (mult.empty() ? "" : " ") + c.dump();
            os << r["chamber"] << "  " << list_text(r["generators"]) << "  " << (mult.empty() ? "-" : mult) << "  "
               << r["vertex_count"] << "  " << r["box_size"].dump() << "  " << list_text(r["characters"]) << "\n";
        }
        if (report["characters"].empty()) os << "state polyhedron = P_R\n";
    }
    os << "\n";
    for (const auto& [key, label] : {std::pair<const char*, const char*>{"chamber_fan", "chamber fan"},
                                     {"real_fiber_fan", "C_R"},
                                     {"hilbert_fan", "C_H0"},
                                     {"family_fan", "C_W0"},
                                     {"subdivision", "subdivision of cone(Sigma)"}})
        if (report.contains(key)) os << fan_text(label, report[key]);
    if (report.contains("refinement")) {
        const Json& r = report["refinement"];
        os << r["fine"].get<std::string>() << ": " << r["fine_cones"] << " maximal cones; refines "
           << r["coarse"].get<std::string>() << " (" << r["coarse_cones"] << " cones): ";
        if (!r["refines"].get<bool>())
            os << "NO\n";
        else if (r.contains("strict"))
            os << (r["strict"].get<bool>() ? "STRICT" : "EQUAL") << "\n";
        else
            os << "YES\n";
    }
    if (report.contains("oracle")) {
        const Json& o = report["oracle"];
        os << "oracle (B=" << o["bound"] << "): " << o["in_support"] << " of " << o["points"] << " points in support, "
           << o["cones_hit"] << " cones, " << o["face_classes"] << " face classes: "
           << (o["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
        for (const auto& f : o["failures"]) os << "  " << f.get<std::string>() << "\n";
    }
    if (report.contains("limit") && report["limit"].is_object()) {
        const Json& l = report["limit"];
        os << "degree  n_lambda  min face\n";
        for (std::size_t i = 0; i < l["degrees"].size(); ++i)
            os << vector_text(l["degrees"][i]) << "  " << l["n_values"][i].dump() << "  "
               << l["min_faces"][i].dump() << "\n";
        os << "vanishing products:";
        for (const auto& p : l["vanishing_pairs"]) os << " " << vector_text(p[0]) << "*" << vector_text(p[1]);
        os << (l["vanishing_pairs"].empty() ? " none\n" : "\n");
    }
    if (report.contains("checks"))
        for (const auto& c : report["checks"]) {
            os << (c["ok"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
            if (!c["detail"].get<std::string>().empty()) os << ": " << c["detail"].get<std::string>();
            os << "\n";
        }
    std::string text = os.str();
    while (text.size() > 1 && text.ends_with("\n\n")) text.pop_back();
    return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fans of toric Hilbert schemes and fiber polyhedra", "torfan"};
    app.require_subcommand(1);
    RunConfig cfg;

    struct Spec {
        const char* name;
        const char* help;
        std::vector<const char*> required;
    };
    const std::vector<Spec> specs{
        {"validate", "load and validate an instance", {}},
        {"fiber", "real and integral fiber over --chi", {"--chi"}},
        {"integral", "integrality and multiplier of --chi", {"--chi"}},
        {"git-fan", "chamber decomposition and fan of the real fibers", {}},
        {"hilbert-fan", "representatives, state polytope and Hilbert fan", {}},
        {"family-fan", "fan of the universal family", {}},
        {"limit", "limit data of --lambda", {"--lambda"}},
        {"same-limit", "whether --lambda1 and --lambda2 give the same limit", {"--lambda1", "--lambda2"}},
        {"subdivision", "domains of linearity of the fiber minimum of --lambda", {"--lambda"}},
        {"check", "full invariant suite and oracle", {}},
    };
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("instance", cfg.instance, "instance JSON file")->required();
        sub->add_option("--budget", cfg.budget, "lattice-point budget")->check(CLI::PositiveNumber);
        sub->add_option("--oracle-bound", cfg.oracle_bound, "lambda grid bound B")->check(CLI::PositiveNumber);
        sub->add_flag("--oracle", cfg.oracle, "run the lambda-grid oracle");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output", cfg.output, "write the report to a file");
        auto text_option = [&](const char* flag, std::string& target, const char* help) {
            CLI::Option* o = sub->add_option(flag, target, help)->allow_extra_args(false);
            for (const char* req : spec.required)
                if (std::string(req) == flag) o->required();
        };
        const std::string name = spec.name;
        if (name == "fiber" || name == "integral") text_option("--chi", cfg.chi, "character, comma separated");
        if (name == "limit" || name == "subdivision") text_option("--lambda", cfg.lambda, "comma separated");
        if (name == "same-limit") {
            text_option("--lambda1", cfg.lambda1, "comma separated");
            text_option("--lambda2", cfg.lambda2, "comma separated");
        }
        if (name == "limit") sub->add_option("--degree", cfg.degrees, "degree for the limit data (repeatable)");
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    Json report;
    try {
        report = execute(command, cfg);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    }

    const std::string text = cfg.format == "json" ? dump_canonical(report) : emit_report(report);
    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.output);
        if (!(file << text)) {
            err << "error: cannot write " << cfg.output << "\n";
            return domain_error;
        }
    }
    if (command == "check" && !report["ok"].get<bool>()) {
        for (const auto& c : report["checks"])
            if (!c["ok"].get<bool>()) {
                err << "check failed: " << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
                break;
            }
        return domain_error;
    }
    return success;
}

}  // namespace torfan::cli
