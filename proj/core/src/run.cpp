#include "polyalg/run.hpp"

#include <map>
#include <optional>

#include "polyalg/exceptions.hpp"
#include "polyalg/json_io.hpp"
#include "polyalg/norm_engine.hpp"
#include "polyalg/products.hpp"
#include "polyalg/suites.hpp"
#include "polyalg/tensorize.hpp"

namespace polyalg {

namespace {

struct Tolerances {
    double identity = 1e-10;
    double optimization = 1e-6;
};

/// Named objects of a run configuration, resolved in dependency order.
class Workspace {
public:
    explicit Workspace(const json& objects) {
        if (objects.is_null()) return;
        if (!objects.is_object()) throw ConfigError("objects must be a name -> document map");
        // Spaces and algebras first; everything else may reference them.
        for (const auto& [name, doc] : objects.items()) {
            const std::string type = doc.value("type", "");
            if (type == "space") spaces_[name] = space_from_json(doc);
            if (type == "algebra") algebras_[name] = algebra_from_json(doc);
        }
        for (const auto& [name, doc] : objects.items()) {
            const std::string type = doc.value("type", "");
            if (type == "space" || type == "algebra") continue;
            if (type == "points") {
                point_sets_.emplace(name, compact_set_from_json(doc, space_of(doc)));
            } else if (type == "polynomial") {
                polynomials_.emplace(
                    name, polynomial_sum_from_json(doc.at("polynomial"), space_of(doc), algebra_of(doc)));
            } else if (type == "tensor-element") {
                tensors_.emplace(name, tensor_element_from_json(doc, space_of(doc), algebra_of(doc)));
            } else if (type == "operator") {
                operators_.emplace(name, LinearOperator{cmat_from_json(doc.at("matrix")),
                                                        space_of(doc), algebra_of(doc)});
            } else {
                throw ConfigError("object '" + name + "' has unknown type '" + type + "'");
            }
        }
    }

    const PolynomialSum& polynomial(const std::string& name) const {
        const auto it = polynomials_.find(name);
        if (it == polynomials_.end()) throw ConfigError("unknown polynomial object: " + name);
        return it->second;
    }
    const CompactSet& points(const std::string& name) const {
        const auto it = point_sets_.find(name);
        if (it == point_sets_.end()) throw ConfigError("unknown point-set object: " + name);
        return it->second;
    }
    const TensorElement& tensor(const std::string& name) const {
        const auto it = tensors_.find(name);
        if (it == tensors_.end()) throw ConfigError("unknown tensor object: " + name);
        return it->second;
    }
    const LinearOperator& op(const std::string& name) const {
        const auto it = operators_.find(name);
        if (it == operators_.end()) throw ConfigError("unknown operator object: " + name);
        return it->second;
    }
    AlgebraPtr algebra(const std::string& name) const {
        const auto it = algebras_.find(name);
        if (it == algebras_.end()) throw ConfigError("unknown algebra object: " + name);
        return it->second;
    }

    bool has_polynomial(const std::string& name) const { return polynomials_.count(name) > 0; }
    bool has_tensor(const std::string& name) const { return tensors_.count(name) > 0; }
    bool has_operator(const std::string& name) const { return operators_.count(name) > 0; }

private:
    SpacePtr space_of(const json& doc) {
        const json& ref = doc.at("space");
        if (ref.is_string()) {
            const auto it = spaces_.find(ref.get<std::string>());
            if (it == spaces_.end()) throw ConfigError("unknown space: " + ref.get<std::string>());
            return it->second;
        }
        return space_from_json(ref);
    }
    AlgebraPtr algebra_of(const json& doc) {
        if (!doc.contains("algebra")) return scalar_algebra();
        const json& ref = doc.at("algebra");
        if (ref.is_string()) return algebra(ref.get<std::string>());
        return algebra_from_json(ref);
    }

    std::map<std::string, SpacePtr> spaces_;
    std::map<std::string, AlgebraPtr> algebras_;
    std::map<std::string, CompactSet> point_sets_;
    std::map<std::string, PolynomialSum> polynomials_;
    std::map<std::string, TensorElement> tensors_;
    std::map<std::string, LinearOperator> operators_;
};

SearchBudget budget_from_config(const json& config, const json& params) {
    SearchBudget budget;
    if (config.contains("budget")) budget = budget_from_json(config.at("budget"));
    if (params.contains("samples")) budget.samples = params.at("samples").get<long>();
    if (params.contains("refine")) budget.refine_steps = params.at("refine").get<int>();
    if (config.contains("seed")) budget.seed = config.at("seed").get<std::uint64_t>();
    return budget;
}

void require_seed(const json& config, const std::string& command) {
    if (!config.contains("seed"))
        throw ConfigError("command '" + command + "' is stochastic and requires a seed");
}

/// The single homogeneous part of a polynomial (most operations on power
/// sums act per part).
const PowerSumRep& sole_part(const PolynomialSum& p, const std::string& what) {
    if (p.parts().size() != 1)
        throw ConfigError(what + " requires a homogeneous polynomial (exactly one part)");
    return p.parts().begin()->second;
}

json command_eval(const Workspace& ws, const json& params) {
    const std::string name = params.at("object").get<std::string>();
    const CVec x = cvec_from_json(params.at("point"));
    if (ws.has_tensor(name)) return json{{"value", cvec_to_json(ws.tensor(name).eval(x))}};
    return json{{"value", cvec_to_json(ws.polynomial(name).eval(x))}};
}

json command_polarize(const Workspace& ws, const json& params) {
    const PolynomialSum& p = ws.polynomial(params.at("object").get<std::string>());
    return symmetric_form_to_json(polarize(sole_part(p, "polarize")));
}

json command_product(const Workspace& ws, const json& params) {
    const PolynomialSum& left = ws.polynomial(params.at("left").get<std::string>());
    const PolynomialSum& right = ws.polynomial(params.at("right").get<std::string>());
    if (left.parts().size() == 1 && right.parts().size() == 1) {
        return power_sum_to_json(
            product_power_sums(left.parts().begin()->second, right.parts().begin()->second));
    }
    return polynomial_sum_to_json(left * right);
}

json command_norm(const Workspace& ws, const json& config, const json& params) {
    const std::string kind = params.at("kind").get<std::string>();
    const std::string name = params.at("object").get<std::string>();
    const SearchBudget budget = budget_from_config(config, params);

    if (kind == "unit-ball") {
        require_seed(config, "norm --kind unit-ball");
        return norm_estimate_to_json(sup_norm_unit_ball(sole_part(ws.polynomial(name), kind), budget));
    }
    if (kind == "uniform-K") {
        const CompactSet& K = ws.points(params.at("K").get<std::string>());
        double value = 0.0;
        CVec arg;
        const auto scan = [&](auto&& eval, const FiniteBanachAlgebra& target) {
            for (const CVec& x : K.points()) {
                const double v = target.element_norm(eval(x));
                if (arg.size() == 0 || v > value) {
                    value = v;
                    arg = x;
                }
            }
        };
        if (ws.has_tensor(name)) {
            const TensorElement& t = ws.tensor(name);
            scan([&](const CVec& x) { return t.eval(x); }, *t.target());
        } else {
            const PolynomialSum& p = ws.polynomial(name);
            scan([&](const CVec& x) { return p.eval(x); }, *p.target());
        }
        return json{{"value", value},
                    {"witness", witness_to_json(Witness{"point", {arg}})},
                    {"budget", budget_to_json(budget)}};
    }
    if (kind == "nuclear-upper") {
        const double value = nuclear_norm_upper(sole_part(ws.polynomial(name), kind));
        return json{{"value", value},
                    {"witness", witness_to_json(Witness{"none", {}})},
                    {"budget", budget_to_json(budget)}};
    }
    if (kind == "operator") {
        require_seed(config, "norm --kind operator");
        return norm_estimate_to_json(operator_norm(ws.op(name), budget));
    }
    if (kind == "tensor-eps") {
        require_seed(config, "norm --kind tensor-eps");
        const CompactSet& K = ws.points(params.at("K").get<std::string>());
        return norm_estimate_to_json(injective_tensor_norm(ws.tensor(name), K, budget));
    }
    throw ConfigError("unknown norm kind: " + kind);
}

json command_hull(const Workspace& ws, const json& config, const json& params) {
    require_seed(config, "hull");
    HullQuery query{cvec_from_json(params.at("candidate")),
                    ws.points(params.at("K").get<std::string>()),
                    params.value("degree_cap", 4),
                    params.value("terms_cap", 4),
                    budget_from_config(config, params)};
    return hull_certificate_to_json(hull_membership(query));
}

json command_tensorize(const Workspace& ws, const json& config, const json& params) {
    require_seed(config, "tensorize");
    const PolynomialSum& p = ws.polynomial(params.at("object").get<std::string>());
    const CompactSet& K = ws.points(params.at("K").get<std::string>());
    std::optional<int> rank_cap;
    if (params.contains("rank_cap")) rank_cap = params.at("rank_cap").get<int>();
    const SearchBudget budget = budget_from_config(config, params);
    const IdentityApproximation approx =
        finite_rank_identity_approx(*p.source(), K, rank_cap, budget);
    const TensorizeOutput out = tensorize(p, K, approx, budget);
    json result = tensor_element_to_json(out.element);
    result["measured_error"] = verify_tensorization(p, out.element, K);
    result["certified_bound"] = out.certified_bound;
    result["epsilon"] = approx.epsilon();
    return result;
}

json command_character(const Workspace& ws, const json& config, const json& params,
                       const Tolerances& tol) {
    require_seed(config, "character");
    const CVec candidate = cvec_from_json(params.at("candidate"));
    const CompactSet& K = ws.points(params.at("K").get<std::string>());

    std::vector<PowerSumRep> generators;
    for (const json& name : params.at("generators"))
        generators.push_back(
            sole_part(ws.polynomial(name.get<std::string>()), "character generators"));

    json values = json::array();
    json out;
    if (params.contains("phi")) {
        const Character phi{cvec_from_json(params.at("phi"))};
        const ProductCharacter chi = product_character(candidate, phi, generators, K, tol.optimization);
        for (const PowerSumRep& g : generators) values.push_back(complex_to_json(chi.eval(g)));
        out = json{{"certified", chi.certified},
                   {"max_mult_residual", chi.max_mult_residual},
                   {"max_bound_excess", chi.max_bound_excess}};
    } else {
        const PointCharacter chi = character_from_point(candidate, generators, K, tol.optimization);
        for (const PowerSumRep& g : generators) values.push_back(complex_to_json(chi.eval(g)));
        out = json{{"certified", chi.certified},
                   {"max_mult_residual", chi.max_mult_residual},
                   {"max_bound_excess", chi.max_bound_excess}};
    }
    out["values"] = std::move(values);
    return out;
}

}  // namespace

RunResult run_config(const json& config) {
    RunResult result;
    std::string command;
    try {
        if (!config.is_object()) throw ConfigError("configuration must be a JSON object");
        command = config.at("command").get<std::string>();
        Tolerances tol;
        if (config.contains("tolerances")) {
            const json& t = config.at("tolerances");
            tol.identity = t.value("identity", tol.identity);
            tol.optimization = t.value("optimization", tol.optimization);
        }
        const Workspace ws(config.contains("objects") ? config.at("objects") : json());
        const json params = config.contains("params") ? config.at("params") : json::object();

        if (command == "eval") {
            result.output = command_eval(ws, params);
        } else if (command == "polarize") {
            result.output = command_polarize(ws, params);
        } else if (command == "product") {
            result.output = command_product(ws, params);
        } else if (command == "norm") {
            result.output = command_norm(ws, config, params);
        } else if (command == "hull") {
            result.output = command_hull(ws, config, params);
        } else if (command == "tensorize") {
            result.output = command_tensorize(ws, config, params);
        } else if (command == "character") {
            result.output = command_character(ws, config, params, tol);
        } else if (command == "verify-suite") {
            require_seed(config, command);
            const SuiteReport report = run_suite(params.at("suite").get<std::string>(),
                                                 config.at("seed").get<std::uint64_t>(),
                                                 params.value("instances", 0L));
            result.output = report.to_json();
            if (!report.pass) result.exit_code = 3;
        } else if (command == "report") {
            require_seed(config, command);
            json reports = json::array();
            bool all_pass = true;
            for (const std::string& name : suite_names()) {
                const SuiteReport report = run_suite(name, config.at("seed").get<std::uint64_t>(),
                                                     params.value("instances", 0L));
                all_pass = all_pass && report.pass;
                reports.push_back(report.to_json());
            }
            result.output = json{{"suites", std::move(reports)}, {"pass", all_pass}};
            if (!all_pass) result.exit_code = 3;
        } else {
            throw ConfigError("unknown command: " + command);
        }
    } catch (const ConfigError& e) {
        result.exit_code = 1;
        result.error = e.what();
    } catch (const json::exception& e) {
        result.exit_code = 1;
        result.error = e.what();
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.error = e.what();
    }
    return result;
}

}  // namespace polyalg
