#include "polyalg/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "polyalg/exceptions.hpp"

namespace polyalg {

namespace {

void dump_value(const json& j, std::string& out, int indent, int depth);

void append_double(double x, std::string& out) {
    if (!std::isfinite(x)) throw ComputeError("non-finite value in JSON output");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out += buf;
}

void append_escaped(const std::string& s, std::string& out) {
    out += '"';
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void newline_indent(std::string& out, int indent, int depth) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * depth, ' ');
}

void dump_value(const json& j, std::string& out, int indent, int depth) {
    switch (j.type()) {
        case json::value_t::null: out += "null"; break;
        case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case json::value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
        case json::value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
        case json::value_t::number_float: append_double(j.get<double>(), out); break;
        case json::value_t::string: append_escaped(j.get<std::string>(), out); break;
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ',';
                first = false;
                newline_indent(out, indent, depth + 1);
                dump_value(item, out, indent, depth + 1);
            }
            if (!j.empty()) newline_indent(out, indent, depth);
            out += ']';
            break;
        }
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {  // nlohmann objects iterate sorted
                if (!first) out += ',';
                first = false;
                newline_indent(out, indent, depth + 1);
                append_escaped(it.key(), out);
                out += ':';
                if (indent > 0) out += ' ';
                dump_value(it.value(), out, indent, depth + 1);
            }
            if (!j.empty()) newline_indent(out, indent, depth);
            out += '}';
            break;
        }
        default: throw ComputeError("unsupported JSON value type");
    }
}

}  // namespace

std::string canonical_dump(const json& j, int indent) {
    std::string out;
    dump_value(j, out, indent, 0);
    if (indent > 0) out += '\n';
    return out;
}

json complex_to_json(const Cx& z) { return json::array({z.real(), z.imag()}); }

Cx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("complex numbers must be [re, im] pairs");
    return Cx(j[0].get<double>(), j[1].get<double>());
}

json cvec_to_json(const CVec& v) {
    json out = json::array();
    for (int k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v[k]));
    return out;
}

CVec cvec_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("vector must be an array of [re, im] pairs");
    CVec v(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) v[static_cast<int>(k)] = complex_from_json(j[k]);
    return v;
}

json cmat_to_json(const CMat& m) {
    json out = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

CMat cmat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ConfigError("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    CMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) throw ConfigError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<int>(r), static_cast<int>(c)) = complex_from_json(j[r][c]);
    }
    return m;
}

json norm_spec_to_json(const NormSpec& spec) {
    json out;
    switch (spec.kind) {
        case NormSpec::Kind::Sup: out["kind"] = "sup"; break;
        case NormSpec::Kind::PNorm:
            out["kind"] = "p";
            if (std::isinf(spec.p)) {
                out["p"] = "inf";
            } else {
                out["p"] = spec.p;
            }
            break;
        case NormSpec::Kind::Lourenco:
            out["kind"] = "lourenco";
            out["psi"] = cvec_to_json(spec.psi);
            out["e"] = cvec_to_json(spec.unit);
            out["base"] = norm_spec_to_json(*spec.base);
            break;
    }
    return out;
}

NormSpec norm_spec_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "sup") return NormSpec::sup();
    if (kind == "p") {
        const json& p = j.at("p");
        if (p.is_string()) {
            if (p.get<std::string>() != "inf") throw ConfigError("unknown p-norm exponent");
            return NormSpec::p_norm(std::numeric_limits<double>::infinity());
        }
        return NormSpec::p_norm(p.get<double>());
    }
    if (kind == "lourenco") {
        const NormSpec base = j.contains("base") ? norm_spec_from_json(j.at("base")) : NormSpec::sup();
        return NormSpec::lourenco(cvec_from_json(j.at("psi")), cvec_from_json(j.at("e")), base);
    }
    throw ConfigError("unknown norm kind: " + kind);
}

json space_to_json(const FiniteSpace& space) {
    return json{{"dim", space.dim}, {"norm", norm_spec_to_json(space.norm)}};
}

SpacePtr space_from_json(const json& j) {
    return std::make_shared<FiniteSpace>(j.at("dim").get<int>(), norm_spec_from_json(j.at("norm")));
}

json algebra_to_json(const FiniteBanachAlgebra& algebra) {
    const int d = algebra.dim();
    json structure = json::array();
    for (int i = 0; i < d; ++i) {
        json slice = json::array();
        for (int jdx = 0; jdx < d; ++jdx) {
            json fiber = json::array();
            for (int k = 0; k < d; ++k) fiber.push_back(complex_to_json(algebra.structure(i, jdx, k)));
            slice.push_back(std::move(fiber));
        }
        structure.push_back(std::move(slice));
    }
    return json{{"dim", d},
                {"structure", std::move(structure)},
                {"identity", cvec_to_json(algebra.identity())},
                {"norm", norm_spec_to_json(algebra.norm())},
                {"submult_constant", algebra.submult_constant()}};
}

AlgebraPtr algebra_from_json(const json& j) {
    const int d = j.at("dim").get<int>();
    const json& structure = j.at("structure");
    if (static_cast<int>(structure.size()) != d) throw ConfigError("structure tensor has wrong size");
    std::vector<CMat> ops(d, CMat::Zero(d, d));
    for (int i = 0; i < d; ++i)
        for (int jdx = 0; jdx < d; ++jdx)
            for (int k = 0; k < d; ++k)
                ops[i](k, jdx) = complex_from_json(structure[i][jdx][k]);
    const double submult =
        j.contains("submult_constant") ? j.at("submult_constant").get<double>() : 1.0;
    return std::make_shared<FiniteBanachAlgebra>(std::move(ops), cvec_from_json(j.at("identity")),
                                                 norm_spec_from_json(j.at("norm")), submult);
}

json power_sum_to_json(const PowerSumRep& rep) {
    json out{{"degree", rep.degree()}};
    if (rep.degree() == 0) {
        out["constant"] = cvec_to_json(rep.constant_value());
        return out;
    }
    json terms = json::array();
    for (const PowerSumTerm& t : rep.terms())
        terms.push_back(json{{"weight", complex_to_json(t.weight)}, {"matrix", cmat_to_json(t.op.matrix)}});
    out["terms"] = std::move(terms);
    return out;
}

PowerSumRep power_sum_from_json(const json& j, const SpacePtr& space, const AlgebraPtr& algebra) {
    const int degree = j.at("degree").get<int>();
    if (degree == 0) return PowerSumRep::constant(cvec_from_json(j.at("constant")), space, algebra);
    std::vector<PowerSumTerm> terms;
    for (const json& term : j.at("terms"))
        terms.push_back(PowerSumTerm{complex_from_json(term.at("weight")),
                                     LinearOperator{cmat_from_json(term.at("matrix")), space, algebra}});
    return PowerSumRep::homogeneous(degree, std::move(terms), space, algebra);
}

json polynomial_sum_to_json(const PolynomialSum& p) {
    json parts = json::array();
    for (const auto& [deg, part] : p.parts()) parts.push_back(power_sum_to_json(part));
    return json{{"parts", std::move(parts)}};
}

PolynomialSum polynomial_sum_from_json(const json& j, const SpacePtr& space,
                                       const AlgebraPtr& algebra) {
    if (j.contains("parts")) {
        PolynomialSum p(space, algebra);
        for (const json& part : j.at("parts")) p.add_part(power_sum_from_json(part, space, algebra));
        return p;
    }
    return PolynomialSum(power_sum_from_json(j, space, algebra));
}

json compact_set_to_json(const CompactSet& K) {
    json points = json::array();
    for (const CVec& x : K.points()) points.push_back(cvec_to_json(x));
    return json{{"points", std::move(points)}, {"radius", K.radius()}};
}

CompactSet compact_set_from_json(const json& j, const SpacePtr& space) {
    std::vector<CVec> points;
    for (const json& p : j.at("points")) points.push_back(cvec_from_json(p));
    return CompactSet(std::move(points), space);
}

json symmetric_form_to_json(const SymmetricForm& form) {
    json coeffs = json::array();
    for (const auto& [key, value] : form.coeffs()) {
        coeffs.push_back(json{{"indices", decode_multiset(key, form.degree())},
                              {"value", cvec_to_json(value)}});
    }
    return json{{"degree", form.degree()}, {"dim", form.source()->dim}, {"coeffs", std::move(coeffs)}};
}

json tensor_element_to_json(const TensorElement& t) {
    json pairs = json::array();
    for (const TensorPair& p : t.pairs())
        pairs.push_back(json{{"f", polynomial_sum_to_json(p.f)}, {"a", cvec_to_json(p.a)}});
    return json{{"pairs", std::move(pairs)}};
}

TensorElement tensor_element_from_json(const json& j, const SpacePtr& space,
                                       const AlgebraPtr& algebra) {
    TensorElement t(space, algebra);
    for (const json& pair : j.at("pairs"))
        t.add_pair(polynomial_sum_from_json(pair.at("f"), space, scalar_algebra()),
                   cvec_from_json(pair.at("a")));
    return t;
}

json budget_to_json(const SearchBudget& b) {
    return json{{"samples", b.samples}, {"refine", b.refine_steps}, {"seed", b.seed}};
}

SearchBudget budget_from_json(const json& j) {
    SearchBudget b;
    if (j.contains("samples")) b.samples = j.at("samples").get<long>();
    if (j.contains("refine")) b.refine_steps = j.at("refine").get<int>();
    if (j.contains("seed")) b.seed = j.at("seed").get<std::uint64_t>();
    return b;
}

json witness_to_json(const Witness& w) {
    json vectors = json::array();
    for (const CVec& v : w.vectors) vectors.push_back(cvec_to_json(v));
    return json{{"kind", w.kind}, {"vectors", std::move(vectors)}};
}

json norm_estimate_to_json(const NormEstimate& e) {
    return json{{"value", e.value},
                {"witness", witness_to_json(e.witness)},
                {"budget", budget_to_json(e.budget_used)}};
}

json hull_certificate_to_json(const HullCertificate& cert) {
    json out{{"verdict", cert.verdict == HullCertificate::Verdict::Violated ? "violated"
                                                                            : "no-violation-found"},
             {"margin", cert.margin},
             {"best_ratio", cert.best_ratio},
             {"degree_cap", cert.degree_cap},
             {"terms_cap", cert.terms_cap},
             {"budget", budget_to_json(cert.budget)}};
    if (cert.witness) out["witness"] = polynomial_sum_to_json(*cert.witness);
    return out;
}

}  // namespace polyalg
