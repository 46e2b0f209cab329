#include "jordan/io.hpp"

#include <fstream>

namespace jordan::io {

namespace {

// Wraps JSON type/shape errors as FormatError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed ") + what + ": " + e.what());
    }
}

Json stage_to_json(const MonotoneStage& s) {
    if (const auto* p = std::get_if<PowerMap>(&s)) return {{"kind", "power"}, {"alpha", p->alpha}};
    Json pts = Json::array();
    for (const auto& [t, f] : std::get<PiecewiseLinearMap>(s).points) pts.push_back({t, f});
    return {{"kind", "piecewise_linear"}, {"points", pts}};
}

std::vector<MonotoneStage> stages_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power") return MonotoneBijection::power(j.at("alpha").get<double>()).stages();
    if (kind == "piecewise_linear") {
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : j.at("points")) pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        return MonotoneBijection::piecewise_linear(std::move(pts)).stages();
    }
    if (kind == "chain") {
        std::vector<MonotoneStage> out;
        for (const auto& s : j.at("stages")) {
            auto part = stages_from_json(s);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw FormatError("unknown monotone map kind '" + kind + "'");
}

}  // namespace

Json to_json(const FactorDescriptor& f) {
    switch (f.kind) {
        case FactorKind::Real: return {{"kind", "real"}};
        case FactorKind::Spin: return {{"kind", "spin"}, {"n", f.n}};
        case FactorKind::Sym: return {{"kind", "sym"}, {"n", f.n}};
    }
    return {};
}

Json to_json(const Algebra& a) {
    Json factors = Json::array();
    for (const auto& f : a.factors()) factors.push_back(to_json(f));
    return {{"factors", factors}};
}

Json to_json(const Element& x) {
    Json c = Json::array();
    for (int k = 0; k < x.dim(); ++k) c.push_back(x[k]);
    return c;
}

Json to_json(const LinearOperator& t) {
    const Matrix& m = t.matrix();
    Json data = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k) data.push_back(m(i, k));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Json to_json(const MonotoneBijection& m) {
    const auto& s = m.stages();
    if (s.empty()) return {{"kind", "power"}, {"alpha", 1.0}};
    if (s.size() == 1) return stage_to_json(s.front());
    Json stages = Json::array();
    for (const auto& st : s) stages.push_back(stage_to_json(st));
    return {{"kind", "chain"}, {"stages", stages}};
}

Json to_json(const OrderIsoForm& f) {
    Json sigma = Json::array();
    for (std::size_t i = 0; i < f.sigma().size(); ++i) sigma.push_back({static_cast<int>(i), f.sigma()[i]});
    Json maps = Json::array();
    for (const auto& m : f.maps()) maps.push_back(to_json(m));
    Json j{{"domain", to_json(*f.domain())},
           {"codomain", to_json(*f.codomain())},
           {"sigma", sigma},
           {"f_p", maps},
           {"y", nullptr},
           {"J", nullptr}};
    if (f.linear()) {
        j["y"] = to_json(f.linear()->y);
        j["J"] = to_json(f.linear()->jordan);
    }
    return j;
}

Json to_json(const SpectralDecomposition& d) {
    Json idem = Json::array();
    for (const auto& p : d.idempotents) idem.push_back(to_json(p));
    return {{"eigenvalues", d.eigenvalues}, {"idempotents", idem}};
}

Json to_json(const Decomposition& d) {
    Json atoms = Json::array();
    for (const auto& p : d.disengaged_atoms) atoms.push_back(to_json(p));
    Json j{{"algebra", to_json(*d.algebra)},
           {"p_D", to_json(d.p_D)},
           {"p_E", to_json(d.p_E)},
           {"disengaged_atoms", atoms},
           {"disengaged_coordinates", d.disengaged_coordinates},
           {"engaged_factors", d.engaged_factors},
           {"engaged", nullptr}};
    if (d.has_engaged()) j["engaged"] = to_json(*d.engaged);
    return j;
}

Json to_json(const SampleReport& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json inputs = Json::array();
        for (const auto& x : f.inputs) inputs.push_back(to_json(x));
        failures.push_back({{"inputs", inputs}, {"predicate", f.predicate}, {"magnitude", f.magnitude}});
    }
    return {{"trials", r.trials},
            {"tolerance", r.tolerance},
            {"max_violation", r.max_violation},
            {"failure_count", r.failure_count},
            {"failures", failures}};
}

AlgebraPtr algebra_from_json(const Json& j) {
    return guarded("algebra", [&] {
        std::vector<FactorDescriptor> factors;
        for (const auto& f : j.at("factors")) {
            const std::string kind = f.at("kind").get<std::string>();
            try {
                if (kind == "real") factors.push_back(FactorDescriptor::real());
                else if (kind == "spin") factors.push_back(FactorDescriptor::spin(f.at("n").get<int>()));
                else if (kind == "sym") factors.push_back(FactorDescriptor::sym(f.at("n").get<int>()));
                else throw FormatError("unknown factor kind '" + kind + "'");
            } catch (const AlgebraError& e) {
                throw FormatError(e.what());
            }
        }
        if (factors.empty()) throw FormatError("algebra needs at least one factor");
        return Algebra::make(std::move(factors));
    });
}

Element element_from_json(const Json& j, const AlgebraPtr& a) {
    return guarded("element", [&] {
        const Json& c = j.is_object() ? j.at("coords") : j;
        if (!c.is_array()) throw FormatError("element must be a coordinate list");
        if (static_cast<int>(c.size()) != a->dim())
            throw FormatError("element has " + std::to_string(c.size()) + " coordinates, algebra dimension is " +
                              std::to_string(a->dim()));
        Vector v(a->dim());
        for (int k = 0; k < a->dim(); ++k) v[k] = c.at(k).get<double>();
        return Element(a, std::move(v));
    });
}

LinearOperator operator_from_json(const Json& j, const AlgebraPtr& domain, const AlgebraPtr& codomain) {
    return guarded("operator", [&] {
        const int rows = j.at("rows").get<int>();
        const int cols = j.at("cols").get<int>();
        const Json& data = j.at("data");
        if (rows != codomain->dim() || cols != domain->dim())
            throw FormatError("operator shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                              " does not match the algebras");
        if (static_cast<int>(data.size()) != rows * cols) throw FormatError("operator data has the wrong length");
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) m(i, k) = data.at(i * cols + k).get<double>();
        return LinearOperator(domain, codomain, std::move(m));
    });
}

MonotoneBijection monotone_from_json(const Json& j) {
    return guarded("monotone map", [&] {
        try {
            return MonotoneBijection::from_stages(stages_from_json(j));
        } catch (const AlgebraError& e) {
            throw FormatError(e.what());
        }
    });
}

OrderIsoForm form_from_json(const Json& j) {
    return guarded("form", [&] {
        const AlgebraPtr dom = algebra_from_json(j.at("domain"));
        const AlgebraPtr cod = j.contains("codomain") ? algebra_from_json(j.at("codomain")) : dom;
        const Json& sj = j.at("sigma");
        std::vector<int> sigma(sj.size(), -1);
        for (const auto& pair : sj) {
            const int from = pair.at(0).get<int>();
            if (from < 0 || from >= static_cast<int>(sigma.size())) throw FormatError("sigma index out of range");
            sigma[from] = pair.at(1).get<int>();
        }
        std::vector<MonotoneBijection> maps;
        for (const auto& m : j.at("f_p")) maps.push_back(monotone_from_json(m));

        const Decomposition dd = decompose_engaged_disengaged(dom);
        const Decomposition cd = decompose_engaged_disengaged(cod);
        std::optional<EngagedPart> linear;
        const bool has_y = j.contains("y") && !j.at("y").is_null();
        if (has_y != (j.contains("J") && !j.at("J").is_null())) throw FormatError("y and J must appear together");
        if (has_y) {
            if (!dd.has_engaged() || !cd.has_engaged()) throw FormatError("form has y and J but no engaged part");
            linear = EngagedPart{element_from_json(j.at("y"), cd.engaged),
                                 operator_from_json(j.at("J"), dd.engaged, cd.engaged)};
        }
        return OrderIsoForm::make(dom, cod, std::move(sigma), std::move(maps), std::move(linear));
    });
}

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw FormatError("cannot parse '" + path + "': " + e.what());
    }
}

}  // namespace jordan::io
