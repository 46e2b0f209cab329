#include "jordan/cli.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "jordan/acceptance.hpp"
#include "jordan/io.hpp"
#include "jordan/order_maps.hpp"
#include "jordan/spectral.hpp"
#include "jordan/structure.hpp"
#include "jordan/verify.hpp"

namespace jordan::cli {

namespace {

using io::Json;

struct Result {
    Json data;
    std::string text;
    int exit_code = kOk;
};

std::string vec_text(const Element& x) {
    std::ostringstream os;
    os << std::setprecision(10) << "[";
    for (int k = 0; k < x.dim(); ++k) os << (k ? ", " : "") << x[k];
    os << "]";
    return os.str();
}

std::string matrix_text(const Matrix& m) {
    std::ostringstream os;
    os << std::setprecision(10);
    for (int i = 0; i < m.rows(); ++i) {
        os << "  ";
        for (int k = 0; k < m.cols(); ++k) os << std::setw(16) << m(i, k);
        os << "\n";
    }
    return os.str();
}

const std::string& require(const std::optional<std::string>& path, const char* flag) {
    if (!path) throw FormatError(std::string("missing required flag ") + flag);
    return *path;
}

AlgebraPtr load_algebra(const Command& c) { return io::algebra_from_json(io::load_file(require(c.algebra_path, "--algebra"))); }

Result analyze(const Command& c) {
    const AlgebraPtr a = load_algebra(c);
    const Decomposition d = decompose_engaged_disengaged(a, c.seed);
    const auto center = center_basis(a);
    const auto ideals = codim1_ideals(a, c.seed);

    Result r;
    Json atoms = Json::array();
    for (const auto& p : d.disengaged_atoms) atoms.push_back(io::to_json(p));
    r.data = {{"algebra", io::to_json(*a)},
              {"dimension", a->dim()},
              {"center_dimension", static_cast<int>(center.size())},
              {"disengaged_atoms", atoms},
              {"p_D", io::to_json(d.p_D)},
              {"engaged", d.has_engaged() ? io::to_json(*d.engaged) : Json(nullptr)},
              {"codim1_ideals", static_cast<int>(ideals.size())}};

    std::ostringstream os;
    os << "algebra:          " << a->name() << " (dimension " << a->dim() << ")\n";
    os << "center dimension: " << center.size() << "\n";
    os << "disengaged atoms: " << d.num_disengaged() << "\n";
    for (int i = 0; i < d.num_disengaged(); ++i)
        os << "  coordinate " << d.disengaged_coordinates[i] << ": " << vec_text(d.disengaged_atoms[i]) << "\n";
    os << "p_D:              " << vec_text(d.p_D) << "\n";
    os << "engaged part:     " << (d.has_engaged() ? d.engaged->name() : std::string("(none)")) << "\n";
    os << "codim-1 ideals:   " << ideals.size() << "\n";
    r.text = os.str();
    return r;
}

Result spectrum_cmd(const Command& c) {
    const AlgebraPtr a = load_algebra(c);
    const Element x = io::element_from_json(io::load_file(require(c.element_path, "--element")), a);
    const SpectralDecomposition d = spectral_decomposition(x);

    Result r;
    r.data = io::to_json(d);
    r.data["spectrum"] = spectrum(x);
    r.data["is_positive"] = is_positive(x);
    r.data["order_unit_norm"] = order_unit_norm(x);

    std::ostringstream os;
    os << std::setprecision(12);
    os << "element in " << a->name() << ": " << vec_text(x) << "\n";
    for (std::size_t i = 0; i < d.eigenvalues.size(); ++i)
        os << "  λ = " << d.eigenvalues[i] << "  p = " << vec_text(d.idempotents[i]) << "\n";
    os << "positive:        " << (is_positive(x) ? "yes" : "no") << "\n";
    os << "order-unit norm: " << order_unit_norm(x) << "\n";
    r.text = os.str();
    return r;
}

Result factorize(const Command& c) {
    const Json doc = io::load_file(require(c.map_path, "--map"));
    AlgebraPtr dom, cod;
    if (doc.is_object() && doc.contains("domain")) {
        dom = io::algebra_from_json(doc.at("domain"));
        cod = doc.contains("codomain") ? io::algebra_from_json(doc.at("codomain")) : dom;
    } else {
        dom = cod = load_algebra(c);
    }
    const LinearOperator t = io::operator_from_json(doc, dom, cod);
    const auto fac = factorize_linear_order_iso(t);

    Result r;
    r.data = {{"y", io::to_json(fac.y)}, {"J", io::to_json(fac.jordan)}};
    r.text = "T = U_y J with\ny = " + vec_text(fac.y) + "\nJ =\n" + matrix_text(fac.jordan.matrix());
    return r;
}

Result decompose(const Command& c) {
    const AlgebraPtr a = load_algebra(c);
    const Decomposition d = decompose_engaged_disengaged(a, c.seed);
    Result r;
    r.data = io::to_json(d);
    std::ostringstream os;
    os << "p_D = " << vec_text(d.p_D) << "\np_E = " << vec_text(d.p_E) << "\n";
    os << "disengaged coordinates:";
    for (int k : d.disengaged_coordinates) os << " " << k;
    os << "\nengaged factors:";
    for (int f : d.engaged_factors) os << " " << f << ":" << a->factor(f).name();
    os << "\n";
    r.text = os.str();
    return r;
}

Result verify_oiso(const Command& c) {
    const OrderIsoForm f = io::form_from_json(io::load_file(require(c.form_path, "--form")));
    const OrderIsoForm inv = invert_order_iso(f);
    const SampleReport forward = check_order_preserving(f, f.domain(), c.trials, c.seed);
    const SampleReport backward = check_order_preserving(inv, inv.domain(), c.trials, c.seed + 1);
    const SampleReport linear = check_linearity_blackbox(f, f.domain(), std::max(1, c.trials / 10), c.seed + 2);
    const bool classified_linear = check_linearity(f);

    Result r;
    r.data = {{"order_preserving", io::to_json(forward)},
              {"inverse_order_preserving", io::to_json(backward)},
              {"linearity", io::to_json(linear)},
              {"linear", linear.passed()},
              {"classified_linear", classified_linear}};
    std::ostringstream os;
    os << std::setprecision(4);
    os << "order preserving:         " << (forward.passed() ? "yes" : "NO") << " (" << forward.failure_count
       << " failures in " << forward.trials << " trials)\n";
    os << "inverse order preserving: " << (backward.passed() ? "yes" : "NO") << " (" << backward.failure_count
       << " failures in " << backward.trials << " trials)\n";
    os << "linear (sampled):         " << (linear.passed() ? "yes" : "no") << " (max violation "
       << linear.max_violation << ")\n";
    os << "linear (classified form): " << (classified_linear ? "yes" : "no") << "\n";
    r.text = os.str();
    r.exit_code = forward.passed() && backward.passed() ? kOk : kVerificationFailed;
    return r;
}

Result demo_nonlinear(const Command& c) {
    const double lambda = c.lambda;
    const auto demo = grid_power_demo(c.grid, [lambda](double t) { return t <= 0.5 ? lambda : 1.0; });
    const OrderIsoForm& f = demo.form;
    const SampleReport order = check_order_preserving(f, f.domain(), c.trials, c.seed);
    const auto witness = homogeneity_witness(f, Element::unit(f.domain()), 2.0);
    const bool classified_linear = check_linearity(f);

    Result r;
    r.data = {{"grid", demo.grid},
              {"form", io::to_json(f)},
              {"order_preserving", io::to_json(order)},
              {"linear", classified_linear},
              {"witness",
               {{"x", io::to_json(witness.x)},
                {"alpha", witness.alpha},
                {"f_alpha_x", io::to_json(witness.f_of_scaled)},
                {"alpha_f_x", io::to_json(witness.scaled_f)},
                {"gap", witness.gap}}}};
    std::ostringstream os;
    os << std::setprecision(6);
    os << "algebra: " << f.domain()->name() << "\n";
    os << "grid:";
    for (double t : demo.grid) os << " " << t;
    os << "\norder preserving: " << (order.passed() ? "yes" : "NO") << " (" << order.failure_count
       << " failures in " << order.trials << " trials)\n";
    os << "linear: " << (classified_linear ? "yes" : "no") << "\n";
    os << "homogeneity witness at x = e, α = 2:\n";
    os << "  f(2x) = " << vec_text(witness.f_of_scaled) << "\n";
    os << "  2f(x) = " << vec_text(witness.scaled_f) << "\n";
    os << "  ‖f(2x) − 2f(x)‖ = " << witness.gap << "\n";
    r.text = os.str();
    r.exit_code = order.passed() ? kOk : kVerificationFailed;
    return r;
}

Result selftest(const Command&) {
    std::ostringstream log;
    const auto results = run_acceptance(&log);
    Result r;
    r.data = Json::array();
    bool all = true;
    for (const auto& res : results) {
        all = all && res.passed;
        r.data.push_back({{"id", res.id}, {"title", res.title}, {"passed", res.passed}, {"detail", res.detail}});
    }
    r.text = log.str() + (all ? "all criteria passed\n" : "some criteria FAILED\n");
    r.exit_code = all ? kOk : kVerificationFailed;
    return r;
}

Result dispatch(const Command& c) {
    if (c.verb == "analyze") return analyze(c);
    if (c.verb == "spectrum") return spectrum_cmd(c);
    if (c.verb == "factorize") return factorize(c);
    if (c.verb == "decompose") return decompose(c);
    if (c.verb == "verify-oiso") return verify_oiso(c);
    if (c.verb == "demo-nonlinear") return demo_nonlinear(c);
    if (c.verb == "selftest") return selftest(c);
    throw FormatError("unknown verb '" + c.verb + "'");
}

Outcome render(const Command& c, int code, const Json& data, const std::string& text, const std::string& kind) {
    Outcome out{code, ""};
    if (c.format == Format::Structured) {
        Json doc{{"schema_version", kSchemaVersion}, {"command", c.verb}, {"exit_code", code}};
        if (kind.empty()) doc["result"] = data;
        else doc["error"] = {{"kind", kind}, {"message", text}};
        out.output = doc.dump(2) + "\n";
    } else {
        out.output = kind.empty() ? text : "error: " + text + "\n";
    }
    return out;
}

}  // namespace

Outcome run(const Command& command) {
    try {
        Result r = dispatch(command);
        return render(command, r.exit_code, r.data, r.text, "");
    } catch (const FormatError& e) {
        return render(command, kMalformedInput, nullptr, e.what(), "malformed_input");
    } catch (const AlgebraError& e) {
        return render(command, kPrecondition, nullptr, e.what(), "precondition");
    }
}

}  // namespace jordan::cli
