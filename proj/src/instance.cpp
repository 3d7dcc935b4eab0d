#include "torfan/instance.hpp"

#include "torfan/error.hpp"
#include "torfan/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace torfan {

namespace {

std::vector<IntVector> nonzero(const std::vector<IntVector>& vs) {
    std::vector<IntVector> out;
    for (const auto& v : vs)
        if (!is_zero(v)) out.push_back(v);
    return out;
}

}  // namespace

ToricInstance::ToricInstance(IntMatrix pi, OmegaSpec omega, std::string name)
    : pi_(std::move(pi)), omega_(std::move(omega)), name_(std::move(name)) {
    const std::size_t n = pi_.cols(), r = pi_.rows();
    if (n == 0) throw InstanceError("n", "must be positive");
    if (r == 0) throw InstanceError("r", "must be positive");
    if (r > n) throw InstanceError("r", "r = " + std::to_string(r) + " exceeds n = " + std::to_string(n));
    if (const std::size_t rk = rank(pi_); rk < r)
        throw InstanceError("pi", "rank(pi) = " + std::to_string(rk) + " < r = " + std::to_string(r));
    if (omega_.generators.empty()) throw InstanceError("omega.generators", "generator list is empty");
    for (std::size_t i = 0; i < omega_.generators.size(); ++i)
        if (omega_.generators[i].size() != n)
            throw InstanceError("omega.generators[" + std::to_string(i) + "]",
                                "has length " + std::to_string(omega_.generators[i].size()) + ", expected n = " +
                                    std::to_string(n));
    std::vector<IntVector> gens = nonzero(omega_.generators);
    if (gens.empty()) throw InstanceError("omega.generators", "generators span only the origin");

    omega_cone_ = Cone::from_generators(n, gens);
    if (!omega_cone_.is_pointed())
        throw InstanceError("omega.generators", "cone(Omega) is not pointed (lineality " +
                                                    to_string(omega_cone_.lineality().front()) +
                                                    "); only pointed monoids are supported");

    if (omega_.kind == OmegaKind::normal) {
        // Omega = cone ∩ Z^n generates the saturated lattice of its span.
        omega_lattice_ = saturated_basis(n, gens);
    } else {
        omega_lattice_ = lattice_basis(n, gens);
    }
    for (const auto& g : omega_.generators) sigma_gens_.push_back(pi_.apply(g));
    sigma_cone_ = Cone::from_generators(r, nonzero(sigma_gens_));
    std::vector<IntVector> images;
    for (const auto& b : omega_lattice_) images.push_back(pi_.apply(b));
    sigma_lattice_ = lattice_basis(r, images);
}

ToricInstance load_instance(const Json& doc) {
    if (!doc.is_object()) throw InstanceError("$", "instance document must be an object");
    for (const char* key : {"n", "r", "pi", "omega"})
        if (!doc.contains(key)) throw InstanceError(key, "missing field");
    auto size_field = [&](const char* key) {
        Integer v = integer_from_json(doc[key], key);
        if (v.sign() <= 0 || !v.is_small() || *v.to_int64() > 64)
            throw InstanceError(key, "must be an integer in [1, 64]");
        return static_cast<std::size_t>(*v.to_int64());
    };
    const std::size_t n = size_field("n"), r = size_field("r");

    const Json& jpi = doc["pi"];
    if (!jpi.is_array()) throw InstanceError("pi", "expected an array of rows");
    if (jpi.size() != r)
        throw InstanceError("pi", "has " + std::to_string(jpi.size()) + " rows, expected r = " + std::to_string(r));
    IntMatrix pi(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        const std::string path = "pi[" + std::to_string(i) + "]";
        IntVector row = int_vector_from_json(jpi[i], path);
        if (row.size() != n)
            throw InstanceError(path, "has length " + std::to_string(row.size()) + ", expected n = " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) pi(i, j) = row[j];
    }

    const Json& jo = doc["omega"];
    if (!jo.is_object()) throw InstanceError("omega", "expected an object");
    if (!jo.contains("kind")) throw InstanceError("omega.kind", "missing field");
    if (!jo.contains("generators")) throw InstanceError("omega.generators", "missing field");
    OmegaSpec omega;
    if (!jo["kind"].is_string()) throw InstanceError("omega.kind", "expected \"normal\" or \"generated\"");
    const std::string kind = jo["kind"].get<std::string>();
    if (kind == "normal")
        omega.kind = OmegaKind::normal;
    else if (kind == "generated")
        omega.kind = OmegaKind::generated;
    else
        throw InstanceError("omega.kind", "expected \"normal\" or \"generated\", got \"" + kind + "\"");
    const Json& jg = jo["generators"];
    if (!jg.is_array()) throw InstanceError("omega.generators", "expected an array of vectors");
    for (std::size_t i = 0; i < jg.size(); ++i)
        omega.generators.push_back(int_vector_from_json(jg[i], "omega.generators[" + std::to_string(i) + "]"));

    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw InstanceError("name", "expected a string");
        name = doc["name"].get<std::string>();
    }
    return ToricInstance(std::move(pi), std::move(omega), std::move(name));
}

ToricInstance load_instance_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InstanceError("$", std::string("malformed JSON: ") + e.what());
    }
    return load_instance(doc);
}

ToricInstance load_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return load_instance_text(buf.str());
}

Json instance_to_json(const ToricInstance& inst) {
    Json pi = Json::array();
    for (std::size_t i = 0; i < inst.r(); ++i) pi.push_back(to_json(std::span<const Integer>(inst.pi().row(i))));
    Json j;
    j["n"] = inst.n();
    j["r"] = inst.r();
    j["pi"] = pi;
    j["omega"] = Json{{"kind", inst.omega().kind == OmegaKind::normal ? "normal" : "generated"},
                      {"generators", to_json(inst.omega().generators)}};
    if (!inst.name().empty()) j["name"] = inst.name();
    return j;
}

namespace {

void check_character(const ToricInstance& inst, std::span<const Integer> chi) {
    if (chi.size() != inst.r())
        throw PreconditionError("character " + to_string(chi) + " has length " + std::to_string(chi.size()) +
                                ", expected r = " + std::to_string(inst.r()));
}

// {m >= 0 : A m = rhs} for the generator matrix A of a generated monoid.
Polyhedron multiplicity_polyhedron(const std::vector<IntVector>& columns, const IntMatrix& map,
                                   std::span<const Integer> rhs) {
    const std::size_t k = columns.size();
    std::vector<AffineConstraint> ineqs, eqs;
    for (std::size_t i = 0; i < k; ++i) {
        RatVector a(k);
        a[i] = 1;
        ineqs.push_back({a, Rational(0)});
    }
    for (std::size_t row = 0; row < map.rows(); ++row) {
        RatVector a(k);
        for (std::size_t i = 0; i < k; ++i) a[i] = Rational(dot(map.row(row), columns[i]));
        eqs.push_back({a, Rational(rhs[row])});
    }
    return Polyhedron::from_inequalities(k, ineqs, eqs);
}

}  // namespace

Polyhedron fiber_polyhedron(const ToricInstance& inst, std::span<const Integer> chi) {
    check_character(inst, chi);
    const std::size_t n = inst.n();
    std::vector<AffineConstraint> ineqs, eqs;
    for (const auto& f : inst.omega_cone().facets()) ineqs.push_back({to_rational(f), Rational(0)});
    for (const auto& e : inst.omega_cone().equations()) eqs.push_back({to_rational(e), Rational(0)});
    for (std::size_t i = 0; i < inst.r(); ++i) eqs.push_back({to_rational(inst.pi().row(i)), Rational(chi[i])});
    return Polyhedron::from_inequalities(n, ineqs, eqs);
}

Polyhedron integral_fiber_hull(const ToricInstance& inst, std::span<const Integer> chi) {
    if (inst.omega().kind == OmegaKind::normal) return integer_hull(fiber_polyhedron(inst, chi), inst.budget);
    check_character(inst, chi);
    std::vector<IntVector> gens = nonzero(inst.omega().generators);
    Polyhedron m = integer_hull(multiplicity_polyhedron(gens, inst.pi(), chi), inst.budget);
    if (m.is_empty()) return Polyhedron::empty(inst.n());
    // Push the multiplicity hull forward along m -> sum m_i g_i.
    auto push = [&](std::span<const Rational> v) {
        RatVector x(inst.n());
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t c = 0; c < inst.n(); ++c) x[c] = x[c] + v[i] * Rational(gens[i][c]);
        return x;
    };
    std::vector<RatVector> vs;
    for (const auto& v : m.vertices()) vs.push_back(push(v));
    std::vector<IntVector> rays;
    for (const auto& r : m.rays()) {
        IntVector x = clear_denominators(push(to_rational(r)));
        if (!is_zero(x)) rays.push_back(std::move(x));
    }
    return Polyhedron::from_generators(inst.n(), vs, rays);
}

bool omega_contains(const ToricInstance& inst, std::span<const Integer> nu) {
    if (nu.size() != inst.n()) throw PreconditionError("omega_contains: vector has wrong length");
    if (!inst.omega_cone().contains(nu)) return false;
    if (inst.omega().kind == OmegaKind::normal) return true;
    std::vector<IntVector> gens = nonzero(inst.omega().generators);
    Polyhedron m = multiplicity_polyhedron(gens, IntMatrix::identity(inst.n()), nu);
    return !integer_hull(m, inst.budget).is_empty();
}

bool sigma_contains(const ToricInstance& inst, std::span<const Integer> chi) {
    check_character(inst, chi);
    if (!inst.sigma_cone().contains(chi)) return false;
    return !integral_fiber_hull(inst, chi).is_empty();
}

Cone support_cone(const ToricInstance& inst) {
    IntVector zero(inst.r());
    return fiber_polyhedron(inst, zero).recession_cone().dual();
}

bool is_positive_grading(const ToricInstance& inst) {
    IntVector zero(inst.r());
    Polyhedron p0 = fiber_polyhedron(inst, zero);
    const bool positive = p0.is_bounded() && inst.sigma_cone().is_pointed();
    const bool full_support = support_cone(inst) == Cone::whole_space(inst.n());
    if (positive != full_support)
        throw InvariantViolation("positive grading test disagrees with the support of the Hilbert fan");
    return positive;
}

}  // namespace torfan
