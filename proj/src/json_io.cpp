#include "torfan/json_io.hpp"

#include "torfan/error.hpp"

#include <algorithm>

namespace torfan {

Json to_json(const Integer& x) {
    if (auto small = x.to_int64()) return Json(*small);
    return Json(x.to_string());
}

Json to_json(const Rational& x) { return Json::array({to_json(x.num()), to_json(x.den())}); }

Json to_json(std::span<const Integer> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(std::span<const Rational> v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const std::vector<IntVector>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(to_json(std::span<const Integer>(v)));
    return out;
}

Json to_json(const Cone& c) {
    Json j;
    j["ambient_dim"] = c.ambient_dim();
    j["dimension"] = c.dimension();
    j["rays"] = to_json(c.rays());
    j["lineality"] = to_json(c.lineality());
    j["facets"] = to_json(c.facets());
    j["equations"] = to_json(c.equations());
    return j;
}

namespace {

Json constraints_to_json(const std::vector<AffineConstraint>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) {
        IntVector a = clear_denominators(c.a);
        out.push_back(Json{{"a", to_json(std::span<const Integer>(a))}, {"b", to_json(c.b)}});
    }
    return out;
}

}  // namespace

Json to_json(const Polyhedron& p) {
    Json j;
    j["ambient_dim"] = p.ambient_dim();
    j["empty"] = p.is_empty();
    Json vs = Json::array();
    for (const auto& v : p.vertices()) vs.push_back(to_json(std::span<const Rational>(v)));
    j["vertices"] = vs;
    j["rays"] = to_json(p.rays());
    j["lineality"] = to_json(p.lineality());
    j["inequalities"] = constraints_to_json(p.inequalities());
    j["equations"] = constraints_to_json(p.equations());
    return j;
}

Json to_json(const Fan& f) {
    const auto& lin = f.lineality();
    auto reduced = [&](const IntVector& v) {
        IntVector r = reduce_modulo(v, lin);
        make_primitive(r);
        return r;
    };
    std::vector<std::vector<IntVector>> per_cone;
    std::vector<IntVector> all;
    for (const auto& c : f.maximal_cones()) {
        std::vector<IntVector> gens;
        for (const auto& r : c.rays()) gens.push_back(reduced(r));
        for (const auto& l : c.lineality()) {
            IntVector r = reduce_modulo(l, lin);
            if (is_zero(r)) continue;
            make_primitive(r);
            gens.push_back(r);
            for (auto& x : r) x = -x;
            gens.push_back(r);
        }
        all.insert(all.end(), gens.begin(), gens.end());
        per_cone.push_back(std::move(gens));
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    Json cones = Json::array();
    for (const auto& gens : per_cone) {
        std::vector<std::size_t> idx;
        for (const auto& g : gens)
            idx.push_back(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), g) - all.begin()));
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        cones.push_back(idx);
    }
    Json j;
    j["ambient_dim"] = f.ambient_dim();
    j["lineality"] = to_json(lin);
    j["rays"] = to_json(all);
    j["maximal_cones"] = cones;
    j["n_maximal_cones"] = f.size();
    j["support"] = to_json(f.support());
    return j;
}

Json to_json(const FaceIndices& f) { return Json{{"vertices", f.vertices}, {"rays", f.rays}}; }

Integer integer_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        try {
            return Integer::parse(j.get<std::string>());
        } catch (const std::exception&) {
            throw InstanceError(path, "not an integer: \"" + j.get<std::string>() + "\"");
        }
    }
    throw InstanceError(path, "expected an integer, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw InstanceError(path, "expected an array of integers");
    IntVector out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace torfan
