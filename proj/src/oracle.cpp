#include "torfan/oracle.hpp"

#include <map>

namespace torfan {

OracleReport lambda_grid_oracle(const Fan& fan, const std::vector<Polyhedron>& polyhedra, long bound,
                                std::size_t max_failures) {
    OracleReport report;
    report.bound = bound;
    const std::size_t n = fan.ambient_dim();
    std::map<Cone, std::vector<FaceIndices>> by_cone;
    std::map<std::vector<FaceIndices>, Cone> by_faces;
    auto fail = [&](std::string what) {
        if (report.failures.size() < max_failures) report.failures.push_back(std::move(what));
    };

    IntVector lambda(n, Integer(-bound));
    for (;;) {
        ++report.points;
        bool bounded = true;
        for (const auto& p : polyhedra) bounded = bounded && !p.descent_direction(lambda);
        auto cone = fan.minimal_cone_containing(lambda);
        if (bounded != cone.has_value()) {
            fail("lambda " + to_string(lambda) + (bounded ? " is bounded below on every polyhedron but outside the fan"
                                                          : " lies in the fan but is unbounded below"));
        } else if (bounded) {
            ++report.in_support;
            std::vector<FaceIndices> faces;
            faces.reserve(polyhedra.size());
            for (const auto& p : polyhedra) faces.push_back(p.minimizing_face(lambda));
            auto [ci, cnew] = by_cone.try_emplace(*cone, faces);
            if (!cnew && ci->second != faces)
                fail("lambda " + to_string(lambda) + " shares a fan cone with a point of different minimizing faces");
            auto [fi, fnew] = by_faces.try_emplace(std::move(faces), *cone);
            if (!fnew && fi->second != *cone)
                fail("lambda " + to_string(lambda) + " has the minimizing faces of a point in a different fan cone");
        }
        std::size_t i = 0;
        while (i < n && lambda[i] == Integer(bound)) lambda[i++] = Integer(-bound);
        if (i == n) break;
        lambda[i] = lambda[i] + Integer(1);
    }
    report.cones_hit = by_cone.size();
    report.face_classes = by_faces.size();
    return report;
}

}  // namespace torfan
