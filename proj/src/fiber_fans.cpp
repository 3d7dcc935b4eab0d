#include "torfan/fiber_fans.hpp"

#include "torfan/error.hpp"

#include <algorithm>

namespace torfan {

namespace {

constexpr int max_witness_multiple = 1000;

IntVector sign_normalized(IntVector h) {
    make_primitive(h);
    auto first = std::find_if(h.begin(), h.end(), [](const Integer& x) { return x.sign() != 0; });
    if (first != h.end() && first->sign() < 0)
        for (auto& x : h) x = -x;
    return h;
}

IntVector negated(IntVector v) {
    for (auto& x : v) x = -x;
    return v;
}

IntVector scaled(const IntVector& v, long k) {
    IntVector out(v);
    for (auto& x : out) x = x * Integer(k);
    return out;
}

Cone project_face(const ToricInstance& inst, const Cone& face) {
    std::vector<IntVector> rays, lin;
    for (const auto& r : face.rays())
        if (IntVector p = inst.project(r); !is_zero(p)) rays.push_back(std::move(p));
    for (const auto& l : face.lineality())
        if (IntVector p = inst.project(l); !is_zero(p)) lin.push_back(std::move(p));
    return Cone::from_generators(inst.r(), rays, lin);
}

// Cells of cone(Sigma) cut out by the given hyperplanes, full-dimensional in cone(Sigma).
std::vector<Cone> arrangement_cells(const Cone& support, const std::vector<IntVector>& hyperplanes) {
    const std::size_t d = support.dimension(), r = support.ambient_dim();
    std::vector<Cone> cells{support};
    for (const auto& h : hyperplanes) {
        const Cone pos = Cone::from_inequalities(r, {h}), neg = Cone::from_inequalities(r, {negated(h)});
        std::vector<Cone> next;
        for (const auto& cell : cells) {
            Cone a = cell.intersect(pos), b = cell.intersect(neg);
            if (a.dimension() == d && b.dimension() == d) {
                next.push_back(std::move(a));
                next.push_back(std::move(b));
            } else {
                next.push_back(cell);
            }
        }
        cells = std::move(next);
    }
    return cells;
}

IntVector find_witness(const ToricInstance& inst, const Cone& chamber) {
    const IntVector base = chamber.relative_interior_point();
    for (long k = 1; k <= max_witness_multiple; ++k) {
        IntVector w = scaled(base, k);
        if (in_lattice(inst.r(), inst.sigma_lattice(), w) && sigma_contains(inst, w)) return w;
    }
    throw InvariantViolation("no integral witness in Sigma for chamber with rays " + to_string(base) +
                             " up to multiple " + std::to_string(max_witness_multiple));
}

}  // namespace

std::size_t fiber_vertex_count(const ToricInstance& inst, std::span<const Integer> chi) {
    return fiber_polyhedron(inst, chi).vertices().size();
}

ChamberDecomposition git_decomposition(const ToricInstance& inst) {
    ChamberDecomposition dec;
    dec.omega_faces = faces(inst.omega_cone());
    const Cone& support = inst.sigma_cone();
    const std::size_t d = support.dimension();

    std::vector<Cone> images;
    std::vector<std::size_t> full;
    for (std::size_t i = 0; i < dec.omega_faces.size(); ++i) {
        images.push_back(project_face(inst, dec.omega_faces[i]));
        if (images.back().dimension() == d) full.push_back(i);
    }
    std::vector<IntVector> hyperplanes;
    for (std::size_t i : full)
        for (const auto& f : images[i].facets()) hyperplanes.push_back(sign_normalized(f));
    std::sort(hyperplanes.begin(), hyperplanes.end());
    hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());

    std::vector<Cone> chambers;
    for (const auto& cell : arrangement_cells(support, hyperplanes)) {
        const IntVector p = cell.relative_interior_point();
        Cone chamber = support;
        for (std::size_t i : full)
            if (images[i].contains(p)) chamber = chamber.intersect(images[i]);
        chambers.push_back(std::move(chamber));
    }
    dec.fan = Fan(inst.r(), chambers, support);

    for (const auto& cone : dec.fan.maximal_cones()) {
        Chamber ch;
        ch.cone = cone;
        ch.witness = find_witness(inst, cone);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i].contains(ch.witness)) ch.signature.push_back(i);
        ch.vertex_count = fiber_vertex_count(inst, ch.witness);
        if (!cone.rays().empty()) {
            IntVector second = scaled(ch.witness, 2);
            for (std::size_t c = 0; c < second.size(); ++c) second[c] = second[c] + cone.rays().front()[c];
            if (fiber_vertex_count(inst, second) != ch.vertex_count)
                throw InvariantViolation("vertex count of the real fiber is not constant on chamber with witness " +
                                         to_string(ch.witness));
        }
        dec.chambers.push_back(std::move(ch));
    }
    return dec;
}

ChamberLocation chamber_of(const ChamberDecomposition& dec, std::span<const Integer> chi) {
    if (!dec.fan.support().contains(chi))
        throw PreconditionError("character " + to_string(chi) + " is outside cone(Sigma)");
    ChamberLocation loc;
    for (std::size_t i = 0; i < dec.chambers.size(); ++i)
        if (dec.chambers[i].cone.in_relative_interior(chi)) loc.maximal = i;
    loc.cell = loc.maximal ? dec.chambers[*loc.maximal].cone : *dec.fan.minimal_cone_containing(chi);
    return loc;
}

Fan git_quotient_fan(const ToricInstance& inst, std::span<const Integer> chi) {
    if (!inst.sigma_cone().in_relative_interior(chi))
        throw PreconditionError("character " + to_string(chi) + " is not in the interior of cone(Sigma)");
    return normal_fan(fiber_polyhedron(inst, chi));
}

RealFiberFan real_fiber_fan(const ToricInstance& inst, const ChamberDecomposition& dec) {
    std::vector<Polyhedron> fibers;
    std::vector<Fan> fans;
    for (const auto& ch : dec.chambers) {
        fibers.push_back(fiber_polyhedron(inst, ch.witness));
        fans.push_back(normal_fan(fibers.back()));
    }
    RealFiberFan out{minkowski_sum(fibers), {}};
    out.fan = normal_fan(out.polyhedron);
    if (out.fan != common_refinement(fans))
        throw InvariantViolation("normal fan of the summed real fibers differs from the refinement of the chamber fans");
    return out;
}

}  // namespace torfan
