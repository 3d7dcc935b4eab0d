#include "torfan/double_description.hpp"

#include <algorithm>

namespace torfan {

namespace {

struct Ray {
    IntVector v;
    Bitset zeros;  // processed inequalities tight on v
};

// Index of a lineality vector not annihilated by a, or -1.
std::ptrdiff_t pick_lineality(const std::vector<IntVector>& lineality, std::span<const Integer> a,
                              Integer& value) {
    for (std::size_t i = 0; i < lineality.size(); ++i) {
        value = dot(a, lineality[i]);
        if (!value.is_zero()) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

// Rotate every vector in `vs` into the hyperplane a = 0 along l0, where a.l0 = c0 > 0.
void project_along(std::vector<IntVector>& vs, std::span<const Integer> a, const IntVector& l0, const Integer& c0) {
    for (auto& v : vs) {
        Integer cv = dot(a, v);
        if (cv.is_zero()) continue;
        v = combine(c0, v, cv, l0);
        make_primitive(v);
    }
}

}  // namespace

RawGenerators double_description(std::size_t dim, std::span<const IntVector> inequalities,
                                 std::span<const IntVector> equations) {
    std::vector<IntVector> lineality;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVector e(dim);
        e[i] = 1;
        lineality.push_back(std::move(e));
    }

    for (const auto& eq : equations) {
        Integer c0;
        std::ptrdiff_t idx = pick_lineality(lineality, eq, c0);
        if (idx < 0) continue;
        IntVector l0 = lineality[static_cast<std::size_t>(idx)];
        if (c0.sign() < 0) {
            for (auto& x : l0) x = -x;
            c0 = -c0;
        }
        lineality.erase(lineality.begin() + idx);
        project_along(lineality, eq, l0, c0);
    }

    std::vector<IntVector> order;
    for (const auto& a : inequalities)
        if (!is_zero(a)) order.push_back(a);
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    const std::size_t m = order.size();

    std::vector<Ray> rays;
    for (std::size_t k = 0; k < m; ++k) {
        const IntVector& a = order[k];
        Integer c0;
        std::ptrdiff_t idx = pick_lineality(lineality, a, c0);
        if (idx >= 0) {
            IntVector l0 = lineality[static_cast<std::size_t>(idx)];
            if (c0.sign() < 0) {
                for (auto& x : l0) x = -x;
                c0 = -c0;
            }
            lineality.erase(lineality.begin() + idx);
            project_along(lineality, a, l0, c0);
            for (auto& r : rays) {
                Integer cr = dot(a, r.v);
                if (!cr.is_zero()) {
                    r.v = combine(c0, r.v, cr, l0);
                    make_primitive(r.v);
                }
                r.zeros.set(k);
            }
            Ray fresh{std::move(l0), Bitset(m)};
            fresh.zeros.set_first(k);
            rays.push_back(std::move(fresh));
            continue;
        }

        std::vector<Integer> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(a, rays[i].v);
            const int s = value[i].sign();
            if (s > 0)
                pos.push_back(i);
            else if (s < 0)
                neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (value[i].is_zero()) rays[i].zeros.set(k);
            continue;
        }

        std::vector<Ray> next;
        next.reserve(rays.size());
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                Bitset common = rays[p].zeros & rays[n].zeros;
                bool adjacent = true;
                for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
                    if (q == p || q == n) continue;
                    if (common.subset_of(rays[q].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector v = combine(value[p], rays[n].v, value[n], rays[p].v);
                make_primitive(v);
                common.set(k);
                next.push_back(Ray{std::move(v), std::move(common)});
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const int s = value[i].sign();
            if (s > 0) {
                next.push_back(std::move(rays[i]));
            } else if (s == 0) {
                rays[i].zeros.set(k);
                next.push_back(std::move(rays[i]));
            }
        }
        rays = std::move(next);
    }

    RawGenerators out;
    out.lineality = std::move(lineality);
    out.rays.reserve(rays.size());
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    return out;
}

}  // namespace torfan
