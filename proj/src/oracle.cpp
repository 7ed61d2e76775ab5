#include "elkchi/oracle.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>

namespace elkchi {

namespace {

constexpr long kGridDen = 1 << 20;

Rational round_to_grid(double x, long den) {
    return Rational(static_cast<long>(std::llround(x * static_cast<double>(den))), den);
}

// --- winding oracle -------------------------------------------------------

std::optional<long> winding_once(const MapGerm& h, const OracleConfig& cfg, int samples) {
    std::vector<std::array<Rational, 2>> images(static_cast<std::size_t>(samples));
    const double step = 2.0 * M_PI / samples;
    for (int k = 0; k < samples; ++k) {
        double theta = step * k;
        std::array<Rational, 2> val{};
        bool ok = false;
        for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
            std::vector<Rational> p = {round_to_grid(std::cos(theta), kGridDen) * cfg.radius,
                                       round_to_grid(std::sin(theta), kGridDen) * cfg.radius};
            std::vector<Rational> v = h.evaluate(p);
            if (!v[0].is_zero() || !v[1].is_zero()) {
                val = {v[0], v[1]};
                ok = true;
            } else {
                theta += step / 7.0; // jitter away from a zero of H
            }
        }
        if (!ok) fail(ErrorCode::ZeroOnMesh, "germ vanishes on the sampled circle");
        images[static_cast<std::size_t>(k)] = val;
    }

    long w = 0;
    for (int k = 0; k < samples; ++k) {
        const auto& u = images[static_cast<std::size_t>(k)];
        const auto& v = images[static_cast<std::size_t>((k + 1) % samples)];
        Rational cross = u[0] * v[1] - u[1] * v[0];
        bool u_low = u[1].sign() <= 0, v_low = v[1].sign() <= 0;
        if (u_low && !v_low) {
            if (cross.sign() > 0) ++w;
            else if (cross.sign() == 0) return std::nullopt; // chord through the origin
        } else if (!u_low && v_low) {
            if (cross.sign() < 0) --w;
            else if (cross.sign() == 0) return std::nullopt;
        }
    }
    return w;
}

// --- PL sphere oracle ------------------------------------------------------

struct IcoMesh {
    std::vector<std::array<Rational, 3>> vertices;
    std::vector<std::array<std::size_t, 3>> faces;
};

Rational det3(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b,
              const std::array<Rational, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::array<Rational, 3> pseudo_normalized(const std::array<Rational, 3>& v) {
    double n = 0;
    for (const Rational& c : v) n += c.to_double() * c.to_double();
    n = std::sqrt(n);
    Rational s = round_to_grid(1.0 / n, 1 << 16);
    return {v[0] * s, v[1] * s, v[2] * s};
}

IcoMesh base_icosahedron() {
    // Golden ratio to rational precision; the mesh only needs to be an
    // embedded sphere around the origin.
    const Rational phi(1597, 987);
    const Rational one(1), zero(0);
    IcoMesh m;
    m.vertices = {
        {-one, phi, zero}, {one, phi, zero},   {-one, -phi, zero}, {one, -phi, zero},
        {zero, -one, phi}, {zero, one, phi},   {zero, -one, -phi}, {zero, one, -phi},
        {phi, zero, -one}, {phi, zero, one},   {-phi, zero, -one}, {-phi, zero, one}};
    for (auto& v : m.vertices) v = pseudo_normalized(v);
    m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
               {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
               {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
               {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    for (auto& f : m.faces) {
        if (det3(m.vertices[f[0]], m.vertices[f[1]], m.vertices[f[2]]).sign() < 0)
            std::swap(f[1], f[2]);
    }
    return m;
}

IcoMesh subdivide(const IcoMesh& in) {
    IcoMesh out;
    out.vertices = in.vertices;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> midpoint;
    auto mid = [&](std::size_t a, std::size_t b) {
        auto key = std::minmax(a, b);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        const auto& va = out.vertices[a];
        const auto& vb = out.vertices[b];
        std::array<Rational, 3> m{(va[0] + vb[0]) / Rational(2), (va[1] + vb[1]) / Rational(2),
                                  (va[2] + vb[2]) / Rational(2)};
        out.vertices.push_back(pseudo_normalized(m));
        std::size_t idx = out.vertices.size() - 1;
        midpoint.emplace(key, idx);
        return idx;
    };
    for (const auto& f : in.faces) {
        std::size_t ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
        out.faces.push_back({f[0], ab, ca});
        out.faces.push_back({f[1], bc, ab});
        out.faces.push_back({f[2], ca, bc});
        out.faces.push_back({ab, bc, ca});
    }
    return out;
}

const IcoMesh& mesh_at_depth(int depth) {
    static std::map<int, IcoMesh> cache;
    auto it = cache.find(depth);
    if (it != cache.end()) return it->second;
    if (depth == 0) return cache.emplace(0, base_icosahedron()).first->second;
    return cache.emplace(depth, subdivide(mesh_at_depth(depth - 1))).first->second;
}

std::array<Rational, 3> random_target(std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-997, 997);
    while (true) {
        std::array<Rational, 3> t{Rational(dist(rng)), Rational(dist(rng)), Rational(dist(rng))};
        if (t[0].sign() != 0 || t[1].sign() != 0 || t[2].sign() != 0) return t;
    }
}

std::optional<long> pl_count(const IcoMesh& mesh,
                             const std::vector<std::array<Rational, 3>>& images,
                             const std::array<Rational, 3>& target) {
    long count = 0;
    for (const auto& f : mesh.faces) {
        const auto& u = images[f[0]];
        const auto& v = images[f[1]];
        const auto& w = images[f[2]];
        int d0 = det3(u, v, w).sign();
        int s1 = det3(target, v, w).sign();
        int s2 = det3(u, target, w).sign();
        int s3 = det3(u, v, target).sign();
        if (d0 == 0) {
            if (s1 == 0 && s2 == 0 && s3 == 0) return std::nullopt;
            if (s1 == s2 && s2 == s3 && s1 != 0) return std::nullopt;
            continue; // flat image triangle missed by a generic ray
        }
        if (s1 == 0 || s2 == 0 || s3 == 0) {
            if ((s1 == 0 || s1 == d0) && (s2 == 0 || s2 == d0) && (s3 == 0 || s3 == d0))
                return std::nullopt; // target ray grazes a face boundary
            continue;
        }
        if (s1 == d0 && s2 == d0 && s3 == d0) count += d0;
    }
    return count;
}

long pl_degree_at_depth(const MapGerm& h, const OracleConfig& cfg, int depth) {
    const IcoMesh& mesh = mesh_at_depth(depth);
    std::vector<std::array<Rational, 3>> images(mesh.vertices.size());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        std::array<Rational, 3> v = mesh.vertices[i];
        for (int attempt = 0;; ++attempt) {
            std::vector<Rational> p = {v[0] * cfg.radius, v[1] * cfg.radius, v[2] * cfg.radius};
            std::vector<Rational> val = h.evaluate(p);
            if (!val[0].is_zero() || !val[1].is_zero() || !val[2].is_zero()) {
                images[i] = {val[0], val[1], val[2]};
                break;
            }
            if (attempt >= 3) fail(ErrorCode::ZeroOnMesh, "germ vanishes on a mesh vertex");
            for (auto& c : v) c *= Rational(65537, 65536); // jitter radially
        }
    }
    std::mt19937 rng(cfg.target_seed);
    for (int redraw = 0; redraw < 12; ++redraw) {
        std::array<Rational, 3> target = random_target(rng);
        if (auto c = pl_count(mesh, images, target)) return *c;
    }
    fail(ErrorCode::DegenerateTarget, "no generic target direction found");
}

} // namespace

long winding_degree(const MapGerm& h, const OracleConfig& cfg) {
    if (h.nvars() != 2) fail(ErrorCode::DimensionMismatch, "winding oracle needs 2 variables");
    std::optional<long> prev;
    int samples = cfg.circle_resolution;
    for (int r = 0; r <= cfg.max_refinements; ++r) {
        std::optional<long> w = winding_once(h, cfg, samples);
        if (w && prev && *w == *prev) return *w;
        if (w) prev = w;
        samples *= 2;
    }
    fail(ErrorCode::Unstable, "winding number did not stabilize under refinement");
}

long pl_sphere_degree_at_depth(const MapGerm& h, const OracleConfig& cfg, int depth) {
    if (h.nvars() != 3) fail(ErrorCode::DimensionMismatch, "PL sphere oracle needs 3 variables");
    return pl_degree_at_depth(h, cfg, depth);
}

long pl_sphere_degree(const MapGerm& h, const OracleConfig& cfg) {
    if (h.nvars() != 3) fail(ErrorCode::DimensionMismatch, "PL sphere oracle needs 3 variables");
    std::optional<long> prev;
    for (int r = 0; r <= cfg.max_refinements; ++r) {
        long d = pl_degree_at_depth(h, cfg, cfg.icosa_depth + r);
        if (prev && d == *prev) return d;
        prev = d;
    }
    fail(ErrorCode::Unstable, "PL degree did not stabilize under refinement");
}

long oracle_degree(const MapGerm& h, const OracleConfig& cfg) {
    if (h.nvars() == 2) return winding_degree(h, cfg);
    if (h.nvars() == 3) return pl_sphere_degree(h, cfg);
    fail(ErrorCode::DimensionMismatch, "geometric oracle supports 2 or 3 variables");
}

} // namespace elkchi
