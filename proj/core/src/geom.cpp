#include "morphfrac/geom.hpp"

#include <algorithm>
#include <cmath>

namespace mf {

namespace {
int orientation_sign(const Vec2& a, const Vec2& b, const Vec2& c, double eps) {
    const double cr = (b - a).cross(c - a);
    if (cr > eps) return 1;
    if (cr < -eps) return -1;
    return 0;
}
}  // namespace

bool segments_properly_intersect(const Vec2& p1, const Vec2& p2,
                                 const Vec2& q1, const Vec2& q2) {
    const double scale = std::max({(p2 - p1).norm(), (q2 - q1).norm(), 1.0});
    const double eps = 1e-12 * scale * scale;
    const int o1 = orientation_sign(p1, p2, q1, eps);
    const int o2 = orientation_sign(p1, p2, q2, eps);
    const int o3 = orientation_sign(q1, q2, p1, eps);
    const int o4 = orientation_sign(q1, q2, p2, eps);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 d = b - a;
    const double len2 = d.norm2();
    if (len2 == 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(d) / len2, 0.0, 1.0);
    return (p - (a + d * t)).norm();
}

double& SymTensor3::at(int i, int j) {
    if (i > j) std::swap(i, j);
    static constexpr int idx[3][3] = {{0, 1, 2}, {-1, 3, 4}, {-1, -1, 5}};
    return v[idx[i][j]];
}

double SymTensor3::at(int i, int j) const {
    if (i > j) std::swap(i, j);
    static constexpr int idx[3][3] = {{0, 1, 2}, {-1, 3, 4}, {-1, -1, 5}};
    return v[idx[i][j]];
}

SymTensor3 SymTensor3::operator+(const SymTensor3& o) const {
    SymTensor3 r;
    for (int i = 0; i < 6; ++i) r.v[i] = v[i] + o.v[i];
    return r;
}

SymTensor3 SymTensor3::operator-(const SymTensor3& o) const {
    SymTensor3 r;
    for (int i = 0; i < 6; ++i) r.v[i] = v[i] - o.v[i];
    return r;
}

SymTensor3 SymTensor3::operator*(double s) const {
    SymTensor3 r;
    for (int i = 0; i < 6; ++i) r.v[i] = v[i] * s;
    return r;
}

SymTensor3& SymTensor3::operator+=(const SymTensor3& o) {
    for (int i = 0; i < 6; ++i) v[i] += o.v[i];
    return *this;
}

std::array<double, 3> SymTensor3::apply(const std::array<double, 3>& eps) const {
    std::array<double, 3> s{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s[i] += at(i, j) * eps[j];
    return s;
}

double SymTensor3::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
}

namespace {
// Cyclic Jacobi on a 3x3 symmetric matrix; returns eigenvalues and optionally
// accumulates the rotation into vecs (columns).
void jacobi3(double a[3][3], double vecs[3][3], std::array<double, 3>& eig) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) vecs[i][j] = (i == j) ? 1.0 : 0.0;
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        if (off == 0.0) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = vecs[k][p], vkq = vecs[k][q];
                    vecs[k][p] = c * vkp - s * vkq;
                    vecs[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    for (int i = 0; i < 3; ++i) eig[i] = a[i][i];
}
}  // namespace

std::array<double, 3> SymTensor3::eigenvalues() const {
    double a[3][3], vecs[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = at(i, j);
    std::array<double, 3> eig;
    jacobi3(a, vecs, eig);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double SymTensor3::clip_to_psd() {
    double a[3][3], vecs[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = at(i, j);
    std::array<double, 3> eig;
    jacobi3(a, vecs, eig);
    const double min_eig = *std::min_element(eig.begin(), eig.end());
    if (min_eig >= 0.0) return min_eig;
    for (auto& e : eig) e = std::max(e, 0.0);
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += vecs[i][k] * eig[k] * vecs[j][k];
            at(i, j) = s;
        }
    }
    return min_eig;
}

SymTensor3 isotropic_plane_stress(double E, double nu) {
    SymTensor3 d;
    const double f = E / (1.0 - nu * nu);
    d.at(0, 0) = f;
    d.at(1, 1) = f;
    d.at(0, 1) = nu * f;
    d.at(2, 2) = E / (2.0 * (1.0 + nu));
    return d;
}

void SpatialHash::build(const std::vector<Vec2>& points, double cell_size) {
    cell_ = cell_size > 0 ? cell_size : 1.0;
    points_ = points;
    cells_.clear();
    cells_.reserve(points.size());
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
        const int cx = static_cast<int>(std::floor(points[i].x / cell_));
        const int cy = static_cast<int>(std::floor(points[i].y / cell_));
        cells_[key(cx, cy)].push_back(i);
    }
}

void SpatialHash::for_each_in_radius(const Vec2& center, double radius,
                                     const std::function<void(int)>& cb) const {
    const int cx0 = static_cast<int>(std::floor((center.x - radius) / cell_));
    const int cx1 = static_cast<int>(std::floor((center.x + radius) / cell_));
    const int cy0 = static_cast<int>(std::floor((center.y - radius) / cell_));
    const int cy1 = static_cast<int>(std::floor((center.y + radius) / cell_));
    const double r2 = radius * radius;
    for (int cx = cx0; cx <= cx1; ++cx) {
        for (int cy = cy0; cy <= cy1; ++cy) {
            auto it = cells_.find(key(cx, cy));
            if (it == cells_.end()) continue;
            for (int i : it->second) {
                if ((points_[i] - center).norm2() <= r2) cb(i);
            }
        }
    }
}

}  // namespace mf
