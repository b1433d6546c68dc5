#pragma once
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace mf {

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }

    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

struct Segment {
    Vec2 a, b;
    double length() const { return (b - a).norm(); }
    bool operator==(const Segment&) const = default;
};

/// True if the open interiors of [p1,p2] and [q1,q2] cross.
/// Touching at an endpoint or collinear overlap does not count.
bool segments_properly_intersect(const Vec2& p1, const Vec2& p2,
                                 const Vec2& q1, const Vec2& q2);

/// Distance from point to a closed segment.
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

/// Symmetric plane-stress stiffness in Voigt form (strain order: exx, eyy, gxy).
/// Stores the six independent entries of the 3x3 matrix.
struct SymTensor3 {
    // d00 d01 d02 d11 d12 d22
    std::array<double, 6> v{};

    double& at(int i, int j);
    double at(int i, int j) const;

    SymTensor3 operator+(const SymTensor3& o) const;
    SymTensor3 operator-(const SymTensor3& o) const;
    SymTensor3 operator*(double s) const;
    SymTensor3& operator+=(const SymTensor3& o);

    /// sigma = D : eps, Voigt strain (exx, eyy, gxy) -> (sxx, syy, sxy).
    std::array<double, 3> apply(const std::array<double, 3>& eps) const;

    double frobenius_norm() const;
    std::array<double, 3> eigenvalues() const;

    /// Projects onto the PSD cone by zeroing negative eigenvalues.
    /// Returns the most negative eigenvalue found before clipping.
    double clip_to_psd();
};

/// Intact isotropic plane-stress stiffness for Young's modulus E and Poisson ratio nu.
SymTensor3 isotropic_plane_stress(double E, double nu);

/// Uniform hash grid over 2D points for radius queries.
class SpatialHash {
  public:
    SpatialHash() = default;
    void build(const std::vector<Vec2>& points, double cell_size);
    /// Calls cb(index) for every stored point with |p - center| <= radius.
    void for_each_in_radius(const Vec2& center, double radius,
                            const std::function<void(int)>& cb) const;

  private:
    double cell_ = 1.0;
    std::vector<Vec2> points_;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
    std::uint64_t key(int cx, int cy) const {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
               static_cast<std::uint32_t>(cy);
    }
};

}  // namespace mf
