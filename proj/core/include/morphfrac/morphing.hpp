#pragma once
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "morphfrac/bonds.hpp"
#include "morphfrac/geom.hpp"
#include "morphfrac/mesh.hpp"

namespace mf {

/// A damaged-element seed: a disk of full PD weight (radius r_in) with a cubic
/// transition annulus out to r_out.
struct FlagPoint {
    Vec2 pos;
    double birth_time = 0.0;
    double r_in = 0.0;
    double r_out = 0.0;
    int source_elem = -1;  // -1 for configured initial flags
};

/// Grows monotonically; elements are flagged at most once.
struct FlagPointSet {
    std::vector<FlagPoint> points;
    std::unordered_set<int> flagged_elements;

    bool element_flagged(int elem) const { return flagged_elements.count(elem) > 0; }
    void add(const FlagPoint& p) {
        points.push_back(p);
        if (p.source_elem >= 0) flagged_elements.insert(p.source_elem);
    }
};

/// Scalar blending field on the evaluation points (element centroids plus the
/// CCM quadrature points). Values only ever increase.
class MorphingField {
  public:
    void build(const Mesh& mesh);

    int n_points() const { return static_cast<int>(positions_.size()); }
    const std::vector<Vec2>& positions() const { return positions_; }
    double alpha(int point) const { return alpha_[point]; }
    double alpha_at_centroid(int elem) const { return alpha_[centroid_of_[elem]]; }
    double alpha_at_quad(int elem, int q) const { return alpha_[quad_of_[elem][q]]; }
    int centroid_index(int elem) const { return centroid_of_[elem]; }
    int quad_index(int elem, int q) const { return quad_of_[elem][q]; }
    std::int64_t revision() const { return revision_; }
    const SpatialHash& grid() const { return grid_; }

    /// Raises alpha at `point` to at least `value`; true if it changed.
    bool raise(int point, double value);
    void bump_revision() { ++revision_; }

  private:
    std::vector<Vec2> positions_;
    std::vector<double> alpha_;
    std::vector<int> centroid_of_;                // element -> eval point
    std::vector<std::array<int, 4>> quad_of_;     // element, quad -> eval point
    SpatialHash grid_;
    std::int64_t revision_ = 0;
};

/// Cubic blend of Eq.-37 shape: 1 at r_in, 0 at r_out, monotone between.
double cubic_transition(double d, double r_in, double r_out);

/// Piecewise flag profile: 1 inside r_in, cubic in (r_in, r_out), 0 outside.
double alpha_for_flag(const Vec2& x, const FlagPoint& p);

/// Max-merges the new flags into the field. Returns the evaluation points
/// whose value changed (ascending). Bumps the revision iff any changed.
std::vector<int> merge_alpha(MorphingField& field, std::span<const FlagPoint> new_flags);

/// Effective local stiffness at an evaluation point of `elem` whose own alpha
/// is `alpha_x`: E0 minus half the alpha-weighted discrete bond moment of the
/// element's bond fan. Negative eigenvalues from quadrature overshoot are
/// clipped to zero; eigenvalues below -psd_abort_fraction * |E0| abort.
SymTensor3 effective_stiffness(int elem, double alpha_x, const MorphingField& field,
                               const BondTable& table, const Mesh& mesh,
                               const SymTensor3& e0,
                               double psd_abort_fraction = 0.25);

enum class Region : std::uint8_t { Omega1, Omega2, OmegaM };

/// Classifies evaluation point `point` by the alpha values on its horizon
/// neighborhood: Omega1 if all zero, Omega2 if all one, OmegaM otherwise.
Region classify(int point, const MorphingField& field, double delta);

}  // namespace mf
