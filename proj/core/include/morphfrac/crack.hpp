#pragma once
#include <vector>

#include "morphfrac/geom.hpp"
#include "morphfrac/mesh.hpp"

namespace mf {

/// Tips of the damage bands: connected components of elements with
/// phi >= threshold; within each component, clusters of locally-farthest
/// elements from the component's seed (nearest of `seeds`) yield one tip each.
std::vector<Vec2> extract_crack_tips(const Mesh& mesh, const std::vector<double>& phi,
                                     double threshold, const std::vector<Vec2>& seeds);

struct TrackedTip {
    int id;
    Vec2 pos;
    double speed;  // mm/s, smoothed; 0 until enough samples
};

struct CrackFrame {
    long step = 0;
    double t = 0.0;
    std::vector<TrackedTip> tips;
};

/// Associates tips across output frames by proximity and differentiates tip
/// positions into speeds (centered 3-sample smoothing).
class CrackTracker {
  public:
    explicit CrackTracker(double match_gate) : gate_(match_gate) {}

    void add_frame(long step, double t, const std::vector<Vec2>& tips);

    /// Fills the smoothed speeds; call once after the run.
    void finalize();

    const std::vector<CrackFrame>& frames() const { return frames_; }
    int max_tip_count() const;
    double max_speed() const;

  private:
    double gate_;
    int next_id_ = 0;
    std::vector<CrackFrame> frames_;
};

}  // namespace mf
