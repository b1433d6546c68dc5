#include "morphfrac/crack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

namespace mf {

std::vector<Vec2> extract_crack_tips(const Mesh& mesh, const std::vector<double>& phi,
                                     double threshold, const std::vector<Vec2>& seeds) {
    std::vector<int> damaged;
    for (const auto& e : mesh.elements)
        if (phi[e.id] >= threshold) damaged.push_back(e.id);
    if (damaged.empty() || seeds.empty()) return {};

    // adjacency by centroid proximity (DE elements share no nodes)
    const double link = 1.55 * mesh.avg_dx();
    std::vector<Vec2> pts;
    pts.reserve(damaged.size());
    for (int eid : damaged) pts.push_back(mesh.elements[eid].centroid);
    SpatialHash grid;
    grid.build(pts, link);

    std::vector<int> comp(damaged.size(), -1);
    int n_comp = 0;
    for (size_t i = 0; i < damaged.size(); ++i) {
        if (comp[i] >= 0) continue;
        std::queue<int> q;
        q.push(static_cast<int>(i));
        comp[i] = n_comp;
        while (!q.empty()) {
            const int c = q.front();
            q.pop();
            grid.for_each_in_radius(pts[c], link, [&](int j) {
                if (comp[j] < 0) {
                    comp[j] = n_comp;
                    q.push(j);
                }
            });
        }
        ++n_comp;
    }

    std::vector<Vec2> tips;
    for (int c = 0; c < n_comp; ++c) {
        std::vector<int> members;
        for (size_t i = 0; i < damaged.size(); ++i)
            if (comp[i] == c) members.push_back(static_cast<int>(i));

        // seed: the configured seed closest to the component
        double best = std::numeric_limits<double>::max();
        Vec2 seed;
        for (const auto& s : seeds) {
            for (int i : members) best = std::min(best, (pts[i] - s).norm2());
        }
        for (const auto& s : seeds) {
            double d = std::numeric_limits<double>::max();
            for (int i : members) d = std::min(d, (pts[i] - s).norm2());
            if (d <= best) {
                best = d;
                seed = s;
            }
        }

        std::vector<double> dist(members.size());
        for (size_t k = 0; k < members.size(); ++k) dist[k] = (pts[members[k]] - seed).norm();

        // locally farthest members (no neighbor farther), clustered
        std::map<int, size_t> member_index;
        for (size_t k = 0; k < members.size(); ++k) member_index[members[k]] = k;
        const double eps = 1e-9 * (1.0 + mesh.diameter());
        std::vector<char> is_max(members.size(), 0);
        for (size_t k = 0; k < members.size(); ++k) {
            bool ok = true;
            grid.for_each_in_radius(pts[members[k]], link, [&](int j) {
                auto it = member_index.find(j);
                if (it != member_index.end() && dist[it->second] > dist[k] + eps) ok = false;
            });
            is_max[k] = ok;
        }
        // cluster adjacent maxima, one tip (the farthest) per cluster
        std::vector<int> mcomp(members.size(), -1);
        int n_m = 0;
        for (size_t k = 0; k < members.size(); ++k) {
            if (!is_max[k] || mcomp[k] >= 0) continue;
            std::queue<size_t> q;
            q.push(k);
            mcomp[k] = n_m;
            while (!q.empty()) {
                const size_t c2 = q.front();
                q.pop();
                grid.for_each_in_radius(pts[members[c2]], link, [&](int j) {
                    auto it = member_index.find(j);
                    if (it == member_index.end()) return;
                    const size_t kk = it->second;
                    if (is_max[kk] && mcomp[kk] < 0) {
                        mcomp[kk] = n_m;
                        q.push(kk);
                    }
                });
            }
            ++n_m;
        }
        for (int mc = 0; mc < n_m; ++mc) {
            double dmax = -1.0;
            Vec2 tip;
            for (size_t k = 0; k < members.size(); ++k) {
                if (mcomp[k] == mc && dist[k] > dmax) {
                    dmax = dist[k];
                    tip = pts[members[k]];
                }
            }
            tips.push_back(tip);
        }
    }
    return tips;
}

void CrackTracker::add_frame(long step, double t, const std::vector<Vec2>& tips) {
    CrackFrame frame;
    frame.step = step;
    frame.t = t;
    const std::vector<TrackedTip>* prev = frames_.empty() ? nullptr : &frames_.back().tips;
    std::vector<bool> used(prev ? prev->size() : 0, false);
    for (const auto& p : tips) {
        int match = -1;
        double best = gate_;
        if (prev) {
            for (size_t i = 0; i < prev->size(); ++i) {
                if (used[i]) continue;
                const double d = ((*prev)[i].pos - p).norm();
                if (d < best) {
                    best = d;
                    match = static_cast<int>(i);
                }
            }
        }
        TrackedTip tt;
        tt.pos = p;
        tt.speed = 0.0;
        if (match >= 0) {
            used[match] = true;
            tt.id = (*prev)[match].id;
        } else {
            tt.id = next_id_++;
        }
        frame.tips.push_back(tt);
    }
    frames_.push_back(std::move(frame));
}

void CrackTracker::finalize() {
    // raw speeds per tip id, then centered 3-sample smoothing
    std::map<int, std::vector<std::pair<size_t, double>>> raw;  // id -> (frame, speed)
    std::map<int, std::pair<size_t, Vec2>> last_seen;
    for (size_t f = 0; f < frames_.size(); ++f) {
        for (const auto& tip : frames_[f].tips) {
            auto it = last_seen.find(tip.id);
            if (it != last_seen.end()) {
                const double dt = frames_[f].t - frames_[it->second.first].t;
                if (dt > 0)
                    raw[tip.id].push_back({f, (tip.pos - it->second.second).norm() / dt});
            }
            last_seen[tip.id] = {f, tip.pos};
        }
    }
    for (auto& [id, samples] : raw) {
        for (size_t k = 0; k < samples.size(); ++k) {
            double sum = samples[k].second;
            int n = 1;
            if (k > 0) {
                sum += samples[k - 1].second;
                ++n;
            }
            if (k + 1 < samples.size()) {
                sum += samples[k + 1].second;
                ++n;
            }
            const double v = sum / n;
            for (auto& tip : frames_[samples[k].first].tips)
                if (tip.id == id) tip.speed = v;
        }
    }
}

int CrackTracker::max_tip_count() const {
    int m = 0;
    for (const auto& f : frames_) m = std::max(m, static_cast<int>(f.tips.size()));
    return m;
}

double CrackTracker::max_speed() const {
    double m = 0.0;
    for (const auto& f : frames_)
        for (const auto& tip : f.tips) m = std::max(m, tip.speed);
    return m;
}

}  // namespace mf
