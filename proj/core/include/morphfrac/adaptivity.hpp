#pragma once
#include <vector>

#include "morphfrac/assembly.hpp"
#include "morphfrac/bonds.hpp"
#include "morphfrac/morphing.hpp"

namespace mf {

enum class CriterionMode { BrokenBond, Strength, None };

struct Criterion {
    CriterionMode mode = CriterionMode::BrokenBond;
    double s_crit = 0.0;      // broken-bond mode
    double sigma_crit = 0.0;  // strength mode
    bool literal_shear_sum = false;  // sum shears before squaring (see von_mises)

    bool operator==(const Criterion&) const = default;
};

/// One adaptivity pass: the new flags, the evaluation points whose alpha
/// changed, the CE elements to convert, and whether any expansion happened.
struct ExpansionEvent {
    std::vector<FlagPoint> new_flags;
    std::vector<int> alpha_changed;
    std::vector<int> convert_ids;
    bool kappa_alpha = false;
};

/// Flags the centroids of both endpoint elements of every newly broken bond.
/// Elements already in the flag set are skipped.
std::vector<FlagPoint> flags_from_broken_bonds(const std::vector<int>& newly_broken,
                                               const BondTable& table, const Mesh& mesh,
                                               const FlagPointSet& flags, double t,
                                               double r_in, double r_out);

/// Von Mises equivalent stress. The standard form squares each shear
/// component; `literal_shear_sum` instead sums the shears before squaring
/// (the two coincide in 2D plane stress where only s12 is nonzero).
double von_mises(double s11, double s22, double s33, double s12, double s23, double s31,
                 bool literal_shear_sum = false);

/// Flags the centroid of every element whose centroid stress reaches
/// sigma_crit (plane stress, sigma = E(x) : eps).
std::vector<FlagPoint> flags_from_strength(const Mesh& mesh, const std::vector<double>& u,
                                           const MorphingField& field, const BondTable& table,
                                           const SymTensor3& e0, const Criterion& crit,
                                           const FlagPointSet& flags, double t,
                                           double r_in, double r_out);

/// Element-centroid von Mises stress over the whole mesh (plane stress).
std::vector<double> von_mises_field(const Mesh& mesh, const std::vector<double>& u,
                                    const MorphingField& field, const BondTable& table,
                                    const SymTensor3& e0, bool literal_shear_sum = false);

/// Merges the new flags into the field and collects the CE elements that
/// became fully PD (alpha = 1 at centroid and every vertex).
ExpansionEvent expand(MorphingField& field, const std::vector<FlagPoint>& new_flags,
                      const Mesh& mesh, const FlagPointSet& all_flags);

struct RadiusCheck {
    bool ok = true;
    bool violates_min_edge = false;   // r_p < L
    bool violates_wave_bound = false; // r_p < C_R * dt
};

/// Expansion radius against the crack-speed bound: r_p >= L and r_p >= C_R dt.
RadiusCheck check_expansion_radius(double r_p, double min_edge, double dt, double c_rayleigh);

}  // namespace mf
