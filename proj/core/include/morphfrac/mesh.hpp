#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "morphfrac/geom.hpp"

namespace mf {

enum class ElemKind : std::uint8_t { CE, DE };

struct Node {
    int id = -1;
    Vec2 pos;
    // Geometric-position label. Duplicates minted by CE->DE conversion share
    // the site of the node they were copied from.
    int site = -1;
};

struct QuadPoint {
    Vec2 pos;       // physical position, mm
    double weight;  // integration weight, mm^2 (area measure, unit thickness)
    Vec2 param;     // parent-element coordinates of this point
};

struct Element {
    int id = -1;
    ElemKind kind = ElemKind::CE;
    std::array<int, 4> nodes{-1, -1, -1, -1};
    int n_nodes = 0;  // 3 (triangle) or 4 (quadrilateral)
    std::array<QuadPoint, 4> quad{};
    int n_quad = 0;
    Vec2 centroid;
    double area = 0.0;
};

/// Records one CE->DE conversion event. `duplicates` lists, for each node id
/// that existed before the event, the ids it maps to afterwards (post
/// compaction). `source_of_node` gives, for every node of the new mesh, the
/// index of the pre-event node it carries the state of.
struct NodeMap {
    std::vector<std::pair<int, std::vector<int>>> duplicates;
    std::vector<int> source_of_node;
    bool empty() const { return duplicates.empty(); }
};

class Mesh {
  public:
    std::vector<Node> nodes;
    std::vector<Element> elements;
    std::vector<Segment> slits;

    double avg_dx() const { return avg_dx_; }
    double min_edge() const { return min_edge_; }
    double total_area() const { return total_area_; }
    Vec2 bbox_lo() const { return bbox_lo_; }
    Vec2 bbox_hi() const { return bbox_hi_; }
    double diameter() const { return (bbox_hi_ - bbox_lo_).norm(); }

    /// Recomputes element geometry (centroid, area, quadrature) and the
    /// mesh-wide metrics. Must be called after any topology edit.
    void finalize();

    /// Node ids on the domain boundary (member of an edge used by one element).
    std::vector<bool> boundary_node_mask() const;

    /// (element id, local edge index) pairs on the domain boundary.
    std::vector<std::pair<int, int>> boundary_edges() const;

    /// End nodes of local edge `le` of element `eid`.
    std::pair<int, int> edge_nodes(int eid, int le) const;

  private:
    double avg_dx_ = 0.0;
    double min_edge_ = 0.0;
    double total_area_ = 0.0;
    Vec2 bbox_lo_, bbox_hi_;
};

/// Axis-aligned quad grid covering [lo, hi] with the given spacing.
Mesh generate_structured_quad_mesh(const Vec2& lo, const Vec2& hi, double spacing);

double min_edge_length(const Mesh& mesh);

/// Splits the mesh along `seg`: nodes on the open segment (and segment end
/// nodes lying on the domain boundary) are duplicated so the two slit faces
/// are disconnected. The segment is recorded for bond blocking.
void insert_pre_notch(Mesh& mesh, const Segment& seg);

/// Removes elements whose centroid lies inside any of the given disks and
/// compacts the node list. Scenario plumbing for perforated plates.
struct Pore {
    Vec2 center;
    double radius;
};
void punch_holes(Mesh& mesh, const std::vector<Pore>& pores);

/// Gives every listed CE element private copies of its nodes and flips it to
/// DE. Already-DE ids are skipped. Orphaned nodes are dropped and the node
/// list compacted.
NodeMap convert_to_discrete(Mesh& mesh, const std::vector<int>& element_ids);

/// Shape function values of element `e` at parent coordinates `param`.
std::array<double, 4> shape_values(const Element& e, const Vec2& param);

/// Displacement at a quadrature point interpolated from the nodal vector
/// (layout [ux0, uy0, ux1, uy1, ...]).
Vec2 displacement_at(const Mesh& mesh, int elem, int qp, const std::vector<double>& u);

/// Same, at arbitrary parent coordinates of the element.
Vec2 displacement_at_param(const Mesh& mesh, int elem, const Vec2& param,
                           const std::vector<double>& u);

}  // namespace mf
