#pragma once

#include <Eigen/Core>
#include <array>
#include <map>
#include <string>
#include <string_view>

namespace bsm {

using VertexMatrix = Eigen::Matrix<double, Eigen::Dynamic, 3>;
using FaceMatrix = Eigen::Matrix<int, Eigen::Dynamic, 3>;

/// The eight landmark names understood by the pipeline: nipples, lower and
/// lateral breast poles, sternal notch, xiphoid.
inline constexpr std::array<std::string_view, 8> kLandmarkVocabulary = {
    "NL", "NR", "LBP_L", "LBP_R", "LaBP_L", "LaBP_R", "SN", "XI"};

/// The subset used to guide non-rigid registration.
inline constexpr std::array<std::string_view, 4> kGuidanceLandmarks = {
    "NL", "NR", "LBP_L", "LBP_R"};

bool is_valid_landmark_name(std::string_view name);

/// Triangle surface mesh in millimeters. Faces are counter-clockwise
/// vertex-index triples. Landmarks are stored as vertex indices so that
/// geodesics and index-based constraint sets are well defined.
///
/// Meshes are treated as immutable once built; all library operations
/// take const references and are safe to run concurrently.
struct TriangleMesh {
    VertexMatrix vertices;  // n x 3, mm
    FaceMatrix faces;       // m x 3, CCW
    std::map<std::string, int> landmarks;  // name -> vertex index

    int vertex_count() const { return static_cast<int>(vertices.rows()); }
    int face_count() const { return static_cast<int>(faces.rows()); }

    Eigen::Vector3d vertex(int i) const { return vertices.row(i).transpose(); }

    bool has_landmark(const std::string& name) const { return landmarks.count(name) > 0; }

    /// Position of a named landmark; throws ValidationError if absent.
    Eigen::Vector3d landmark_position(const std::string& name) const;

    /// Throws ValidationError if any landmark required by `names` is missing.
    template <std::size_t N>
    void require_landmarks(const std::array<std::string_view, N>& names) const {
        for (auto n : names) require_landmark(std::string(n));
    }
    void require_landmark(const std::string& name) const;

    /// Checks index ranges, face degeneracy, edge-manifoldness and landmark
    /// names. Throws ValidationError on the first violation found.
    void validate() const;
};

/// Index of the vertex nearest to `p` (linear scan).
int nearest_vertex(const TriangleMesh& mesh, const Eigen::Vector3d& p);

} // namespace bsm
