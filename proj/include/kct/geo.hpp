#pragma once

#include <span>
#include <vector>

#include "kct/types.hpp"

namespace kct {

inline constexpr double kEarthRadiusKm = 6371.0;

struct GeoPoint {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

struct PlanarPoint {
    double x_km = 0.0;
    double y_km = 0.0;
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& a);
Vec3 normalized(const Vec3& a);

// Spherical Earth model: geographic coordinates to Earth-centered
// Cartesian kilometers. Throws InputError on out-of-range coordinates.
Vec3 to_ecef(const GeoPoint& p, double earth_radius_km = kEarthRadiusKm);

// Radial projection of a Cartesian point back onto the sphere.
GeoPoint to_geo(const Vec3& p);

double great_circle_km(const GeoPoint& a, const GeoPoint& b,
                       double earth_radius_km = kEarthRadiusKm);

// Orthonormal frame of the least-squares plane through a point cloud.
// axis_u follows the local east direction at the centroid where that is
// defined; axis_v completes the right-handed frame (normal = u x v).
struct PlanarFrame {
    Vec3 origin;
    Vec3 axis_u;
    Vec3 axis_v;
    Vec3 normal;
    double rms_residual_km = 0.0;

    PlanarPoint project(const Vec3& p) const {
        const Vec3 d = p - origin;
        return {dot(d, axis_u), dot(d, axis_v)};
    }
    Vec3 unproject(const PlanarPoint& q) const {
        return origin + q.x_km * axis_u + q.y_km * axis_v;
    }
};

// Principal-axes fit: plane through the centroid minimizing the sum of
// squared orthogonal distances. Throws GeometryError for fewer than
// 3 points or a collinear cloud.
PlanarFrame fit_plane(std::span<const Vec3> points);

std::vector<PlanarPoint> project(std::span<const Vec3> points, const PlanarFrame& frame);

}  // namespace kct
