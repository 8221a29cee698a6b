#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qfc/qmatrix.hpp"

namespace qfc {

// File formats. Quaternions are 4-arrays [w, x, y, z] of decimal floats;
// matrices are {"n": n, "entries": [...]} with row-major entries. The
// writer emits shortest round-trip float literals, so a load/save cycle is
// byte-stable.

nlohmann::json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const QMatrix& a);
QMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const QVector& v);
QVector vector_from_json(const nlohmann::json& j);

/// Canonical serialization used for every file this library writes.
std::string canonical_dump(const nlohmann::json& j);

QMatrix load_matrix(const std::string& path);
void save_matrix(const QMatrix& a, const std::string& path);

QVector load_vector(const std::string& path);
void save_vector(const QVector& v, const std::string& path);

void save_json(const nlohmann::json& j, const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace qfc
