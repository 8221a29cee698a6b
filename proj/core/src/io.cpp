#include "qfc/io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "qfc/errors.hpp"

namespace qfc {

using nlohmann::json;

json quaternion_to_json(const Quaternion& q) {
  return json::array({q.w, q.x, q.y, q.z});
}

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError("quaternion: expected a 4-array");
  }
  std::array<double, 4> a{};
  for (std::size_t t = 0; t < 4; ++t) {
    if (!j[t].is_number()) throw ParseError("quaternion: entries must be numbers");
    a[t] = j[t].get<double>();
  }
  return Quaternion::from_array(a);
}

json matrix_to_json(const QMatrix& a) {
  json entries = json::array();
  for (const Quaternion& q : a.entries()) entries.push_back(quaternion_to_json(q));
  return json{{"n", a.n()}, {"entries", std::move(entries)}};
}

QMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw ParseError("matrix: expected an object with 'n' and 'entries'");
  }
  if (!j["n"].is_number_integer()) throw ParseError("matrix: 'n' must be an integer");
  const int n = j["n"].get<int>();
  if (n <= 0) throw ParseError("matrix: 'n' must be positive");
  const json& entries = j["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ParseError("matrix: 'entries' must hold n*n quaternions");
  }
  std::vector<Quaternion> qs;
  qs.reserve(entries.size());
  for (const json& e : entries) qs.push_back(quaternion_from_json(e));
  return QMatrix::from_entries(n, std::move(qs));
}

json vector_to_json(const QVector& v) {
  json out = json::array();
  for (const Quaternion& q : v.entries()) out.push_back(quaternion_to_json(q));
  return out;
}

QVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("vector: expected a nonempty array");
  std::vector<Quaternion> qs;
  qs.reserve(j.size());
  for (const json& e : j) qs.push_back(quaternion_from_json(e));
  return QVector(std::move(qs));
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in '" + path + "'");
  return j;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << canonical_dump(j);
}

QMatrix load_matrix(const std::string& path) {
  return matrix_from_json(load_json(path));
}

void save_matrix(const QMatrix& a, const std::string& path) {
  save_json(matrix_to_json(a), path);
}

QVector load_vector(const std::string& path) {
  return vector_from_json(load_json(path));
}

void save_vector(const QVector& v, const std::string& path) {
  save_json(vector_to_json(v), path);
}

}  // namespace qfc
