#include "toda2/algebra_io.hpp"

#include "toda2/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace toda2 {

namespace {

using nlohmann::json;

void write_number(std::ostream& os, double v) { os << std::setprecision(17) << v; }

template <typename M>
void write_rows(std::ostream& os, const M& m) {
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      if constexpr (std::is_floating_point_v<typename M::Scalar>)
        write_number(os, m(i, j));
      else
        os << m(i, j);
    }
    os << "]";
  }
  os << "]";
}

void write_vector(std::ostream& os, const Vector& v) {
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    write_number(os, v[i]);
  }
  os << "]";
}

void write_ints(std::ostream& os, const std::vector<int>& v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
}

const json& field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

Matrix read_matrix(const json& rows, const std::string& what) {
  if (!rows.is_array() || rows.empty()) throw ParseError(what + " must be a non-empty array of rows");
  const auto r = rows.size();
  const auto c = rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw ParseError(what + " has ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j].get<double>();
  }
  return m;
}

Vector read_vector(const json& a, const std::string& what) {
  if (!a.is_array()) throw ParseError(what + " must be an array");
  Vector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i].get<double>();
  return v;
}

}  // namespace

std::string serialize_spec(const Algebra& alg) {
  const AlgebraData& d = alg.data();
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << json(d.name).dump() << ",\n";
  if (d.n) os << "  \"n\": " << *d.n << ",\n";
  os << "  \"dim\": " << d.dim << ",\n";
  os << "  \"rank\": " << d.rank << ",\n";
  os << "  \"basis\": [\n";
  for (std::size_t a = 0; a < d.basis.size(); ++a) {
    os << "    ";
    write_rows(os, d.basis[a]);
    os << (a + 1 < d.basis.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"degrees\": ";
  write_ints(os, d.degrees);
  os << ",\n  \"exponents\": ";
  write_ints(os, d.exponents);
  os << ",\n  \"cartan\": ";
  write_rows(os, d.cartan);
  os << ",\n  \"e_coords\": ";
  write_vector(os, d.e_coords);
  os << ",\n  \"h_coords\": ";
  write_vector(os, d.h_coords);
  os << ",\n  \"associative\": " << (d.associative ? "true" : "false") << "\n}\n";
  return os.str();
}

Algebra parse_spec(const std::string& document) {
  AlgebraData d;
  try {
    const json doc = json::parse(document);
    if (!doc.is_object()) throw ParseError("algebra spec must be a JSON object");
    d.name = field(doc, "name").get<std::string>();
    if (doc.contains("n") && !doc.at("n").is_null()) d.n = doc.at("n").get<int>();
    d.dim = field(doc, "dim").get<int>();
    d.rank = field(doc, "rank").get<int>();
    const json& basis = field(doc, "basis");
    if (!basis.is_array()) throw ParseError("basis must be an array of matrices");
    for (std::size_t a = 0; a < basis.size(); ++a) d.basis.push_back(read_matrix(basis[a], "basis[" + std::to_string(a) + "]"));
    d.degrees = field(doc, "degrees").get<std::vector<int>>();
    d.exponents = field(doc, "exponents").get<std::vector<int>>();
    const json& cartan = field(doc, "cartan");
    if (!cartan.is_array()) throw ParseError("cartan must be an array of rows");
    d.cartan.resize(static_cast<Eigen::Index>(cartan.size()), cartan.empty() ? 0 : static_cast<Eigen::Index>(cartan.front().size()));
    for (std::size_t i = 0; i < cartan.size(); ++i) {
      if (cartan[i].size() != static_cast<std::size_t>(d.cartan.cols())) throw ParseError("cartan has ragged rows");
      for (std::size_t j = 0; j < cartan[i].size(); ++j) d.cartan(i, j) = cartan[i][j].get<int>();
    }
    d.e_coords = read_vector(field(doc, "e_coords"), "e_coords");
    d.h_coords = read_vector(field(doc, "h_coords"), "h_coords");
    d.associative = field(doc, "associative").get<bool>();
  } catch (const json::exception& ex) {
    throw ParseError(std::string("algebra spec: ") + ex.what());
  }
  return Algebra::from_data(d);
}

void save_spec(const Algebra& alg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << serialize_spec(alg);
  if (!out) throw Error("write failed for " + path);
}

Algebra load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

}  // namespace toda2
