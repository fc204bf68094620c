#include "qmirror/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "qmirror/error.hpp"

namespace qmirror {

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

IntMatrix parse_matrix(const nlohmann::json& j, const std::string& field, const std::string& source) {
  auto fail = [&](const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::Parse, source + ": field '" + path + "': " + msg);
  };
  if (!j.is_array()) fail(field, "expected an array of rows");
  if (j.empty()) fail(field, "matrix has no rows");
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row_path = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) fail(row_path, "expected an array of integers");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols)
      fail(row_path, "has " + std::to_string(j[r].size()) + " entries, expected " + std::to_string(cols));
  }
  IntMatrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j[r][c];
      if (!e.is_number_integer())
        fail(field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]", "expected an integer, got " + e.dump());
      m(static_cast<Index>(r), static_cast<Index>(c)) = Integer(e.get<long long>());
    }
  return m;
}

}  // namespace

ToricDatum parse_datum(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    std::string what = e.what();
    const auto pos = what.find("] ");
    if (pos != std::string::npos) what = what.substr(pos + 2);
    throw Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
  if (!j.is_object()) throw Error(ErrorKind::Parse, source + ": expected a JSON object at top level");
  for (const auto& [key, value] : j.items())
    if (key != "iota" && key != "beta" && key != "name")
      throw Error(ErrorKind::Parse, source + ": unknown field '" + key + "'");
  if (!j.contains("iota")) throw Error(ErrorKind::Parse, source + ": field 'iota': missing");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorKind::Parse, source + ": field 'name': expected a string");
    name = j["name"].get<std::string>();
  }
  const IntMatrix iota = parse_matrix(j["iota"], "iota", source);
  if (j.contains("beta")) {
    const nlohmann::json& b = j["beta"];
    if (b.is_array() && b.empty()) return validate(iota, IntMatrix(0, iota.rows()), name);
    return validate(iota, parse_matrix(b, "beta", source), name);
  }
  return validate(iota, name);
}

ToricDatum read_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_datum(buf.str(), path);
}

namespace {

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json datum_to_json(const ToricDatum& x) {
  Json j;
  if (!x.name.empty()) j["name"] = x.name;
  j["iota"] = matrix_to_json(x.iota);
  j["beta"] = matrix_to_json(x.beta);
  return j;
}

Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

Json polynomial_to_json(const QPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer_to_json(c));
  return out;
}

Json monomial_exponents_to_json(const std::vector<int>& e) {
  Json out = Json::array();
  for (int x : e) out.push_back(x);
  return out;
}

Json series_to_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json t;
    t["zExp"] = monomial_exponents_to_json(m.z);
    t["aExp"] = monomial_exponents_to_json(m.a);
    t["num"] = polynomial_to_json(c.num());
    t["den"] = polynomial_to_json(c.den());
    out.push_back(std::move(t));
  }
  return out;
}

Json spec_to_json(const TruncationSpec& spec) {
  Json j;
  j["zWeights"] = monomial_exponents_to_json(spec.z_weights);
  j["aWeights"] = monomial_exponents_to_json(spec.a_weights);
  j["zBound"] = spec.z_bound;
  j["aBound"] = spec.a_bound;
  return j;
}

Json prefactor_to_json(const LogPrefactor& p) {
  Json rows = Json::array();
  const RatMatrix& b = p.matrix();
  for (Index i = 0; i < b.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < b.cols(); ++j) row.push_back(to_string(b(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json contribution_to_json(const FixedPointContribution& c) {
  Json j;
  j["point"] = c.point.one_based();
  j["level"] = c.level;
  j["prefactor"] = prefactor_to_json(c.contribution.prefactor);
  Json inf = Json::array();
  for (const auto& m : c.infinite_factors) inf.push_back(monomial_exponents_to_json(m.a));
  j["infiniteFactors"] = std::move(inf);
  j["truncation"] = spec_to_json(c.contribution.series.spec());
  j["series"] = series_to_json(c.contribution.series);
  j["degreeSum"] = series_to_json(c.degree_sum);
  return j;
}

Json report_to_json(const MirrorReport& r) {
  Json j;
  j["datum"] = r.datum;
  j["orders"] = Json::array({r.orders.z, r.orders.a});
  Json points = Json::array();
  for (const auto& pr : r.points) {
    Json p;
    p["point"] = pr.point.one_based();
    p["mirror"] = pr.mirror.one_based();
    p["prefactorEqual"] = pr.prefactor_equal;
    p["truncation"] = spec_to_json(pr.window);
    p["diffCount"] = pr.diffs.size();
    if (!pr.diffs.empty()) {
      const auto& d = pr.diffs.front();
      Json fd;
      fd["zExp"] = monomial_exponents_to_json(d.monomial.z);
      fd["aExp"] = monomial_exponents_to_json(d.monomial.a);
      fd["primal"] = d.primal.str();
      fd["dual"] = d.dual.str();
      p["firstDiff"] = std::move(fd);
    }
    p["pass"] = pr.pass;
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  j["pass"] = r.pass;
  return j;
}

}  // namespace qmirror
