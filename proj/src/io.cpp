#include "cicone/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cicone {

namespace {

bool integer_token(const std::string& t) {
  size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

InstanceFile from_rows(std::vector<std::vector<Int>> rows, std::vector<int> lines,
                       std::string name, const std::string& origin) {
  if (rows.empty()) throw EmptyInput();
  const size_t width = rows.front().size();
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw RaggedRows(origin + ":" + std::to_string(lines[r]) + ": row has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(width));
    }
    bool zero = true;
    for (const Int& x : rows[r]) {
      if (x != 0) {
        zero = false;
        break;
      }
    }
    if (zero) throw ZeroRow(origin + ":" + std::to_string(lines[r]) + ": zero generator row");
  }
  IMat m(static_cast<Index>(rows.size()), static_cast<Index>(width));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < width; ++c) m(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
  InstanceFile f;
  f.name = std::move(name);
  f.generators = GeneratorSet(std::move(m), f.name);
  return f;
}

InstanceFile parse_text(const std::string& content, const std::string& origin) {
  std::vector<std::vector<Int>> rows;
  std::vector<int> lines;
  std::istringstream in(content);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<Int> row;
    size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos]))) {
        ++pos;
        continue;
      }
      size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      const std::string tok = line.substr(pos, end - pos);
      if (!integer_token(tok)) {
        throw ParseError(origin + ":" + std::to_string(lineno) + ":" + std::to_string(pos + 1) +
                         ": expected a decimal integer, got '" + tok + "'");
      }
      row.emplace_back(tok);
      pos = end;
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
      lines.push_back(lineno);
    }
  }
  return from_rows(std::move(rows), std::move(lines), "", origin);
}

Int int_from_json(const Json& v, const std::string& origin) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  if (v.is_string() && integer_token(v.get<std::string>())) return Int(v.get<std::string>());
  throw ParseError(origin + ": generator entries must be integers or decimal strings");
}

InstanceFile parse_json(const std::string& content, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const Json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw ParseError(origin + ": expected an object with a 'generators' array");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(origin + ": 'name' must be a string");
    name = j["name"].get<std::string>();
  }
  std::vector<std::vector<Int>> rows;
  std::vector<int> lines;
  int idx = 0;
  for (const Json& r : j["generators"]) {
    ++idx;
    if (!r.is_array()) throw ParseError(origin + ": each generator must be an array");
    std::vector<Int> row;
    for (const Json& v : r) row.push_back(int_from_json(v, origin));
    rows.push_back(std::move(row));
    lines.push_back(idx);
  }
  return from_rows(std::move(rows), std::move(lines), std::move(name), origin);
}

} // namespace

InstanceFile parse_instance(std::istream& in, const std::string& origin) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json(content, origin);
    break;
  }
  return parse_text(content, origin);
}

InstanceFile parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_instance(in, path);
}

Json json_of(const Int& v) {
  static const Int safe = Int(1) << 53;
  if (v <= safe && v >= -safe) return Json(v.convert_to<long long>());
  return Json(v.str());
}

Json json_of(const IVec& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(json_of(v[i]));
  return a;
}

Json json_of(const GeneratorSet& A) {
  Json rows = Json::array();
  for (Index i = 0; i < A.size(); ++i) rows.push_back(json_of(A.row(i)));
  Json j;
  j["generators"] = std::move(rows);
  if (!A.name.empty()) j["name"] = A.name;
  return j;
}

Json json_of(const TreePtr& tree) {
  if (!tree) return Json(nullptr);
  Json j;
  j["indices"] = tree->indices;
  j["leaf"] = tree->is_leaf;
  if (tree->is_leaf) return j;
  j["sum_type"] = tree->sum_type == SumType::Internal ? "internal" : "external";
  Json cert;
  if (const auto* g = std::get_if<GluingCertificate>(&tree->cert)) {
    cert["type"] = "gluing";
    cert["E1"] = g->E1;
    cert["E2"] = g->E2;
    cert["a"] = json_of(g->a);
    cert["coefficients1"] = json_of(g->cert1);
    cert["coefficients2"] = json_of(g->cert2);
  } else if (const auto* s = std::get_if<SGluingCertificate>(&tree->cert)) {
    cert["type"] = "s-gluing";
    cert["E1"] = s->E1;
    cert["E2"] = s->E2;
    cert["a"] = json_of(s->a);
    cert["t"] = json_of(s->t);
    cert["coefficients1"] = json_of(s->certt1);
    cert["coefficients2"] = json_of(s->certt2);
  }
  j["certificate"] = std::move(cert);
  j["left"] = json_of(tree->left);
  j["right"] = json_of(tree->right);
  return j;
}

Json json_of(const DirectSumResult& r) {
  Json j;
  j["a"] = json_of(r.a);
  j["sum_type"] = r.sum_type == SumType::Internal ? "internal" : "external";
  if (r.external_case) {
    j["external_case"] =
        *r.external_case == ExternalCase::SharedRay ? "shared-ray" : "absorbed-ray";
  } else {
    j["external_case"] = nullptr;
  }
  j["dim"] = r.dim;
  j["predicted_rays"] = r.predicted_rays;
  Json rays = Json::array();
  for (const IVec& v : r.actual_rays) rays.push_back(json_of(v));
  j["actual_rays"] = std::move(rays);
  j["generators"] = json_of(r.generators)["generators"];
  return j;
}

Json json_of(const WitnessResult& w) {
  Json j;
  j["mu"] = json_of(w.mu);
  j["tau"] = json_of(w.tau);
  j["g"] = json_of(w.g);
  j["output"] = json_of(w.A_out)["generators"];
  j["tree"] = json_of(w.tree);
  return j;
}

Json json_of(const Binomial& b) {
  Json j;
  j["plus"] = json_of(b.plus);
  j["minus"] = json_of(b.minus);
  return j;
}

Json json_of(const OracleReport& r) {
  Json j;
  Json markov = Json::array();
  for (const Binomial& b : r.markov) markov.push_back(json_of(b));
  j["markov"] = std::move(markov);
  j["mu"] = r.mu;
  j["height"] = r.height;
  j["is_ci"] = r.is_ci;
  return j;
}

Json json_of(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["bound_holds"] = r.bound_holds;
  j["equality"] = r.equality;
  j["bipyramidal"] = r.bipyramidal;
  return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string text_of(const GeneratorSet& A) {
  std::string out;
  for (Index i = 0; i < A.size(); ++i) {
    for (Index j = 0; j < A.ambient(); ++j) {
      if (j) out += " ";
      out += A.mat(i, j).str();
    }
    out += "\n";
  }
  return out;
}

} // namespace cicone
