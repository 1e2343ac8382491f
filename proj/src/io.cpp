#include "qlogic/io.hpp"

namespace qlogic::io {

namespace {

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

Eigen::Index count_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(std::string("field '") + name + "' must be a non-negative integer");
  return static_cast<Eigen::Index>(v.get<long long>());
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back(complex_pair(m(i, j)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = count_field(j, "rows");
  const Eigen::Index cols = count_field(j, "cols");
  const Json& data = field(j, "data");
  if (rows < 1 || cols < 1) throw ParseError("matrix must have rows, cols >= 1");
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw ParseError("matrix data length must equal rows * cols");
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = complex_from(data[i * cols + c]);
  return m;
}

Json to_json(const Ket& k) {
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < k.dim(); ++i) amps.push_back(complex_pair(k.amplitudes()(i)));
  return {{"dim", k.dim()}, {"amps", std::move(amps)}};
}

Ket ket_from_json(const Json& j) {
  const Eigen::Index dim = count_field(j, "dim");
  const Json& amps = field(j, "amps");
  if (!amps.is_array() || static_cast<Eigen::Index>(amps.size()) != dim || dim < 1)
    throw ParseError("ket amps length must equal dim");
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = complex_from(amps[i]);
  return Ket(std::move(v));
}

Json to_json(const StateSet& s) {
  Json j = {{"variant", to_string(s.kind())}, {"dim", s.dim()}};
  if (const auto* p = s.polytope_if()) {
    Json gens = Json::array();
    for (const auto& g : p->generators) gens.push_back(to_json(g.matrix()));
    j["generators"] = std::move(gens);
  } else if (const auto* f = s.face_if()) {
    j["projector"] = to_json(f->projector);
  } else if (const auto* n = s.join_if()) {
    j["children"] = Json::array({to_json(*n->left), to_json(*n->right)});
  } else if (const auto* m = s.meet_if()) {
    j["children"] = Json::array({to_json(*m->left), to_json(*m->right)});
  }
  return j;
}

StateSet state_set_from_json(const Json& j) {
  const Json& variant = field(j, "variant");
  if (!variant.is_string()) throw ParseError("'variant' must be a string");
  const std::string v = variant.get<std::string>();
  const Eigen::Index dim = j.contains("dim") ? count_field(j, "dim") : 0;
  if (v == "bottom") return StateSet::bottom(dim);
  if (v == "top") {
    if (dim < 1) throw ParseError("top requires dim >= 1");
    return StateSet::top(dim);
  }
  if (v == "vpolytope") {
    const Json& gens = field(j, "generators");
    if (!gens.is_array() || gens.empty()) throw ParseError("vpolytope needs generators");
    std::vector<DensityMatrix> out;
    for (const auto& g : gens) out.push_back(DensityMatrix::from_matrix(matrix_from_json(g)));
    StateSet s = StateSet::polytope(std::move(out));
    if (dim != 0 && s.dim() != dim) throw ParseError("vpolytope dim disagrees with generators");
    return s;
  }
  if (v == "face") {
    StateSet s = StateSet::face(matrix_from_json(field(j, "projector")));
    if (dim != 0 && s.dim() != dim) throw ParseError("face dim disagrees with projector");
    return s;
  }
  if (v == "join" || v == "meet") {
    const Json& children = field(j, "children");
    if (!children.is_array() || children.size() != 2)
      throw ParseError(v + " needs exactly two children");
    StateSet l = state_set_from_json(children[0]);
    StateSet r = state_set_from_json(children[1]);
    return v == "join" ? StateSet::join_node(std::move(l), std::move(r))
                       : StateSet::meet_node(std::move(l), std::move(r));
  }
  throw ParseError("unknown variant '" + v + "'");
}

Json to_json(const QVector& v) {
  Json terms = Json::array();
  for (const auto& [modes, amp] : v.terms())
    terms.push_back({{"modes", modes}, {"re", amp.real()}, {"im", amp.imag()}});
  return {{"stats", v.stats() == Statistics::Boson ? "b" : "f"}, {"terms", std::move(terms)}};
}

QVector qvector_from_json(const Json& j) {
  const Json& stats = field(j, "stats");
  if (!stats.is_string()) throw ParseError("'stats' must be \"b\" or \"f\"");
  const std::string st = stats.get<std::string>();
  if (st != "b" && st != "f") throw ParseError("'stats' must be \"b\" or \"f\"");
  QVector out(parse_statistics(st));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("'terms' must be an array");
  for (const auto& t : terms) {
    const Json& modes = field(t, "modes");
    if (!modes.is_array()) throw ParseError("'modes' must be an array");
    std::vector<long long> m;
    for (const auto& x : modes) {
      if (!x.is_number_integer()) throw ParseError("mode indices must be integers");
      m.push_back(x.get<long long>());
    }
    // Terms may be written in any order; the reordering sign is applied.
    const OccState f(m, out.stats());
    const double re = field(t, "re").get<double>();
    const double im = field(t, "im").get<double>();
    out.add_term(f.modes(), Complex(re, im) * static_cast<double>(f.sign()));
  }
  return out;
}

Json to_json(const PureQset& x) {
  Json counts = Json::object();
  for (const auto& [k, n] : x.counts()) counts[k.label()] = n;
  return {{"counts", std::move(counts)}};
}

PureQset qset_from_json(const Json& j) {
  const Json& counts = field(j, "counts");
  if (!counts.is_object()) throw ParseError("'counts' must be an object");
  std::map<Kind, std::size_t> c;
  for (const auto& [k, n] : counts.items()) {
    if (!n.is_number_integer() || n.get<long long>() < 0)
      throw ParseError("qset counts must be non-negative integers");
    c.emplace(Kind(k), n.get<std::size_t>());
  }
  return PureQset(c);
}

Json to_json(const PurityScan& s) {
  return {{"sign", std::string(1, statistics_symbol(s.stats))},
          {"n", s.n},
          {"samples", s.samples},
          {"seed", s.seed},
          {"purity_min", s.purity_min},
          {"purity_max", s.purity_max},
          {"purity_mean", s.purity_mean}};
}

}  // namespace qlogic::io
