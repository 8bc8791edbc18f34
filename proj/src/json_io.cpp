#include "qrep/json_io.hpp"

namespace qrep {

using nlohmann::json;

json rep_to_json(const Representation& m) {
  const Quiver& q = m.quiver();
  json arrows = json::array();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const ExactMatrix& mat = m.map(a);
    json entries = json::array();
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j) entries.push_back(mat.at(i, j).to_string());
    arrows.push_back({{"label", q.arrow(a).label},
                      {"rows", mat.rows()},
                      {"cols", mat.cols()},
                      {"entries", std::move(entries)}});
  }
  return {{"field", m.field().to_string()}, {"dims", m.dims()}, {"arrows", std::move(arrows)}};
}

namespace {

Representation rep_from_json_impl(const json& j, const AlgebraPtr& alg) {
  if (!j.is_object() || !j.contains("field") || !j.contains("dims") || !j.contains("arrows"))
    throw ParseError("representation JSON needs field, dims and arrows");
  const Field f = Field::parse(j.at("field").get<std::string>());
  const Quiver& q = alg->quiver();

  DimVector dims;
  for (const json& d : j.at("dims")) {
    if (!d.is_number_integer() || d.get<long>() < 0)
      throw ParseError("dims must be nonnegative integers");
    dims.push_back(d.get<int>());
  }
  if (static_cast<int>(dims.size()) != q.vertex_count())
    throw ParseError("dims length does not match the vertex count");

  Representation m(alg, f, dims);
  std::vector<bool> seen(q.arrow_count(), false);
  for (const json& aj : j.at("arrows")) {
    if (!aj.contains("label") || !aj.contains("rows") || !aj.contains("cols") ||
        !aj.contains("entries"))
      throw ParseError("arrow JSON needs label, rows, cols and entries");
    const std::string label = aj.at("label").get<std::string>();
    int index = -1;
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).label == label) {
        index = a;
        break;
      }
    if (index < 0) throw ParseError("unknown arrow label: " + label);
    if (seen[index]) throw ParseError("duplicate arrow label: " + label);
    seen[index] = true;
    const int rows = aj.at("rows").get<int>(), cols = aj.at("cols").get<int>();
    const json& entries = aj.at("entries");
    if (rows < 0 || cols < 0 || static_cast<long>(entries.size()) != 1L * rows * cols)
      throw ParseError("entry count does not match rows x cols for " + label);
    ExactMatrix mat(rows, cols, f);
    int t = 0;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) mat.set(r, c, Scalar::parse(entries[t++].get<std::string>(), f));
    try {
      m.set_map(index, std::move(mat));
    } catch (const Error& e) {
      throw ParseError(std::string("arrow ") + label + ": " + e.what());
    }
  }
  for (int a = 0; a < q.arrow_count(); ++a)
    if (!seen[a]) throw ParseError("missing arrow: " + q.arrow(a).label);
  return m;
}

}  // namespace

Representation rep_from_json(const json& j, const AlgebraPtr& alg) {
  try {
    return rep_from_json_impl(j, alg);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed representation JSON: ") + e.what());
  }
}

json functor_output_to_json(const FunctorOutput& out) {
  json hom_dims = json::array();
  for (const HomBasis& b : out.bases) hom_dims.push_back(b.dim());
  return {{"rep", rep_to_json(out.rep)},
          {"provenance",
           {{"input", out.input_id},
            {"tilting", out.tilting_id},
            {"vertex_summands", out.vertex_summands},
            {"hom_dims", std::move(hom_dims)}}}};
}

}  // namespace qrep
