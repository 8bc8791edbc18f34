#include "qrep/text_render.hpp"

#include <sstream>

namespace qrep {

std::string render_matrix(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "";
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<size_t> width(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    cells[i].reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      cells[i].push_back(m.at(i, j).to_string());
      width[j] = std::max(width[j], cells[i].back().size());
    }
  }
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ' ';
      os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
    }
    os << '\n';
  }
  return os.str();
}

std::string render_representation(const Representation& m) {
  const Quiver& q = m.quiver();
  std::ostringstream os;
  os << "field: " << m.field().to_string() << '\n';
  os << "dims:";
  for (int v = 0; v < q.vertex_count(); ++v)
    os << ' ' << q.vertex_name(v) << ':' << m.dim(v);
  os << '\n';
  for (int a = 0; a < q.arrow_count(); ++a) {
    const ExactMatrix& mat = m.map(a);
    os << "arrow " << q.arrow(a).label << " (" << mat.rows() << "x" << mat.cols() << "):\n";
    std::istringstream lines(render_matrix(mat));
    for (std::string line; std::getline(lines, line);) os << "  " << line << '\n';
  }
  return os.str();
}

}  // namespace qrep
