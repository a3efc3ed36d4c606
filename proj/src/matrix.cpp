#include "lpa/matrix.hpp"

#include <algorithm>
#include <cctype>

namespace lpa {

LaurentMatrix conjugate_transpose(const LaurentMatrix& m, Involution inv) {
  LaurentMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c).conj(inv);
  return t;
}

namespace {

LaurentPoly det_recursive(const LaurentMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return LaurentPoly(1);
  LaurentPoly total;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::size_t c = cols[k];
    if (m(row, c).is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    LaurentPoly minor = det_recursive(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    LaurentPoly term = m(row, c) * minor;
    if (k % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace

LaurentPoly determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  return det_recursive(m, cols, 0);
}

std::string to_string(const LaurentMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += m(r, c).to_string();
    }
  }
  return out + "]";
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (s[k] == sep && depth == 0) {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

LaurentMatrix parse_laurent_matrix(std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), '[', ' ');
  std::replace(cleaned.begin(), cleaned.end(), ']', ' ');
  std::vector<std::vector<LaurentPoly>> rows;
  for (auto row_text : split(cleaned, ';')) {
    if (trim(row_text).empty()) continue;
    std::vector<LaurentPoly> row;
    for (auto entry : split(row_text, ',')) row.push_back(parse_laurent(trim(entry)));
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("ragged matrix literal: row " + std::to_string(rows.size() + 1));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix literal");
  LaurentMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = std::move(rows[r][c]);
  return m;
}

}  // namespace lpa
