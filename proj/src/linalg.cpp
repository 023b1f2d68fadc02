#include "linalg.hpp"

#include <algorithm>
#include <set>

namespace thresholds::detail {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t ncols) {
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(Matrix m, std::size_t ncols) { return rref(m, ncols).size(); }

Rational convex_hull_volume(std::vector<std::vector<Rational>> points, std::size_t d) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < d + 1) return 0;
  if (d == 1) return points.back()[0] - points.front()[0];

  Matrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(row));
  }
  if (rank(diffs, d) < d) return 0;

  // Facets: hyperplanes <w,u> = c through d points with every point on one side.
  std::set<std::vector<Rational>> seen;
  const auto& apex = points[0];
  Rational volume = 0;
  for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& idx) {
    Matrix sys;
    for (auto i : idx) {
      std::vector<Rational> row(points[i]);
      row.push_back(-1);
      sys.push_back(std::move(row));
    }
    auto ns = nullspace(sys, d + 1);
    if (ns.size() != 1) return;
    auto h = ns[0];  // (w, c)
    std::size_t lead = 0;
    while (lead < d && h[lead] == 0) ++lead;
    if (lead == d) return;
    Rational s = h[lead];
    for (auto& v : h) v /= s;
    if (seen.count(h)) return;
    int side = 0;
    std::vector<std::vector<Rational>> on;
    for (const auto& pt : points) {
      Rational val = -h[d];
      for (std::size_t j = 0; j < d; ++j) val += h[j] * pt[j];
      if (val == 0) {
        on.push_back(pt);
      } else {
        int sg = val > 0 ? 1 : -1;
        if (side == 0)
          side = sg;
        else if (side != sg)
          return;
      }
    }
    seen.insert(h);
    Rational height = -h[d];
    for (std::size_t j = 0; j < d; ++j) height += h[j] * apex[j];
    if (height == 0) return;
    std::size_t k = d - 1;
    while (h[k] == 0) --k;
    std::vector<std::vector<Rational>> proj;
    for (const auto& pt : on) {
      std::vector<Rational> q;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) q.push_back(pt[j]);
      proj.push_back(std::move(q));
    }
    Rational face = convex_hull_volume(std::move(proj), d - 1);
    volume += abs(height) / abs(h[k]) * face / static_cast<long>(d);
  });
  return volume;
}

}  // namespace thresholds::detail
