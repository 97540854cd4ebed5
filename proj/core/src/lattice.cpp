#include "latgas/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace latgas {

int Point::linf() const {
  return std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
}

int Point::l1() const { return std::abs(c[0]) + std::abs(c[1]) + std::abs(c[2]); }

Point unit_vector(int axis) {
  Point p;
  p[axis] = 1;
  return p;
}

std::string to_string(const Point& p, int d) {
  std::ostringstream os;
  if (d == 1) {
    os << p[0];
  } else {
    os << "(";
    for (int i = 0; i < d; ++i) os << (i ? "," : "") << p[i];
    os << ")";
  }
  return os.str();
}

SiteSet::SiteSet(std::initializer_list<Point> pts) : pts_(pts) {
  std::sort(pts_.begin(), pts_.end());
  if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
    throw std::invalid_argument("SiteSet: duplicate point");
}

SiteSet::SiteSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end());
  if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
    throw std::invalid_argument("SiteSet: duplicate point");
}

bool SiteSet::contains(const Point& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

bool SiteSet::contains_set(const SiteSet& other) const {
  return std::includes(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end());
}

bool SiteSet::disjoint(const SiteSet& other) const {
  auto a = pts_.begin();
  auto b = other.pts_.begin();
  while (a != pts_.end() && b != other.pts_.end()) {
    if (*a < *b)
      ++a;
    else if (*b < *a)
      ++b;
    else
      return false;
  }
  return true;
}

SiteSet SiteSet::with(const Point& p) const {
  SiteSet out;
  out.pts_.reserve(pts_.size() + 1);
  auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
  assert(it == pts_.end() || *it != p);
  out.pts_.insert(out.pts_.end(), pts_.begin(), it);
  out.pts_.push_back(p);
  out.pts_.insert(out.pts_.end(), it, pts_.end());
  return out;
}

SiteSet SiteSet::without(const Point& p) const {
  SiteSet out;
  out.pts_.reserve(pts_.size() - 1);
  for (const auto& q : pts_)
    if (q != p) out.pts_.push_back(q);
  assert(out.pts_.size() + 1 == pts_.size());
  return out;
}

SiteSet SiteSet::unite(const SiteSet& other) const {
  SiteSet out;
  out.pts_.reserve(pts_.size() + other.pts_.size());
  std::set_union(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end(),
                 std::back_inserter(out.pts_));
  return out;
}

SiteSet SiteSet::minus(const SiteSet& other) const {
  SiteSet out;
  std::set_difference(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end(),
                      std::back_inserter(out.pts_));
  return out;
}

SiteSet SiteSet::translated(const Point& y) const {
  SiteSet out;
  out.pts_.reserve(pts_.size());
  for (const auto& p : pts_) out.pts_.push_back(p + y);
  return out;
}

SiteSet SiteSet::negated() const {
  SiteSet out;
  out.pts_.reserve(pts_.size());
  for (const auto& p : pts_) out.pts_.push_back(-p);
  std::sort(out.pts_.begin(), out.pts_.end());
  return out;
}

SiteSet SiteSet::canonical() const {
  if (pts_.empty()) return *this;
  return translated(-pts_[0]);
}

int SiteSet::diameter() const {
  if (pts_.empty()) return 0;
  int diam = 0;
  for (int ax = 0; ax < 3; ++ax) {
    int lo = pts_[0][ax], hi = pts_[0][ax];
    for (const auto& p : pts_) {
      lo = std::min(lo, p[ax]);
      hi = std::max(hi, p[ax]);
    }
    diam = std::max(diam, hi - lo);
  }
  return diam;
}

std::string to_string(const SiteSet& s, int d) {
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < s.size(); ++i) os << (i ? "," : "") << to_string(s[i], d);
  os << "}";
  return os.str();
}

std::vector<int> gaps_from_set(const SiteSet& s) {
  std::vector<int> gaps;
  for (int i = 1; i < s.size(); ++i) gaps.push_back(s[i][0] - s[i - 1][0] - 1);
  return gaps;
}

SiteSet set_from_gaps(const std::vector<int>& gaps) {
  std::vector<Point> pts;
  int x = 0;
  pts.push_back(Point(0));
  for (int g : gaps) {
    x += g + 1;
    pts.push_back(Point(x));
  }
  return SiteSet(std::move(pts));
}

std::vector<SiteSet> exchange_neighbors(const SiteSet& s, int d) {
  std::vector<SiteSet> out;
  for (int i = 0; i < s.size(); ++i) {
    for (int ax = 0; ax < d; ++ax) {
      for (int dir : {-1, +1}) {
        Point q = s[i];
        q[ax] += dir;
        if (!s.contains(q)) out.push_back(s.without(s[i]).with(q));
      }
    }
  }
  return out;
}

std::vector<SiteSet> all_subsets(const SiteSet& s) {
  int n = s.size();
  std::vector<SiteSet> out;
  out.reserve(std::size_t(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) pts.push_back(s[i]);
    out.push_back(SiteSet(std::move(pts)));
  }
  return out;
}

}  // namespace latgas
