#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace latgas {

// Lattice point in up to three dimensions. Unused coordinates stay zero, so
// the same type serves d = 1, 2, 3.
struct Point {
  std::array<int, 3> c{0, 0, 0};

  Point() = default;
  Point(int x) { c[0] = x; }
  Point(int x, int y) {
    c[0] = x;
    c[1] = y;
  }
  Point(int x, int y, int z) {
    c[0] = x;
    c[1] = y;
    c[2] = z;
  }

  int operator[](int i) const { return c[i]; }
  int& operator[](int i) { return c[i]; }

  friend Point operator+(Point a, Point b) {
    return Point(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]);
  }
  friend Point operator-(Point a, Point b) {
    return Point(a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]);
  }
  friend Point operator-(Point a) { return Point(-a.c[0], -a.c[1], -a.c[2]); }
  friend bool operator==(const Point& a, const Point& b) { return a.c == b.c; }
  friend bool operator!=(const Point& a, const Point& b) { return a.c != b.c; }
  friend bool operator<(const Point& a, const Point& b) { return a.c < b.c; }

  int linf() const;
  int l1() const;
  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
};

Point unit_vector(int axis);
std::string to_string(const Point& p, int d);

// Finite subset of Z^d, kept sorted. Value type used as the index of dual
// basis elements and building-block patterns.
class SiteSet {
 public:
  SiteSet() = default;
  SiteSet(std::initializer_list<Point> pts);
  explicit SiteSet(std::vector<Point> pts);

  int size() const { return static_cast<int>(pts_.size()); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](int i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

  bool contains(const Point& p) const;
  bool contains_set(const SiteSet& other) const;
  bool disjoint(const SiteSet& other) const;

  SiteSet with(const Point& p) const;     // insert (p must be absent)
  SiteSet without(const Point& p) const;  // erase (p must be present)
  SiteSet unite(const SiteSet& other) const;
  SiteSet minus(const SiteSet& other) const;
  SiteSet translated(const Point& y) const;
  SiteSet negated() const;  // {-p : p in set}

  // Lexicographically minimal translate: shifts so the first (lex-smallest)
  // point becomes the origin.
  SiteSet canonical() const;
  Point anchor() const { return pts_.empty() ? Point() : pts_[0]; }

  int diameter() const;  // max over axes of coordinate spread

  friend bool operator<(const SiteSet& a, const SiteSet& b) { return a.pts_ < b.pts_; }
  friend bool operator==(const SiteSet& a, const SiteSet& b) { return a.pts_ == b.pts_; }
  friend bool operator!=(const SiteSet& a, const SiteSet& b) { return !(a.pts_ == b.pts_); }

 private:
  std::vector<Point> pts_;
};

std::string to_string(const SiteSet& s, int d);

// d = 1 gap coordinates: {x_1 < ... < x_n} <-> (x_2-x_1-1, ..., x_n-x_{n-1}-1).
std::vector<int> gaps_from_set(const SiteSet& s);
SiteSet set_from_gaps(const std::vector<int>& gaps);

// All boundary exchange moves of a set: pairs (x, x±e_i) with exactly one
// endpoint inside. Returns the exchanged sets (the move that exercises the
// pair). Used by the S0 action and Dirichlet forms.
std::vector<SiteSet> exchange_neighbors(const SiteSet& s, int d);

// All subsets of the given set (including empty and full).
std::vector<SiteSet> all_subsets(const SiteSet& s);

}  // namespace latgas
