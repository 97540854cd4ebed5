#include "latgas/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latgas {

namespace {

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;
  int d;

  explicit ExprParser(const std::string& src, int dim) : s(src), d(dim) {}

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("expression parse error at position " +
                                std::to_string(pos) + ": " + what + " in \"" + s + "\"");
  }

  long long integer() {
    skip();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (start == pos) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  MonomialFn number() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit((unsigned char)s[pos]) || s[pos] == '.'))
      ++pos;
    Rational r;
    if (!Rational::parse(s.substr(start, pos - start), r)) fail("bad number");
    MonomialFn f;
    if (!r.is_zero()) f[SiteSet{}] = r;
    return f;
  }

  MonomialFn eta() {
    pos += 3;  // "eta"
    if (!eat('(')) fail("expected ( after eta");
    Point p;
    p[0] = (int)integer();
    for (int ax = 1; ax < d; ++ax) {
      if (!eat(',')) fail("expected , in eta coordinates");
      p[ax] = (int)integer();
    }
    if (!eat(')')) fail("expected ) after eta coordinates");
    MonomialFn f;
    f[SiteSet{p}] = Rational(1);
    return f;
  }

  MonomialFn factor() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (s.compare(pos, 3, "eta") == 0) return eta();
    if (s[pos] == '(') {
      ++pos;
      MonomialFn f = expr();
      if (!eat(')')) fail("expected )");
      return f;
    }
    if (s[pos] == '-') {
      ++pos;
      return mono_scale(Rational(-1), factor());
    }
    return number();
  }

  MonomialFn term() {
    MonomialFn f = factor();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        f = mono_mul(f, factor());
      } else if (pos < s.size() && s[pos] == '/') {
        ++pos;
        MonomialFn g = factor();
        if (g.size() > 1 || (g.size() == 1 && !g.begin()->first.empty()))
          fail("division only by constants");
        Rational c = g.empty() ? Rational(0) : g.begin()->second;
        if (c.is_zero()) fail("division by zero");
        f = mono_scale(Rational(1) / c, f);
      } else {
        break;
      }
    }
    return f;
  }

  MonomialFn expr() {
    MonomialFn f = term();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == '+') {
        ++pos;
        f = mono_add(f, term());
      } else if (pos < s.size() && s[pos] == '-') {
        ++pos;
        f = mono_add(f, mono_scale(Rational(-1), term()));
      } else {
        break;
      }
    }
    return f;
  }
};

Point parse_point(const std::string& tok, int d) {
  if (d == 1 && tok.find('(') == std::string::npos) return Point(std::stoi(tok));
  std::string t = tok;
  t.erase(std::remove_if(t.begin(), t.end(),
                         [](char c) { return c == '(' || c == ')' || std::isspace((unsigned char)c); }),
          t.end());
  Point p;
  std::stringstream ss(t);
  std::string part;
  int ax = 0;
  while (std::getline(ss, part, ',')) {
    if (ax >= d) throw std::invalid_argument("too many coordinates in " + tok);
    p[ax++] = std::stoi(part);
  }
  if (ax != d) throw std::invalid_argument("expected " + std::to_string(d) + " coordinates in " + tok);
  return p;
}

// Splits a site list like "(-1) (2)" or "-1 2" (d=1).
std::vector<Point> parse_point_list(const std::string& text, int d) {
  std::vector<Point> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    if (text[i] == '(') {
      while (j < text.size() && text[j] != ')') ++j;
      ++j;
    } else {
      while (j < text.size() && !std::isspace((unsigned char)text[j])) ++j;
    }
    out.push_back(parse_point(text.substr(i, j - i), d));
    i = j;
  }
  return out;
}

}  // namespace

MonomialFn parse_occupancy_polynomial(const std::string& expr, int d) {
  ExprParser p(expr, d);
  MonomialFn f = p.expr();
  p.skip();
  if (p.pos != expr.size()) p.fail("trailing input");
  return f;
}

Model parse_model_text(const std::string& text) {
  Model m;
  bool have_dim = false;
  int radius = -1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    try {
      if (kw == "dimension") {
        ls >> m.d;
        if (m.d < 1 || m.d > 3) throw std::invalid_argument("dimension must be 1..3");
        have_dim = true;
      } else if (kw == "radius") {
        ls >> radius;
      } else if (kw == "name") {
        ls >> m.name;
      } else if (kw == "rate") {
        if (!have_dim) throw std::invalid_argument("dimension must come first");
        std::string ytok;
        ls >> ytok;
        Point y = parse_point(ytok, m.d);
        std::string rest;
        std::getline(ls, rest);
        MonomialFn f = parse_occupancy_polynomial(rest, m.d);
        std::set<Point> sites;
        for (const auto& [k, v] : f)
          for (const auto& p : k.points()) {
            if (p.is_zero() || p == y)
              throw std::invalid_argument("rate may not depend on eta_0 or eta_y");
            sites.insert(p);
          }
        m.rates[y] = table_from_monomials(std::vector<Point>(sites.begin(), sites.end()), f);
        for (const auto& v : m.rates[y].values)
          if (v < Rational(0))
            throw std::invalid_argument("rate takes a negative value");
      } else if (kw == "table") {
        if (!have_dim) throw std::invalid_argument("dimension must come first");
        std::string ytok;
        ls >> ytok;
        Point y = parse_point(ytok, m.d);
        std::string rest;
        std::getline(ls, rest);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("table needs ':'");
        std::string head = rest.substr(0, colon);
        auto wd = head.find("window");
        if (wd == std::string::npos) throw std::invalid_argument("table needs 'window'");
        RateTable t;
        t.window = parse_point_list(head.substr(wd + 6), m.d);
        for (const auto& z : t.window)
          if (z.is_zero() || z == y)
            throw std::invalid_argument("window may not contain 0 or y");
        std::istringstream vs(rest.substr(colon + 1));
        std::string vtok;
        while (vs >> vtok) {
          Rational r;
          if (!Rational::parse(vtok, r)) throw std::invalid_argument("bad table value " + vtok);
          t.values.push_back(r);
        }
        if (t.values.size() != (std::size_t(1) << t.window.size()))
          throw std::invalid_argument("table needs 2^|window| values");
        m.rates[y] = std::move(t);
      } else {
        throw std::invalid_argument("unknown directive '" + kw + "'");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("model file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_dim) throw std::invalid_argument("model file: missing 'dimension'");
  int K = 1;
  for (const auto& [y, t] : m.rates) {
    K = std::max(K, y.linf() + 1);
    for (const auto& z : t.window) K = std::max(K, z.linf());
  }
  m.radius = radius > 0 ? radius : K;
  if (m.name.empty()) m.name = "custom";
  return m;
}

Model parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model_text(ss.str());
}

std::string model_to_text(const Model& m) {
  std::ostringstream os;
  os << "name " << (m.name.empty() ? "custom" : m.name) << "\n";
  os << "dimension " << m.d << "\n";
  os << "radius " << m.radius << "\n";
  for (const auto& [y, t] : m.rates) {
    os << "table " << (m.d == 1 ? std::to_string(y[0]) : to_string(y, m.d)) << " window";
    for (const auto& z : t.window)
      os << " " << (m.d == 1 ? "(" + std::to_string(z[0]) + ")" : to_string(z, m.d));
    os << " :";
    for (const auto& v : t.values) os << " " << v.to_string();
    os << "\n";
  }
  return os.str();
}

namespace {

Rational arg_rational(const std::map<std::string, std::string>& args, const std::string& key,
                      const Rational& dflt) {
  auto it = args.find(key);
  if (it == args.end()) return dflt;
  Rational r;
  if (!Rational::parse(it->second, r))
    throw std::invalid_argument("bad rational argument " + key + "=" + it->second);
  return r;
}

int arg_int(const std::map<std::string, std::string>& args, const std::string& key, int dflt) {
  auto it = args.find(key);
  if (it == args.end()) return dflt;
  return std::stoi(it->second);
}

}  // namespace

Model builtin_model(const std::string& name, const std::map<std::string, std::string>& args) {
  if (name == "ssep") return make_ssep(arg_int(args, "d", 1));
  if (name == "asep")
    return make_asep(arg_rational(args, "p", Rational(2)), arg_rational(args, "q", Rational(1)));
  if (name == "tasep") return make_tasep();
  if (name == "simplerates") return make_simplerates();
  if (name == "perturbed") return make_perturbed();
  if (name == "oneblock") {
    int y = arg_int(args, "y", 2);
    auto it = args.find("mode");
    bool holes = it == args.end() || it->second != "particles";
    return make_oneblock(y, arg_rational(args, "c", Rational(1)), holes);
  }
  if (name == "product") {
    auto it = args.find("axes");
    std::string axes = it == args.end() ? "simplerates;ssep" : it->second;
    std::vector<Model> parts;
    std::stringstream ss(axes);
    std::string part;
    while (std::getline(ss, part, ';'))
      if (!part.empty()) parts.push_back(builtin_model(part, {}));
    return make_product(parts);
  }
  if (name == "modified2d") {
    std::map<Point, Rational> law;
    law[Point(1, 0)] = arg_rational(args, "p1", Rational(2));
    law[Point(-1, 0)] = arg_rational(args, "q1", Rational(1));
    law[Point(0, 1)] = arg_rational(args, "p2", Rational(1));
    law[Point(0, -1)] = arg_rational(args, "q2", Rational(1));
    std::vector<Point> modified{Point(1, 0)};
    return make_modified2d(law, modified);
  }
  throw std::invalid_argument("unknown builtin model '" + name + "'");
}

std::vector<std::string> builtin_model_names() {
  return {"ssep", "asep", "tasep", "simplerates", "oneblock", "product", "modified2d"};
}

Model load_model(const std::string& spec) {
  {
    std::ifstream probe(spec);
    if (probe.good()) return parse_model_file(spec);
  }
  std::string name = spec;
  std::map<std::string, std::string> args;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::stringstream ss(spec.substr(colon + 1));
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad model argument " + kv);
      args[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
  }
  return builtin_model(name, args);
}

}  // namespace latgas
