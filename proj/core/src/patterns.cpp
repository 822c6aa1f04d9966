#include "sgdraw/patterns.hpp"

#include "sgdraw/validity.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sgdraw {

void validate(const PatternId& p) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad pattern " + to_string(p) + ": " + why);
  };
  switch (p.kind) {
    case PatternKind::kF1:
      if (p.k < 2 || 2 * p.k > p.n) fail("need 2 <= k <= n/2");
      break;
    case PatternKind::kF2:
    case PatternKind::kF3:
    case PatternKind::kF4:
      if (p.n < 3) fail("need n >= 3");
      break;
    case PatternKind::kCycleTypeK:
      if (p.k <= 1 || p.k >= p.n - 1) fail("need 1 < k < n-1");
      break;
    case PatternKind::kNegativeTriangle:
    case PatternKind::kNegativeCluster:
      break;
  }
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::size_t count) {
  std::vector<int> out;
  while (true) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data()) {
      throw std::invalid_argument("malformed pattern parameters");
    }
    out.push_back(value);
    text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    if (text.empty()) break;
    if (text.front() != ',') throw std::invalid_argument("malformed pattern parameters");
    text.remove_prefix(1);
  }
  if (out.size() != count) {
    throw std::invalid_argument("pattern expects " + std::to_string(count) +
                                " parameter(s)");
  }
  return out;
}

}  // namespace

PatternId parse_pattern(std::string_view text) {
  PatternId p;
  if (text == "neg-triangle") {
    p = PatternId::negative_triangle();
  } else if (text == "neg-cluster") {
    p = PatternId::negative_cluster();
  } else {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("unknown pattern '" + std::string(text) + "'");
    }
    std::string_view name = text.substr(0, colon);
    std::string_view args = text.substr(colon + 1);
    if (name == "f1") {
      auto v = parse_ints(args, 2);
      p = PatternId::f1(v[0], v[1]);
    } else if (name == "f2") {
      p = PatternId::f2(parse_ints(args, 1)[0]);
    } else if (name == "f3") {
      p = PatternId::f3(parse_ints(args, 1)[0]);
    } else if (name == "f4") {
      p = PatternId::f4(parse_ints(args, 1)[0]);
    } else if (name == "cycle-k") {
      auto v = parse_ints(args, 2);
      p = PatternId::cycle_type_k(v[0], v[1]);
    } else {
      throw std::invalid_argument("unknown pattern '" + std::string(text) + "'");
    }
  }
  validate(p);
  return p;
}

std::string to_string(const PatternId& p) {
  auto n = std::to_string(p.n);
  auto k = std::to_string(p.k);
  switch (p.kind) {
    case PatternKind::kF1: return "f1:" + n + "," + k;
    case PatternKind::kF2: return "f2:" + n;
    case PatternKind::kF3: return "f3:" + n;
    case PatternKind::kF4: return "f4:" + n;
    case PatternKind::kNegativeTriangle: return "neg-triangle";
    case PatternKind::kNegativeCluster: return "neg-cluster";
    case PatternKind::kCycleTypeK: return "cycle-k:" + n + "," + k;
  }
  return "?";
}

SignedGraph generate(const PatternId& p) {
  validate(p);
  std::vector<Edge> pos;
  std::vector<Edge> neg;
  const int n = p.n;
  switch (p.kind) {
    case PatternKind::kF1:
    case PatternKind::kCycleTypeK: {
      for (int i = 0; i < n; ++i) pos.emplace_back(i, (i + 1) % n);
      for (int i = 0; i < n; ++i) neg.emplace_back(i, (i + p.k) % n);
      std::sort(neg.begin(), neg.end());
      neg.erase(std::unique(neg.begin(), neg.end()), neg.end());
      return SignedGraph(n, std::move(pos), std::move(neg));
    }
    case PatternKind::kF2:
      for (int i = 1; i <= n; ++i) {
        pos.emplace_back(0, i);
        neg.emplace_back(i, i % n + 1);
      }
      return SignedGraph(n + 1, std::move(pos), std::move(neg));
    case PatternKind::kF3:
    case PatternKind::kF4: {
      const bool f3 = p.kind == PatternKind::kF3;
      for (int i = 0; i < n; ++i) pos.emplace_back(i, (i + 1) % n);
      for (int i = 0; i < n; ++i) {
        Vertex hat = n + i;
        Vertex before = (i + n - 1) % n;
        Vertex after = (i + 1) % n;
        (f3 ? pos : neg).emplace_back(hat, i);
        (f3 ? neg : pos).emplace_back(hat, before);
        (f3 ? neg : pos).emplace_back(hat, after);
      }
      return SignedGraph(2 * n, std::move(pos), std::move(neg));
    }
    case PatternKind::kNegativeTriangle:
      neg = {{0, 1}, {0, 2}, {1, 2}, {3, 4}};
      for (int t = 0; t < 3; ++t) {
        pos.emplace_back(t, 3);
        pos.emplace_back(t, 4);
      }
      return SignedGraph(5, std::move(pos), std::move(neg));
    case PatternKind::kNegativeCluster:
      for (int i = 1; i <= 6; ++i) {
        pos.emplace_back(0, i);
        for (int j = i + 1; j <= 6; ++j) neg.emplace_back(i, j);
      }
      return SignedGraph(7, std::move(pos), std::move(neg));
  }
  throw std::logic_error("unhandled pattern kind");
}

namespace {

class InducedSearch {
 public:
  InducedSearch(const SignedGraph& host, const SignedGraph& pattern)
      : host_(host), pattern_(pattern) {
    const int k = pattern.num_vertices();
    // most constrained pattern vertices first
    order_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return pattern.degree(a) > pattern.degree(b);
    });
    map_.assign(static_cast<std::size_t>(k), -1);
    used_.assign(static_cast<std::size_t>(host.num_vertices()), 0);
    host_pos_ = signed_degrees(host, Sign::kPositive);
    host_neg_ = signed_degrees(host, Sign::kNegative);
    pat_pos_ = signed_degrees(pattern, Sign::kPositive);
    pat_neg_ = signed_degrees(pattern, Sign::kNegative);
  }

  std::optional<PatternMatch> run() {
    if (pattern_.num_vertices() > host_.num_vertices()) return std::nullopt;
    if (extend(0)) return PatternMatch{map_};
    return std::nullopt;
  }

 private:
  static std::vector<int> signed_degrees(const SignedGraph& g, Sign s) {
    std::vector<int> d(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (const Neighbor& nb : g.neighbors(v)) d[v] += nb.sign == s;
    }
    return d;
  }

  bool consistent(Vertex pv, Vertex hv, std::size_t depth) const {
    if (host_pos_[hv] < pat_pos_[pv] || host_neg_[hv] < pat_neg_[pv]) return false;
    for (std::size_t t = 0; t < depth; ++t) {
      Vertex pu = order_[t];
      if (host_.sign(hv, map_[pu]) != pattern_.sign(pv, pu)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex pv = order_[depth];
    for (Vertex hv = 0; hv < host_.num_vertices(); ++hv) {
      if (used_[hv] || !consistent(pv, hv, depth)) continue;
      used_[hv] = 1;
      map_[pv] = hv;
      if (extend(depth + 1)) return true;
      map_[pv] = -1;
      used_[hv] = 0;
    }
    return false;
  }

  const SignedGraph& host_;
  const SignedGraph& pattern_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<int> host_pos_, host_neg_, pat_pos_, pat_neg_;
};

}  // namespace

std::optional<PatternMatch> find_induced(const SignedGraph& host,
                                         const SignedGraph& pattern) {
  return InducedSearch(host, pattern).run();
}

std::optional<PatternMatch> find_induced(const SignedGraph& host,
                                         const PatternId& pattern) {
  return find_induced(host, generate(pattern));
}

bool verify_minimal_line(const SignedGraph& g, const OracleOptions& options) {
  if (decide_line_bruteforce(g, options).verdict == Verdict::kDrawable) {
    throw std::invalid_argument("graph is drawable in the line, so it is not a minimal non-drawable graph");
  }
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> rest;
    for (Vertex u = 0; u < n; ++u) {
      if (u != v) rest.push_back(u);
    }
    SignedGraph sub = induced_subgraph(g, rest);
    if (decide_line_bruteforce(sub, options).verdict != Verdict::kDrawable) {
      return false;
    }
  }
  return true;
}

Rational sqrt_truncated(const Rational& x, int digits) {
  if (sgn(x) < 0) throw std::invalid_argument("square root of a negative number");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = x * scale * scale;
  mpz_class floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), scaled.get_num_mpz_t(),
             scaled.get_den_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), floor_value.get_mpz_t());
  return make_rational(root, scale);
}

std::vector<PlaneFixture> plane_fixtures(int digits) {
  // a few guard digits for the nested roots, then truncate once more
  const int work = digits + 10;
  auto truncate = [&](const Rational& q) -> Rational {
    return sqrt_truncated(q * q, digits) * (sgn(q) < 0 ? -1 : 1);
  };
  auto pt = [](std::initializer_list<Rational> cs, std::vector<Rational>& out) {
    out.insert(out.end(), cs.begin(), cs.end());
  };

  std::vector<PlaneFixture> out;
  SignedGraph triangle = generate(PatternId::negative_triangle());
  SignedGraph cluster = generate(PatternId::negative_cluster());

  {
    std::vector<Vertex> kept{1, 2, 3, 4};
    std::vector<Rational> c;
    pt({0, 0}, c);
    pt({0, 1}, c);
    pt({Rational(1, 2), Rational(1, 2)}, c);
    pt({Rational(-1, 2), Rational(1, 2)}, c);
    out.push_back({"negative triangle minus a triangle vertex", kept,
                   induced_subgraph(triangle, kept), Drawing(2, c)});
  }
  {
    std::vector<Vertex> kept{0, 1, 2, 3};
    Rational s3 = sqrt_truncated(3, work);
    std::vector<Rational> c;
    pt({0, 0}, c);
    pt({Rational(1, 2), truncate(s3 / 2)}, c);
    pt({1, 0}, c);
    pt({Rational(1, 2), truncate(s3 / 4)}, c);
    out.push_back({"negative triangle minus a pair vertex", kept,
                   induced_subgraph(triangle, kept), Drawing(2, c)});
  }
  {
    std::vector<Vertex> kept{1, 2, 3, 4, 5, 0};
    Rational s5 = sqrt_truncated(5, work);
    Rational h = sqrt_truncated(Rational(5, 8) + s5 / 8, work);
    Rational w = sqrt_truncated(Rational(2) / (5 - s5), work);
    std::vector<Rational> c;
    pt({truncate((s5 + 3) / 4), 0}, c);
    pt({truncate((s5 - 1) / 4), 0}, c);
    pt({0, truncate(h)}, c);
    pt({truncate((s5 + 1) / 4), truncate((1 + s5) / 2 * w)}, c);
    pt({truncate((s5 + 1) / 2), truncate(h)}, c);
    pt({truncate((s5 + 1) / 4), truncate((1 + s5) / 4 * w)}, c);
    out.push_back({"negative cluster minus a cluster vertex", kept,
                   induced_subgraph(cluster, kept), Drawing(2, c)});
  }
  {
    std::vector<Vertex> kept{1, 2, 3, 4, 5, 6};
    std::vector<Rational> c;
    for (int i = 0; i < 6; ++i) pt({i, 0}, c);
    out.push_back({"negative cluster minus the centre", kept,
                   induced_subgraph(cluster, kept), Drawing(2, c)});
  }
  return out;
}

bool PlaneFixtureReport::passed() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const Entry& e) {
           return e.valid && e.valid_coarse;
         });
}

PlaneFixtureReport verify_minimal_plane_fixtures() {
  std::vector<PlaneFixture> fine = plane_fixtures(60);
  std::vector<PlaneFixture> coarse = plane_fixtures(30);
  PlaneFixtureReport report;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    report.entries.push_back({fine[i].name, is_valid(fine[i].graph, fine[i].drawing),
                              is_valid(coarse[i].graph, coarse[i].drawing)});
  }
  return report;
}

bool verify_central_witness(const SignedGraph& g, Vertex a0,
                            std::span<const Vertex> arms) {
  if (arms.empty() || arms.size() % 2 != 0) {
    throw std::invalid_argument("central witness needs 2k >= 2 arm vertices");
  }
  const int k = static_cast<int>(arms.size() / 2);
  std::vector<Vertex> path(arms.begin(), arms.begin() + k);
  path.push_back(a0);
  path.insert(path.end(), arms.begin() + k, arms.end());
  for (Vertex v : path) {
    if (v < 0 || v >= g.num_vertices()) {
      throw std::invalid_argument("central witness vertex out of range");
    }
  }
  std::vector<Vertex> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("central witness repeats a vertex");
  }

  // path index of a_i is i + k
  std::vector<Edge> pos;
  std::vector<Edge> neg;
  for (int p = 0; p < 2 * k; ++p) pos.emplace_back(p, p + 1);
  for (int i = -k; i <= -1; ++i) neg.emplace_back(i + k, i + 2 * k + 1);
  SignedGraph templ(2 * k + 1, std::move(pos), std::move(neg));
  return induced_subgraph(g, path) == templ;
}

}  // namespace sgdraw
