// Block builders, gluing operations, the composition DSL, and the
// closed-form cut-set predictors.

#include "beid/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace beid {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_leaf(const Graph& g, int f, const char* which) {
  if (f < 1 || f > g.n()) {
    fail(std::string(which) + ": leaf label " + std::to_string(f) + " out of range");
  }
  if (g.degree(f) != 1) {
    fail(std::string(which) + ": vertex " + std::to_string(f) +
         " has degree " + std::to_string(g.degree(f)) + ", not a leaf");
  }
}

// Sort + dedup the predicted sets and read the component counts off g.
CutSetFamily family_from_sets(const Graph& g, std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), set_order_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  CutSetFamily fam;
  fam.cvals.reserve(sets.size());
  for (VertexSet s : sets) fam.cvals.push_back(c(g, s));
  fam.all = std::move(sets);
  return fam;
}

VertexSet map_set(VertexSet s, const std::vector<int>& map) {
  VertexSet out;
  for (int v : s) out = out.with(map[v - 1]);
  return out;
}

}  // namespace

Graph make_F(int m) {
  if (m < 1) fail("make_F: m must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) edges.emplace_back(2 * i, 2 * j - 1);
  return Graph::from_edges(2 * m, edges);
}

GluedGraph star_glue(const Graph& g1, int f1, const Graph& g2, int f2) {
  require_leaf(g1, f1, "star_glue");
  require_leaf(g2, f2, "star_glue");
  const int n1 = g1.n(), n2 = g2.n();
  std::vector<int> map1(n1), map2(n2);
  for (int v = 1; v <= n1; ++v) map1[v - 1] = v;
  for (int v = 1; v <= n2; ++v)
    map2[v - 1] = v == f2 ? f1 : n1 + v - (v > f2 ? 1 : 0);
  std::vector<std::pair<int, int>> edges = g1.edge_list();
  for (auto [u, v] : g2.edge_list()) edges.emplace_back(map2[u - 1], map2[v - 1]);
  return {Graph::from_edges(n1 + n2 - 1, edges), std::move(map1), std::move(map2)};
}

namespace {

// enforce_degree=false is used only by elaborate() for chain factors whose
// junction vertex has degree 2; everything else about the operation is the
// same.
GluedGraph circ_glue_impl(const Graph& g1, int f1, const Graph& g2, int f2,
                          bool enforce_degree) {
  require_leaf(g1, f1, "circ_glue");
  require_leaf(g2, f2, "circ_glue");
  const int v1 = g1.neighbors(f1).min();
  const int v2 = g2.neighbors(f2).min();
  if (enforce_degree && (g1.degree(v1) < 3 || g2.degree(v2) < 3)) {
    fail("circ_glue: junction vertices must have degree >= 3 (got " +
         std::to_string(g1.degree(v1)) + " and " + std::to_string(g2.degree(v2)) +
         "); with two degree-2 junctions use star_glue on the leaf-stripped "
         "factors instead");
  }
  const int n1 = g1.n(), n2 = g2.n();
  std::vector<int> map1(n1), map2(n2);
  for (int v = 1; v <= n1; ++v)
    map1[v - 1] = v == f1 ? 0 : v - (v > f1 ? 1 : 0);
  int next = n1 - 1;
  for (int v = 1; v <= n2; ++v) {
    if (v == f2) map2[v - 1] = 0;
    else if (v == v2) map2[v - 1] = map1[v1 - 1];
    else map2[v - 1] = ++next;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g1.edge_list())
    if (u != f1 && v != f1) edges.emplace_back(map1[u - 1], map1[v - 1]);
  for (auto [u, v] : g2.edge_list())
    if (u != f2 && v != f2) edges.emplace_back(map2[u - 1], map2[v - 1]);
  return {Graph::from_edges(n1 + n2 - 3, edges), std::move(map1), std::move(map2)};
}

}  // namespace

GluedGraph circ_glue(const Graph& g1, int f1, const Graph& g2, int f2) {
  return circ_glue_impl(g1, f1, g2, f2, true);
}

Graph semicone(const Graph& h, const Bipartition& bip) {
  const int n = h.n();
  if ((bip.side1 | bip.side2) != VertexSet::full(n) || bip.side1.intersects(bip.side2)) {
    fail("semicone: sides do not partition the vertex set");
  }
  for (auto [u, v] : h.edge_list()) {
    if (bip.side1.contains(u) == bip.side1.contains(v)) {
      fail("semicone: an edge joins two vertices of the same side");
    }
  }
  if (bip.side1.size() != bip.side2.size()) {
    fail("semicone: the two sides must have equal size (got " +
         std::to_string(bip.side1.size()) + " and " +
         std::to_string(bip.side2.size()) + ")");
  }
  std::vector<std::pair<int, int>> edges = h.edge_list();
  const int v = n + 1, f = n + 2;
  for (int w : bip.side1) edges.emplace_back(v, w);
  edges.emplace_back(v, f);
  return Graph::from_edges(n + 2, edges);
}

Graph semicone(const Graph& h) {
  auto bip = bipartition(h);
  if (!bip) fail("semicone: graph is not bipartite");
  return semicone(h, *bip);
}

Graph fan_graph(int n, const std::vector<std::vector<int>>& fan_sets) {
  if (n < 1) fail("fan_graph: n must be >= 1");
  VertexSet used;
  int extra = 0;
  for (const auto& w : fan_sets) {
    if (w.empty()) fail("fan_graph: empty fan list");
    for (int x : w) {
      if (x < 1 || x > n) fail("fan_graph: fan vertex " + std::to_string(x) + " out of range");
      if (used.contains(x)) {
        fail("fan_graph: vertex " + std::to_string(x) + " appears in two fan lists");
      }
      used = used.with(x);
    }
    extra += static_cast<int>(w.size());
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  int p = n;
  for (const auto& w : fan_sets) {
    for (std::size_t len = 1; len <= w.size(); ++len) {
      ++p;
      for (std::size_t j = 0; j < len; ++j) edges.emplace_back(p, w[j]);
    }
  }
  return Graph::from_edges(n + extra, edges);
}

Graph make_M(int k, bool square) {
  if (k < 4) fail("make_M: defined for k >= 4");
  std::vector<std::pair<int, int>> edges;
  if (square) {
    edges.emplace_back(1, 2);
    edges.emplace_back(2 * k - 1, 2 * k);
    for (int i = 1; i <= k - 1; ++i)
      for (int j = 2; j <= k; ++j) edges.emplace_back(2 * i, 2 * j - 1);
    return Graph::from_edges(2 * k, edges);
  }
  edges.emplace_back(1, 2);
  edges.emplace_back(2 * k - 2, 2 * k - 1);
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 2; j <= k - 1; ++j) edges.emplace_back(2 * i, 2 * j - 1);
  return Graph::from_edges(2 * k - 1, edges);
}

// ---------------------------------------------------------------------------
// Expression DSL

BlockExpr BlockExpr::f(int m) {
  BlockExpr e;
  e.kind = Kind::F;
  e.m = m;
  return e;
}

BlockExpr BlockExpr::fan(int n, std::vector<int> sizes) {
  BlockExpr e;
  e.kind = Kind::Fan;
  e.fan_n = n;
  e.fan_sizes = std::move(sizes);
  return e;
}

BlockExpr BlockExpr::star(std::vector<BlockExpr> ops) {
  BlockExpr e;
  e.kind = Kind::Star;
  e.operands = std::move(ops);
  return e;
}

BlockExpr BlockExpr::circ(std::vector<BlockExpr> ops) {
  BlockExpr e;
  e.kind = Kind::Circ;
  e.operands = std::move(ops);
  return e;
}

std::string BlockExpr::to_string() const {
  switch (kind) {
    case Kind::F:
      return "F" + std::to_string(m);
    case Kind::Fan: {
      std::string s = "fan(" + std::to_string(fan_n) + ";";
      for (std::size_t i = 0; i < fan_sizes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(fan_sizes[i]);
      }
      return s + ")";
    }
    case Kind::Star:
    case Kind::Circ: {
      const bool star = kind == Kind::Star;
      std::string s;
      for (std::size_t i = 0; i < operands.size(); ++i) {
        if (i) s += star ? " * " : " o ";
        const BlockExpr& op = operands[i];
        // A star needs parentheses under a circ; so does an explicitly
        // nested circ (the parser never produces one, but trees can).
        const bool parens =
            !star && (op.kind == Kind::Star || op.kind == Kind::Circ);
        if (parens) s += "(";
        s += op.to_string();
        if (parens) s += ")";
      }
      return s;
    }
  }
  return "";
}

namespace {

struct Token {
  enum Kind { F, Star, Circ, LParen, RParen, End } kind;
  int value = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '*') {
      toks.push_back({Token::Star, 0, i++});
    } else if (ch == 'o') {
      toks.push_back({Token::Circ, 0, i++});
    } else if (ch == '(') {
      toks.push_back({Token::LParen, 0, i++});
    } else if (ch == ')') {
      toks.push_back({Token::RParen, 0, i++});
    } else if (ch == 'F') {
      const std::size_t start = i++;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t digits = i;
      while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
      if (digits == i) {
        fail("parse error at position " + std::to_string(start) +
             ": 'F' must be followed by an integer");
      }
      if (digits - i > 6) {
        fail("parse error at position " + std::to_string(i) + ": block index too large");
      }
      toks.push_back({Token::F, std::stoi(text.substr(i, digits - i)), start});
      i = digits;
    } else {
      fail(std::string("parse error at position ") + std::to_string(i) +
           ": unexpected character '" + ch + "'");
    }
  }
  toks.push_back({Token::End, 0, text.size()});
  return toks;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  BlockExpr expr() {
    std::vector<BlockExpr> chains;
    chains.push_back(chain());
    while (peek().kind == Token::Star) {
      ++idx_;
      chains.push_back(chain());
    }
    if (chains.size() == 1) return std::move(chains.front());
    return BlockExpr::star(std::move(chains));
  }

  void expect_end() {
    if (peek().kind != Token::End) {
      fail("parse error at position " + std::to_string(peek().pos) + ": trailing input");
    }
  }

  void expect_rparen() {
    if (peek().kind != Token::RParen) {
      fail("parse error at position " + std::to_string(peek().pos) + ": expected ')'");
    }
    ++idx_;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }

  BlockExpr chain() {
    std::vector<BlockExpr> atoms;
    atoms.push_back(atom());
    while (peek().kind == Token::Circ) {
      ++idx_;
      atoms.push_back(atom());
    }
    if (atoms.size() == 1) return std::move(atoms.front());
    return BlockExpr::circ(std::move(atoms));
  }

  BlockExpr atom() {
    const Token& t = peek();
    if (t.kind == Token::F) {
      if (t.value < 1) {
        fail("parse error at position " + std::to_string(t.pos) +
             ": block index must be >= 1");
      }
      ++idx_;
      return BlockExpr::f(t.value);
    }
    if (t.kind == Token::LParen) {
      ++idx_;
      BlockExpr e = expr();
      expect_rparen();
      return e;
    }
    fail("parse error at position " + std::to_string(t.pos) +
         ": expected 'F<int>' or '('");
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

bool is_f(const BlockExpr& e, int m) { return e.kind == BlockExpr::Kind::F && e.m == m; }

// Splice nested stars into one level.
BlockExpr flatten_star(std::vector<BlockExpr> ops) {
  std::vector<BlockExpr> flat;
  for (BlockExpr& op : ops) {
    if (op.kind == BlockExpr::Kind::Star) {
      for (BlockExpr& c : op.operands) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  return BlockExpr::star(std::move(flat));
}

}  // namespace

BlockExpr parse_expr(const std::string& text) {
  Parser p(lex(text));
  BlockExpr e = p.expr();
  p.expect_end();
  return e;
}

BlockExpr normalize_expr(const BlockExpr& expr) {
  switch (expr.kind) {
    case BlockExpr::Kind::F:
      if (expr.m < 1) fail("normalize_expr: block index must be >= 1");
      return expr;
    case BlockExpr::Kind::Fan:
      return expr;
    case BlockExpr::Kind::Star: {
      if (expr.operands.size() < 2) fail("normalize_expr: star needs >= 2 operands");
      std::vector<BlockExpr> ops;
      for (const BlockExpr& op : expr.operands) ops.push_back(normalize_expr(op));
      return flatten_star(std::move(ops));
    }
    case BlockExpr::Kind::Circ: {
      if (expr.operands.size() < 2) fail("normalize_expr: chain needs >= 2 operands");
      std::vector<BlockExpr> ops;
      for (const BlockExpr& op : expr.operands) {
        BlockExpr norm = normalize_expr(op);
        if (norm.kind == BlockExpr::Kind::Circ) {
          for (BlockExpr& c : norm.operands) ops.push_back(std::move(c));
        } else {
          ops.push_back(std::move(norm));
        }
      }
      // An F_2 at the end of a chain builds the same labelled graph as a
      // starred F_1, so rewrite it; that keeps every end junction at
      // degree >= 3 and makes the closed-form prediction applicable.
      std::vector<BlockExpr> pre, post;
      while (ops.size() >= 2 && is_f(ops.front(), 2)) {
        ops.erase(ops.begin());
        pre.push_back(BlockExpr::f(1));
      }
      while (ops.size() >= 2 && is_f(ops.back(), 2)) {
        ops.pop_back();
        post.push_back(BlockExpr::f(1));
      }
      BlockExpr core;
      if (ops.size() == 1) {
        core = std::move(ops.front());
      } else {
        for (const BlockExpr& op : ops) {
          if (is_f(op, 1)) {
            fail("a chain factor must have at least 4 vertices; F1 cannot be "
                 "glued by the leaf-deleting operation");
          }
        }
        core = BlockExpr::circ(std::move(ops));
      }
      if (pre.empty() && post.empty()) return core;
      std::vector<BlockExpr> star_ops;
      for (BlockExpr& e : pre) star_ops.push_back(std::move(e));
      star_ops.push_back(std::move(core));
      for (BlockExpr& e : post) star_ops.push_back(std::move(e));
      return flatten_star(std::move(star_ops));
    }
  }
  fail("normalize_expr: unknown node");
}

namespace {

struct ElabState {
  Graph g;
  int left = -1, right = -1;  // leaf labels used for the next gluing, -1 if none
};

int remap_leaf(int leaf, const std::vector<int>& map) {
  if (leaf < 1) return -1;
  const int image = map[leaf - 1];
  return image == 0 ? -1 : image;
}

ElabState elab_rec(const BlockExpr& e, std::vector<std::string>& warnings) {
  switch (e.kind) {
    case BlockExpr::Kind::F: {
      ElabState st;
      st.g = make_F(e.m);
      st.left = 1;
      st.right = 2 * e.m;
      return st;
    }
    case BlockExpr::Kind::Fan: {
      std::vector<std::vector<int>> lists;
      int v = 0;
      for (int r : e.fan_sizes) {
        std::vector<int> w;
        for (int i = 0; i < r; ++i) w.push_back(++v);
        lists.push_back(std::move(w));
      }
      ElabState st;
      st.g = fan_graph(e.fan_n, lists);
      const std::vector<int> lv = leaves(st.g).to_vector();
      if (!lv.empty()) {
        st.left = lv.front();
        st.right = lv.back();
      }
      return st;
    }
    case BlockExpr::Kind::Star: {
      ElabState st = elab_rec(e.operands[0], warnings);
      for (std::size_t i = 1; i < e.operands.size(); ++i) {
        ElabState nx = elab_rec(e.operands[i], warnings);
        if (st.right < 0 || nx.left < 0) fail("star gluing needs a leaf on each side");
        GluedGraph glued = star_glue(st.g, st.right, nx.g, nx.left);
        st.left = remap_leaf(st.left, glued.map1);
        st.right = remap_leaf(nx.right, glued.map2);
        st.g = std::move(glued.graph);
      }
      return st;
    }
    case BlockExpr::Kind::Circ: {
      for (std::size_t i = 1; i + 1 < e.operands.size(); ++i) {
        if (is_f(e.operands[i], 2)) {
          warnings.push_back(
              "chain factor " + std::to_string(i + 1) +
              " is F2: its junction vertices have degree 2, so the gluing "
              "skips the degree requirement and the result is typically not "
              "unmixed");
        }
      }
      ElabState st = elab_rec(e.operands[0], warnings);
      for (std::size_t i = 1; i < e.operands.size(); ++i) {
        ElabState nx = elab_rec(e.operands[i], warnings);
        if (st.right < 0 || nx.left < 0) fail("chain gluing needs a leaf on each side");
        const bool raw = is_f(e.operands[i - 1], 2) || is_f(e.operands[i], 2);
        GluedGraph glued = circ_glue_impl(st.g, st.right, nx.g, nx.left, !raw);
        st.left = remap_leaf(st.left, glued.map1);
        st.right = remap_leaf(nx.right, glued.map2);
        st.g = std::move(glued.graph);
      }
      return st;
    }
  }
  fail("elaborate: unknown node");
}

}  // namespace

Elaboration elaborate(const BlockExpr& expr) {
  const BlockExpr norm = normalize_expr(expr);
  std::vector<std::string> warnings;
  ElabState st = elab_rec(norm, warnings);
  return {std::move(st.g), std::move(warnings)};
}

// ---------------------------------------------------------------------------
// Closed-form predictors

namespace {

std::vector<VertexSet> f_cutsets(int m) {
  std::vector<VertexSet> fam = {VertexSet()};
  for (int mm = 2; mm <= m; ++mm) {
    std::vector<VertexSet> next = {VertexSet()};
    VertexSet prefix;
    for (int i = 1; i <= mm - 1; ++i) {
      prefix = prefix.with(2 * i);
      next.push_back(prefix);
    }
    for (VertexSet s : fam) next.push_back(s.with(2 * mm - 1));
    fam = std::move(next);
  }
  return fam;
}

struct PredictState {
  Graph g;
  std::vector<VertexSet> sets;
  int left = -1, right = -1;
};

PredictState predict_rec(const BlockExpr& e) {
  switch (e.kind) {
    case BlockExpr::Kind::F: {
      PredictState st;
      st.g = make_F(e.m);
      st.sets = f_cutsets(e.m);
      st.left = 1;
      st.right = 2 * e.m;
      return st;
    }
    case BlockExpr::Kind::Fan:
      fail("predict_cutsets: no closed form for fan blocks inside compositions");
    case BlockExpr::Kind::Star: {
      PredictState st = predict_rec(e.operands[0]);
      for (std::size_t i = 1; i < e.operands.size(); ++i) {
        PredictState nx = predict_rec(e.operands[i]);
        const int f1 = st.right, f2 = nx.left;
        if (f1 < 0 || f2 < 0) fail("predict_cutsets: star gluing needs a leaf on each side");
        const int v1 = st.g.neighbors(f1).min();
        const int v2 = nx.g.neighbors(f2).min();
        GluedGraph glued = star_glue(st.g, f1, nx.g, f2);
        // The cut sets of a star are all unions S_1 u S_2, plus those unions
        // together with the identified vertex whenever neither S_i contains
        // the junction neighbour v_i.
        std::vector<VertexSet> merged;
        merged.reserve(st.sets.size() * nx.sets.size() * 2);
        for (VertexSet sa : st.sets) {
          const bool a_free = !sa.contains(v1);
          for (VertexSet sb : nx.sets) {
            const VertexSet u = sa | map_set(sb, glued.map2);
            merged.push_back(u);
            if (a_free && !sb.contains(v2)) merged.push_back(u.with(f1));
          }
        }
        st.sets = std::move(merged);
        st.left = remap_leaf(st.left, glued.map1);
        st.right = remap_leaf(nx.right, glued.map2);
        st.g = std::move(glued.graph);
      }
      return st;
    }
    case BlockExpr::Kind::Circ: {
      PredictState st = predict_rec(e.operands[0]);
      for (std::size_t i = 1; i < e.operands.size(); ++i) {
        PredictState nx = predict_rec(e.operands[i]);
        const int f1 = st.right, f2 = nx.left;
        if (f1 < 0 || f2 < 0) fail("predict_cutsets: chain gluing needs a leaf on each side");
        const int v1 = st.g.neighbors(f1).min();
        const int v2 = nx.g.neighbors(f2).min();
        if (st.g.degree(v1) < 3 || nx.g.degree(v2) < 3) {
          fail("predict_cutsets: no closed form when a chain junction vertex "
               "has degree < 3");
        }
        const auto has_degree2_witness = [](const Graph& g, int v) {
          for (int u : g.neighbors(v))
            if (g.degree(u) == 2) return true;
          return false;
        };
        if (!has_degree2_witness(st.g, v1) || !has_degree2_witness(nx.g, v2)) {
          fail("predict_cutsets: the chain formula needs a degree-2 neighbour "
               "of the junction vertex in each factor");
        }
        GluedGraph glued = circ_glue_impl(st.g, f1, nx.g, f2, true);
        // The cut sets of a chain gluing are the unions S_1 u S_2 where the
        // factors agree about the identified junction vertex: either neither
        // side contains it, or both do.
        std::vector<VertexSet> merged;
        merged.reserve(st.sets.size() * nx.sets.size());
        for (VertexSet sa : st.sets) {
          const bool av = sa.contains(v1);
          for (VertexSet sb : nx.sets) {
            if (sb.contains(v2) != av) continue;
            merged.push_back(map_set(sa, glued.map1) | map_set(sb, glued.map2));
          }
        }
        st.sets = std::move(merged);
        st.left = remap_leaf(st.left, glued.map1);
        st.right = remap_leaf(nx.right, glued.map2);
        st.g = std::move(glued.graph);
      }
      return st;
    }
  }
  fail("predict_cutsets: unknown node");
}

}  // namespace

CutSetFamily predict_cutsets(const BlockExpr& expr) {
  const BlockExpr norm = normalize_expr(expr);
  if (norm.kind == BlockExpr::Kind::Fan) {
    std::vector<std::vector<int>> lists;
    int v = 0;
    for (int r : norm.fan_sizes) {
      std::vector<int> w;
      for (int i = 0; i < r; ++i) w.push_back(++v);
      lists.push_back(std::move(w));
    }
    return predict_cutsets_fan(norm.fan_n, lists);
  }
  PredictState st = predict_rec(norm);
  return family_from_sets(st.g, std::move(st.sets));
}

CutSetFamily predict_cutsets_F(int m) {
  if (m < 1) fail("predict_cutsets_F: m must be >= 1");
  return family_from_sets(make_F(m), f_cutsets(m));
}

CutSetFamily predict_cutsets_fan(int n, const std::vector<std::vector<int>>& fan_sets) {
  const Graph g = fan_graph(n, fan_sets);
  // One prefix (possibly empty) per fan list; the union over the lists is a
  // cut set unless it exhausts the base clique.
  std::vector<VertexSet> sets = {VertexSet()};
  for (const auto& w : fan_sets) {
    std::vector<VertexSet> next;
    next.reserve(sets.size() * (w.size() + 1));
    VertexSet prefix;
    for (VertexSet t : sets) next.push_back(t);
    for (std::size_t len = 1; len <= w.size(); ++len) {
      prefix = prefix.with(w[len - 1]);
      for (VertexSet t : sets) next.push_back(t | prefix);
    }
    sets = std::move(next);
  }
  const VertexSet base = VertexSet::full(n);
  sets.erase(std::remove(sets.begin(), sets.end(), base), sets.end());
  return family_from_sets(g, std::move(sets));
}

CutSetFamily predict_cutsets_semicone(const Graph& h, const Bipartition& bip) {
  const Graph g = semicone(h, bip);  // validates the bipartition and side sizes
  if (!is_unmixed(h).unmixed) {
    fail("predict_cutsets_semicone: the closed form needs an unmixed base graph");
  }
  const std::vector<int> lv = leaves(h).to_vector();
  if (lv.size() != 2) {
    fail("predict_cutsets_semicone: the base graph must have exactly two leaves");
  }
  const int u1 = h.neighbors(lv[0]).min();
  const int u2 = h.neighbors(lv[1]).min();
  if (!h.adjacent(u1, u2)) {
    fail("predict_cutsets_semicone: the closed form needs the two leaf "
         "neighbours of the base graph to be adjacent");
  }
  const int v = h.n() + 1;
  const CutSetFamily base = enumerate_cut_sets(h);
  std::vector<VertexSet> sets = {VertexSet(), bip.side1};
  for (VertexSet s : base.all) {
    sets.push_back(s.with(v));
    if (s.subset_of(bip.side1) && s != bip.side1) sets.push_back(s);
  }
  return family_from_sets(g, std::move(sets));
}

}  // namespace beid
